#include "zqx/intfactor.hpp"

namespace zqx {

std::vector<std::pair<Int, long>> factor_int(const Int& n0) {
    Int n = abs(n0);
    if (n <= 1) return {};
    std::vector<std::pair<Int, long>> factors;
    auto strip = [&](const Int& q) {
        long e = 0;
        while (n % q == 0) {
            n /= q;
            ++e;
        }
        if (e > 0) factors.emplace_back(q, e);
    };
    strip(Int(2));
    strip(Int(3));
    Int d(5);
    while (d * d <= n) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) break;
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> ds{Int(1)};
    for (const auto& [q, e] : factor_int(n)) {
        std::size_t sz = ds.size();
        Int pw(1);
        for (long k = 1; k <= e; ++k) {
            pw *= q;
            for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pw);
        }
    }
    return ds;
}

std::vector<std::uint64_t> prime_factors_u64(const Int& n) {
    std::vector<std::uint64_t> ps;
    for (const auto& [q, e] : factor_int(n)) {
        if (!q.fits_ulong_p()) fail("InternalError", "prime factor exceeds 64 bits");
        ps.push_back(q.get_ui());
    }
    return ps;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> ps;
    if (bound < 2) return ps;
    std::vector<bool> sieve(bound + 1, true);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        ps.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return ps;
}

} // namespace zqx
