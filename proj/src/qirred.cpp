#include "zqx/qirred.hpp"

#include "zqx/fp_poly.hpp"
#include "zqx/intfactor.hpp"
#include "zqx/resultant.hpp"

namespace zqx {

namespace {

bool has_rational_root(const Poly& pp) {
    if (pp.coeff(0) == 0) return true; // root 0
    std::vector<Int> rs = divisors(Int(pp.coeff(0).get_num()));
    std::vector<Int> ss = divisors(Int(pp.leading().get_num()));
    for (const Int& r : rs)
        for (const Int& s : ss) {
            Rational cand(r, s);
            cand.canonicalize();
            if (pp.eval(cand) == 0 || pp.eval(-cand) == 0) return true;
        }
    return false;
}

// Kronecker search for a degree-d integer factor.
bool has_factor_of_degree(const Poly& pp, long d) {
    std::vector<long> xs;
    for (long k = 0; static_cast<long>(xs.size()) <= d; ++k) {
        long x = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
        xs.push_back(x);
    }
    std::vector<std::vector<Int>> choices;
    for (long x : xs) {
        Rational vx = pp.eval(Rational(x));
        std::vector<Int> ds = divisors(Int(vx.get_num()));
        std::vector<Int> with_sign;
        for (const Int& dd : ds) {
            with_sign.push_back(dd);
            if (!choices.empty()) with_sign.push_back(-dd); // first point: positive only
        }
        choices.push_back(std::move(with_sign));
    }

    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t i = 0; i < choices.size(); ++i)
            pts.emplace_back(Rational(xs[i]), Rational(choices[i][idx[i]]));
        Poly g = interpolate(pts);
        if (g.degree() == d && g.has_integer_coeffs()) {
            auto [quot, rem] = pp.divmod(g);
            if (rem.is_zero()) return true;
        }
        // next tuple
        std::size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) return false;
    }
}

} // namespace

bool is_irreducible_over_q(const Poly& q) {
    if (q.is_zero()) fail("ZeroPolynomial", "irreducibility of 0");
    long n = q.degree();
    if (n <= 0) return false;
    if (n == 1) return true;

    Poly pp = q.primitive_part();
    if (has_rational_root(pp)) return false;
    if (n <= 3) return true;

    for (std::uint64_t p : primes_up_to(100)) {
        Prime pr(p);
        ExtRational vlc = vp_rational(pr, pp.leading());
        if (vlc.is_finite() && vlc.value() != 0) continue;
        bool ok = true;
        for (long i = 0; i < n && ok; ++i) {
            ExtRational v = vp_rational(pr, pp.coeff(i));
            if (v.is_finite() && v.value() < 0) ok = false;
        }
        if (ok && fp_irreducible(pr, pp)) return true;
    }

    for (long d = 2; d <= n / 2; ++d)
        if (has_factor_of_degree(pp, d)) return false;
    return true;
}

} // namespace zqx
