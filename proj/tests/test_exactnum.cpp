#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "oracle.hpp"
#include "zqx/abelian.hpp"
#include "zqx/rational.hpp"

using namespace zqx;

TEST_CASE("prime validation") {
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(97).value() == 97);
    CHECK(Prime(18446744073709551557ULL).value() == 18446744073709551557ULL); // largest 64-bit prime
    CHECK_THROWS_WITH_AS(Prime(1), doctest::Contains("NotPrime"), DomainError);
    CHECK_THROWS_WITH_AS(Prime(91), doctest::Contains("NotPrime"), DomainError);
    CHECK(is_prime_u64(2147483647ULL));
    CHECK_FALSE(is_prime_u64(3215031751ULL)); // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("vp_rational on the stated examples") {
    CHECK(vp_rational(Prime(2), Rational(8)) == ExtRational(3));
    CHECK(vp_rational(Prime(3), Rational(1, 9)) == ExtRational(-2));
    CHECK(vp_rational(Prime(5), Rational(0)).is_infinity());
}

TEST_CASE("vp_rational is a valuation") {
    std::mt19937_64 rng(12345);
    std::vector<Prime> ps{Prime(2), Prime(3), Prime(5), Prime(7)};
    for (int t = 0; t < 1000; ++t) {
        const Prime& p = ps[t % ps.size()];
        Rational x = oracle::random_rational(rng);
        Rational y = oracle::random_rational(rng);
        if (x == 0 || y == 0) continue;
        CHECK(vp_rational(p, x * y) == vp_rational(p, x) + vp_rational(p, y));
        ExtRational vxy = vp_rational(p, x + y);
        ExtRational vmin = min(vp_rational(p, x), vp_rational(p, y));
        CHECK(vxy >= vmin);
        if (vp_rational(p, x) != vp_rational(p, y)) CHECK(vxy == vmin);
    }
}

TEST_CASE("ExtRational ordering and absorption") {
    ExtRational inf = ExtRational::infinity();
    CHECK(inf > ExtRational(Rational(1000000)));
    CHECK((inf + ExtRational(5)).is_infinity());
    CHECK(min(inf, ExtRational(3)) == ExtRational(3));
    CHECK(parse_ext_rational("inf").is_infinity());
    CHECK(parse_ext_rational("-3/4") == ExtRational(Rational(-3, 4)));
    CHECK(to_string(ExtRational(Rational(3, 2))) == "3/2");
}

TEST_CASE("rational text round-trip") {
    CHECK(to_string(parse_rational(" -3/4 ")) == "-3/4");
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK_THROWS_AS(parse_rational("3/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("a"), DomainError);
}

namespace {

// Isomorphism oracle for finite abelian groups: the multiset of element
// orders determines the group.
std::map<long, long> element_orders(const std::vector<long>& moduli) {
    std::map<long, long> orders;
    std::vector<long> idx(moduli.size(), 0);
    while (true) {
        long ord = 1;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            long d = moduli[i] / std::gcd(moduli[i], idx[i] == 0 ? moduli[i] : idx[i]);
            ord = std::lcm(ord, d == 0 ? 1 : d);
        }
        ++orders[ord];
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == moduli[i]) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return orders;
}

} // namespace

TEST_CASE("canonicalize_group examples") {
    AbelianGroupInv g1 = canonicalize_group({Int(1), Int(2), Int(0)});
    CHECK(g1.torsion == std::vector<Int>{Int(2)});
    CHECK(g1.free_rank == 1);

    // Oracle for [2,3]: Z/2 + Z/3 and Z/6 have the same element orders.
    CHECK(element_orders({2, 3}) == element_orders({6}));
    AbelianGroupInv g2 = canonicalize_group({Int(2), Int(3)});
    CHECK(g2.torsion == std::vector<Int>{Int(6)});
    CHECK(g2.free_rank == 0);

    CHECK(canonicalize_group({}).is_trivial());
}

TEST_CASE("canonicalize_group matches the element-order oracle") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> mod(1, 12);
    std::uniform_int_distribution<long> count(1, 4);
    for (int t = 0; t < 50; ++t) {
        std::vector<long> ms;
        std::vector<Int> input;
        for (long i = 0, n = count(rng); i < n; ++i) {
            long m = mod(rng);
            ms.push_back(m);
            input.emplace_back(m);
        }
        AbelianGroupInv g = canonicalize_group(input);
        std::vector<long> canon;
        for (const Int& d : g.torsion) canon.push_back(d.get_si());
        if (canon.empty()) canon.push_back(1);
        CHECK(element_orders(ms) == element_orders(canon));
        // Divisibility chain.
        for (std::size_t i = 0; i + 1 < g.torsion.size(); ++i) CHECK(g.torsion[i + 1] % g.torsion[i] == 0);
    }
}

TEST_CASE("canonicalize_group is idempotent and permutation invariant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> mod(0, 16);
    for (int t = 0; t < 100; ++t) {
        std::vector<Int> input;
        for (int i = 0; i < 5; ++i) input.emplace_back(mod(rng));
        AbelianGroupInv g = canonicalize_group(input);

        std::vector<Int> again = g.torsion;
        for (long i = 0; i < g.free_rank; ++i) again.emplace_back(0);
        CHECK(canonicalize_group(again) == g);

        std::shuffle(input.begin(), input.end(), rng);
        CHECK(canonicalize_group(input) == g);
    }
}

TEST_CASE("group text forms") {
    CHECK(to_string(parse_group("2,6,0,0")) == "Z/2 + Z/6 + Z^2");
    CHECK(to_string(parse_group("1")) == "0");
    CHECK(to_string(parse_group("0")) == "Z");
    CHECK(parse_group("3,2") == parse_group("6"));
}
