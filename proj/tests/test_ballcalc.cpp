#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "zqx/ballcalc.hpp"

using namespace zqx;

namespace {

DvrSpec rat_spec(std::uint64_t p, const Rational& a, const ExtRational& d) {
    return make_dvr_spec(Prime(p), Center::rational(a), d);
}

DvrSpec alg_spec(std::uint64_t p, const std::string& q, const ExtRational& d) {
    return make_dvr_spec(Prime(p), Center::algebraic(parse_poly(q)), d);
}

DvrSpec trunc_spec(std::uint64_t p, const Rational& a, long n, long e) {
    return make_dvr_spec(Prime(p), Center::truncated(a, n, e), ExtRational::infinity());
}

// Battery of pairwise-interesting specs at p = 2.
std::vector<DvrSpec> battery2() {
    return {
        rat_spec(2, Rational(0), ExtRational(0)),
        rat_spec(2, Rational(0), ExtRational(Rational(1, 2))),
        rat_spec(2, Rational(0), ExtRational(1)),
        rat_spec(2, Rational(0), ExtRational(2)),
        rat_spec(2, Rational(1), ExtRational(1)),
        rat_spec(2, Rational(2), ExtRational(2)),
        rat_spec(2, Rational(4), ExtRational(3)),
        alg_spec(2, "X^2-2", ExtRational(1)),
        alg_spec(2, "X^2-2", ExtRational(Rational(3, 2))),
        alg_spec(2, "X^2+X+1", ExtRational(1)),
        alg_spec(2, "X^2+2*X+2", ExtRational(2)),
        trunc_spec(2, Rational(5), 20, 1),
    };
}

} // namespace

TEST_CASE("orbit_contains examples") {
    CHECK(orbit_contains(rat_spec(2, Rational(0), ExtRational(Rational(1, 2))),
                         alg_spec(2, "X^2-2", ExtRational(1))));
    CHECK_FALSE(orbit_contains(rat_spec(2, Rational(0), ExtRational(1)), alg_spec(2, "X^2-2", ExtRational(1))));
    DvrSpec s = alg_spec(2, "X^2-2", ExtRational(1));
    CHECK(orbit_contains(s, s));
    CHECK_THROWS_WITH_AS(orbit_contains(rat_spec(2, Rational(0), ExtRational(1)),
                                        rat_spec(3, Rational(0), ExtRational(1))),
                         doctest::Contains("DifferentPrime"), DomainError);
}

TEST_CASE("the gauss ball contains every integral ball") {
    DvrSpec gauss = rat_spec(2, Rational(0), ExtRational(0));
    for (const DvrSpec& s : battery2()) CHECK(orbit_contains(gauss, s));
}

TEST_CASE("orbit_equal examples") {
    CHECK(orbit_equal(alg_spec(2, "X^2-2", ExtRational(1)), alg_spec(2, "X^2-2", ExtRational(1))));
    CHECK(orbit_equal(rat_spec(2, Rational(0), ExtRational(0)), rat_spec(2, Rational(7), ExtRational(0))));
    CHECK_FALSE(orbit_equal(rat_spec(2, Rational(0), ExtRational(1)), rat_spec(2, Rational(1), ExtRational(1))));
    // Same ball, conjugate description: sqrt2 and -sqrt2 share X^2-2.
    CHECK(orbit_equal(rat_spec(2, Rational(2), ExtRational(Rational(3, 2))),
                      rat_spec(2, Rational(-2), ExtRational(Rational(3, 2)))));
    CHECK_FALSE(orbit_equal(rat_spec(2, Rational(2), ExtRational(Rational(3, 2))),
                            rat_spec(2, Rational(2), ExtRational(2))));
}

TEST_CASE("orbit_contains is a preorder on the battery") {
    std::vector<DvrSpec> specs = battery2();
    long checked = 0;
    for (const DvrSpec& a : specs) CHECK(orbit_contains(a, a));
    for (const DvrSpec& a : specs)
        for (const DvrSpec& b : specs)
            for (const DvrSpec& c : specs) {
                bool ab, bc;
                try {
                    ab = orbit_contains(a, b);
                    bc = orbit_contains(b, c);
                } catch (const DomainError&) {
                    continue; // undecidable truncated pairs
                }
                if (ab && bc) CHECK(orbit_contains(a, c));
                ++checked;
            }
    CHECK(checked >= 200);
}

TEST_CASE("antisymmetry modulo orbit equality") {
    std::vector<DvrSpec> specs = battery2();
    for (const DvrSpec& a : specs)
        for (const DvrSpec& b : specs) {
            bool ab, ba;
            try {
                ab = orbit_contains(a, b);
                ba = orbit_contains(b, a);
            } catch (const DomainError&) {
                continue;
            }
            if (ab && ba) CHECK(orbit_equal(a, b));
        }
}

TEST_CASE("orbit_equal is consistent with order_compare") {
    std::vector<DvrSpec> specs = battery2();
    for (const DvrSpec& a : specs)
        for (const DvrSpec& b : specs) {
            try {
                bool eq = orbit_equal(a, b);
                OrderRelation r = order_compare(a, b);
                CHECK(eq == (r == OrderRelation::Equal));
            } catch (const DomainError&) {
                continue;
            }
        }
}

TEST_CASE("semantic containment: nonnegative on the outer ring implies nonnegative on the inner") {
    std::mt19937_64 rng(909);
    std::vector<DvrSpec> specs = battery2();
    long checked = 0;
    for (const DvrSpec& outer : specs) {
        for (const DvrSpec& inner : specs) {
            bool contains;
            try {
                contains = orbit_contains(outer, inner);
            } catch (const DomainError&) {
                continue;
            }
            if (!contains) continue;
            for (int t = 0; t < 40 && checked < 400; ++t) {
                // Integer polynomials always pass; rational ones exercise
                // the rejection side too.
                Poly f = (t % 2 == 0) ? oracle::random_poly(rng, 5, 60, 1)
                                      : oracle::random_poly(rng, 5, 60, 12);
                if (f.is_zero()) continue;
                ExtRational vo, vi;
                try {
                    vo = mono_val(outer, f);
                    vi = mono_val(inner, f);
                } catch (const DomainError&) {
                    continue; // truncated precision gaps
                }
                if (vo >= ExtRational(0)) {
                    CHECK(vi >= ExtRational(0));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked >= 300);
}

TEST_CASE("reduce_family examples") {
    {
        auto r = reduce_family({rat_spec(2, Rational(0), ExtRational(Rational(1, 2))),
                                alg_spec(2, "X^2-2", ExtRational(1))});
        REQUIRE(r.kept.size() == 1);
        CHECK(r.kept[0] == rat_spec(2, Rational(0), ExtRational(Rational(1, 2))));
        CHECK(r.removed.size() == 1);
    }
    {
        DvrSpec s = alg_spec(2, "X^2-2", ExtRational(1));
        auto r = reduce_family({s, s});
        CHECK(r.kept.size() == 1);
        CHECK(r.removed.size() == 1);
    }
    {
        auto r = reduce_family({rat_spec(2, Rational(0), ExtRational(1)), rat_spec(2, Rational(1), ExtRational(1))});
        CHECK(r.kept.size() == 2);
    }
}

TEST_CASE("reduce_family is invariant under permutation") {
    std::mt19937_64 rng(1234);
    std::vector<DvrSpec> pool = battery2();
    for (int t = 0; t < 100; ++t) {
        std::vector<DvrSpec> fam;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::uniform_int_distribution<int> len(1, 6);
        for (int i = 0, n = len(rng); i < n; ++i) fam.push_back(pool[pick(rng)]);

        auto sorted_texts = [](const ReduceResult& r) {
            std::vector<std::string> t;
            for (const auto& s : r.kept) t.push_back(to_string(s));
            std::sort(t.begin(), t.end());
            return t;
        };
        auto base = sorted_texts(reduce_family(fam));
        std::shuffle(fam.begin(), fam.end(), rng);
        CHECK(sorted_texts(reduce_family(fam)) == base);
    }
}

TEST_CASE("reduced families are pairwise incomparable") {
    std::mt19937_64 rng(555);
    std::vector<DvrSpec> pool = battery2();
    for (int t = 0; t < 30; ++t) {
        std::vector<DvrSpec> fam;
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (int i = 0; i < 5; ++i) fam.push_back(pool[pick(rng)]);
        auto r = reduce_family(fam);
        for (std::size_t i = 0; i < r.kept.size(); ++i)
            for (std::size_t j = 0; j < r.kept.size(); ++j) {
                if (i == j) continue;
                CHECK_FALSE(orbit_contains(r.kept[i], r.kept[j]));
            }
    }
}

TEST_CASE("truncated singleton orbits") {
    DvrSpec t1 = trunc_spec(2, Rational(5), 20, 1);
    DvrSpec t2 = trunc_spec(2, Rational(7), 20, 1); // v_2(5-7) = 1 < 20: distinct
    CHECK(orbit_contains(t1, t1));
    CHECK_FALSE(orbit_contains(t1, t2));
    DvrSpec t3 = trunc_spec(2, Rational(5 + (1 << 10)), 8, 1); // agrees with t1 below both precisions
    CHECK_THROWS_WITH_AS(orbit_contains(t1, t3), doctest::Contains("InsufficientPrecision"), DomainError);
    // A finite ball around the truncation still contains the singleton.
    CHECK(orbit_contains(rat_spec(2, Rational(1), ExtRational(2)), t1)); // v_2(5-1) = 2 >= 2
    CHECK_FALSE(orbit_contains(rat_spec(2, Rational(1), ExtRational(3)), t1));
}
