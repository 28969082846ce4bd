#include "zqx/ballcalc.hpp"

#include <algorithm>

namespace zqx {

namespace {

// Max over the distance multiset from the inner center to the
// conjugates of the outer center; the containment test compares this
// against the outer radius.
ExtRational max_center_distance(const DvrSpec& outer, const DvrSpec& inner) {
    const Prime& p = outer.prime();
    if (inner.center().kind() == Center::Kind::Truncated && outer.radius().is_finite() &&
        ExtRational(Rational(inner.center().precision())) < outer.radius())
        fail("RadiusExceedsPrecision", "outer radius exceeds the inner truncation precision");

    ValuationSpectrum dist = per_root_distances(p, inner.center_poly(), outer.center_poly());
    ExtRational best = dist.entries().rbegin()->first;

    // A distance at or above the truncation precision is only a lower
    // bound, which is still conclusive when it clears the radius.
    return best;
}

} // namespace

bool orbit_contains(const DvrSpec& outer, const DvrSpec& inner) {
    if (outer.prime() != inner.prime()) fail("DifferentPrime", "specs at different primes are unrelated");
    if (outer == inner) return true;
    if (inner.radius() < outer.radius()) return false;

    if (outer.radius().is_infinity()) {
        // Singleton outer ball: containment means conjugate equality of
        // two asserted-transcendental elements. Truncations that differ
        // below both precisions are genuinely distinct; beyond that the
        // finite data cannot decide.
        const Center& co = outer.center();
        const Center& ci = inner.center();
        if (ci.kind() != Center::Kind::Truncated) return false;
        long n = std::min(co.precision(), ci.precision());
        ExtRational d = vp_rational(outer.prime(), co.value() - ci.value());
        if (d < ExtRational(Rational(n))) return false;
        fail("InsufficientPrecision", "conjugacy of two truncated elements is undecidable at N=" +
                                          std::to_string(n));
    }

    return max_center_distance(outer, inner) >= outer.radius();
}

bool orbit_equal(const DvrSpec& a, const DvrSpec& b) {
    if (a.prime() != b.prime()) fail("DifferentPrime", "specs at different primes are unrelated");
    if (a == b) return true;
    if (a.radius() != b.radius()) return false;
    // With equal radii, one containment forces ball equality.
    return orbit_contains(a, b);
}

std::string to_string(OrderRelation r) {
    switch (r) {
        case OrderRelation::Equal: return "Equal";
        case OrderRelation::Less: return "Less";
        case OrderRelation::Greater: return "Greater";
        case OrderRelation::Incomparable: return "Incomparable";
        case OrderRelation::DifferentPrime: return "DifferentPrime";
    }
    return "?";
}

OrderRelation order_compare(const DvrSpec& s1, const DvrSpec& s2) {
    if (s1.prime() != s2.prime()) return OrderRelation::DifferentPrime;
    bool le = orbit_contains(s1, s2);
    bool ge = orbit_contains(s2, s1);
    if (le && ge) return OrderRelation::Equal;
    if (le) return OrderRelation::Less;
    if (ge) return OrderRelation::Greater;
    return OrderRelation::Incomparable;
}

bool canonical_spec_less(const DvrSpec& a, const DvrSpec& b) {
    if (a.radius() != b.radius()) return a.radius() < b.radius();
    return to_string(a.center()) < to_string(b.center());
}

ReduceResult reduce_family(const std::vector<DvrSpec>& specs) {
    for (std::size_t i = 1; i < specs.size(); ++i)
        if (specs[i].prime() != specs[0].prime())
            fail("DifferentPrime", "reduce_family needs a single-prime family");

    std::vector<DvrSpec> sorted = specs;
    std::stable_sort(sorted.begin(), sorted.end(), canonical_spec_less);

    ReduceResult result;
    std::vector<DvrSpec> unique;
    for (const DvrSpec& s : sorted) {
        bool dup = false;
        for (const DvrSpec& k : unique) {
            if (orbit_equal(k, s)) {
                result.removed.push_back({s, "duplicate of " + to_string(k)});
                dup = true;
                break;
            }
        }
        if (!dup) unique.push_back(s);
    }

    for (std::size_t i = 0; i < unique.size(); ++i) {
        bool superfluous = false;
        for (std::size_t j = 0; j < unique.size(); ++j) {
            if (i == j) continue;
            if (orbit_contains(unique[j], unique[i])) {
                result.removed.push_back({unique[i], "ball orbit inside " + to_string(unique[j])});
                superfluous = true;
                break;
            }
        }
        if (!superfluous) result.kept.push_back(unique[i]);
    }
    return result;
}

} // namespace zqx
