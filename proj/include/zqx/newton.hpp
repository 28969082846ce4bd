#ifndef ZQX_NEWTON_HPP
#define ZQX_NEWTON_HPP

#include <map>
#include <string>
#include <vector>

#include "zqx/poly.hpp"
#include "zqx/rational.hpp"

namespace zqx {

// Multiset of root valuations with multiplicities; entries with equal
// valuation are merged. Total multiplicity equals the declared root count.
class ValuationSpectrum {
public:
    void add(const ExtRational& v, long multiplicity);

    long total_multiplicity() const;
    long count_at_least(const ExtRational& threshold) const;
    // Largest finite entry; fails if there is none.
    ExtRational max_finite() const;
    bool has_finite() const;

    // Sum of valuation * multiplicity over finite entries.
    Rational finite_weighted_sum() const;
    // Sum of min(cap, entry) * multiplicity over all entries.
    Rational capped_sum(const Rational& cap) const;

    // Divides every multiplicity by d; false if any is not divisible.
    bool divide_multiplicities(long d);

    const std::map<ExtRational, long>& entries() const { return entries_; }

    friend bool operator==(const ValuationSpectrum& a, const ValuationSpectrum& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::map<ExtRational, long> entries_;
};

// Root valuations of f at p from the Newton polygon: X^k factors are
// reported as k roots of valuation Infinity; each lower-hull segment
// from (i1,y1) to (i2,y2) contributes i2-i1 roots of valuation
// (y1-y2)/(i2-i1). Total multiplicity = deg f.
ValuationSpectrum newton_root_valuations(const Prime& p, const Poly& f);

std::string to_string(const ValuationSpectrum& s);

} // namespace zqx

#endif
