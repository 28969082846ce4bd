#ifndef ZQX_BALLCALC_HPP
#define ZQX_BALLCALC_HPP

#include <string>
#include <vector>

#include "zqx/dvr.hpp"

namespace zqx {

// True iff the inner ball sits inside some Galois conjugate of the
// outer ball, i.e. W_outer cap Q[X] is contained in W_inner cap Q[X].
bool orbit_contains(const DvrSpec& outer, const DvrSpec& inner);

// Same orbit of balls: equal radii plus mutual containment.
bool orbit_equal(const DvrSpec& a, const DvrSpec& b);

enum class OrderRelation { Equal, Less, Greater, Incomparable, DifferentPrime };

std::string to_string(OrderRelation r);

// The polynomial order: Less means W_1 cap Q[X] is contained in
// W_2 cap Q[X] (w_1 <= w_2 pointwise on Q[X]).
OrderRelation order_compare(const DvrSpec& s1, const DvrSpec& s2);

struct ReduceResult {
    std::vector<DvrSpec> kept;
    struct Removed {
        DvrSpec spec;
        std::string reason;
    };
    std::vector<Removed> removed;
};

// Removes orbit duplicates, then every spec whose ball orbit lies
// inside a different remaining spec's ball orbit (its DVR is an
// overring of the rest, hence superfluous). The kept set is the
// orbit-maximal antichain and does not depend on input order.
ReduceResult reduce_family(const std::vector<DvrSpec>& specs);

// Canonical display order: by radius, then by center text.
bool canonical_spec_less(const DvrSpec& a, const DvrSpec& b);

} // namespace zqx

#endif
