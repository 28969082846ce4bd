#ifndef ZQX_ABELIAN_HPP
#define ZQX_ABELIAN_HPP

#include <string>
#include <vector>

#include "zqx/rational.hpp"

namespace zqx {

// A finitely generated abelian group in canonical form: invariant
// factors (each >= 2, each dividing the next) plus a free rank.
struct AbelianGroupInv {
    std::vector<Int> torsion;
    long free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }

    friend bool operator==(const AbelianGroupInv& a, const AbelianGroupInv& b) {
        return a.torsion == b.torsion && a.free_rank == b.free_rank;
    }
    friend bool operator!=(const AbelianGroupInv& a, const AbelianGroupInv& b) { return !(a == b); }
};

// Normalizes a direct sum of cyclic groups Z/dZ (d = 0 meaning Z) to
// invariant factors. Moduli equal to 1 are dropped.
AbelianGroupInv canonicalize_group(const std::vector<Int>& summands);

// "Z/2 + Z/6 + Z^2", "Z", "0" for the trivial group.
std::string to_string(const AbelianGroupInv& g);

// Comma list of moduli, "0" meaning a Z summand, e.g. "2,6,0,0".
AbelianGroupInv parse_group(const std::string& text);

} // namespace zqx

#endif
