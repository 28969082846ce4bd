#ifndef ZQX_QIRRED_HPP
#define ZQX_QIRRED_HPP

#include "zqx/poly.hpp"

namespace zqx {

// Irreducibility over Q. Complete: rational-root test through degree 3,
// mod-p certificates, then a Kronecker factor search as the deciding
// fallback. Constants are not irreducible.
bool is_irreducible_over_q(const Poly& q);

} // namespace zqx

#endif
