#ifndef ZQX_RESULTANT_HPP
#define ZQX_RESULTANT_HPP

#include <vector>

#include "zqx/poly.hpp"
#include "zqx/rational.hpp"

namespace zqx {

// Integer polynomial, dense, trailing entry nonzero.
using ZPoly = std::vector<Int>;

long zp_degree(const ZPoly& f);
ZPoly zp_from_poly(const Poly& f); // clears denominators, primitive scaling kept

// Exact resultant over Z via the subresultant pseudo-remainder
// sequence (content extraction plus the g/h correction factors).
Int resultant_z(const ZPoly& A, const ZPoly& B);

// Res_Y(q(Y), f(X+Y)): the polynomial whose roots are {beta - alpha' :
// f(beta) = 0, q(alpha') = 0} with multiplicity, degree (deg q)(deg f).
// Returned primitive with positive leading coefficient; computed by
// integer resultants at deg+1 points and exact interpolation.
Poly difference_polynomial(const Poly& q, const Poly& f);

// Exact Lagrange interpolation through distinct points.
Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

} // namespace zqx

#endif
