#ifndef ZQX_FP_POLY_HPP
#define ZQX_FP_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zqx/poly.hpp"
#include "zqx/rational.hpp"

namespace zqx {

// Dense polynomial over F_p, coefficients reduced to [0, p).
class FpPoly {
public:
    FpPoly(Prime p, std::vector<std::uint64_t> coeffs);
    static FpPoly zero(Prime p) { return FpPoly(p, {}); }
    static FpPoly constant(Prime p, std::uint64_t c) { return FpPoly(p, {c}); }

    // Reduction of a rational polynomial; every coefficient must have
    // nonnegative p-adic valuation.
    static FpPoly reduce(Prime p, const Poly& f);

    const Prime& prime() const { return p_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t coeff(long k) const;
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly mod(const FpPoly& m) const;
    FpPoly divide_exact(const FpPoly& divisor) const;

    FpPoly monic() const;
    FpPoly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;
    FpPoly pow(const Int& e) const;             // plain power
    FpPoly powmod(const Int& e, const FpPoly& m) const;

    friend bool operator==(const FpPoly& a, const FpPoly& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

private:
    void normalize();
    Prime p_;
    std::vector<std::uint64_t> coeffs_;
};

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);

// Deterministic irreducibility over F_p (Rabin's criterion).
bool fp_irreducible(const FpPoly& h);
bool fp_irreducible(Prime p, const Poly& h);

// Squarefree part (product of the distinct monic irreducible factors).
FpPoly fp_radical(const FpPoly& h);

std::string to_string(const FpPoly& f);

} // namespace zqx

#endif
