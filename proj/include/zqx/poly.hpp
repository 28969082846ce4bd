#ifndef ZQX_POLY_HPP
#define ZQX_POLY_HPP

#include <string>
#include <vector>

#include "zqx/rational.hpp"

namespace zqx {

// Dense univariate polynomial over Q. Coefficients are indexed by
// exponent; the highest entry is nonzero unless the polynomial is
// zero, in which case the list is empty and degree() is -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, long k);
    static Poly variable(); // X

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(long k) const; // 0 outside range
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_monic() const;
    bool has_integer_coeffs() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;

    Rational eval(const Rational& x) const;
    Poly derivative() const;

    // Positive rational c with (*this)/c primitive over Z; sign of the
    // leading coefficient is untouched. Zero polynomial has content 0.
    Rational content() const;
    // this / content(), integer coprime coefficients.
    Poly primitive_part() const;

    // Exact division; fails ("InternalError") if the remainder is nonzero.
    Poly divide_exact(const Poly& divisor) const;
    // Quotient/remainder in Q[X].
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

// f(X + a), computed exactly.
Poly shift_compose(const Poly& f, const Rational& a);

// Terms "c*X^k", "X^k", "c" joined by + / -; variable fixed to X.
Poly parse_poly(const std::string& text);
std::string to_string(const Poly& f);

} // namespace zqx

#endif
