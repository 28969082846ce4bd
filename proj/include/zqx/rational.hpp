#ifndef ZQX_RATIONAL_HPP
#define ZQX_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "zqx/error.hpp"

namespace zqx {

using Int = mpz_class;
using Rational = mpq_class;

// A prime number, validated on construction. Primality is decided
// deterministically (Miller-Rabin with a proven base set) for values
// below 2^64; anything larger is rejected.
class Prime {
public:
    explicit Prime(std::uint64_t p);

    std::uint64_t value() const { return p_; }
    Int as_int() const { return Int(static_cast<unsigned long>(p_)); }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }
    friend bool operator<(const Prime& a, const Prime& b) { return a.p_ < b.p_; }

private:
    std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

// A value in Q together with the distinguished element +infinity.
// Infinity compares strictly greater than every rational, absorbs
// addition, and min(inf, x) = x.
class ExtRational {
public:
    ExtRational() : finite_(true), value_(0) {}
    ExtRational(const Rational& v) : finite_(true), value_(v) { value_.canonicalize(); }
    ExtRational(long v) : finite_(true), value_(v) {}

    static ExtRational infinity() {
        ExtRational e;
        e.finite_ = false;
        return e;
    }

    bool is_infinity() const { return !finite_; }
    bool is_finite() const { return finite_; }

    // Only valid on finite values.
    const Rational& value() const;

    ExtRational operator+(const ExtRational& o) const;
    ExtRational operator-() const = delete; // -inf has no meaning here
    ExtRational operator*(long k) const;

    friend bool operator==(const ExtRational& a, const ExtRational& b);
    friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
    friend bool operator<(const ExtRational& a, const ExtRational& b);
    friend bool operator<=(const ExtRational& a, const ExtRational& b);
    friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
    friend bool operator>=(const ExtRational& a, const ExtRational& b) { return b <= a; }

    friend ExtRational min(const ExtRational& a, const ExtRational& b) { return a <= b ? a : b; }
    friend ExtRational max(const ExtRational& a, const ExtRational& b) { return a <= b ? b : a; }

private:
    bool finite_;
    Rational value_;
};

// v_p(x): the exponent of p in x, Infinity for x = 0.
ExtRational vp_rational(const Prime& p, const Rational& x);

// Exponent of p in a nonzero integer.
long vp_int(const Prime& p, const Int& n);

// Residue of x mod p, for v_p(x) >= 0; result in [0, p).
std::uint64_t residue_mod_p(const Prime& p, const Rational& x);

// Text form: optional sign, integer, optional "/" positive integer.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

// As above, plus "inf".
ExtRational parse_ext_rational(const std::string& text);
std::string to_string(const ExtRational& x);

} // namespace zqx

#endif
