#include "zqx/poly.hpp"

#include <cctype>
#include <sstream>

namespace zqx {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational& c, long k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::variable() {
    return monomial(Rational(1), 1);
}

const Rational& Poly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[k];
}

const Rational& Poly::leading() const {
    if (is_zero()) fail("ZeroPolynomial", "leading coefficient of 0");
    return coeffs_.back();
}

bool Poly::is_monic() const {
    return !is_zero() && leading() == 1;
}

bool Poly::has_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator-() const {
    std::vector<Rational> v(coeffs_);
    for (auto& c : v) c = -c;
    return Poly(std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& c) const {
    std::vector<Rational> v(coeffs_);
    for (auto& x : v) x *= c;
    return Poly(std::move(v));
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Rational Poly::content() const {
    if (is_zero()) return Rational(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        num_gcd = gcd(num_gcd, Int(c.get_num()));
        den_lcm = lcm(den_lcm, Int(c.get_den()));
    }
    Rational r(num_gcd, den_lcm);
    r.canonicalize();
    return abs(r);
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    return (*this) * (Rational(1) / content());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) fail("ZeroPolynomial", "division by zero polynomial");
    Poly rem = *this;
    std::vector<Rational> q(std::max<long>(degree() - divisor.degree() + 1, 0), Rational(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        long k = rem.degree() - divisor.degree();
        Rational c = rem.leading() / divisor.leading();
        q[k] = c;
        rem = rem - divisor * Poly::monomial(c, k);
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::divide_exact(const Poly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) fail("InternalError", "inexact polynomial division");
    return q;
}

Poly shift_compose(const Poly& f, const Rational& a) {
    // Horner in (X + a): result = (... (f_n (X+a) + f_{n-1}) (X+a) ...).
    Poly result;
    Poly xa = Poly::variable() + Poly::constant(a);
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        result = result * xa + Poly::constant(*it);
    return result;
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }

    std::string number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("ParseError", "expected digits in polynomial '" + s + "'");
        return s.substr(start, i - start);
    }

    Rational rational() {
        std::string num = number();
        skip_ws();
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::string den = number();
            Rational r(num + "/" + den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }
};

} // namespace

Poly parse_poly(const std::string& text) {
    PolyLexer lex{text};
    Poly result;
    bool any = false;
    while (!lex.done()) {
        int sign = 1;
        while (!lex.done() && (lex.peek() == '+' || lex.peek() == '-')) {
            if (lex.peek() == '-') sign = -sign;
            ++lex.i;
        }
        if (lex.done()) fail("ParseError", "dangling sign in '" + text + "'");
        Rational c(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
            c = lex.rational();
            have_coeff = true;
        }
        long k = 0;
        if (!lex.done() && (lex.peek() == '*' || lex.peek() == 'X' || lex.peek() == 'x')) {
            if (lex.peek() == '*') {
                ++lex.i;
                if (lex.done() || (lex.peek() != 'X' && lex.peek() != 'x'))
                    fail("ParseError", "expected X after '*' in '" + text + "'");
            }
            ++lex.i; // consume X
            k = 1;
            if (!lex.done() && lex.peek() == '^') {
                ++lex.i;
                k = std::stol(lex.number());
            }
        } else if (!have_coeff) {
            fail("ParseError", "expected term in '" + text + "'");
        }
        if (sign < 0) c = -c;
        result = result + Poly::monomial(c, k);
        any = true;
    }
    if (!any) fail("ParseError", "empty polynomial");
    return result;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = f.degree(); k >= 0; --k) {
        const Rational& c = f.coeff(k);
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (k == 0) {
            out << to_string(a);
        } else {
            if (a != 1) out << to_string(a) << "*";
            out << "X";
            if (k != 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

} // namespace zqx
