#include "zqx/rational.hpp"

#include <cctype>

namespace zqx {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    // Deterministic Miller-Rabin below 2^64 with the 12-prime base set.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) fail("NotPrime", std::to_string(p) + " is not prime");
}

const Rational& ExtRational::value() const {
    if (!finite_) fail("InternalError", "value() on infinity");
    return value_;
}

ExtRational ExtRational::operator+(const ExtRational& o) const {
    if (!finite_ || !o.finite_) return infinity();
    return ExtRational(value_ + o.value_);
}

ExtRational ExtRational::operator*(long k) const {
    if (!finite_) return infinity();
    return ExtRational(value_ * k);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.finite_ != b.finite_) return false;
    if (!a.finite_) return true;
    return a.value_ == b.value_;
}

bool operator<(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
}

bool operator<=(const ExtRational& a, const ExtRational& b) {
    return a < b || a == b;
}

long vp_int(const Prime& p, const Int& n) {
    if (n == 0) fail("InternalError", "vp_int of zero");
    mpz_class tmp;
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.as_int().get_mpz_t()));
}

ExtRational vp_rational(const Prime& p, const Rational& x) {
    if (x == 0) return ExtRational::infinity();
    long v = vp_int(p, x.get_num()) - vp_int(p, x.get_den());
    return ExtRational(Rational(v));
}

std::uint64_t residue_mod_p(const Prime& p, const Rational& x) {
    ExtRational v = vp_rational(p, x);
    if (v.is_finite() && v.value() < 0)
        fail("CenterNotIntegral", "residue undefined: v_" + std::to_string(p.value()) + "(" + to_string(x) + ") < 0");
    Int pz = p.as_int();
    Int num = x.get_num() % pz;
    if (num < 0) num += pz;
    Int den = x.get_den() % pz;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t()) == 0)
        fail("InternalError", "denominator not invertible mod p");
    Int r = (num * inv) % pz;
    return r.get_ui();
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail("ParseError", "empty rational");
    if (s[0] == '+') s.erase(0, 1);
    std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto all_digits = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        std::size_t i = (sign_ok && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!all_digits(num, true) || !all_digits(den, false))
        fail("ParseError", "bad rational '" + text + "'");
    Rational r(num + "/" + den);
    if (r.get_den() == 0) fail("ParseError", "zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) {
    std::string s = x.get_num().get_str();
    if (x.get_den() != 1) s += "/" + x.get_den().get_str();
    return s;
}

ExtRational parse_ext_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s == "inf") return ExtRational::infinity();
    return ExtRational(parse_rational(s));
}

std::string to_string(const ExtRational& x) {
    if (x.is_infinity()) return "inf";
    return to_string(x.value());
}

} // namespace zqx
