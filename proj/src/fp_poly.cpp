#include "zqx/fp_poly.hpp"

#include <sstream>

namespace zqx {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    return powmod(a, p - 2, p); // p prime, a != 0
}

} // namespace

FpPoly::FpPoly(Prime p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p_.value();
    normalize();
}

void FpPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::reduce(Prime p, const Poly& f) {
    std::vector<std::uint64_t> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(residue_mod_p(p, c));
    return FpPoly(p, std::move(v));
}

std::uint64_t FpPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[k];
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<std::uint64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = (v[i] + o.coeffs_[i]) % p_.value();
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<std::uint64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = (v[i] + p_.value() - o.coeffs_[i]) % p_.value();
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(p_);
    std::vector<std::uint64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] = (v[i + j] + mulmod(coeffs_[i], o.coeffs_[j], p_.value())) % p_.value();
    }
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::mod(const FpPoly& m) const {
    if (m.is_zero()) fail("ZeroPolynomial", "mod by zero polynomial");
    std::vector<std::uint64_t> r = coeffs_;
    std::uint64_t lead_inv = invmod(m.coeffs_.back(), p_.value());
    while (static_cast<long>(r.size()) - 1 >= m.degree()) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<long>(r.size()) - 1 < m.degree()) break;
        std::uint64_t c = mulmod(r.back(), lead_inv, p_.value());
        std::size_t shift = r.size() - m.coeffs_.size();
        for (std::size_t i = 0; i < m.coeffs_.size(); ++i) {
            std::uint64_t sub = mulmod(c, m.coeffs_[i], p_.value());
            r[shift + i] = (r[shift + i] + p_.value() - sub) % p_.value();
        }
    }
    return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::divide_exact(const FpPoly& divisor) const {
    if (divisor.is_zero()) fail("ZeroPolynomial", "division by zero polynomial");
    std::vector<std::uint64_t> r = coeffs_;
    std::vector<std::uint64_t> q(std::max<long>(degree() - divisor.degree() + 1, 0), 0);
    std::uint64_t lead_inv = invmod(divisor.coeffs_.back(), p_.value());
    while (true) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (static_cast<long>(r.size()) - 1 < divisor.degree()) break;
        std::uint64_t c = mulmod(r.back(), lead_inv, p_.value());
        std::size_t shift = r.size() - divisor.coeffs_.size();
        q[shift] = c;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
            std::uint64_t sub = mulmod(c, divisor.coeffs_[i], p_.value());
            r[shift + i] = (r[shift + i] + p_.value() - sub) % p_.value();
        }
    }
    if (!r.empty()) fail("InternalError", "inexact F_p division");
    return FpPoly(p_, std::move(q));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    std::uint64_t inv = invmod(coeffs_.back(), p_.value());
    std::vector<std::uint64_t> v = coeffs_;
    for (auto& c : v) c = mulmod(c, inv, p_.value());
    return FpPoly(p_, std::move(v));
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    x %= p_.value();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = (mulmod(r, x, p_.value()) + *it) % p_.value();
    return r;
}

FpPoly FpPoly::derivative() const {
    if (degree() <= 0) return zero(p_);
    std::vector<std::uint64_t> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = mulmod(coeffs_[i], i % p_.value(), p_.value());
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::pow(const Int& e) const {
    FpPoly r = constant(p_, 1);
    FpPoly base = *this;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

FpPoly FpPoly::powmod(const Int& e, const FpPoly& m) const {
    FpPoly r = constant(p_, 1);
    FpPoly base = this->mod(m);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = (r * base).mod(m);
        base = (base * base).mod(m);
        k >>= 1;
    }
    return r;
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = x.mod(y);
        x = y;
        y = r;
    }
    return x.monic();
}

bool fp_irreducible(const FpPoly& h) {
    if (h.is_zero()) fail("ZeroPolynomial", "irreducibility of 0");
    long n = h.degree();
    if (n == 0) return false;
    if (n == 1) return true;
    FpPoly m = h.monic();
    Prime p = h.prime();
    const FpPoly x = FpPoly(p, {0, 1});

    // Frobenius iterates x^(p^k) mod m.
    auto frob = [&](const FpPoly& a) { return a.powmod(Int(static_cast<unsigned long>(p.value())), m); };

    std::vector<long> prime_divs;
    long nn = n;
    for (long d = 2; d * d <= nn; ++d)
        while (nn % d == 0) {
            if (prime_divs.empty() || prime_divs.back() != d) prime_divs.push_back(d);
            nn /= d;
        }
    if (nn > 1) prime_divs.push_back(nn);

    std::vector<FpPoly> iterates; // iterates[k] = x^(p^k) mod m
    iterates.push_back(x.mod(m));
    for (long k = 1; k <= n; ++k) iterates.push_back(frob(iterates.back()));

    for (long d : prime_divs) {
        FpPoly g = fp_gcd(iterates[n / d] - x.mod(m), m);
        if (g.degree() != 0) return false;
    }
    return iterates[n] == x.mod(m);
}

bool fp_irreducible(Prime p, const Poly& h) {
    return fp_irreducible(FpPoly::reduce(p, h));
}

FpPoly fp_radical(const FpPoly& h) {
    if (h.is_zero()) fail("ZeroPolynomial", "radical of 0");
    Prime p = h.prime();
    FpPoly rad = FpPoly::constant(p, 1);
    FpPoly cur = h.monic();
    while (cur.degree() > 0) {
        FpPoly d = cur.derivative();
        if (d.is_zero()) {
            // cur = w(X^p); over F_p the coefficients are Frobenius-fixed,
            // so the p-th root keeps them and divides exponents by p.
            std::vector<std::uint64_t> w;
            for (long k = 0; k <= cur.degree(); k += static_cast<long>(p.value()))
                w.push_back(cur.coeff(k));
            cur = FpPoly(p, std::move(w));
            continue;
        }
        FpPoly g = fp_gcd(cur, d);
        FpPoly s = cur.divide_exact(g).monic();
        rad = (rad * s.divide_exact(fp_gcd(rad, s))).monic();
        cur = g.monic();
    }
    return rad;
}

std::string to_string(const FpPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = f.degree(); k >= 0; --k) {
        std::uint64_t c = f.coeff(k);
        if (c == 0) continue;
        if (!first) out << "+";
        if (k == 0) {
            out << c;
        } else {
            if (c != 1) out << c << "*";
            out << "X";
            if (k != 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

} // namespace zqx
