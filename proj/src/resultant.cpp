#include "zqx/resultant.hpp"

namespace zqx {

namespace {

void zp_normalize(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Int zp_content(const ZPoly& f) {
    Int g(0);
    for (const Int& c : f) g = gcd(g, c);
    return g;
}

ZPoly zp_div_scalar(const ZPoly& f, const Int& d) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] % d != 0) fail("InternalError", "inexact scalar division in PRS");
        r[i] = f[i] / d;
    }
    return r;
}

ZPoly zp_mul_scalar(const ZPoly& f, const Int& c) {
    ZPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] * c;
    return r;
}

// lc(B)^(deg A - deg B + 1) * A mod B, staying in Z[X].
ZPoly zp_prem(const ZPoly& A, const ZPoly& B) {
    long db = zp_degree(B);
    const Int& lb = B.back();
    ZPoly R = A;
    long steps = zp_degree(A) - db + 1;
    while (true) {
        zp_normalize(R);
        long dr = zp_degree(R);
        if (dr < db) break;
        ZPoly next(std::max<std::size_t>(R.size(), 0), Int(0));
        next.resize(R.size());
        for (std::size_t i = 0; i < R.size(); ++i) next[i] = R[i] * lb;
        const Int& lr = R.back();
        long shift = dr - db;
        for (std::size_t i = 0; i < B.size(); ++i) next[shift + i] -= lr * B[i];
        R = std::move(next);
        --steps;
    }
    // Account for elimination steps skipped by vanished leading terms.
    if (steps > 0) {
        Int scale(1);
        for (long i = 0; i < steps; ++i) scale *= lb;
        R = zp_mul_scalar(R, scale);
    }
    return R;
}

Int int_pow(const Int& b, long e) {
    Int r(1);
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

long zp_degree(const ZPoly& f) {
    return static_cast<long>(f.size()) - 1;
}

ZPoly zp_from_poly(const Poly& f) {
    Poly pp = f.primitive_part();
    ZPoly r;
    r.reserve(pp.coeffs().size());
    for (const auto& c : pp.coeffs()) r.push_back(Int(c.get_num()));
    return r;
}

Int resultant_z(const ZPoly& A0, const ZPoly& B0) {
    ZPoly A = A0, B = B0;
    zp_normalize(A);
    zp_normalize(B);
    if (A.empty() || B.empty()) fail("ZeroPolynomial", "resultant of 0");

    int s = 1;
    if (zp_degree(A) < zp_degree(B)) {
        if ((zp_degree(A) & 1) && (zp_degree(B) & 1)) s = -s;
        std::swap(A, B);
    }
    Int a = zp_content(A), b = zp_content(B);
    A = zp_div_scalar(A, a);
    B = zp_div_scalar(B, b);
    Int t = int_pow(a, zp_degree(B)) * int_pow(b, zp_degree(A));
    Int g(1), h(1);

    while (zp_degree(B) > 0) {
        long delta = zp_degree(A) - zp_degree(B);
        if ((zp_degree(A) & 1) && (zp_degree(B) & 1)) s = -s;
        ZPoly R = zp_prem(A, B);
        A = B;
        Int divisor = g * int_pow(h, delta);
        zp_normalize(R);
        B = R.empty() ? R : zp_div_scalar(R, divisor);
        g = A.back();
        if (delta > 0) {
            // h = g^delta / h^(delta-1), exact in Z
            Int num = int_pow(g, delta);
            Int den = int_pow(h, delta - 1);
            if (num % den != 0) fail("InternalError", "h update not exact in PRS");
            h = num / den;
        }
        if (B.empty()) return Int(0);
    }
    // deg B == 0
    long da = zp_degree(A);
    Int num = int_pow(B.back(), da);
    Int den = int_pow(h, da - 1 < 0 ? 0 : da - 1);
    if (da >= 1) {
        if (num % den != 0) fail("InternalError", "final h not exact in PRS");
        h = num / den;
    } else {
        h = Int(1);
    }
    return s * t * h;
}

Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton divided differences, expanded exactly.
    std::size_t n = points.size();
    std::vector<Rational> coef(n);
    std::vector<Rational> tab(n);
    for (std::size_t i = 0; i < n; ++i) tab[i] = points[i].second;
    coef[0] = tab[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            Rational dx = points[i + level].first - points[i].first;
            tab[i] = (tab[i + 1] - tab[i]) / dx;
        }
        coef[level] = tab[0];
    }
    Poly result;
    Poly basis = Poly::constant(Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
        result = result + basis * coef[i];
        basis = basis * (Poly::variable() - Poly::constant(points[i].first));
    }
    return result;
}

Poly difference_polynomial(const Poly& q, const Poly& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "difference polynomial of 0");
    if (q.degree() < 1 || !q.is_monic() || !q.has_integer_coeffs())
        fail("PreconditionViolated", "difference_polynomial needs monic integer q of degree >= 1");
    if (f.degree() == 0) return Poly::constant(Rational(1));

    ZPoly qz = zp_from_poly(q);
    ZPoly fz = zp_from_poly(f);
    long target = q.degree() * f.degree();

    std::vector<std::pair<Rational, Rational>> samples;
    samples.reserve(target + 1);
    for (long k = 0; k <= target; ++k) {
        long x = k - target / 2;
        // f(x + Y) by integer Horner shift
        ZPoly shifted(fz.size(), Int(0));
        for (auto it = fz.rbegin(); it != fz.rend(); ++it) {
            // shifted = shifted * (Y + x) + *it
            ZPoly next(shifted.size() + 1, Int(0));
            for (std::size_t i = 0; i < shifted.size(); ++i) {
                next[i + 1] += shifted[i];
                next[i] += shifted[i] * x;
            }
            next[0] += *it;
            zp_normalize(next);
            shifted = std::move(next);
        }
        Int r = resultant_z(qz, shifted);
        samples.emplace_back(Rational(x), Rational(r));
    }
    Poly R = interpolate(samples);
    if (R.degree() != target) fail("InternalError", "difference polynomial degree mismatch");
    R = R.primitive_part();
    if (R.leading() < 0) R = -R;
    return R;
}

} // namespace zqx
