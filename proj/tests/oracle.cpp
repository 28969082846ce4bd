#include "oracle.hpp"

#include "zqx/ballcalc.hpp"
#include "zqx/resultant.hpp"

namespace zqx::oracle {

ExtRational mono_val_direct(const Prime& p, const Rational& a, const Rational& delta, const Poly& f) {
    if (f.is_zero()) return ExtRational::infinity();
    // Taylor coefficients around a by repeated division by (X - a).
    Poly divisor = Poly::variable() - Poly::constant(a);
    Poly g = f;
    std::vector<Rational> taylor;
    while (!g.is_zero()) {
        auto [quot, rem] = g.divmod(divisor);
        taylor.push_back(rem.is_zero() ? Rational(0) : rem.coeff(0));
        g = quot;
    }
    ExtRational best = ExtRational::infinity();
    for (std::size_t i = 0; i < taylor.size(); ++i) {
        if (taylor[i] == 0) continue;
        ExtRational term = vp_rational(p, taylor[i]) + ExtRational(delta * static_cast<long>(i));
        best = min(best, term);
    }
    return best;
}

Rational resultant_sylvester(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) fail("ZeroPolynomial", "resultant of 0");
    long m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rational(1);

    // Sylvester matrix rows: n shifted copies of f, m shifted copies of g.
    long size = m + n;
    std::vector<std::vector<Rational>> M(size, std::vector<Rational>(size, Rational(0)));
    for (long r = 0; r < n; ++r)
        for (long k = 0; k <= m; ++k) M[r][r + k] = f.coeff(m - k);
    for (long r = 0; r < m; ++r)
        for (long k = 0; k <= n; ++k) M[n + r][r + k] = g.coeff(n - k);

    // Clear denominators per row, then Bareiss over Z.
    Rational scale(1);
    std::vector<std::vector<Int>> A(size, std::vector<Int>(size));
    for (long r = 0; r < size; ++r) {
        Int den(1);
        for (long c = 0; c < size; ++c) den = lcm(den, Int(M[r][c].get_den()));
        scale /= Rational(den);
        for (long c = 0; c < size; ++c) {
            Rational v = M[r][c] * Rational(den);
            v.canonicalize();
            A[r][c] = Int(v.get_num());
        }
    }

    int sign = 1;
    Int prev(1);
    for (long k = 0; k < size; ++k) {
        if (A[k][k] == 0) {
            long pivot = -1;
            for (long r = k + 1; r < size; ++r)
                if (A[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Rational(0);
            std::swap(A[k], A[pivot]);
            sign = -sign;
        }
        for (long i = k + 1; i < size; ++i)
            for (long j = k + 1; j < size; ++j) {
                Int num = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                if (num % prev != 0) fail("InternalError", "Bareiss division not exact");
                A[i][j] = num / prev;
            }
        prev = A[k][k];
    }
    Rational det(A[size - 1][size - 1] * sign);
    return det * scale;
}

Poly difference_polynomial_sylvester(const Poly& q, const Poly& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "difference polynomial of 0");
    if (f.degree() == 0) return Poly::constant(Rational(1));
    long target = q.degree() * f.degree();
    std::vector<std::pair<Rational, Rational>> pts;
    for (long k = 0; k <= target; ++k) {
        Rational x(k - target / 2);
        // f(x + Y) as a polynomial in Y
        Poly shifted = shift_compose(f, x);
        pts.emplace_back(x, resultant_sylvester(q, shifted));
    }
    Poly r = interpolate(pts);
    r = r.primitive_part();
    if (!r.is_zero() && r.leading() < 0) r = -r;
    return r;
}

OrderSampleReport order_sample_check(const DvrSpec& s1, const DvrSpec& s2, long trials, std::uint64_t seed) {
    OrderRelation rel = order_compare(s1, s2);
    std::mt19937_64 rng(seed);
    OrderSampleReport rep;
    for (long t = 0; t < trials; ++t) {
        Poly f = random_poly(rng);
        if (f.is_zero()) continue;
        ExtRational v1 = mono_val(s1, f);
        ExtRational v2 = mono_val(s2, f);
        if (v1 < v2)
            ++rep.lt;
        else if (v2 < v1)
            ++rep.gt;
        else
            ++rep.eq;
        bool bad = false;
        switch (rel) {
            case OrderRelation::Less: bad = !(v1 <= v2); break;
            case OrderRelation::Greater: bad = !(v2 <= v1); break;
            case OrderRelation::Equal: bad = !(v1 == v2); break;
            case OrderRelation::Incomparable:
            case OrderRelation::DifferentPrime: bad = false; break;
        }
        if (bad)
            rep.violations.push_back("f=" + to_string(f) + ": v1=" + to_string(v1) + " v2=" + to_string(v2) +
                                     " contradicts " + to_string(rel));
    }
    return rep;
}

Rational random_rational(std::mt19937_64& rng, long max_abs_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<long> den(1, max_den);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

Poly random_poly(std::mt19937_64& rng, long max_degree, long max_abs_num, long max_den) {
    std::uniform_int_distribution<long> deg(0, max_degree);
    long d = deg(rng);
    std::vector<Rational> coeffs(d + 1);
    for (long i = 0; i <= d; ++i) coeffs[i] = random_rational(rng, max_abs_num, max_den);
    return Poly(std::move(coeffs));
}

} // namespace zqx::oracle
