#include "zqx/newton.hpp"

#include <sstream>

namespace zqx {

void ValuationSpectrum::add(const ExtRational& v, long multiplicity) {
    if (multiplicity == 0) return;
    entries_[v] += multiplicity;
    if (entries_[v] == 0) entries_.erase(v);
}

long ValuationSpectrum::total_multiplicity() const {
    long t = 0;
    for (const auto& [v, m] : entries_) t += m;
    return t;
}

long ValuationSpectrum::count_at_least(const ExtRational& threshold) const {
    long t = 0;
    for (const auto& [v, m] : entries_)
        if (v >= threshold) t += m;
    return t;
}

bool ValuationSpectrum::has_finite() const {
    for (const auto& [v, m] : entries_)
        if (v.is_finite()) return true;
    return false;
}

ExtRational ValuationSpectrum::max_finite() const {
    const ExtRational* best = nullptr;
    for (const auto& [v, m] : entries_)
        if (v.is_finite()) best = &v;
    if (!best) fail("InternalError", "no finite entry in spectrum");
    return *best;
}

Rational ValuationSpectrum::finite_weighted_sum() const {
    Rational s(0);
    for (const auto& [v, m] : entries_)
        if (v.is_finite()) s += v.value() * m;
    return s;
}

Rational ValuationSpectrum::capped_sum(const Rational& cap) const {
    Rational s(0);
    for (const auto& [v, m] : entries_) {
        if (v.is_finite() && v.value() < cap)
            s += v.value() * m;
        else
            s += cap * m;
    }
    return s;
}

bool ValuationSpectrum::divide_multiplicities(long d) {
    for (auto& [v, m] : entries_) {
        if (m % d != 0) return false;
    }
    for (auto& [v, m] : entries_) m /= d;
    return true;
}

ValuationSpectrum newton_root_valuations(const Prime& p, const Poly& f) {
    if (f.is_zero()) fail("ZeroPolynomial", "Newton polygon of 0");
    ValuationSpectrum spec;

    long k = 0;
    while (f.coeff(k) == 0) ++k;
    if (k > 0) spec.add(ExtRational::infinity(), k);
    if (f.degree() == k) return spec; // monomial: only the X^k roots

    // Points (i, v_p(a_i)) for the stripped polynomial; valuations of
    // nonzero rationals are integers, so the hull is exact over Z.
    struct Pt {
        long x;
        Int y;
    };
    std::vector<Pt> pts;
    for (long i = k; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        ExtRational v = vp_rational(p, f.coeff(i));
        pts.push_back({i - k, Int(v.value().get_num())});
    }

    // Lower convex hull, left to right (monotone chain; cross >= 0 drops
    // the middle point, keeping strictly convex-down vertices).
    std::vector<Pt> hull;
    for (const Pt& q : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            Int cross = (b.y - a.y) * (q.x - a.x) - (q.y - a.y) * (b.x - a.x);
            if (cross >= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(q);
    }

    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        long width = hull[s + 1].x - hull[s].x;
        Rational val(hull[s].y - hull[s + 1].y, Int(width));
        val.canonicalize();
        spec.add(ExtRational(val), width);
    }
    return spec;
}

std::string to_string(const ValuationSpectrum& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [v, m] : s.entries()) {
        if (!first) out << ", ";
        out << to_string(v) << " x" << m;
        first = false;
    }
    out << "}";
    return out.str();
}

} // namespace zqx
