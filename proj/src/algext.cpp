#include "zqx/algext.hpp"

#include "zqx/resultant.hpp"

namespace zqx {

std::string to_string(QpCertificate::Kind k) {
    switch (k) {
        case QpCertificate::Kind::DegreeOne: return "DegreeOne";
        case QpCertificate::Kind::Unramified: return "Unramified";
        case QpCertificate::Kind::Eisenstein: return "Eisenstein";
        case QpCertificate::Kind::SingleSlope: return "SingleSlope";
    }
    return "?";
}

long QpCertificate::ram_index() const {
    switch (kind) {
        case Kind::DegreeOne: return 1;
        case Kind::Unramified: return 1;
        case Kind::Eisenstein: return degree;
        case Kind::SingleSlope: return degree;
    }
    return 1;
}

long QpCertificate::residue_degree() const {
    return degree / ram_index();
}

QpCertificate certify_qp_irreducible(const Prime& p, const Poly& q) {
    if (q.is_zero() || q.degree() < 1 || !q.is_monic() || !q.has_integer_coeffs())
        fail("PreconditionViolated", "certification needs a monic integer polynomial of degree >= 1");

    ValuationSpectrum spec = newton_root_valuations(p, q);
    for (const auto& [v, m] : spec.entries())
        if (v.is_finite() && v.value() < 0)
            fail("RootsNotIntegral", "root valuation " + to_string(v) + " < 0 at p=" + std::to_string(p.value()));

    long n = q.degree();
    QpCertificate cert;
    cert.degree = n;

    if (n == 1) {
        cert.kind = QpCertificate::Kind::DegreeOne;
        cert.witness = "degree 1";
        return cert;
    }

    if (fp_irreducible(p, q)) {
        cert.kind = QpCertificate::Kind::Unramified;
        cert.witness = "irreducible mod " + std::to_string(p.value());
        return cert;
    }

    bool eisenstein = true;
    for (long i = 0; i < n; ++i) {
        ExtRational v = vp_rational(p, q.coeff(i));
        if (v.is_finite() && v.value() < 1) {
            eisenstein = false;
            break;
        }
    }
    if (eisenstein) {
        ExtRational v0 = vp_rational(p, q.coeff(0));
        if (v0.is_finite() && v0.value() == 1) {
            cert.kind = QpCertificate::Kind::Eisenstein;
            cert.witness = "Eisenstein at " + std::to_string(p.value());
            return cert;
        }
    }

    if (spec.entries().size() == 1) {
        const auto& [v, m] = *spec.entries().begin();
        if (v.is_finite() && m == n && v.value().get_den() == n) {
            cert.kind = QpCertificate::Kind::SingleSlope;
            cert.slope = v.value();
            cert.witness = "one Newton slope " + to_string(v) + " with denominator " + std::to_string(n);
            return cert;
        }
    }

    fail("CannotCertify", "no irreducibility criterion applies to " + to_string(q) + " at p=" +
                              std::to_string(p.value()));
}

std::pair<long, long> ramification_residue(const QpCertificate& cert, long n) {
    if (n != cert.degree) fail("PreconditionViolated", "certificate degree mismatch");
    long e = cert.ram_index();
    return {e, n / e};
}

FpPoly residue_min_poly(const Prime& p, const Poly& q) {
    FpPoly hbar = FpPoly::reduce(p, q);
    if (hbar.degree() != q.degree()) fail("PreconditionViolated", "q must be monic");
    FpPoly rad = fp_radical(hbar);
    long n = q.degree();
    long d = rad.degree();
    if (d <= 0 || n % d != 0 || !fp_irreducible(rad) || rad.pow(Int(n / d)) != hbar.monic())
        fail("ResidueNotPurePower",
             "residue of " + to_string(q) + " mod " + std::to_string(p.value()) + " is not a power of an irreducible");
    return rad;
}

ValuationSpectrum per_root_distances(const Prime& p, const Poly& q_from, const Poly& q_to) {
    if (q_to.is_zero()) fail("ZeroPolynomial", "distance spectrum to the zero polynomial");
    if (q_from.degree() < 1) fail("PreconditionViolated", "q_from must have degree >= 1");

    if (q_from.degree() == 1) {
        // alpha = -q_from(0)/lc: roots of q_to(X + alpha) are beta - alpha.
        Rational alpha = -q_from.coeff(0) / q_from.leading();
        if (q_to.degree() == 0) return ValuationSpectrum();
        return newton_root_valuations(p, shift_compose(q_to, alpha));
    }

    Poly diff = difference_polynomial(q_from, q_to);
    if (q_to.degree() == 0) return ValuationSpectrum();
    ValuationSpectrum spec = newton_root_valuations(p, diff);
    if (!spec.divide_multiplicities(q_from.degree()))
        fail("MultiplicityNotDivisible",
             "distance multiset not divisible by deg q_from; certificate for " + to_string(q_from) + " is wrong");
    return spec;
}

ExtRational krasner_bound(const Prime& p, const Poly& q) {
    if (q.degree() < 2) fail("DegreeOneCenter", "no conjugates for a degree-one center");
    ValuationSpectrum spec = per_root_distances(p, q, q);
    return spec.max_finite();
}

std::string to_string(MinimalPairStatus::Verdict v) {
    switch (v) {
        case MinimalPairStatus::Verdict::Minimal: return "Minimal";
        case MinimalPairStatus::Verdict::NotMinimal: return "NotMinimal";
        case MinimalPairStatus::Verdict::Unknown: return "Unknown";
    }
    return "?";
}

MinimalPairStatus minimal_pair_status(const Prime& p, const Poly& q, const QpCertificate& cert,
                                      const Rational& delta) {
    using V = MinimalPairStatus::Verdict;
    if (cert.kind == QpCertificate::Kind::DegreeOne)
        return {V::Minimal, "degree-one center"};

    ExtRational omega = krasner_bound(p, q);
    bool above = ExtRational(delta) > omega;
    if (cert.kind == QpCertificate::Kind::Unramified) {
        // delta_{Q_p}(alpha) = omega(alpha) holds exactly for unramified alpha.
        if (above) return {V::Minimal, "unramified and delta > omega = " + to_string(omega)};
        return {V::NotMinimal, "unramified and delta <= omega = " + to_string(omega)};
    }
    if (above) return {V::Minimal, "delta > omega = " + to_string(omega) + " (Krasner bound)"};
    return {V::Unknown, "ramified center with delta <= omega = " + to_string(omega)};
}

long conjugates_in_ball(const Prime& p, const Poly& q, const Rational& delta) {
    if (q.degree() < 1) fail("PreconditionViolated", "center polynomial must be nonconstant");
    ValuationSpectrum spec = per_root_distances(p, q, q);
    return spec.count_at_least(ExtRational(delta));
}

} // namespace zqx
