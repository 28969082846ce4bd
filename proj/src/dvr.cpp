#include "zqx/dvr.hpp"

#include <sstream>

namespace zqx {

Center Center::rational(const Rational& a) {
    Center c;
    c.kind_ = Kind::Rational;
    c.a_ = a;
    c.a_.canonicalize();
    return c;
}

Center Center::algebraic(const Poly& q) {
    Center c;
    c.kind_ = Kind::Algebraic;
    c.q_ = q;
    return c;
}

Center Center::truncated(const Rational& a, long precision, long declared_e) {
    if (precision < 1) fail("PreconditionViolated", "truncation precision must be >= 1");
    if (declared_e < 1) fail("PreconditionViolated", "declared ramification index must be >= 1");
    Center c;
    c.kind_ = Kind::Truncated;
    c.a_ = a;
    c.a_.canonicalize();
    c.precision_ = precision;
    c.declared_e_ = declared_e;
    return c;
}

const QpCertificate& Center::certificate() const {
    if (!cert_) fail("InternalError", "certificate requested before validation");
    return *cert_;
}

bool operator==(const Center& x, const Center& y) {
    if (x.kind_ != y.kind_) return false;
    switch (x.kind_) {
        case Center::Kind::Rational: return x.a_ == y.a_;
        case Center::Kind::Algebraic: return x.q_ == y.q_;
        case Center::Kind::Truncated:
            return x.a_ == y.a_ && x.precision_ == y.precision_ && x.declared_e_ == y.declared_e_;
    }
    return false;
}

DvrSpec::DvrSpec(Prime p, Center center, ExtRational radius) : p_(p), center_(std::move(center)), radius_(radius) {
    if (radius_.is_finite() && radius_.value() < 0) fail("NegativeRadius", "radius " + to_string(radius_) + " < 0");

    // Center integrality (X is in W iff v_p(alpha) >= 0 and delta >= 0).
    switch (center_.kind_) {
        case Center::Kind::Rational:
        case Center::Kind::Truncated: {
            ExtRational v = vp_rational(p_, center_.a_);
            if (v.is_finite() && v.value() < 0)
                fail("CenterNotIntegral",
                     "v_" + std::to_string(p_.value()) + "(" + to_string(center_.a_) + ") < 0");
            break;
        }
        case Center::Kind::Algebraic: {
            try {
                center_.cert_ = certify_qp_irreducible(p_, center_.q_);
            } catch (const DomainError& e) {
                if (e.code() == "RootsNotIntegral")
                    fail("CenterNotIntegral", e.what());
                throw;
            }
            break;
        }
    }

    // Radius 0 is the Gauss valuation whatever the center.
    if (radius_.is_finite() && radius_.value() == 0) {
        center_ = Center::rational(Rational(0));
        return;
    }

    if (radius_.is_infinity()) {
        if (center_.kind_ != Center::Kind::Truncated)
            fail("AlgebraicAtInfinity",
                 "an algebraic center with radius inf gives a rank-2 valuation, not a DVR");
        return;
    }

    // Finite positive radius: a truncated center collapses to its
    // truncation, exactly, as long as the radius stays below the
    // precision (the two balls coincide).
    if (center_.kind_ == Center::Kind::Truncated) {
        if (radius_.value() > center_.precision_)
            fail("RadiusExceedsPrecision", "radius " + to_string(radius_) + " > precision N=" +
                                               std::to_string(center_.precision_));
        center_ = Center::rational(center_.a_);
    }
}

bool DvrSpec::is_gauss() const {
    return radius_.is_finite() && radius_.value() == 0;
}

Poly DvrSpec::center_poly() const {
    switch (center_.kind()) {
        case Center::Kind::Algebraic: return center_.min_poly();
        case Center::Kind::Rational:
        case Center::Kind::Truncated:
            return Poly::variable() - Poly::constant(center_.value());
    }
    fail("InternalError", "bad center kind");
}

bool operator==(const DvrSpec& a, const DvrSpec& b) {
    return a.p_ == b.p_ && a.radius_ == b.radius_ && a.center_ == b.center_;
}

namespace {

// min_i v_p(g_i) + i*delta over the coefficients of g.
ExtRational monomial_min(const Prime& p, const Poly& g, const Rational& delta) {
    ExtRational best = ExtRational::infinity();
    for (long i = 0; i <= g.degree(); ++i) {
        if (g.coeff(i) == 0) continue;
        ExtRational term = vp_rational(p, g.coeff(i)) + ExtRational(delta * i);
        best = min(best, term);
    }
    return best;
}

} // namespace

ExtRational mono_val(const DvrSpec& spec, const Poly& f) {
    if (f.is_zero()) return ExtRational::infinity();
    const Prime& p = spec.prime();

    switch (spec.center().kind()) {
        case Center::Kind::Rational: {
            // delta finite by canonical form (Gauss included).
            Poly g = shift_compose(f, spec.center().value());
            return monomial_min(p, g, spec.radius().value());
        }
        case Center::Kind::Algebraic: {
            // v(lc f) + sum over roots beta of min(delta, v_p(alpha - beta)).
            const Rational& delta = spec.radius().value();
            ExtRational lead = vp_rational(p, f.leading());
            if (f.degree() == 0) return lead;
            ValuationSpectrum dist = per_root_distances(p, spec.center().min_poly(), f);
            return lead + ExtRational(dist.capped_sum(delta));
        }
        case Center::Kind::Truncated: {
            if (spec.radius().is_finite()) {
                // Raw (unvalidated) spec: defined by the truncation when in range.
                if (spec.radius().value() > spec.center().precision())
                    fail("RadiusExceedsPrecision", "radius exceeds truncation precision");
                Poly g = shift_compose(f, spec.center().value());
                return monomial_min(p, g, spec.radius().value());
            }
            // Radius inf: v(f(alpha)), decidable when the constant term of
            // the shifted expansion dominates everything the unknown tail
            // of alpha could contribute.
            long N = spec.center().precision();
            Poly g = shift_compose(f, spec.center().value());
            if (g.coeff(0) == 0)
                fail("InsufficientPrecision",
                     "f vanishes at the truncation; value undetermined at N=" + std::to_string(N));
            ExtRational v0 = vp_rational(p, g.coeff(0));
            ExtRational bound = ExtRational::infinity();
            for (long i = 1; i <= g.degree(); ++i) {
                if (g.coeff(i) == 0) continue;
                bound = min(bound, vp_rational(p, g.coeff(i)) + ExtRational(Rational(i) * N));
            }
            if (v0 < bound) return v0;
            fail("InsufficientPrecision", "truncation precision N=" + std::to_string(N) +
                                              " cannot separate v(f(alpha))");
        }
    }
    fail("InternalError", "bad center kind");
}

long dvr_ram_index(const DvrSpec& spec) {
    if (spec.is_gauss()) return 1;
    if (spec.radius().is_infinity()) return spec.center().declared_e();

    const Rational& delta = spec.radius().value();
    switch (spec.center().kind()) {
        case Center::Kind::Rational:
        case Center::Kind::Truncated: {
            Int den = delta.get_den();
            if (!den.fits_slong_p()) fail("InternalError", "radius denominator too large");
            return den.get_si();
        }
        case Center::Kind::Algebraic: {
            const QpCertificate& cert = spec.center().certificate();
            MinimalPairStatus st = minimal_pair_status(spec.prime(), spec.center().min_poly(), cert, delta);
            if (st.verdict != MinimalPairStatus::Verdict::Minimal)
                fail("MinimalPairUnknown", "pair is " + to_string(st.verdict) + " (" + st.reason +
                                               "); ramification formula needs a minimal pair");
            long e0 = cert.ram_index();
            ExtRational gamma_ext = mono_val(spec, spec.center().min_poly());
            const Rational& gamma = gamma_ext.value();
            // Smallest n >= 1 with n*gamma in (1/e0)Z: reduce gamma*e0 = a/b.
            Rational scaled = gamma * e0;
            scaled.canonicalize();
            Int b = scaled.get_den();
            if (!b.fits_slong_p()) fail("InternalError", "value denominator too large");
            return e0 * b.get_si();
        }
    }
    fail("InternalError", "bad center kind");
}

CenterIdeal center_ideal(const DvrSpec& spec) {
    if (spec.is_gauss()) return {};
    const Prime& p = spec.prime();
    switch (spec.center().kind()) {
        case Center::Kind::Rational:
        case Center::Kind::Truncated: {
            std::uint64_t r = residue_mod_p(p, spec.center().value());
            return {FpPoly(p, {(p.value() - r) % p.value(), 1})};
        }
        case Center::Kind::Algebraic:
            return {residue_min_poly(p, spec.center().min_poly())};
    }
    fail("InternalError", "bad center kind");
}

std::string to_string(const Prime& p, const CenterIdeal& ideal) {
    if (!ideal.gbar) return "(" + std::to_string(p.value()) + ")";
    return "(" + std::to_string(p.value()) + ", " + to_string(*ideal.gbar) + ")";
}

Center parse_center(const std::string& text) {
    auto strip = [](const std::string& s) {
        std::string r;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) r += c;
        return r;
    };
    std::string s = strip(text);
    if (s.rfind("rat:", 0) == 0) return Center::rational(parse_rational(s.substr(4)));
    if (s.rfind("alg:", 0) == 0) return Center::algebraic(parse_poly(s.substr(4)));
    if (s.rfind("trunc:", 0) == 0) {
        std::string body = s.substr(6);
        Rational a;
        long n = -1, e = -1;
        bool have_a = false;
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.rfind("a=", 0) == 0) {
                a = parse_rational(item.substr(2));
                have_a = true;
            } else if (item.rfind("N=", 0) == 0) {
                n = std::stol(item.substr(2));
            } else if (item.rfind("e=", 0) == 0) {
                e = std::stol(item.substr(2));
            } else {
                fail("ParseError", "bad truncated-center field '" + item + "'");
            }
        }
        if (!have_a || n < 0 || e < 0) fail("ParseError", "truncated center needs a=, N=, e=");
        return Center::truncated(a, n, e);
    }
    fail("ParseError", "bad center '" + text + "' (want rat:, alg: or trunc:)");
}

std::string to_string(const Center& c) {
    switch (c.kind()) {
        case Center::Kind::Rational: return "rat:" + to_string(c.value());
        case Center::Kind::Algebraic: return "alg:" + to_string(c.min_poly());
        case Center::Kind::Truncated:
            return "trunc:a=" + to_string(c.value()) + ",N=" + std::to_string(c.precision()) +
                   ",e=" + std::to_string(c.declared_e());
    }
    return "?";
}

std::string to_string(const DvrSpec& s) {
    return "(p=" + std::to_string(s.prime().value()) + ", " + to_string(s.center()) + ", " +
           to_string(s.radius()) + ")";
}

} // namespace zqx
