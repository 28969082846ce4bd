#ifndef ZQX_DVR_HPP
#define ZQX_DVR_HPP

#include <optional>
#include <string>

#include "zqx/algext.hpp"
#include "zqx/poly.hpp"
#include "zqx/rational.hpp"

namespace zqx {

// A point of the p-adic integral closure serving as a ball center.
//   Rational   : a in Q with v_p(a) >= 0.
//   Algebraic  : root of a certified irreducible monic integer q,
//                all roots integral.
//   Truncated  : finite-precision stand-in a for an element asserted
//                transcendental over Q, with v_p(alpha - a) >= N and a
//                declared ramification index of Q_p(alpha)/Q_p.
class Center {
public:
    enum class Kind { Rational, Algebraic, Truncated };

    static Center rational(const Rational& a);
    static Center algebraic(const Poly& q);
    static Center truncated(const Rational& a, long precision, long declared_e);

    Kind kind() const { return kind_; }
    const Rational& value() const { return a_; } // Rational / Truncated
    const Poly& min_poly() const { return q_; }  // Algebraic
    const QpCertificate& certificate() const;    // set by make_dvr_spec
    long precision() const { return precision_; }
    long declared_e() const { return declared_e_; }

    // Syntactic identity (same kind and same data).
    friend bool operator==(const Center& x, const Center& y);
    friend bool operator!=(const Center& x, const Center& y) { return !(x == y); }

private:
    friend class DvrSpec;
    Kind kind_ = Kind::Rational;
    Rational a_;
    Poly q_;
    std::optional<QpCertificate> cert_;
    long precision_ = 0;
    long declared_e_ = 1;
};

// Validated, canonical (p, center, radius) triple naming the DVR cut
// out by the ball of center alpha and radius delta. Canonical form:
// radius 0 collapses to the Gauss spec (center 0); a truncated center
// with finite radius <= precision collapses to its truncation.
class DvrSpec {
public:
    DvrSpec(Prime p, Center center, ExtRational radius); // = make_dvr_spec

    const Prime& prime() const { return p_; }
    const Center& center() const { return center_; }
    const ExtRational& radius() const { return radius_; }

    bool is_gauss() const;
    // X - a for point centers, the minimal polynomial otherwise.
    Poly center_poly() const;

    friend bool operator==(const DvrSpec& a, const DvrSpec& b);
    friend bool operator!=(const DvrSpec& a, const DvrSpec& b) { return !(a == b); }

private:
    Prime p_;
    Center center_;
    ExtRational radius_;
};

inline DvrSpec make_dvr_spec(Prime p, const Center& center, const ExtRational& radius) {
    return DvrSpec(p, center, radius);
}

// Exact value of the monomial valuation v_{p,alpha,delta} on Q[X].
ExtRational mono_val(const DvrSpec& spec, const Poly& f);

// Ramification index e(W | Z_(p)).
long dvr_ram_index(const DvrSpec& spec);

// Center of the DVR on Z_(p)[X]: (p) at radius 0, else (p, gbar).
struct CenterIdeal {
    std::optional<FpPoly> gbar; // absent = just (p)
};

CenterIdeal center_ideal(const DvrSpec& spec);
std::string to_string(const Prime& p, const CenterIdeal& ideal);

// Text forms "rat:3/4", "alg:X^2-2", "trunc:a=5,N=20,e=1".
Center parse_center(const std::string& text);
std::string to_string(const Center& c);
std::string to_string(const DvrSpec& s);

} // namespace zqx

#endif
