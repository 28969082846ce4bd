#ifndef ZQX_ALGEXT_HPP
#define ZQX_ALGEXT_HPP

#include <string>

#include "zqx/fp_poly.hpp"
#include "zqx/newton.hpp"
#include "zqx/poly.hpp"
#include "zqx/rational.hpp"

namespace zqx {

// Verified evidence that a monic integer polynomial is irreducible
// over Q_p with all roots integral. Nothing is ever guessed: an input
// matching no criterion is rejected with CannotCertify.
struct QpCertificate {
    enum class Kind { DegreeOne, Unramified, Eisenstein, SingleSlope };
    Kind kind;
    long degree = 0;
    Rational slope;      // SingleSlope only, in lowest terms
    std::string witness; // which arithmetic facts fired

    // Ramification index / residue degree of Q_p(alpha)/Q_p.
    long ram_index() const;
    long residue_degree() const;
};

std::string to_string(QpCertificate::Kind k);

// Certificates are tried in order DegreeOne, Unramified, Eisenstein,
// SingleSlope. Errors: RootsNotIntegral, CannotCertify.
QpCertificate certify_qp_irreducible(const Prime& p, const Poly& q);

// (e, fres) with e * fres = n; n must be the certified degree.
std::pair<long, long> ramification_residue(const QpCertificate& cert, long n);

// Monic irreducible gbar over F_p with q mod p = gbar^(n/deg gbar).
FpPoly residue_min_poly(const Prime& p, const Poly& q);

// Multiset {v_p(alpha - beta) : beta root of q_to, with multiplicity}
// for one fixed root alpha of q_from. q_from must be degree 1 or
// certified irreducible over Q_p; q_to is any nonzero polynomial
// (scaling does not move roots). Total multiplicity = deg q_to.
ValuationSpectrum per_root_distances(const Prime& p, const Poly& q_from, const Poly& q_to);

// omega(alpha) = max finite conjugate distance; deg q >= 2 required.
ExtRational krasner_bound(const Prime& p, const Poly& q);

struct MinimalPairStatus {
    enum class Verdict { Minimal, NotMinimal, Unknown };
    Verdict verdict;
    std::string reason;
};

std::string to_string(MinimalPairStatus::Verdict v);

// Status of the pair (alpha, delta) for a certified algebraic center.
// Unramified centers are decided exactly (delta vs omega); for other
// certificates delta > omega is sufficient, anything else is Unknown.
MinimalPairStatus minimal_pair_status(const Prime& p, const Poly& q, const QpCertificate& cert,
                                      const Rational& delta);

// #(conjugates of alpha within v_p(. - alpha) >= delta), self included.
long conjugates_in_ball(const Prime& p, const Poly& q, const Rational& delta);

} // namespace zqx

#endif
