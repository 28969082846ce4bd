#ifndef ZQX_RINGSPEC_HPP
#define ZQX_RINGSPEC_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zqx/abelian.hpp"
#include "zqx/ballcalc.hpp"
#include "zqx/dvr.hpp"

namespace zqx {

// Behaviour at every prime outside the finite table: nothing (None),
// the Gauss valuation Z_(p)[X] (Gauss), or one fixed ball with a
// constant rational center and constant positive radius (Fixed).
struct RingDefault {
    enum class Kind { None, Gauss, Fixed };
    Kind kind = Kind::None;
    Rational center; // Fixed only
    Rational radius; // Fixed only, > 0
};

// The ring cut out of Q[X] by a finite prime-indexed family of DVR
// specs together with the default rule.
class RingSpec {
public:
    std::map<std::uint64_t, std::vector<DvrSpec>> table;
    RingDefault def;

    // Checks table keys, family primes, and that a Fixed default's
    // center is p-integral at every prime outside the table.
    void validate() const;

    const std::vector<DvrSpec>& family(std::uint64_t p) const;
};

// Canonical JSON round-trip: primes ascending, specs by (radius, center).
RingSpec parse_ring_json(const std::string& text);
std::string ring_to_json(const RingSpec& ring);

// reduce_family applied at each table prime.
struct RingReduction {
    RingSpec ring;
    std::vector<std::string> removed; // human-readable removal records
};
RingReduction reduce_ring(const RingSpec& ring);

struct MemberResult {
    bool is_member;
    std::string witness;
};

// f in R: every table valuation nonnegative and the default rule
// passes at each prime it could reject.
MemberResult member(const RingSpec& ring, const Poly& f);

struct Classification {
    enum class Krull { Yes, No, ConditionalYes };
    Krull krull;
    std::string krull_witness; // No: offending polynomial; ConditionalYes: probe note
    long probe_bound = 0;
    std::optional<bool> dedekind;
    std::optional<bool> almost_dedekind;
    std::optional<bool> ufd;
    std::optional<bool> pure;
    std::optional<AbelianGroupInv> class_group;
    std::vector<std::string> assumptions;
};

std::string to_string(Classification::Krull k);

Classification classify(const RingSpec& ring, long probe_bound);

// Cl(R) for a Krull ring (default None or Gauss).
AbelianGroupInv class_group(const RingSpec& ring);

// True iff the (p, j) family member is residually algebraic (radius inf).
bool unitary_prime_is_maximal(const RingSpec& ring, std::uint64_t p, long j);

struct NonunitaryMaxResult {
    bool is_maximal;
    std::string witness;
};

// Maximality of qQ[X] cap R for q irreducible over Q: fails exactly
// when some ball of the ring captures a root of q.
NonunitaryMaxResult nonunitary_prime_is_maximal(const RingSpec& ring, const Poly& q);

struct ProbeReport {
    std::vector<std::uint64_t> hits;
    long primes_checked = 0;
    bool all_primes_hit = false;
    Rational density; // hits / primes checked
};

// Primes p <= bound whose center at p captures g.
ProbeReport probe_finite_character(const RingSpec& ring, const Poly& g, long bound);

// A ring with prescribed divisor class group, rational centers only;
// verified by a class_group round-trip before returning.
RingSpec construct_with_class_group(const AbelianGroupInv& g, const std::vector<std::uint64_t>& prime_pool);

struct SpectrumEntry {
    std::uint64_t p;
    long j;
    std::string spec_text;
    bool maximal;
    std::string center_ideal_text;
};

struct SpectrumReport {
    std::vector<SpectrumEntry> unitary;
    std::string nonunitary;
    std::string default_note;
};

// Height-one landscape of the (reduced) ring.
SpectrumReport spectrum_summary(const RingSpec& ring);

} // namespace zqx

#endif
