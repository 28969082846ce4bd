#include "zqx/ringspec.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "zqx/intfactor.hpp"
#include "zqx/qirred.hpp"

namespace zqx {

namespace {

// Prime factors of the coefficient denominators of f.
std::vector<std::uint64_t> denominator_primes(const Poly& f) {
    Int lcm_den(1);
    for (const auto& c : f.coeffs()) lcm_den = lcm(lcm_den, Int(c.get_den()));
    return prime_factors_u64(lcm_den);
}

DvrSpec fixed_default_spec(const RingDefault& def, std::uint64_t p) {
    return make_dvr_spec(Prime(p), Center::rational(def.center), ExtRational(def.radius));
}

std::string spec_label(std::uint64_t p, long j) {
    return "(p=" + std::to_string(p) + ", j=" + std::to_string(j) + ")";
}

} // namespace

void RingSpec::validate() const {
    for (const auto& [p, fam] : table) {
        Prime prime(p);
        if (fam.empty()) fail("ParseError", "empty family at p=" + std::to_string(p));
        for (const auto& spec : fam)
            if (spec.prime() != prime)
                fail("ParseError", "family at p=" + std::to_string(p) + " holds a spec at p=" +
                                       std::to_string(spec.prime().value()));
    }
    if (def.kind == RingDefault::Kind::Fixed) {
        if (def.radius <= 0) fail("ParseError", "default rule radius must be positive");
        for (std::uint64_t p : prime_factors_u64(Int(def.center.get_den())))
            if (!table.count(p))
                fail("CenterNotIntegral", "default center " + to_string(def.center) +
                                              " is not integral at the uncovered prime " + std::to_string(p));
    }
}

const std::vector<DvrSpec>& RingSpec::family(std::uint64_t p) const {
    auto it = table.find(p);
    if (it == table.end()) fail("IndexOutOfRange", "no family at p=" + std::to_string(p));
    return it->second;
}

RingSpec parse_ring_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail("ParseError", std::string("bad ring JSON: ") + e.what());
    }
    RingSpec ring;
    if (!j.is_object()) fail("ParseError", "ring JSON must be an object");
    if (j.contains("table")) {
        const auto& tbl = j.at("table");
        if (!tbl.is_object()) fail("ParseError", "\"table\" must map primes to spec lists");
        for (auto it = tbl.begin(); it != tbl.end(); ++it) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(it.key());
            } catch (...) {
                fail("ParseError", "bad prime key '" + it.key() + "'");
            }
            Prime prime(p);
            std::vector<DvrSpec> fam;
            for (const auto& entry : it.value()) {
                Center c = parse_center(entry.at("center").get<std::string>());
                ExtRational r = parse_ext_rational(entry.at("radius").get<std::string>());
                fam.push_back(make_dvr_spec(prime, c, r));
            }
            // Families are kept in canonical order so that (p, j) indices
            // match the serialized form.
            std::stable_sort(fam.begin(), fam.end(), canonical_spec_less);
            ring.table.emplace(p, std::move(fam));
        }
    }
    if (j.contains("default")) {
        const auto& d = j.at("default");
        if (d.is_string()) {
            std::string s = d.get<std::string>();
            if (s == "gauss")
                ring.def.kind = RingDefault::Kind::Gauss;
            else if (s == "none")
                ring.def.kind = RingDefault::Kind::None;
            else
                fail("ParseError", "default must be \"gauss\", \"none\" or a rule object");
        } else if (d.is_object()) {
            ring.def.kind = RingDefault::Kind::Fixed;
            Center c = parse_center(d.at("center").get<std::string>());
            if (c.kind() != Center::Kind::Rational)
                fail("ParseError", "default rule centers are restricted to rat: form");
            ring.def.center = c.value();
            ExtRational r = parse_ext_rational(d.at("radius").get<std::string>());
            if (r.is_infinity() || r.value() <= 0)
                fail("ParseError", "default rule radius must be finite and positive");
            ring.def.radius = r.value();
        } else {
            fail("ParseError", "bad \"default\" entry");
        }
    }
    ring.validate();
    return ring;
}

std::string ring_to_json(const RingSpec& ring) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json tbl = nlohmann::ordered_json::object();
    for (const auto& [p, fam] : ring.table) { // std::map: ascending primes
        std::vector<DvrSpec> sorted = fam;
        std::stable_sort(sorted.begin(), sorted.end(), canonical_spec_less);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& spec : sorted)
            arr.push_back({{"center", to_string(spec.center())}, {"radius", to_string(spec.radius())}});
        tbl[std::to_string(p)] = std::move(arr);
    }
    j["table"] = std::move(tbl);
    switch (ring.def.kind) {
        case RingDefault::Kind::None: j["default"] = "none"; break;
        case RingDefault::Kind::Gauss: j["default"] = "gauss"; break;
        case RingDefault::Kind::Fixed:
            j["default"] = {{"center", "rat:" + to_string(ring.def.center)},
                            {"radius", to_string(ring.def.radius)}};
            break;
    }
    return j.dump();
}

RingReduction reduce_ring(const RingSpec& ring) {
    RingReduction out;
    out.ring.def = ring.def;
    for (const auto& [p, fam] : ring.table) {
        ReduceResult r = reduce_family(fam);
        out.ring.table.emplace(p, std::move(r.kept));
        for (const auto& rem : r.removed)
            out.removed.push_back("p=" + std::to_string(p) + ": removed " + to_string(rem.spec) + " (" +
                                  rem.reason + ")");
    }
    return out;
}

MemberResult member(const RingSpec& ring, const Poly& f) {
    ring.validate();
    long specs_checked = 0;
    for (const auto& [p, fam] : ring.table) {
        for (std::size_t j = 0; j < fam.size(); ++j) {
            ExtRational v = mono_val(fam[j], f);
            ++specs_checked;
            if (v < ExtRational(Rational(0)))
                return {false, "fails at " + spec_label(p, static_cast<long>(j + 1)) + ": value " +
                                   to_string(v) + " < 0"};
        }
    }

    std::vector<std::uint64_t> default_primes;
    switch (ring.def.kind) {
        case RingDefault::Kind::None: break;
        case RingDefault::Kind::Gauss: {
            for (std::uint64_t p : denominator_primes(f)) {
                if (ring.table.count(p)) continue;
                return {false, "fails at default Gauss, p=" + std::to_string(p) +
                                   ": a coefficient denominator is divisible by " + std::to_string(p)};
            }
            break;
        }
        case RingDefault::Kind::Fixed: {
            // The rule value can only go negative at primes dividing a
            // denominator of the recentred expansion.
            Poly g = shift_compose(f, ring.def.center);
            for (std::uint64_t p : denominator_primes(g)) {
                if (ring.table.count(p)) continue;
                DvrSpec spec = fixed_default_spec(ring.def, p);
                if (mono_val(spec, f) < ExtRational(Rational(0)))
                    return {false, "fails at default rule, p=" + std::to_string(p)};
                default_primes.push_back(p);
            }
            break;
        }
    }

    std::ostringstream w;
    w << "member: " << specs_checked << " table spec(s) pass";
    if (ring.def.kind == RingDefault::Kind::Gauss) w << "; Gauss default clears all denominators";
    if (ring.def.kind == RingDefault::Kind::Fixed) {
        w << "; default rule checked at " << default_primes.size() << " candidate prime(s)";
    }
    return {true, w.str()};
}

std::string to_string(Classification::Krull k) {
    switch (k) {
        case Classification::Krull::Yes: return "yes";
        case Classification::Krull::No: return "no";
        case Classification::Krull::ConditionalYes: return "conditional-yes";
    }
    return "?";
}

Classification classify(const RingSpec& ring, long probe_bound) {
    ring.validate();
    RingReduction red = reduce_ring(ring);
    const RingSpec& R = red.ring;

    Classification c;
    c.probe_bound = probe_bound;
    if (!red.removed.empty())
        c.assumptions.push_back("redundant specs removed before classification: " +
                                std::to_string(red.removed.size()));
    for (const auto& [p, fam] : R.table)
        for (const auto& spec : fam)
            if (spec.center().kind() == Center::Kind::Truncated)
                c.assumptions.push_back("transcendence and declared ramification e=" +
                                        std::to_string(spec.center().declared_e()) +
                                        " of the truncated center at p=" + std::to_string(p) +
                                        " are user assertions");

    if (R.def.kind != RingDefault::Kind::Fixed) {
        c.krull = Classification::Krull::Yes;
    } else {
        // Probe battery: the coordinate polynomial, its neighbours, and
        // the lift of the rule's center ideal generator.
        std::vector<Poly> battery{Poly::variable(), Poly::variable() - Poly::constant(Rational(1)),
                                  Poly::variable() + Poly::constant(Rational(1))};
        Poly lift = (Poly::variable() - Poly::constant(R.def.center)) * Rational(R.def.center.get_den());
        if (std::find(battery.begin(), battery.end(), lift) == battery.end()) battery.push_back(lift);

        c.krull = Classification::Krull::ConditionalYes;
        c.krull_witness = "finite-character probe bounded by " + std::to_string(probe_bound);
        for (const Poly& g : battery) {
            ProbeReport rep = probe_finite_character(R, g, probe_bound);
            if (rep.primes_checked > 0 && rep.all_primes_hit) {
                c.krull = Classification::Krull::No;
                c.krull_witness = to_string(g) + " lies in the center at every prime <= " +
                                  std::to_string(probe_bound);
                break;
            }
        }
        if (c.krull == Classification::Krull::ConditionalYes)
            c.assumptions.push_back("a finite probe cannot certify finite character: verdict is conditional");
    }

    if (c.krull == Classification::Krull::No) return c;

    bool all_infinite = true;
    bool none_infinite = true;
    for (const auto& [p, fam] : R.table)
        for (const auto& spec : fam) {
            if (spec.radius().is_infinity())
                none_infinite = false;
            else
                all_infinite = false;
        }

    c.dedekind = (R.def.kind == RingDefault::Kind::None) && all_infinite;
    c.almost_dedekind = c.dedekind; // same criterion for these families
    c.pure = none_infinite;         // Gauss and rule defaults only add finite radii

    if (R.def.kind == RingDefault::Kind::Fixed) return c; // class group not finitely presented here

    std::vector<Int> summands;
    bool ufd_shape = true;
    for (const auto& [p, fam] : R.table) {
        std::vector<long> es;
        es.reserve(fam.size());
        for (const auto& spec : fam) es.push_back(dvr_ram_index(spec));
        long d = 0;
        for (long e : es) d = std::gcd(d, e);
        summands.push_back(Int(d));
        for (std::size_t k = 1; k < fam.size(); ++k) summands.push_back(Int(0));
        if (fam.size() != 1 || es[0] != 1) ufd_shape = false;
    }
    c.class_group = canonicalize_group(summands);
    c.ufd = ufd_shape && c.class_group->is_trivial();
    return c;
}

AbelianGroupInv class_group(const RingSpec& ring) {
    Classification c = classify(ring, 100);
    if (!c.class_group)
        fail("ClassGroupUndefined", "class group requires a Krull ring with default none or gauss");
    return *c.class_group;
}

bool unitary_prime_is_maximal(const RingSpec& ring, std::uint64_t p, long j) {
    const auto& fam = ring.family(p);
    if (j < 1 || j > static_cast<long>(fam.size()))
        fail("IndexOutOfRange", "no spec " + spec_label(p, j));
    return fam[j - 1].radius().is_infinity();
}

NonunitaryMaxResult nonunitary_prime_is_maximal(const RingSpec& ring, const Poly& q) {
    ring.validate();
    if (!is_irreducible_over_q(q)) fail("NotIrreducible", to_string(q) + " is not irreducible over Q");
    if (ring.def.kind == RingDefault::Kind::Fixed)
        fail("PreconditionViolated", "maximality of non-unitary primes is decided for default none or gauss");

    Poly pp = q.primitive_part();
    for (const auto& [p, fam] : ring.table) {
        Prime prime(p);
        for (std::size_t j = 0; j < fam.size(); ++j) {
            const DvrSpec& spec = fam[j];
            if (spec.radius().is_infinity()) continue; // singleton at a transcendental point
            ValuationSpectrum dist = per_root_distances(prime, spec.center_poly(), pp);
            ExtRational best = dist.entries().empty() ? ExtRational(Rational(0))
                                                      : dist.entries().rbegin()->first;
            if (!dist.entries().empty() && best >= spec.radius())
                return {false, "a root of q lies in the ball of " + spec_label(p, static_cast<long>(j + 1)) +
                                   " (distance " + to_string(best) + " >= " + to_string(spec.radius()) + ")"};
        }
    }
    if (ring.def.kind == RingDefault::Kind::Gauss) {
        // Any prime outside the table not dividing the leading coefficient
        // leaves a root of q integral, so the Gauss ball captures it.
        Int lc(pp.leading().get_num());
        std::uint64_t p = 2;
        while (ring.table.count(p) || lc % Int(static_cast<unsigned long>(p)) == 0 || !is_prime_u64(p)) ++p;
        return {false, "default Gauss at p=" + std::to_string(p) + ": q keeps a root in the p-integers"};
    }
    return {true, "no ball of the ring captures a root of q"};
}

ProbeReport probe_finite_character(const RingSpec& ring, const Poly& g, long bound) {
    ring.validate();
    if (g.is_zero() || !g.has_integer_coeffs())
        fail("PreconditionViolated", "the probe takes a nonzero integer polynomial");

    ProbeReport rep;
    Int content(g.content().get_num());
    for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(std::max<long>(bound, 0)))) {
        ++rep.primes_checked;
        bool hit = false;
        auto it = ring.table.find(p);
        if (it != ring.table.end()) {
            for (const auto& spec : it->second) {
                ExtRational v = mono_val(spec, g);
                if (v > ExtRational(Rational(0))) {
                    hit = true;
                    break;
                }
            }
        } else {
            switch (ring.def.kind) {
                case RingDefault::Kind::None: break;
                case RingDefault::Kind::Gauss:
                    hit = content % Int(static_cast<unsigned long>(p)) == 0;
                    break;
                case RingDefault::Kind::Fixed: {
                    // g lies in the center ideal (p, X - abar) iff g(abar) = 0 in F_p.
                    Prime prime(p);
                    FpPoly gbar = FpPoly::reduce(prime, g);
                    hit = gbar.eval(residue_mod_p(prime, ring.def.center)) == 0;
                    break;
                }
            }
        }
        if (hit) rep.hits.push_back(p);
    }
    rep.all_primes_hit = rep.primes_checked > 0 &&
                         static_cast<long>(rep.hits.size()) == rep.primes_checked;
    rep.density = rep.primes_checked == 0
                      ? Rational(0)
                      : Rational(Int(static_cast<unsigned long>(rep.hits.size())),
                                 Int(static_cast<unsigned long>(rep.primes_checked)));
    rep.density.canonicalize();
    return rep;
}

RingSpec construct_with_class_group(const AbelianGroupInv& g, const std::vector<std::uint64_t>& prime_pool) {
    std::vector<Int> es(g.torsion.begin(), g.torsion.end());
    if (es.empty()) es.push_back(Int(1));
    std::size_t n = es.size();

    std::set<std::uint64_t> seen;
    for (std::uint64_t p : prime_pool) {
        Prime check(p);
        if (!seen.insert(p).second) fail("PoolTooSmall", "duplicate prime in pool");
    }
    if (prime_pool.size() < n)
        fail("PoolTooSmall", "need " + std::to_string(n) + " primes, got " + std::to_string(prime_pool.size()));

    RingSpec ring;
    ring.def.kind = RingDefault::Kind::None;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Prime p(prime_pool[i]);
        Rational delta(Int(1), es[i]);
        delta.canonicalize();
        ring.table.emplace(prime_pool[i],
                           std::vector<DvrSpec>{make_dvr_spec(p, Center::rational(Rational(0)), ExtRational(delta))});
    }

    Prime pn(prime_pool[n - 1]);
    long m = g.free_rank;
    long big_n = 0;
    for (long i = 0; i <= m; ++i)
        for (long j = i + 1; j <= m; ++j) {
            ExtRational v = vp_rational(pn, Rational(i - j));
            big_n = std::max(big_n, static_cast<long>(v.value().get_num().get_si()));
        }
    Rational delta = Rational(big_n) + Rational(Int(1), es[n - 1]);
    delta.canonicalize();
    std::vector<DvrSpec> fam;
    for (long k = 0; k <= m; ++k)
        fam.push_back(make_dvr_spec(pn, Center::rational(Rational(k)), ExtRational(delta)));
    ring.table.emplace(prime_pool[n - 1], std::move(fam));

    // Round-trip: the construction must reproduce g exactly and keep
    // every spec under reduction.
    for (const auto& [p, family] : ring.table) {
        ReduceResult r = reduce_family(family);
        if (r.kept.size() != family.size())
            fail("InternalError", "constructed family at p=" + std::to_string(p) + " is redundant");
    }
    if (class_group(ring) != g) fail("InternalError", "constructed ring has the wrong class group");
    return ring;
}

SpectrumReport spectrum_summary(const RingSpec& ring) {
    ring.validate();
    RingReduction red = reduce_ring(ring);
    SpectrumReport rep;
    for (const auto& [p, fam] : red.ring.table) {
        for (std::size_t j = 0; j < fam.size(); ++j) {
            const DvrSpec& spec = fam[j];
            SpectrumEntry e;
            e.p = p;
            e.j = static_cast<long>(j + 1);
            e.spec_text = to_string(spec);
            e.maximal = spec.radius().is_infinity();
            e.center_ideal_text = to_string(spec.prime(), center_ideal(spec));
            rep.unitary.push_back(std::move(e));
        }
    }
    rep.nonunitary = "{ q*Q[X] cap R : q irreducible over Q } (one height-one prime per q)";
    switch (red.ring.def.kind) {
        case RingDefault::Kind::None: rep.default_note = "no default: only the listed primes constrain R"; break;
        case RingDefault::Kind::Gauss:
            rep.default_note = "Gauss default: one height-one prime (p) at every other prime p";
            break;
        case RingDefault::Kind::Fixed:
            rep.default_note = "default rule ball at every other prime (center " + to_string(red.ring.def.center) +
                               ", radius " + to_string(red.ring.def.radius) + ")";
            break;
    }
    return rep;
}

} // namespace zqx
