// zqx: classify and query integrally closed rings between Z[X] and Q[X]
// presented by p-adic ball data.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "zqx/abelian.hpp"
#include "zqx/ballcalc.hpp"
#include "zqx/dvr.hpp"
#include "zqx/ringspec.hpp"

using nlohmann::ordered_json;
using namespace zqx;

namespace {

struct Options {
    std::string ring_file;
    std::string poly_text;
    std::uint64_t p = 0;
    std::uint64_t p2 = 0;
    std::string center_text;
    std::string radius_text;
    std::string center2_text;
    std::string radius2_text;
    long bound = 100;
    long index_j = 0;
    std::string group_text;
    std::string pool_text = "2,3,5,7,11,13,17,19,23,29";
    bool json = false;
};

std::string read_ring_text(const std::string& file) {
    if (file.empty() || file == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(file);
    if (!in) fail("ParseError", "cannot open ring file '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DvrSpec spec_from(const Options& o, bool second) {
    const std::string& c = second ? o.center2_text : o.center_text;
    const std::string& r = second ? o.radius2_text : o.radius_text;
    if (c.empty() || r.empty())
        fail("ParseError", std::string("missing --center") + (second ? "2" : "") + " or --radius" +
                               (second ? "2" : ""));
    std::uint64_t p = (second && o.p2 != 0) ? o.p2 : o.p;
    return make_dvr_spec(Prime(p), parse_center(c), parse_ext_rational(r));
}

std::vector<std::uint64_t> parse_pool(const std::string& text) {
    std::vector<std::uint64_t> pool;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        pool.push_back(std::stoull(tok));
    }
    return pool;
}

ordered_json group_json(const AbelianGroupInv& g) {
    ordered_json j;
    j["display"] = to_string(g);
    ordered_json t = ordered_json::array();
    for (const Int& d : g.torsion) t.push_back(d.get_str());
    j["torsion"] = std::move(t);
    j["free_rank"] = g.free_rank;
    return j;
}

ordered_json classification_json(const Classification& c) {
    ordered_json j;
    j["krull"] = to_string(c.krull);
    if (!c.krull_witness.empty()) j["krull_witness"] = c.krull_witness;
    j["probe_bound"] = c.probe_bound;
    auto put = [&](const char* key, const std::optional<bool>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = "undefined";
    };
    put("dedekind", c.dedekind);
    put("almost_dedekind", c.almost_dedekind);
    put("ufd", c.ufd);
    put("pure", c.pure);
    if (c.class_group)
        j["class_group"] = group_json(*c.class_group);
    else
        j["class_group"] = "undefined";
    return j;
}

int emit(const Options& o, const std::string& command, const ordered_json& inputs, const ordered_json& result,
         const std::vector<std::string>& assumptions, const std::string& human) {
    if (o.json) {
        ordered_json rep;
        rep["command"] = command;
        rep["inputs"] = inputs;
        rep["result"] = result;
        rep["assumptions"] = assumptions;
        rep["status"] = "ok";
        std::cout << rep.dump() << "\n";
    } else {
        std::cout << human << "\n";
        for (const auto& a : assumptions) std::cout << "note: " << a << "\n";
    }
    return 0;
}

int run_command(const std::string& command, const Options& o) {
    if (command == "val") {
        DvrSpec s = spec_from(o, false);
        Poly f = parse_poly(o.poly_text);
        ExtRational v = mono_val(s, f);
        ordered_json in{{"spec", to_string(s)}, {"poly", to_string(f)}};
        return emit(o, command, in, ordered_json{{"value", to_string(v)}}, {}, to_string(v));
    }
    if (command == "compare") {
        DvrSpec s1 = spec_from(o, false);
        DvrSpec s2 = spec_from(o, true);
        OrderRelation r = order_compare(s1, s2);
        ordered_json in{{"spec1", to_string(s1)}, {"spec2", to_string(s2)}};
        return emit(o, command, in, ordered_json{{"relation", to_string(r)}}, {}, to_string(r));
    }
    if (command == "contains") {
        DvrSpec outer = spec_from(o, false);
        DvrSpec inner = spec_from(o, true);
        bool c = orbit_contains(outer, inner);
        ordered_json in{{"outer", to_string(outer)}, {"inner", to_string(inner)}};
        return emit(o, command, in, ordered_json{{"contains", c}}, {}, c ? "true" : "false");
    }
    if (command == "reduce") {
        RingSpec ring = parse_ring_json(read_ring_text(o.ring_file));
        RingReduction red = reduce_ring(ring);
        std::string canon = ring_to_json(red.ring);
        ordered_json result;
        result["ring"] = ordered_json::parse(canon);
        result["removed"] = red.removed;
        std::ostringstream human;
        human << canon;
        for (const auto& r : red.removed) human << "\nremoved: " << r;
        return emit(o, command, ordered_json{{"ring", ordered_json::parse(ring_to_json(ring))}}, result, {},
                    human.str());
    }
    if (command == "member") {
        RingSpec ring = parse_ring_json(read_ring_text(o.ring_file));
        Poly f = parse_poly(o.poly_text);
        MemberResult r = member(ring, f);
        ordered_json in{{"ring", ordered_json::parse(ring_to_json(ring))}, {"poly", to_string(f)}};
        ordered_json result{{"member", r.is_member}, {"witness", r.witness}};
        return emit(o, command, in, result, {},
                    std::string(r.is_member ? "true" : "false") + " (" + r.witness + ")");
    }
    if (command == "classify") {
        RingSpec ring = parse_ring_json(read_ring_text(o.ring_file));
        Classification c = classify(ring, o.bound);
        ordered_json in{{"ring", ordered_json::parse(ring_to_json(ring))}, {"bound", o.bound}};
        std::ostringstream human;
        human << "krull=" << to_string(c.krull);
        auto flag = [&](const char* name, const std::optional<bool>& v) {
            human << " " << name << "=" << (v ? (*v ? "true" : "false") : "undefined");
        };
        flag("dedekind", c.dedekind);
        flag("almost-dedekind", c.almost_dedekind);
        flag("ufd", c.ufd);
        flag("pure", c.pure);
        human << " class-group=" << (c.class_group ? to_string(*c.class_group) : std::string("undefined"));
        if (!c.krull_witness.empty()) human << "\nkrull: " << c.krull_witness;
        return emit(o, command, in, classification_json(c), c.assumptions, human.str());
    }
    if (command == "clgroup") {
        RingSpec ring = parse_ring_json(read_ring_text(o.ring_file));
        AbelianGroupInv g = class_group(ring);
        ordered_json in{{"ring", ordered_json::parse(ring_to_json(ring))}};
        return emit(o, command, in, group_json(g), {}, to_string(g));
    }
    if (command == "prime-max") {
        RingSpec ring = parse_ring_json(read_ring_text(o.ring_file));
        ordered_json in{{"ring", ordered_json::parse(ring_to_json(ring))}};
        if (!o.poly_text.empty()) {
            Poly q = parse_poly(o.poly_text);
            NonunitaryMaxResult r = nonunitary_prime_is_maximal(ring, q);
            in["poly"] = to_string(q);
            ordered_json result{{"maximal", r.is_maximal}, {"witness", r.witness}};
            return emit(o, command, in, result, {},
                        std::string(r.is_maximal ? "maximal" : "not maximal") + " (" + r.witness + ")");
        }
        if (o.p == 0 || o.index_j == 0) fail("ParseError", "prime-max needs --poly or both --p and --j");
        bool m = unitary_prime_is_maximal(ring, o.p, o.index_j);
        in["p"] = o.p;
        in["j"] = o.index_j;
        return emit(o, command, in, ordered_json{{"maximal", m}}, {}, m ? "maximal" : "not maximal");
    }
    if (command == "probe") {
        RingSpec ring = parse_ring_json(read_ring_text(o.ring_file));
        Poly g = parse_poly(o.poly_text);
        ProbeReport r = probe_finite_character(ring, g, o.bound);
        ordered_json in{{"ring", ordered_json::parse(ring_to_json(ring))},
                        {"poly", to_string(g)},
                        {"bound", o.bound}};
        ordered_json result;
        result["hits"] = r.hits;
        result["primes_checked"] = r.primes_checked;
        result["density"] = to_string(r.density);
        result["verdict"] = r.all_primes_hit ? "AllPrimesHit" : "FiniteSupport";
        std::ostringstream human;
        human << (r.all_primes_hit ? "AllPrimesHit" : "FiniteSupport") << " " << r.hits.size() << "/"
              << r.primes_checked << " primes hit:";
        for (std::uint64_t p : r.hits) human << " " << p;
        return emit(o, command, in, result, {}, human.str());
    }
    if (command == "construct") {
        AbelianGroupInv g = parse_group(o.group_text);
        RingSpec ring = construct_with_class_group(g, parse_pool(o.pool_text));
        std::string canon = ring_to_json(ring);
        ordered_json in{{"group", group_json(g)}, {"pool", parse_pool(o.pool_text)}};
        ordered_json result{{"ring", ordered_json::parse(canon)}};
        return emit(o, command, in, result, {}, canon);
    }
    if (command == "spectrum") {
        RingSpec ring = parse_ring_json(read_ring_text(o.ring_file));
        SpectrumReport r = spectrum_summary(ring);
        ordered_json in{{"ring", ordered_json::parse(ring_to_json(ring))}};
        ordered_json entries = ordered_json::array();
        std::ostringstream human;
        for (const auto& e : r.unitary) {
            entries.push_back({{"p", e.p},
                               {"j", e.j},
                               {"spec", e.spec_text},
                               {"maximal", e.maximal},
                               {"center_ideal", e.center_ideal_text}});
            human << "unitary " << e.spec_text << " center-ideal " << e.center_ideal_text
                  << (e.maximal ? " [maximal]" : " [not maximal]") << "\n";
        }
        ordered_json result{{"unitary", entries}, {"nonunitary", r.nonunitary}, {"default", r.default_note}};
        human << "nonunitary: " << r.nonunitary << "\n" << r.default_note;
        return emit(o, command, in, result, {}, human.str());
    }
    fail("ParseError", "unknown command " + command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for integrally closed rings between Z[X] and Q[X]"};
    app.require_subcommand(1);

    Options o;
    std::vector<std::string> names{"val",     "compare",   "contains", "reduce",    "member", "classify",
                                   "clgroup", "prime-max", "probe",    "construct", "spectrum"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--ring", o.ring_file, "ring spec file (JSON), '-' or absent for stdin");
        sub->add_option("--poly", o.poly_text, "polynomial, e.g. \"X^2+2*X+8\"");
        sub->add_option("--p", o.p, "prime");
        sub->add_option("--center", o.center_text, "center: rat:A, alg:Q or trunc:a=A,N=K,e=E");
        sub->add_option("--radius", o.radius_text, "radius: rational or inf");
        sub->add_option("--p2", o.p2, "second spec prime (defaults to --p)");
        sub->add_option("--center2", o.center2_text, "second spec center");
        sub->add_option("--radius2", o.radius2_text, "second spec radius");
        sub->add_option("--bound", o.bound, "prime bound for probes (default 100)");
        sub->add_option("--j", o.index_j, "1-based spec index within the family at --p");
        sub->add_option("--group", o.group_text, "invariant factors, 0 for a Z summand, e.g. \"2,6,0\"");
        sub->add_option("--pool", o.pool_text, "comma list of primes for construct");
        sub->add_flag("--json", o.json, "machine-readable report");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        return run_command(command, o);
    } catch (const DomainError& e) {
        if (o.json) {
            ordered_json rep;
            rep["command"] = command;
            rep["status"] = "error";
            rep["error"] = {{"code", e.code()}, {"message", e.what()}};
            std::cout << rep.dump() << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
