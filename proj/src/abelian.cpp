#include "zqx/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace zqx {

AbelianGroupInv canonicalize_group(const std::vector<Int>& summands) {
    AbelianGroupInv g;
    std::vector<Int> t;
    for (const Int& d : summands) {
        if (d < 0) fail("ParseError", "negative modulus");
        if (d == 0)
            ++g.free_rank;
        else if (d > 1)
            t.push_back(d);
    }
    // gcd/lcm smoothing: replacing any non-dividing pair (a, b) by
    // (gcd, lcm) preserves the group and converges to the invariant
    // factor chain.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(t.begin(), t.end());
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            for (std::size_t j = i + 1; j < t.size(); ++j) {
                if (t[j] % t[i] == 0) continue;
                Int d = gcd(t[i], t[j]);
                Int l = t[i] / d * t[j];
                t[i] = d;
                t[j] = l;
                changed = true;
            }
        }
        t.erase(std::remove(t.begin(), t.end(), Int(1)), t.end());
    }
    std::sort(t.begin(), t.end());
    g.torsion = std::move(t);
    return g;
}

std::string to_string(const AbelianGroupInv& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Int& d : g.torsion) {
        if (!first) out << " + ";
        out << "Z/" << d.get_str();
        first = false;
    }
    if (g.free_rank == 1) {
        if (!first) out << " + ";
        out << "Z";
    } else if (g.free_rank > 1) {
        if (!first) out << " + ";
        out << "Z^" << g.free_rank;
    }
    return out.str();
}

AbelianGroupInv parse_group(const std::string& text) {
    std::vector<Int> moduli;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::string s;
        for (char c : tok)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) continue;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                fail("ParseError", "bad group modulus '" + tok + "'");
        moduli.emplace_back(s);
    }
    return canonicalize_group(moduli);
}

} // namespace zqx
