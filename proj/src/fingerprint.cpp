#include "kromatic/fingerprint.hpp"

#include <bit>
#include <map>
#include <vector>

#include "kromatic/mbar.hpp"
#include "kromatic/monomial.hpp"

namespace kromatic {

std::string fingerprint(const Graph& g) {
    StableSetTables t = StableSetTables::build(g);
    const int n = t.n;
    std::map<std::vector<std::uint16_t>, long> profile;
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t u = 0; u < count; ++u) {
        std::vector<std::uint16_t> key(t.counts[u].begin() + 1, t.counts[u].begin() + 1 + n);
        profile[std::move(key)] += ((n - std::popcount(u)) & 1) ? -1 : 1;
    }
    std::string out = "kromatic-profile/1 n=" + std::to_string(n) + "\n";
    for (const auto& [key, weight] : profile) {
        if (weight == 0) continue;
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(key[i]);
        }
        out += " : ";
        out += std::to_string(weight);
        out += '\n';
    }
    return out;
}

std::string classical_fingerprint(const Graph& g) {
    return "classical/1 n=" + std::to_string(g.n()) + "\n" +
           classical_chromatic(g, g.n()).serialize();
}

}  // namespace kromatic
