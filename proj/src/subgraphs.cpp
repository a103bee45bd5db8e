#include "kromatic/subgraphs.hpp"

#include <bit>

#include "kromatic/canonical.hpp"
#include "kromatic/errors.hpp"

namespace kromatic {

BigInt count_induced_copies(const Graph& g, const Graph& h) {
    if (h.n() > kOracleCap)
        throw CapabilityError("induced-copy pattern capped at " + std::to_string(kOracleCap) +
                              " vertices");
    if (g.n() > kInducedHostCap)
        throw CapabilityError("induced-copy host capped at " + std::to_string(kInducedHostCap) +
                              " vertices");
    if (h.n() > g.n()) return 0;
    const std::uint64_t target = canonical_bits(h);
    unsigned long count = 0;
    for (SubsetIterator it(g.n(), h.n()); it.valid(); it.next())
        if (canonical_bits(g.induced(it.mask())) == target) ++count;
    return BigInt(count);
}

namespace {

struct SelectionCounter {
    std::uint64_t full;
    std::vector<std::pair<std::vector<std::uint64_t>, int>> pools;  // (cliques, multiplicity)
    std::vector<long> max_gain;  // max vertices the remaining pools could still cover
    unsigned long count = 0;

    void rec(std::size_t pool, std::size_t from, int left, std::uint64_t covered) {
        if (left == 0) {
            if (pool + 1 == pools.size()) {
                if (covered == full) ++count;
                return;
            }
            rec(pool + 1, 0, pools[pool + 1].second, covered);
            return;
        }
        const auto& cliques = pools[pool].first;
        for (std::size_t i = from; i + left <= cliques.size(); ++i) {
            std::uint64_t c = covered | cliques[i];
            // the remaining picks must be able to reach the uncovered vertices
            long uncovered = std::popcount(full & ~c);
            if (uncovered > (left - 1) * pool_size(pool) + max_gain[pool + 1]) continue;
            rec(pool, i + 1, left - 1, c);
        }
    }

    int pool_size(std::size_t pool) const {
        return pools[pool].first.empty() ? 0 : std::popcount(pools[pool].first[0]);
    }
};

}  // namespace

BigInt count_covering_clique_selections(const Graph& g,
                                        const std::vector<std::pair<int, int>>& spec) {
    if (g.n() > kOracleCap)
        throw CapabilityError("covering-selection count capped at " + std::to_string(kOracleCap) +
                              " vertices");
    SelectionCounter sc;
    sc.full = g.full_mask();
    for (auto [size, mult] : spec) {
        if (size < 2) throw DomainError("covering-selection clique sizes must be >= 2");
        if (mult < 0) throw DomainError("covering-selection multiplicities must be >= 0");
        if (mult == 0) continue;
        auto cliques = g.clique_masks(size);
        if (static_cast<int>(cliques.size()) < mult) return 0;
        sc.pools.emplace_back(std::move(cliques), mult);
    }
    if (sc.pools.empty()) return g.n() == 0 ? 1 : 0;
    sc.max_gain.assign(sc.pools.size() + 1, 0);
    for (std::size_t i = sc.pools.size(); i-- > 0;)
        sc.max_gain[i] =
            sc.max_gain[i + 1] + static_cast<long>(sc.pools[i].second) * sc.pool_size(i);
    sc.rec(0, 0, sc.pools[0].second, 0);
    return BigInt(sc.count);
}

}  // namespace kromatic
