#include "kromatic/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_set>

#include "kromatic/errors.hpp"
#include "kromatic/named.hpp"

namespace kromatic {

namespace {

// Iterated neighbor-color refinement. Returns one color rank per vertex;
// ranks are a pure function of the isomorphism class, so restricting the
// canonical search to rank-respecting orderings is sound.
std::array<int, 64> refine_colors(int n, const std::uint64_t* adj) {
    std::array<int, 64> color{};
    for (int v = 0; v < n; ++v) color[v] = std::popcount(adj[v]);
    int ncolors = 0;
    for (int round = 0; round < n; ++round) {
        // key = (own color, sorted neighbor colors)
        std::vector<std::pair<std::vector<int>, int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> k;
            k.push_back(color[v]);
            for (std::uint64_t m = adj[v]; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                k.push_back(color[u]);
            }
            std::sort(k.begin() + 1, k.end());
            keys[v] = {std::move(k), v};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        int rank = -1;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i) {
            if (i == 0 || sorted[i].first != sorted[i - 1].first) ++rank;
            next[sorted[i].second] = rank;
        }
        bool changed = rank + 1 != ncolors;
        ncolors = rank + 1;
        for (int v = 0; v < n; ++v) color[v] = next[v];
        if (!changed) break;
    }
    return color;
}

struct CanonSearch {
    int n;
    const std::uint64_t* adj;
    std::array<int, 64> color;        // refined color per vertex
    std::array<int, 64> pos_color;    // color that must occupy each position
    std::array<int, 64> perm;         // perm[pos] = original vertex
    std::array<int, 64> best_perm;
    std::uint64_t placed = 0;
    std::uint64_t best = 0;
    bool have_best = false;

    static std::uint64_t top_mask(int len) {
        return len == 0 ? 0 : ~0ull << (64 - len);
    }

    void run() {
        // positions get colors in ascending rank order
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return color[a] < color[b]; });
        for (int p = 0; p < n; ++p) pos_color[p] = color[order[p]];
        rec(0, 0, 0);
    }

    void rec(int pos, std::uint64_t prefix, int prefix_len) {
        if (pos == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
                best_perm = perm;
            }
            return;
        }
        std::uint64_t tried = 0;  // twin representatives already expanded
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1) continue;
            if (color[v] != pos_color[pos]) continue;
            bool twin_seen = false;
            for (std::uint64_t m = tried; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if ((adj[u] & ~(1ull << v)) == (adj[v] & ~(1ull << u))) {
                    twin_seen = true;
                    break;
                }
            }
            if (twin_seen) continue;
            tried |= 1ull << v;
            // column bits: adjacency of v to positions 0..pos-1
            std::uint64_t np = prefix;
            int nl = prefix_len;
            for (int i = 0; i < pos; ++i, ++nl)
                if ((adj[v] >> perm[i]) & 1) np |= 1ull << (63 - nl);
            if (have_best && np > (best & top_mask(nl))) continue;
            perm[pos] = v;
            placed |= 1ull << v;
            rec(pos + 1, np, nl);
            placed &= ~(1ull << v);
        }
    }
};

std::uint64_t canonical_bits_raw(int n, const std::uint64_t* adj, std::array<int, 64>* perm_out) {
    CanonSearch s;
    s.n = n;
    s.adj = adj;
    s.color = refine_colors(n, adj);
    s.run();
    if (perm_out) *perm_out = s.best_perm;
    return s.best;
}

}  // namespace

std::uint64_t canonical_bits(const Graph& g) {
    if (g.n() > kOracleCap)
        throw CapabilityError("canonical label capped at " + std::to_string(kOracleCap) +
                              " vertices");
    std::array<std::uint64_t, 64> adj{};
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    return canonical_bits_raw(g.n(), adj.data(), nullptr);
}

Graph canonical_form(const Graph& g) {
    if (g.n() > kOracleCap)
        throw CapabilityError("canonical label capped at " + std::to_string(kOracleCap) +
                              " vertices");
    std::array<std::uint64_t, 64> adj{};
    for (int v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v);
    std::array<int, 64> best_perm{};
    canonical_bits_raw(g.n(), adj.data(), &best_perm);
    // best_perm[pos] = original vertex; relabeled() wants vertex -> position
    std::vector<int> perm(g.n());
    for (int p = 0; p < g.n(); ++p) perm[best_perm[p]] = p;
    return g.relabeled(perm);
}

CanonicalLabel canonical_label(const Graph& g) {
    return CanonicalLabel{canonical_form(g).to_graph6()};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n()) return false;
    return canonical_bits(a) == canonical_bits(b);
}

const GraphCatalog::Entry* GraphCatalog::find(const CanonicalLabel& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

int GraphCatalog::index_of(const CanonicalLabel& id) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].id == id) return static_cast<int>(i);
    return -1;
}

GraphCatalog generate_nonisomorphic(int n) {
    if (n < 1 || n > kGenerateCap)
        throw CapabilityError("catalog generation capped at " + std::to_string(kGenerateCap) +
                              " vertices; larger catalogs must be ingested as graph6 files");
    const int nbits = n * (n - 1) / 2;
    std::array<std::uint64_t, 64> adj{};
    std::unordered_set<std::uint64_t> seen;
    GraphCatalog cat;
    const auto& aliases = named_alias_table();
    for (std::uint64_t mask = 0; mask < (1ull << nbits); ++mask) {
        adj.fill(0);
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1) {
                    adj[i] |= 1ull << j;
                    adj[j] |= 1ull << i;
                }
        std::uint64_t canon = canonical_bits_raw(n, adj.data(), nullptr);
        if (!seen.insert(canon).second) continue;
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if ((adj[i] >> j) & 1) g.add_edge(i, j);
        CanonicalLabel id = canonical_label(g);
        std::string alias;
        if (auto it = aliases.find(id.bytes); it != aliases.end()) alias = it->second;
        cat.entries.push_back({std::move(id), canonical_form(g), std::move(alias)});
    }
    return cat;
}

const GraphCatalog& cached_catalog(int n) {
    static std::mutex mu;
    static std::map<int, GraphCatalog> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, generate_nonisomorphic(n)).first;
    return it->second;
}

}  // namespace kromatic
