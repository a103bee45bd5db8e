#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kromatic {

// Storage cap: neighbor sets are single machine words.
inline constexpr int kMaxVertices = 63;
// Cap for exhaustive-search operations (canonical labels, induced-copy
// counting of the pattern graph, catalog generation input sizes).
inline constexpr int kOracleCap = 10;
// Cap for exhaustive catalog generation (filter over all labeled graphs).
inline constexpr int kGenerateCap = 7;
// Cap for full m-bar expansions and fingerprints.
inline constexpr int kEngineCap = 10;
// Host-graph cap for induced-copy counting (the pattern stays under
// kOracleCap; the host only pays a subset enumeration).
inline constexpr int kInducedHostCap = 16;

// Simple undirected graph on vertices 0..n-1 with optional positive integer
// vertex weights (default all 1). Adjacency is symmetric and irreflexive.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    static Graph parse_graph6(std::string_view line);
    static Graph parse_edge_list(std::string_view text);  // "n; u v; u v; ..."

    int n() const { return n_; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
    void add_edge(int u, int v);
    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int edge_count() const;
    std::uint64_t full_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    int weight(int v) const { return weights_[v]; }
    void set_weight(int v, int w);
    bool unit_weights() const;
    long total_weight() const;

    Graph complement() const;
    Graph induced(std::uint64_t vertex_mask) const;  // keeps weights, reindexes ascending
    Graph relabeled(std::span<const int> perm) const;  // vertex v -> position perm[v]
    Graph disjoint_union(const Graph& other) const;

    bool is_stable(std::uint64_t mask) const;  // no internal edge
    bool is_clique(std::uint64_t mask) const;
    // All size-k stable-set / clique masks, ascending as integers.
    std::vector<std::uint64_t> stable_set_masks(int size) const;
    std::vector<std::uint64_t> clique_masks(int size) const;

    std::string to_graph6() const;

    // Labeled equality (same vertex names), including weights.
    bool operator==(const Graph& other) const;

private:
    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> weights_;
};

// Size-k subsets of the vertex set with no internal edge, as sorted vertex
// lists, ordered by ascending subset mask.
std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g, int size);

// Iterates k-subsets of {0..n-1} as masks in ascending order (Gosper).
class SubsetIterator {
public:
    SubsetIterator(int n, int k);
    bool valid() const { return valid_; }
    std::uint64_t mask() const { return mask_; }
    void next();

private:
    std::uint64_t mask_, limit_;
    bool valid_;
};

}  // namespace kromatic
