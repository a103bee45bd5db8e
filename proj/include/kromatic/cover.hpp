#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <vector>

#include "kromatic/graph.hpp"
#include "kromatic/mbar.hpp"

namespace kromatic {

// Cover statistic index: the number of ways to cover exactly `covered`
// vertices of the complement graph using clique_mult[j] distinct j-cliques of
// the complement (equivalently j-element stable sets of the graph) for each
// j >= 2, cliques of equal size unordered.
struct CoverSpec {
    int covered = 0;
    std::vector<int> clique_mult;  // indexed by clique size; entries 0 and 1 unused

    CoverSpec() = default;
    CoverSpec(int i1, std::initializer_list<std::pair<int, int>> size_mult);
    int mult(int size) const {
        return size < static_cast<int>(clique_mult.size()) ? clique_mult[size] : 0;
    }
    std::string to_string() const;
};

// The unique k with coefficient(1^k) = 1.
int vertex_count(const MbarExpansion& v);

// Memoized extraction of cover statistics from an expansion, by descending
// recursion on the covered-vertex count.
class CoverCounter {
public:
    explicit CoverCounter(const MbarExpansion& v);
    BigInt count(const CoverSpec& spec);

private:
    BigInt count_rec(int covered, const std::vector<int>& mult);
    const MbarExpansion& v_;
    int n_;
    std::map<std::pair<int, std::vector<int>>, BigInt> memo_;
    std::mutex mu_;
};

BigInt cover_count(const MbarExpansion& v, const CoverSpec& spec);

// Same statistic by direct enumeration over clique selections of the
// complement graph, independent of the recursion; the oracle side of the
// equivalence suite.
BigInt cover_count_oracle(const Graph& g, const CoverSpec& spec);

// Batch oracle: per-graph subset-union tables reused across many specs.
class CoverOracle {
public:
    // max_mult[s] bounds the multiplicity this oracle will be asked for
    // cliques of size s (s >= 2).
    CoverOracle(const Graph& g, const std::vector<int>& max_mult);
    BigInt count(const CoverSpec& spec) const;

private:
    int n_;
    std::vector<int> max_mult_;
    // layers_[s][k][mask] = ways to choose k distinct s-cliques of the
    // complement with union exactly mask
    std::vector<std::vector<std::vector<unsigned __int128>>> layers_;
};

}  // namespace kromatic
