#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kromatic/graph.hpp"
#include "kromatic/partition.hpp"

namespace kromatic {

using BigInt = mpz_class;

// s_j(U) tables: for every vertex subset U, the number of stable sets of each
// size contained in U. This is the whole information content of the m-bar
// expansion; coefficients are signed binomial moments of it.
struct StableSetTables {
    int n = 0;
    // counts[U][j] = number of stable j-subsets of U (j = 1..n)
    std::vector<std::array<std::uint16_t, kEngineCap + 1>> counts;

    static StableSetTables build(const Graph& g);
};

// The expansion of the Kromatic symmetric function of a graph over the
// K-theoretic augmented monomials, indexed by partition. Coefficient of
// lambda = number of families of pairwise-distinct stable sets, with size
// multiset lambda, whose union is the whole vertex set.
//
// Backed either by a fully enumerated coefficient map or by per-graph tables
// that evaluate any coefficient on demand (the full support of sparse graphs
// is finite but astronomically large, so most pipelines use the on-demand
// form and only ever read small coefficients).
class MbarExpansion {
public:
    static MbarExpansion on_demand(const Graph& g);   // n <= kEngineCap, unit weights
    static MbarExpansion enumerate(const Graph& g);   // + support-size guard
    static MbarExpansion from_map(std::map<Partition, BigInt> coeffs);

    // The unique k with coefficient(1^k) = 1. Throws DomainError when the map
    // form violates that invariant.
    int vertex_count() const;

    BigInt coefficient(const Partition& lam) const;
    // coefficient of (parts of mult, then `ones` extra 1-parts); 0 if ones < 0
    BigInt coefficient_with_ones(const std::vector<int>& mult, int ones) const;

    bool has_full_support() const { return full_; }
    const std::map<Partition, BigInt>& support() const;

    // One line per partition, "parts : coefficient", in partition order.
    std::string serialize() const;

private:
    int n_ = 0;
    bool full_ = false;
    std::map<Partition, BigInt> coeffs_;
    std::shared_ptr<const StableSetTables> tables_;
};

// Spec-facing conveniences.
BigInt mbar_coefficient(const Graph& g, const Partition& lam);
MbarExpansion mbar_vector(const Graph& g);

}  // namespace kromatic
