#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

using BigInt = mpz_class;

// Number of vertex subsets of g whose induced subgraph is isomorphic to h.
// h.n <= kOracleCap (pattern canonicalization); g.n <= kInducedHostCap.
BigInt count_induced_copies(const Graph& g, const Graph& h);

// spec: (clique size >= 2, multiplicity >= 0) pairs with distinct sizes.
// Number of ways to choose, per entry, that many distinct cliques of g so
// that the union of all chosen cliques is all of V(g).
BigInt count_covering_clique_selections(const Graph& g,
                                        const std::vector<std::pair<int, int>>& spec);

}  // namespace kromatic
