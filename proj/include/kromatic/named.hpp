#pragma once

#include <string>
#include <unordered_map>

#include "kromatic/graph.hpp"

namespace kromatic {

// Constructions for the small graphs the pipelines and tests talk about.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int n);                     // K_{1,n-1}; one center adjacent to all others
Graph complete_bipartite(int a, int b);
Graph complete_minus_edge(int n);            // K_n with one edge removed
// (h-vertex star) plus k isolated vertices; the target family of star recovery.
Graph star_plus_isolated(int h, int k);
// (j-1)-clique plus one extra vertex adjacent to exactly i clique vertices.
Graph clique_plus_attached(int j, int i);

Graph claw_graph();     // K_{1,3}
Graph paw_graph();      // triangle with a pendant edge
Graph diamond_graph();  // K4 minus an edge
Graph chair_graph();    // the 5-vertex tree with an induced claw
Graph cricket_graph();
Graph bull_graph();
Graph dart_graph();
Graph house_graph();
Graph kite_graph();
Graph fan_graph();
Graph wheel4_graph();

// Canonical graph6 id -> human-readable alias, for catalog entries and
// reports. Display only; identity always goes through canonical labels.
const std::unordered_map<std::string, std::string>& named_alias_table();

}  // namespace kromatic
