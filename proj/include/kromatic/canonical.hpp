#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

// Canonical serialization of an isomorphism class: the graph6 string of the
// canonically relabeled graph. Equal labels iff isomorphic.
struct CanonicalLabel {
    std::string bytes;
    auto operator<=>(const CanonicalLabel&) const = default;
};

CanonicalLabel canonical_label(const Graph& g);  // g.n <= kOracleCap
Graph canonical_form(const Graph& g);            // the relabeled representative
bool isomorphic(const Graph& a, const Graph& b);

// Canonical upper-triangle edge bits, packed with string bit i at word bit
// (63 - i). Cheaper than the graph6 string when only identity is needed.
std::uint64_t canonical_bits(const Graph& g);

struct GraphCatalog {
    struct Entry {
        CanonicalLabel id;
        Graph graph;
        std::string alias;  // human-readable name where one exists; never used for identity
    };
    std::vector<Entry> entries;

    const Entry* find(const CanonicalLabel& id) const;
    int index_of(const CanonicalLabel& id) const;  // -1 if absent
};

// One representative per isomorphism class on n vertices, by filtering all
// 2^C(n,2) labeled graphs in ascending edge-mask order.
GraphCatalog generate_nonisomorphic(int n);  // n <= kGenerateCap

// Process-wide cache: catalogs are immutable after construction.
const GraphCatalog& cached_catalog(int n);

}  // namespace kromatic
