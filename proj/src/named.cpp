#include "kromatic/named.hpp"

#include <mutex>

#include "kromatic/canonical.hpp"
#include "kromatic/errors.hpp"

namespace kromatic {

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph complete_minus_edge(int n) {
    Graph g = complete_graph(n);
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(u == 0 && v == 1)) out.add_edge(u, v);
    return out;
}

Graph star_plus_isolated(int h, int k) {
    if (h < 1 || k < 0) throw DomainError("star_plus_isolated needs h >= 1, k >= 0");
    Graph g(h + k);
    for (int v = 1; v < h; ++v) g.add_edge(0, v);
    return g;
}

Graph clique_plus_attached(int j, int i) {
    if (j < 2 || i < 0 || i > j - 1) throw DomainError("clique_plus_attached needs 0 <= i <= j-1");
    Graph g(j);
    for (int u = 0; u + 1 < j - 1; ++u)
        for (int v = u + 1; v < j - 1; ++v) g.add_edge(u, v);
    for (int v = 0; v < i; ++v) g.add_edge(j - 1, v);
    return g;
}

Graph claw_graph() { return star_graph(4); }
Graph paw_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
Graph diamond_graph() { return complete_minus_edge(4); }
Graph chair_graph() { return Graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}); }
Graph cricket_graph() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}); }
Graph bull_graph() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}}); }
Graph dart_graph() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}); }
Graph house_graph() { return path_graph(5).complement(); }
Graph kite_graph() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}); }
Graph fan_graph() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}}); }
Graph wheel4_graph() {
    return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
}

const std::unordered_map<std::string, std::string>& named_alias_table() {
    static std::mutex mu;
    static std::unordered_map<std::string, std::string> table;
    std::scoped_lock lock(mu);
    if (!table.empty()) return table;
    auto put = [&](const Graph& g, const std::string& name) {
        table.emplace(canonical_form(g).to_graph6(), name);
    };
    put(Graph(1), "K1");
    put(Graph(2, {{0, 1}}), "K2");
    put(empty_graph(2), "2v");
    put(complete_graph(3), "K3");
    put(path_graph(3), "P3");
    put(star_plus_isolated(2, 1), "e+v");
    put(empty_graph(3), "3v");
    put(complete_graph(4), "K4");
    put(diamond_graph(), "K4-e");
    put(cycle_graph(4), "C4");
    put(paw_graph(), "paw");
    put(complete_graph(3).disjoint_union(Graph(1)), "K3+v");
    put(path_graph(4), "P4");
    put(claw_graph(), "claw");
    put(path_graph(3).disjoint_union(Graph(1)), "P3+v");
    put(Graph(4, {{0, 1}, {2, 3}}), "2e");
    put(star_plus_isolated(2, 2), "e+2v");
    put(empty_graph(4), "4v");
    put(complete_graph(5), "K5");
    put(complete_minus_edge(5), "K5-e");
    put(wheel4_graph(), "W4");
    put(house_graph(), "house");
    put(fan_graph(), "fan");
    put(kite_graph(), "kite");
    put(dart_graph(), "dart");
    put(bull_graph(), "bull");
    put(cricket_graph(), "cricket");
    put(chair_graph(), "chair");
    put(cycle_graph(5), "C5");
    put(path_graph(5), "P5");
    put(star_graph(5), "K14");
    put(complete_bipartite(2, 3), "K23");
    put(empty_graph(5), "5v");
    put(star_plus_isolated(2, 3), "e+3v");
    put(path_graph(3).disjoint_union(empty_graph(2)), "P3+2v");
    put(Graph(4, {{0, 1}, {2, 3}}).disjoint_union(Graph(1)), "2e+v");
    put(claw_graph().disjoint_union(Graph(1)), "claw+v");
    put(path_graph(4).disjoint_union(Graph(1)), "P4+v");
    put(path_graph(3).disjoint_union(Graph(2, {{0, 1}})), "P3+e");
    put(complete_graph(3).disjoint_union(empty_graph(2)), "K3+2v");
    put(complete_graph(3).disjoint_union(Graph(2, {{0, 1}})), "K3+e");
    put(complete_graph(4).disjoint_union(Graph(1)), "K4+v");
    put(diamond_graph().disjoint_union(Graph(1)), "K4-e+v");
    put(complete_graph(3).disjoint_union(empty_graph(2)).complement(), "K4-e+P3");
    put(path_graph(3).disjoint_union(Graph(2, {{0, 1}})).complement(), "C4+claw");
    put(cycle_graph(4).disjoint_union(Graph(1)), "C4+v");
    put(paw_graph().disjoint_union(Graph(1)), "paw+v");
    return table;
}

}  // namespace kromatic
