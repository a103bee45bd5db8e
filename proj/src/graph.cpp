#include "kromatic/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "kromatic/errors.hpp"

namespace kromatic {

Graph::Graph(int n) : n_(n), adj_(n, 0), weights_(n, 1) {
    if (n < 1 || n > kMaxVertices)
        throw DomainError("vertex count " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxVertices));
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw DomainError("bad edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

void Graph::set_weight(int v, int w) {
    if (w < 1) throw DomainError("vertex weight must be >= 1");
    weights_[v] = w;
}

bool Graph::unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

long Graph::total_weight() const {
    long s = 0;
    for (int w : weights_) s += w;
    return s;
}

Graph Graph::complement() const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        out.adj_[v] = full_mask() & ~adj_[v] & ~(1ull << v);
        out.weights_[v] = weights_[v];
    }
    return out;
}

Graph Graph::induced(std::uint64_t vertex_mask) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if ((vertex_mask >> v) & 1) keep.push_back(v);
    if (keep.empty()) throw DomainError("induced subgraph needs at least one vertex");
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        out.weights_[i] = weights_[keep[i]];
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    Graph out(n_);
    for (int v = 0; v < n_; ++v) {
        out.weights_[perm[v]] = weights_[v];
        for (int u = v + 1; u < n_; ++u)
            if (has_edge(v, u)) out.add_edge(perm[v], perm[u]);
    }
    return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
    Graph out(n_ + other.n_);
    for (int v = 0; v < n_; ++v) {
        out.weights_[v] = weights_[v];
        for (int u = v + 1; u < n_; ++u)
            if (has_edge(v, u)) out.add_edge(v, u);
    }
    for (int v = 0; v < other.n_; ++v) {
        out.weights_[n_ + v] = other.weights_[v];
        for (int u = v + 1; u < other.n_; ++u)
            if (other.has_edge(v, u)) out.add_edge(n_ + v, n_ + u);
    }
    return out;
}

bool Graph::is_stable(std::uint64_t mask) const {
    for (std::uint64_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj_[v] & rest) return false;
    }
    return true;
}

bool Graph::is_clique(std::uint64_t mask) const {
    for (std::uint64_t rest = mask; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if ((adj_[v] & rest) != rest) return false;
    }
    return true;
}

std::vector<std::uint64_t> Graph::stable_set_masks(int size) const {
    std::vector<std::uint64_t> out;
    for (SubsetIterator it(n_, size); it.valid(); it.next())
        if (is_stable(it.mask())) out.push_back(it.mask());
    return out;
}

std::vector<std::uint64_t> Graph::clique_masks(int size) const {
    std::vector<std::uint64_t> out;
    for (SubsetIterator it(n_, size); it.valid(); it.next())
        if (is_clique(it.mask())) out.push_back(it.mask());
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_ && weights_ == other.weights_;
}

std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g, int size) {
    if (size < 1 || size > g.n()) throw DomainError("stable-set size outside 1..n");
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask : g.stable_set_masks(size)) {
        std::vector<int> verts;
        for (int v = 0; v < g.n(); ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        out.push_back(std::move(verts));
    }
    return out;
}

SubsetIterator::SubsetIterator(int n, int k) {
    if (k < 0 || k > n) {
        valid_ = false;
        mask_ = limit_ = 0;
        return;
    }
    if (k == 0) {
        mask_ = 0;
        limit_ = 1;
        valid_ = true;
        return;
    }
    mask_ = (1ull << k) - 1;
    limit_ = n == 64 ? 0 : 1ull << n;
    valid_ = true;
}

void SubsetIterator::next() {
    if (mask_ == 0) {  // the single empty subset
        valid_ = false;
        return;
    }
    std::uint64_t c = mask_ & -mask_;
    std::uint64_t r = mask_ + c;
    mask_ = (((r ^ mask_) >> 2) / c) | r;
    valid_ = limit_ == 0 || mask_ < limit_;
}

// ---- graph6 (McKay convention) ----

namespace {
constexpr int kG6Lo = 63, kG6Hi = 126;

int g6_char(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("graph6 string truncated", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kG6Lo || c > kG6Hi) throw ParseError("graph6 character out of range", pos);
    return c - kG6Lo;
}
}  // namespace

Graph Graph::parse_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("empty graph6 string", 0);
    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
            throw ParseError("graph6 vertex counts above 2^18 unsupported", 1);
        n = (static_cast<long>(g6_char(line, 1)) << 12) | (g6_char(line, 2) << 6) |
            g6_char(line, 3);
        pos = 4;
    } else {
        n = g6_char(line, 0);
        pos = 1;
    }
    if (n < 1 || n > kMaxVertices)
        throw ParseError("graph6 vertex count " + std::to_string(n) + " outside 1.." +
                             std::to_string(kMaxVertices),
                         0);
    Graph g(static_cast<int>(n));
    long nbits = n * (n - 1) / 2;
    long nchars = (nbits + 5) / 6;
    if (static_cast<long>(line.size()) != static_cast<long>(pos) + nchars)
        throw ParseError("graph6 body has wrong length", line.size());
    long bit = 0;
    for (long c = 0; c < nchars; ++c) {
        int val = g6_char(line, pos + c);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (val >> b) & 1;
            if (bit >= nbits) {
                if (set) throw ParseError("nonzero graph6 padding bits", pos + c);
                continue;
            }
            if (set) {
                // bit index j(j-1)/2 + i encodes edge (i, j), i < j
                long j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                long i = bit - j * (j - 1) / 2;
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

std::string Graph::to_graph6() const {
    std::string out;
    if (n_ <= 62) {
        out.push_back(static_cast<char>(n_ + kG6Lo));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n_ >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n_ >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n_ & 63) + kG6Lo));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = nb = 0;
            }
        }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + kG6Lo));
    return out;
}

Graph Graph::parse_edge_list(std::string_view text) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ';', ' ');
    std::istringstream in(s);
    int n;
    if (!(in >> n)) throw ParseError("edge list: missing vertex count", 0);
    if (n < 1 || n > kMaxVertices)
        throw ParseError("edge list: vertex count outside 1.." + std::to_string(kMaxVertices), 0);
    Graph g(n);
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge list: dangling endpoint", text.size());
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: bad edge " + std::to_string(u) + " " + std::to_string(v),
                             0);
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace kromatic
