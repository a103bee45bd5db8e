#include "kromatic/monomial.hpp"

#include <bit>
#include <unordered_map>

#include "kromatic/errors.hpp"

namespace kromatic {

BigInt MonomialExpansion::coefficient(const Partition& lam) const {
    auto it = coeffs.find(lam);
    return it == coeffs.end() ? BigInt(0) : it->second;
}

MonomialExpansion MonomialExpansion::weight_slice(int w) const {
    MonomialExpansion out;
    out.degree_cap = degree_cap;
    for (const auto& [lam, c] : coeffs)
        if (lam.weight() == w) out.coeffs.emplace(lam, c);
    return out;
}

void MonomialExpansion::add_scaled(const MonomialExpansion& other, const BigInt& factor) {
    if (factor == 0) return;
    for (const auto& [lam, c] : other.coeffs) {
        BigInt& slot = coeffs[lam];
        slot += c * factor;
        if (slot == 0) coeffs.erase(lam);
    }
}

std::string MonomialExpansion::serialize() const {
    std::string out;
    for (const auto& [lam, c] : coeffs) {
        if (c == 0) continue;
        out += lam.to_string();
        out += " : ";
        out += c.get_str();
        out += '\n';
    }
    return out;
}

namespace {

// Exhaustive proper-set-coloring enumeration over colors {1..D}, bucketed by
// the exponent vector (packed four bits per color). Coefficient of m_lambda
// is the bucket of the one arrangement with the parts on the first colors in
// nonincreasing order; color-permutation symmetry makes every arrangement of
// the same partition land in equal buckets.
struct ColoringCounter {
    const Graph& g;
    int n, d;
    bool singleton_sets;
    std::uint32_t all_colors;
    std::vector<long> min_suffix_weight;  // sum of weights of vertices >= v
    std::vector<std::uint64_t> assigned;  // color mask per vertex
    std::unordered_map<std::uint64_t, unsigned long long> buckets;

    ColoringCounter(const Graph& graph, int degree_cap, bool singletons)
        : g(graph), n(graph.n()), d(degree_cap), singleton_sets(singletons) {
        all_colors = (1u << d) - 1;
        min_suffix_weight.assign(n + 1, 0);
        for (int v = n - 1; v >= 0; --v)
            min_suffix_weight[v] = min_suffix_weight[v + 1] + g.weight(v);
        assigned.assign(n, 0);
    }

    void run() {
        if (min_suffix_weight[0] > d) return;  // even one color per vertex exceeds the cap
        buckets.reserve(1 << 14);
        rec(0, 0, 0);
    }

    void rec(int v, long used, std::uint64_t packed) {
        if (v == n) {
            ++buckets[packed];
            return;
        }
        std::uint32_t forbidden = 0;
        std::uint64_t nbrs = g.neighbors(v) & ((std::uint64_t{1} << v) - 1);
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            forbidden |= static_cast<std::uint32_t>(assigned[u]);
        }
        std::uint32_t allowed = all_colors & ~forbidden;
        const long w = g.weight(v);
        long budget = d - used - min_suffix_weight[v + 1];
        int max_size = singleton_sets ? 1 : static_cast<int>(budget / w);
        int avail[kDegreeCapMax];
        int navail = 0;
        for (std::uint32_t m = allowed; m;) {
            avail[navail++] = std::countr_zero(m);
            m &= m - 1;
        }
        if (max_size > navail) max_size = navail;
        int idx[kDegreeCapMax];
        for (int size = 1; size <= max_size; ++size) {
            for (int i = 0; i < size; ++i) idx[i] = i;
            while (true) {
                std::uint32_t set = 0;
                std::uint64_t add = 0;
                for (int i = 0; i < size; ++i) {
                    set |= 1u << avail[idx[i]];
                    add += static_cast<std::uint64_t>(w) << (4 * avail[idx[i]]);
                }
                assigned[v] = set;
                rec(v + 1, used + w * size, packed + add);
                int i = size - 1;
                while (i >= 0 && idx[i] == navail - size + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int k = i + 1; k < size; ++k) idx[k] = idx[k - 1] + 1;
            }
        }
        assigned[v] = 0;
    }
};

MonomialExpansion collect(const ColoringCounter& cc, int d) {
    MonomialExpansion out;
    out.degree_cap = d;
    for (const auto& [packed, count] : cc.buckets) {
        // keep the canonical arrangement: nonincreasing exponents on a prefix
        std::vector<int> parts;
        bool canonical = true;
        int prev = kDegreeCapMax + 1;
        for (int i = 0; i < d; ++i) {
            int e = static_cast<int>((packed >> (4 * i)) & 0xf);
            if (e > prev || (e > 0 && prev == 0)) {
                canonical = false;
                break;
            }
            if (e > 0) parts.push_back(e);
            prev = e;
        }
        if (!canonical) continue;
        out.coeffs.emplace(Partition(std::move(parts)), BigInt(static_cast<unsigned long>(count)));
    }
    return out;
}

void check_degree_cap(int d) {
    if (d < 1 || d > kDegreeCapMax)
        throw CapabilityError("degree cap must be in 1.." + std::to_string(kDegreeCapMax));
}

}  // namespace

MonomialExpansion kromatic_truncated(const Graph& g, int degree_cap) {
    check_degree_cap(degree_cap);
    ColoringCounter cc(g, degree_cap, false);
    cc.run();
    return collect(cc, degree_cap);
}

MonomialExpansion mbar_to_monomial(const Partition& lam, int degree_cap) {
    check_degree_cap(degree_cap);
    if (lam.empty()) {
        MonomialExpansion out;
        out.degree_cap = degree_cap;
        out.coeffs.emplace(Partition(), BigInt(1));
        return out;
    }
    if (lam.weight() > degree_cap) {
        MonomialExpansion out;
        out.degree_cap = degree_cap;
        return out;
    }
    Graph k(lam.length());
    for (int u = 0; u < k.n(); ++u) {
        k.set_weight(u, lam.parts()[u]);
        for (int v = u + 1; v < k.n(); ++v) k.add_edge(u, v);
    }
    return kromatic_truncated(k, degree_cap);
}

MonomialExpansion classical_chromatic(const Graph& g, int degree_cap) {
    check_degree_cap(degree_cap);
    if (!g.unit_weights()) throw DomainError("classical chromatic function needs unit weights");
    ColoringCounter cc(g, degree_cap, true);
    cc.run();
    return collect(cc, degree_cap);
}

}  // namespace kromatic
