#include "kromatic/cover.hpp"

#include <bit>
#include <cmath>

#include "kromatic/errors.hpp"

namespace kromatic {

CoverSpec::CoverSpec(int i1, std::initializer_list<std::pair<int, int>> size_mult) : covered(i1) {
    for (auto [size, mult] : size_mult) {
        if (size < 2) throw DomainError("cover spec clique sizes start at 2");
        if (mult < 0) throw DomainError("cover spec multiplicities must be >= 0");
        if (size >= static_cast<int>(clique_mult.size())) clique_mult.resize(size + 1, 0);
        clique_mult[size] += mult;
    }
}

std::string CoverSpec::to_string() const {
    std::string out = "#(" + std::to_string(covered);
    for (std::size_t s = 2; s < clique_mult.size(); ++s) {
        out += ',';
        out += std::to_string(clique_mult[s]);
    }
    return out + ")";
}

int vertex_count(const MbarExpansion& v) { return v.vertex_count(); }

CoverCounter::CoverCounter(const MbarExpansion& v) : v_(v), n_(v.vertex_count()) {}

BigInt CoverCounter::count(const CoverSpec& spec) {
    if (spec.covered < 0 || spec.covered > n_)
        throw DomainError("cover spec covers " + std::to_string(spec.covered) +
                          " vertices of a graph on " + std::to_string(n_));
    std::vector<int> mult = spec.clique_mult;
    if (mult.size() < 2) mult.resize(2, 0);
    mult[0] = mult[1] = 0;
    while (mult.size() > 2 && mult.back() == 0) mult.pop_back();
    return count_rec(spec.covered, mult);
}

BigInt CoverCounter::count_rec(int covered, const std::vector<int>& mult) {
    long slots = 0;
    for (std::size_t s = 2; s < mult.size(); ++s) slots += static_cast<long>(s) * mult[s];
    if (slots == 0) return covered == 0 ? 1 : 0;
    if (slots < covered) return 0;  // cannot cover more vertices than clique slots
    auto key = std::make_pair(covered, mult);
    {
        std::scoped_lock lock(mu_);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    BigInt val = v_.coefficient_with_ones(mult, n_ - covered);
    for (int k = covered + 1; k <= n_; ++k) {
        BigInt sub = count_rec(k, mult);
        if (sub == 0) continue;
        BigInt choose;
        mpz_bin_uiui(choose.get_mpz_t(), k, covered);
        val -= sub * choose;
    }
    std::scoped_lock lock(mu_);
    return memo_.emplace(std::move(key), std::move(val)).first->second;
}

BigInt cover_count(const MbarExpansion& v, const CoverSpec& spec) {
    CoverCounter c(v);
    return c.count(spec);
}

CoverOracle::CoverOracle(const Graph& g, const std::vector<int>& max_mult)
    : n_(g.n()), max_mult_(max_mult) {
    if (n_ > kOracleCap)
        throw CapabilityError("cover oracle capped at " + std::to_string(kOracleCap) +
                              " vertices");
    Graph comp = g.complement();
    const std::size_t nmasks = std::size_t{1} << n_;
    if (max_mult_.size() < 2) max_mult_.resize(2, 0);
    layers_.resize(max_mult_.size());
    double logbound = 0;
    for (std::size_t s = 2; s < max_mult_.size(); ++s) {
        if (max_mult_[s] <= 0) continue;
        auto cliques = comp.clique_masks(static_cast<int>(s));
        double t = static_cast<double>(cliques.size());
        logbound += max_mult_[s] * std::log2(std::max(t, 2.0));
        if (logbound > 120)
            throw CapabilityError("cover oracle selection count too large for exact tables");
        auto& layer = layers_[s];
        layer.assign(max_mult_[s] + 1,
                     std::vector<unsigned __int128>(nmasks, 0));
        layer[0][0] = 1;
        for (std::uint64_t c : cliques)
            for (int k = max_mult_[s] - 1; k >= 0; --k)
                for (std::size_t m = 0; m < nmasks; ++m)
                    if (layer[k][m]) layer[k + 1][m | c] += layer[k][m];
    }
}

BigInt CoverOracle::count(const CoverSpec& spec) const {
    if (spec.covered < 0 || spec.covered > n_) throw DomainError("cover oracle: bad vertex count");
    const std::size_t nmasks = std::size_t{1} << n_;
    std::vector<unsigned __int128> acc(nmasks, 0);
    acc[0] = 1;
    for (std::size_t s = 2; s < spec.clique_mult.size(); ++s) {
        int m = spec.clique_mult[s];
        if (m == 0) continue;
        if (s >= max_mult_.size() || m > max_mult_[s])
            throw DomainError("cover oracle built without tables for this spec");
        std::vector<unsigned __int128> next(nmasks, 0);
        const auto& layer = layers_[s][m];
        for (std::size_t a = 0; a < nmasks; ++a) {
            if (!acc[a]) continue;
            for (std::size_t b = 0; b < nmasks; ++b)
                if (layer[b]) next[a | b] += acc[a] * layer[b];
        }
        acc = std::move(next);
    }
    unsigned __int128 total = 0;
    for (std::size_t m = 0; m < nmasks; ++m)
        if (std::popcount(m) == spec.covered) total += acc[m];
    BigInt hi(static_cast<unsigned long>(total >> 64));
    return (hi << 64) + static_cast<unsigned long>(total & ~0ull);
}

BigInt cover_count_oracle(const Graph& g, const CoverSpec& spec) {
    std::vector<int> max_mult = spec.clique_mult;
    CoverOracle oracle(g, max_mult);
    return oracle.count(spec);
}

}  // namespace kromatic
