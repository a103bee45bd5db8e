#include "kromatic/mbar.hpp"

#include <bit>
#include <cmath>
#include <functional>

#include "kromatic/errors.hpp"

namespace kromatic {

namespace {

constexpr double kMaxEnumeratedSupport = 4e6;

void require_engine_graph(const Graph& g) {
    if (g.n() > kEngineCap)
        throw CapabilityError("m-bar engine capped at " + std::to_string(kEngineCap) +
                              " vertices");
    if (!g.unit_weights())
        throw DomainError(
            "m-bar expansions are defined here for unit weights only; "
            "weighted graphs go through the truncated monomial computation");
}

// C(s, k) as unsigned __int128 for s <= 260, k <= 26; 0 means "use exact path".
class Binom128 {
public:
    Binom128() {
        table_[0][0] = 1;
        for (int s = 1; s <= kMaxS; ++s) {
            table_[s][0] = 1;
            for (int k = 1; k <= kMaxK; ++k) {
                unsigned __int128 a = table_[s - 1][k - 1];
                unsigned __int128 b = k <= kMaxK ? table_[s - 1][k] : 0;
                table_[s][k] = a + b;
            }
        }
    }
    static constexpr int kMaxS = 260, kMaxK = 26;
    unsigned __int128 get(int s, int k) const {
        if (k < 0 || k > s) return 0;
        if (k == 0) return 1;
        return table_[s][k];
    }

private:
    std::array<std::array<unsigned __int128, kMaxK + 1>, kMaxS + 1> table_{};
};

const Binom128& binom128() {
    static Binom128 t;
    return t;
}

BigInt binom_big(unsigned long s, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), s, k);
    return out;
}

}  // namespace

StableSetTables StableSetTables::build(const Graph& g) {
    require_engine_graph(g);
    const int n = g.n();
    const std::size_t count = std::size_t{1} << n;
    StableSetTables t;
    t.n = n;
    t.counts.assign(count, {});
    // stable[m] by stripping the lowest vertex
    std::vector<char> stable(count, 0);
    stable[0] = 1;
    for (std::size_t m = 1; m < count; ++m) {
        int v = std::countr_zero(m);
        std::uint64_t rest = m & (m - 1);
        stable[m] = stable[rest] && !(g.neighbors(v) & rest);
        if (stable[m]) ++t.counts[m][std::popcount(m)];
    }
    // subset-sum (zeta) transform per size, giving s_j(U)
    for (int b = 0; b < n; ++b)
        for (std::size_t u = 0; u < count; ++u)
            if ((u >> b) & 1)
                for (int j = 1; j <= n; ++j) t.counts[u][j] += t.counts[u ^ (1ull << b)][j];
    return t;
}

MbarExpansion MbarExpansion::on_demand(const Graph& g) {
    MbarExpansion v;
    v.n_ = g.n();
    v.tables_ = std::make_shared<const StableSetTables>(StableSetTables::build(g));
    return v;
}

MbarExpansion MbarExpansion::from_map(std::map<Partition, BigInt> coeffs) {
    MbarExpansion v;
    v.full_ = true;
    v.coeffs_ = std::move(coeffs);
    v.n_ = -1;
    return v;
}

int MbarExpansion::vertex_count() const {
    if (tables_) return n_;
    int found = -1;
    for (const auto& [lam, c] : coeffs_) {
        if (c == 0 || lam.empty() || lam.max_part() != 1) continue;
        if (c != 1 || found >= 0)
            throw DomainError("malformed m-bar vector: all-ones coefficients must be a single 1");
        found = lam.length();
    }
    if (found < 0) throw DomainError("malformed m-bar vector: no all-ones partition with coefficient 1");
    return found;
}

const std::map<Partition, BigInt>& MbarExpansion::support() const {
    if (!full_) throw DomainError("expansion does not carry enumerated support");
    return coeffs_;
}

BigInt MbarExpansion::coefficient(const Partition& lam) const {
    if (!tables_) {
        auto it = coeffs_.find(lam);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }
    const auto& t = *tables_;
    const int n = t.n;
    if (lam.max_part() > n) return 0;
    std::vector<int> mult = lam.multiplicities();
    std::vector<int> sizes;
    for (int j = 1; j < static_cast<int>(mult.size()); ++j)
        if (mult[j] > 0) sizes.push_back(j);
    if (sizes.empty()) return n == 0 ? 1 : 0;

    const std::size_t count = std::size_t{1} << n;
    const std::uint64_t full = count - 1;
    // fast path if every per-subset product fits comfortably in 128 bits
    double logbound = n;  // the 2^n summands
    bool fast = true;
    for (int j : sizes) {
        if (t.counts[full][j] < mult[j]) return 0;
        if (mult[j] > Binom128::kMaxK) fast = false;
        logbound += (std::lgamma(t.counts[full][j] + 1.0) - std::lgamma(mult[j] + 1.0) -
                     std::lgamma(t.counts[full][j] - mult[j] + 1.0)) /
                    std::log(2.0);
    }
    if (fast && logbound < 120.0) {
        const auto& bt = binom128();
        __int128 total = 0;
        for (std::size_t u = 0; u < count; ++u) {
            unsigned __int128 prod = 1;
            for (int j : sizes) {
                prod *= bt.get(t.counts[u][j], mult[j]);
                if (prod == 0) break;
            }
            if (prod == 0) continue;
            if ((n - std::popcount(u)) & 1)
                total -= static_cast<__int128>(prod);
            else
                total += static_cast<__int128>(prod);
        }
        bool neg = total < 0;
        unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-total)
                                    : static_cast<unsigned __int128>(total);
        BigInt hi(static_cast<unsigned long>(mag >> 64));
        BigInt out = (hi << 64) + static_cast<unsigned long>(mag & ~0ull);
        return neg ? BigInt(-out) : out;
    }
    BigInt total = 0;
    for (std::size_t u = 0; u < count; ++u) {
        BigInt prod = 1;
        for (int j : sizes) {
            prod *= binom_big(t.counts[u][j], mult[j]);
            if (prod == 0) break;
        }
        if ((n - std::popcount(u)) & 1)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

BigInt MbarExpansion::coefficient_with_ones(const std::vector<int>& mult, int ones) const {
    if (ones < 0) return 0;
    std::vector<int> m = mult;
    if (m.size() < 2) m.resize(2, 0);
    m[1] += ones;
    return coefficient(Partition::from_multiplicities(m));
}

MbarExpansion MbarExpansion::enumerate(const Graph& g) {
    MbarExpansion v = on_demand(g);
    const auto& t = *v.tables_;
    const int n = t.n;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    double support = 1;
    for (int j = 1; j <= n; ++j) support *= t.counts[full][j] + 1.0;
    if (support > kMaxEnumeratedSupport)
        throw CapabilityError("full m-bar support too large to enumerate (about " +
                              std::to_string(static_cast<double>(support)) +
                              " candidate partitions); use on-demand coefficients");
    // iterate multiplicity vectors, largest size first, pruning by coverage
    std::vector<int> maxmult(n + 1), mult(n + 1, 0);
    std::vector<long> cover_rest(n + 2, 0);  // max coverage sizes 1..j can add
    for (int j = 1; j <= n; ++j) maxmult[j] = t.counts[full][j];
    for (int j = 1; j <= n; ++j) cover_rest[j] = cover_rest[j - 1] + static_cast<long>(j) * maxmult[j];
    std::function<void(int, long)> rec = [&](int j, long cover_max) {
        if (j == 0) {
            BigInt c = v.coefficient(Partition::from_multiplicities(mult));
            if (c != 0) v.coeffs_.emplace(Partition::from_multiplicities(mult), std::move(c));
            return;
        }
        for (int m = 0; m <= maxmult[j]; ++m) {
            mult[j] = m;
            long cm = cover_max + static_cast<long>(j) * m;
            if (cm + cover_rest[j - 1] >= n) rec(j - 1, cm);
        }
        mult[j] = 0;
    };
    rec(n, 0);
    v.full_ = true;
    return v;
}

std::string MbarExpansion::serialize() const {
    if (!full_) throw DomainError("serialize requires enumerated support");
    std::string out;
    for (const auto& [lam, c] : coeffs_) {
        if (c == 0) continue;
        out += lam.to_string();
        out += " : ";
        out += c.get_str();
        out += '\n';
    }
    return out;
}

BigInt mbar_coefficient(const Graph& g, const Partition& lam) {
    return MbarExpansion::on_demand(g).coefficient(lam);
}

MbarExpansion mbar_vector(const Graph& g) { return MbarExpansion::enumerate(g); }

}  // namespace kromatic
