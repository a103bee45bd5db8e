#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "kromatic/graph.hpp"
#include "kromatic/partition.hpp"

namespace kromatic {

using BigInt = mpz_class;

// Degree cap for truncated monomial expansions; exponents are packed four
// bits per color during enumeration.
inline constexpr int kDegreeCapMax = 15;

// Degree-truncated symmetric function in the monomial basis: exact
// coefficients of m_lambda for every partition of weight <= degree_cap.
struct MonomialExpansion {
    int degree_cap = 0;
    std::map<Partition, BigInt> coeffs;  // nonzero entries only

    BigInt coefficient(const Partition& lam) const;
    MonomialExpansion weight_slice(int w) const;
    void add_scaled(const MonomialExpansion& other, const BigInt& factor);
    std::string serialize() const;  // same line format as m-bar vectors

    bool operator==(const MonomialExpansion&) const = default;
};

// Coefficients of the Kromatic symmetric function of a vertex-weighted graph
// up to total degree degree_cap, by exhaustive enumeration of proper set
// colorings over the color universe {1..degree_cap}.
MonomialExpansion kromatic_truncated(const Graph& g, int degree_cap);

// The K-theoretic augmented monomial of lam, truncated: the Kromatic function
// of the complete graph on length(lam) vertices with weights lam_i.
MonomialExpansion mbar_to_monomial(const Partition& lam, int degree_cap);

// The classical chromatic symmetric function (singleton color sets),
// truncated; homogeneous of degree n, so degree_cap = n captures all of it.
MonomialExpansion classical_chromatic(const Graph& g, int degree_cap);

}  // namespace kromatic
