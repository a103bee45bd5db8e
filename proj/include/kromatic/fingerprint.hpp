#pragma once

#include <string>

#include "kromatic/graph.hpp"

namespace kromatic {

// Canonical byte string equal for two graphs exactly when their Kromatic
// symmetric functions are equal.
//
// The payload is the reduced signed profile of stable-set counts: for each
// vertex subset U, the vector (s_1(U),...,s_n(U)) of stable-set counts by
// size, weighted by (-1)^(n-|U|), with equal vectors combined and zero net
// weights dropped. Every m-bar coefficient is a fixed binomial moment of this
// profile and, conversely, the moments pin the profile down, so profile
// equality and coefficientwise equality of the (finite but enormous) full
// m-bar expansion are the same relation. The profile stays 2^n entries where
// the explicit expansion of a sparse graph would not fit in memory.
std::string fingerprint(const Graph& g);  // n <= kEngineCap, unit weights

// Serialized classical chromatic symmetric function (homogeneous of degree
// n, so the degree-n monomial slice is all of it).
std::string classical_fingerprint(const Graph& g);

}  // namespace kromatic
