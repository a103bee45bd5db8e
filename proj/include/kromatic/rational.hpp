#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace kromatic {

using Rational = mpq_class;
using BigInt = mpz_class;

// Dense exact rational matrix with column labels (catalog ids) and one
// provenance string per row describing how the row was derived.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::vector<std::string> col_labels;
    std::vector<std::string> row_provenance;

    void append_row(const std::vector<Rational>& row, std::string provenance = {});

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix matrix;          // zero rows dropped; labels/provenance carried along
    std::vector<Rational> rhs;      // transformed right-hand side, aligned with matrix rows
    std::vector<int> pivot_cols;    // one per row, strictly increasing
    std::vector<int> determined_cols;  // pivot columns whose row has no other nonzero entry
};

// Reduced row echelon form of [m | b]. Throws InconsistentSystemError (with the
// provenance of a row participating in the contradiction) if b is not in the
// row space reachable by elimination.
RrefResult rref(const RationalMatrix& m, const std::vector<Rational>& b);

// Convenience for homogeneous use: rref with a zero right-hand side.
RrefResult rref(const RationalMatrix& m);

struct SolveResult {
    bool unique = false;
    // Coordinates forced to a single value (all of them when unique).
    std::map<int, Rational> determined;
    // Residual constraints on the rest (empty when unique).
    RrefResult residual;
};

// Exact solve; unique solutions are returned in full, otherwise the
// determined coordinates plus the residual system on the free ones.
SolveResult solve_exact(const RationalMatrix& m, const std::vector<Rational>& b);

}  // namespace kromatic
