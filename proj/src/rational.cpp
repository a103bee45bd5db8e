#include "kromatic/rational.hpp"

#include "kromatic/errors.hpp"

namespace kromatic {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    row_provenance.resize(rows);
}

void RationalMatrix::append_row(const std::vector<Rational>& row, std::string provenance) {
    if (cols_ == 0) cols_ = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols_)
        throw DomainError("row length does not match matrix width");
    data_.insert(data_.end(), row.begin(), row.end());
    row_provenance.push_back(std::move(provenance));
    ++rows_;
}

RrefResult rref(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (!b.empty() && static_cast<int>(b.size()) != m.rows())
        throw DomainError("rhs length does not match row count");
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc + 1, Rational(0)));
    std::vector<std::string> prov(nr);
    for (int r = 0; r < nr; ++r) {
        for (int c = 0; c < nc; ++c) a[r][c] = m.at(r, c);
        a[r][nc] = b.empty() ? Rational(0) : b[r];
        prov[r] = r < static_cast<int>(m.row_provenance.size()) ? m.row_provenance[r] : "";
    }
    int rank = 0;
    std::vector<int> pivots;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        std::swap(prov[rank], prov[piv]);
        Rational inv = a[rank][c];
        for (int k = c; k <= nc; ++k) a[rank][k] /= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int k = c; k <= nc; ++k) a[r][k] -= f * a[rank][k];
        }
        pivots.push_back(c);
        ++rank;
    }
    for (int r = rank; r < nr; ++r)
        if (a[r][nc] != 0)
            throw InconsistentSystemError("inconsistent linear system", prov[r]);

    RrefResult out;
    out.matrix = RationalMatrix(rank, nc);
    out.matrix.col_labels = m.col_labels;
    out.rhs.resize(rank);
    out.pivot_cols = pivots;
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < nc; ++c) out.matrix.at(r, c) = a[r][c];
        out.rhs[r] = a[r][nc];
        out.matrix.row_provenance[r] = prov[r];
    }
    for (int r = 0; r < rank; ++r) {
        int nonzero = 0;
        for (int c = 0; c < nc; ++c)
            if (out.matrix.at(r, c) != 0) ++nonzero;
        if (nonzero == 1) out.determined_cols.push_back(pivots[r]);
    }
    return out;
}

RrefResult rref(const RationalMatrix& m) { return rref(m, {}); }

SolveResult solve_exact(const RationalMatrix& m, const std::vector<Rational>& b) {
    RrefResult rr = rref(m, b);
    SolveResult out;
    out.unique = static_cast<int>(rr.pivot_cols.size()) == m.cols();
    if (out.unique) {
        for (int r = 0; r < rr.matrix.rows(); ++r) out.determined[rr.pivot_cols[r]] = rr.rhs[r];
        return out;
    }
    for (int r = 0; r < rr.matrix.rows(); ++r) {
        int nonzero = 0;
        for (int c = 0; c < rr.matrix.cols(); ++c)
            if (rr.matrix.at(r, c) != 0) ++nonzero;
        if (nonzero == 1) out.determined[rr.pivot_cols[r]] = rr.rhs[r];
    }
    // residual: the rows still tying several coordinates together
    RrefResult res;
    res.matrix = RationalMatrix(0, rr.matrix.cols());
    res.matrix.col_labels = rr.matrix.col_labels;
    for (int r = 0; r < rr.matrix.rows(); ++r) {
        int nonzero = 0;
        for (int c = 0; c < rr.matrix.cols(); ++c)
            if (rr.matrix.at(r, c) != 0) ++nonzero;
        if (nonzero <= 1) continue;
        std::vector<Rational> row(rr.matrix.cols());
        for (int c = 0; c < rr.matrix.cols(); ++c) row[c] = rr.matrix.at(r, c);
        res.matrix.append_row(row, rr.matrix.row_provenance[r]);
        res.rhs.push_back(rr.rhs[r]);
        res.pivot_cols.push_back(rr.pivot_cols[r]);
    }
    out.residual = std::move(res);
    return out;
}

}  // namespace kromatic
