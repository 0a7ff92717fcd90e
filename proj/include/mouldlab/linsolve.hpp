#pragma once

#include <optional>
#include <vector>

#include "mouldlab/rational.hpp"

namespace mouldlab {

/// Result of exact Gaussian elimination on A x = b.
struct SolveResult {
    bool consistent = false;
    std::vector<Rat> particular;                // free variables set to 0
    std::vector<std::vector<Rat>> nullspace;    // basis of the homogeneous solutions
};

/// Dense exact elimination with deterministic pivoting (first nonzero
/// column, rows in input order).
class LinearSystem {
public:
    explicit LinearSystem(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return (int)pivot_col_.size(); }

    /// Reduces the row against the current pivots and stores it when it
    /// contributes a new pivot.  Returns false when the row is inconsistent
    /// (0 = nonzero).
    bool add_row(std::vector<Rat> row, Rat rhs) {
        reduce(row, rhs);
        int p = 0;
        while (p < ncols_ && row[p] == 0) ++p;
        if (p == ncols_) {
            return rhs == 0;
        }
        Rat lead = row[p];
        for (auto& x : row) x /= lead;
        rhs /= lead;
        // back-substitute into existing pivot rows
        for (size_t k = 0; k < rows_.size(); ++k) {
            Rat f = rows_[k][p];
            if (f == 0) continue;
            for (int c = p; c < ncols_; ++c) rows_[k][c] -= f * row[c];
            rhs_[k] -= f * rhs;
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
        pivot_col_.push_back(p);
        return true;
    }

    SolveResult solve() const {
        SolveResult out;
        out.consistent = true;
        std::vector<int> pivot_of_col(ncols_, -1);
        for (size_t k = 0; k < pivot_col_.size(); ++k) pivot_of_col[pivot_col_[k]] = (int)k;
        out.particular.assign(ncols_, Rat(0));
        for (size_t k = 0; k < pivot_col_.size(); ++k)
            out.particular[pivot_col_[k]] = rhs_[k];
        for (int c = 0; c < ncols_; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            std::vector<Rat> v(ncols_, Rat(0));
            v[c] = 1;
            for (size_t k = 0; k < pivot_col_.size(); ++k) v[pivot_col_[k]] = -rows_[k][c];
            out.nullspace.push_back(std::move(v));
        }
        return out;
    }

private:
    void reduce(std::vector<Rat>& row, Rat& rhs) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            Rat f = row[pivot_col_[k]];
            if (f == 0) continue;
            for (int c = 0; c < ncols_; ++c)
                if (rows_[k][c] != 0) row[c] -= f * rows_[k][c];
            rhs -= f * rhs_[k];
        }
    }

    int ncols_;
    std::vector<std::vector<Rat>> rows_;  // normalized pivot rows
    std::vector<Rat> rhs_;
    std::vector<int> pivot_col_;
};

}  // namespace mouldlab
