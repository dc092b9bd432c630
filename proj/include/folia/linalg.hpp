// Sparse exact Gaussian elimination over Q.
#pragma once

#include "folia/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace folia {

using SparseRow = std::map<std::size_t, Rational>;

/// Incremental row echelon form. Rows are reduced against the pivots already
/// present when inserted; a row that reduces to zero is dropped.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t ncols) : ncols_(ncols) {}

    /// Returns true if the row increased the rank.
    bool insert(SparseRow row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

private:
    friend std::optional<std::vector<Rational>> solve(std::size_t, const std::vector<SparseRow>&,
                                                      const std::vector<Rational>&);
    std::size_t ncols_;
    std::vector<SparseRow> rows_;  // insertion order; rows_[k].begin() is the pivot
    std::map<std::size_t, std::size_t> pivot_of_col_;
};

/// Rank of the span of the given rows.
std::size_t rank(std::size_t ncols, const std::vector<SparseRow>& rows);

/// Solve A x = b (A given by rows). Free variables are set to zero.
/// Returns nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve(std::size_t ncols, const std::vector<SparseRow>& rows,
                                           const std::vector<Rational>& rhs);

}  // namespace folia
