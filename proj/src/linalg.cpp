#include "folia/linalg.hpp"

#include <stdexcept>

namespace folia {

namespace {

// row -= factor * pivot_row
void axpy(SparseRow& row, const Rational& factor, const SparseRow& pivot_row) {
    for (const auto& [col, v] : pivot_row) {
        auto [it, inserted] = row.try_emplace(col, 0);
        it->second -= factor * v;
        if (it->second == 0) row.erase(it);
    }
}

}  // namespace

bool RowEchelon::insert(SparseRow row) {
    // Eliminate pivots in increasing column order. Each elimination only
    // touches columns >= the pivot column, so a forward scan is enough.
    auto it = row.begin();
    while (it != row.end()) {
        auto p = pivot_of_col_.find(it->first);
        if (p == pivot_of_col_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        const SparseRow& prow = rows_[p->second];
        Rational factor = it->second / prow.begin()->second;
        axpy(row, factor, prow);
        it = row.upper_bound(col);
    }
    if (row.empty()) return false;
    // The pivot of the new row is its smallest column not already a pivot.
    // Move that entry to the front by re-keying: pivot = first free column.
    std::size_t pivot_col = row.size();
    for (const auto& [col, v] : row)
        if (!pivot_of_col_.count(col)) {
            pivot_col = col;
            break;
        }
    // All remaining entries sit in non-pivot columns after elimination.
    if (pivot_col != row.begin()->first) throw std::logic_error("echelon invariant violated");
    pivot_of_col_.emplace(pivot_col, rows_.size());
    rows_.push_back(std::move(row));
    return true;
}

std::size_t rank(std::size_t ncols, const std::vector<SparseRow>& rows) {
    RowEchelon e(ncols);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

std::optional<std::vector<Rational>> solve(std::size_t ncols, const std::vector<SparseRow>& rows,
                                           const std::vector<Rational>& rhs) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("row count differs from rhs length");
    // Augmented column index = ncols.
    RowEchelon e(ncols + 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseRow r = rows[i];
        if (rhs[i] != 0) r[ncols] = rhs[i];
        e.insert(std::move(r));
    }
    if (e.pivot_of_col_.count(ncols)) return std::nullopt;
    std::vector<Rational> x(ncols, 0);
    // A row inserted later never has entries in earlier pivot columns, but an
    // earlier row may reference later pivots: back-substitute in reverse.
    for (std::size_t k = e.rows_.size(); k-- > 0;) {
        const SparseRow& r = e.rows_[k];
        auto it = r.begin();
        const std::size_t pc = it->first;
        const Rational pv = it->second;
        Rational acc = 0;
        for (++it; it != r.end(); ++it) {
            if (it->first == ncols)
                acc += it->second;
            else
                acc -= it->second * x[it->first];
        }
        x[pc] = acc / pv;
    }
    return x;
}

}  // namespace folia
