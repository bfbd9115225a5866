// Dense exact linear algebra over GF(2^t): matrices, rank, RREF, and an
// incremental echelon basis for stacked-rank containment tests.
#pragma once

#include "sprank/gf2e.hpp"

#include <cstddef>
#include <vector>

namespace sprank {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t nrows, std::size_t ncols)
        : nrows_(nrows), ncols_(ncols), a_(nrows * ncols, 0) {}

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    Fel& at(std::size_t i, std::size_t j) { return a_[i * ncols_ + j]; }
    Fel at(std::size_t i, std::size_t j) const { return a_[i * ncols_ + j]; }

    void append_row(const std::vector<Fel>& row);
    std::vector<Fel> row(std::size_t i) const;

private:
    std::size_t nrows_ = 0, ncols_ = 0;
    std::vector<Fel> a_;
};

std::size_t rank_gfq(const QMatrix& m, const FieldCtx& ctx);

// Reduced row echelon form in place; returns the rank.  Pivots are leftmost,
// leading entries 1, pivot columns cleared above and below, zero rows
// dropped to the bottom; rows ordered by pivot column.  The result is the
// canonical representative of the row space.
std::size_t rref_gfq(QMatrix& m, const FieldCtx& ctx);

class EchelonBasisGFq {
public:
    EchelonBasisGFq(std::size_t ncols, const FieldCtx& ctx)
        : ncols_(ncols), ctx_(&ctx), pivot_of_col_(ncols, -1) {}

    std::size_t rank() const { return rows_.size(); }

    // Reduces r in place; returns the leading column of the remainder or
    // SIZE_MAX when it vanished (row lies in the current span).
    std::size_t reduce(std::vector<Fel>& r) const;

    bool insert(std::vector<Fel> r);

private:
    std::size_t ncols_;
    const FieldCtx* ctx_;
    std::vector<std::vector<Fel>> rows_;  // stored with leading entry 1
    std::vector<int> pivot_of_col_;
};

}  // namespace sprank
