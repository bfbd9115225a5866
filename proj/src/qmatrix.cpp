#include "sprank/qmatrix.hpp"

#include <limits>
#include <stdexcept>

namespace sprank {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

void QMatrix::append_row(const std::vector<Fel>& row) {
    if (row.size() != ncols_) throw std::invalid_argument("row width mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++nrows_;
}

std::vector<Fel> QMatrix::row(std::size_t i) const {
    return std::vector<Fel>(a_.begin() + static_cast<std::ptrdiff_t>(i * ncols_),
                            a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * ncols_));
}

std::size_t rref_gfq(QMatrix& m, const FieldCtx& ctx) {
    const std::size_t nr = m.nrows(), nc = m.ncols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = npos;
        for (std::size_t i = rank; i < nr; ++i) {
            if (m.at(i, col) != 0) { piv = i; break; }
        }
        if (piv == npos) continue;
        if (piv != rank) {
            for (std::size_t j = 0; j < nc; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        }
        const Fel s = ctx.inv(m.at(rank, col));
        for (std::size_t j = col; j < nc; ++j) m.at(rank, j) = ctx.mul(m.at(rank, j), s);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank) continue;
            const Fel f = m.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < nc; ++j) {
                m.at(i, j) = FieldCtx::add(m.at(i, j), ctx.mul(f, m.at(rank, j)));
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_gfq(const QMatrix& m, const FieldCtx& ctx) {
    QMatrix work = m;
    return rref_gfq(work, ctx);
}

std::size_t EchelonBasisGFq::reduce(std::vector<Fel>& r) const {
    if (r.size() != ncols_) throw std::invalid_argument("row width mismatch");
    for (std::size_t col = 0; col < ncols_; ++col) {
        if (r[col] == 0) continue;
        const int pi = pivot_of_col_[col];
        if (pi < 0) return col;
        const Fel f = r[col];
        const auto& b = rows_[static_cast<std::size_t>(pi)];
        for (std::size_t j = col; j < ncols_; ++j) {
            r[j] = FieldCtx::add(r[j], ctx_->mul(f, b[j]));
        }
    }
    return npos;
}

bool EchelonBasisGFq::insert(std::vector<Fel> r) {
    const std::size_t lead = reduce(r);
    if (lead == npos) return false;
    const Fel s = ctx_->inv(r[lead]);
    for (std::size_t j = lead; j < ncols_; ++j) r[j] = ctx_->mul(r[j], s);
    pivot_of_col_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

}  // namespace sprank
