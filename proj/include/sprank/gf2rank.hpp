// Exact rank over GF(2) on bit-packed rows.
//
// The primary kernel is streaming insertion into a pivot-indexed echelon
// basis: each incoming row is reduced against the stored rows; a nonzero
// remainder is stored under its leading column.  Memory scales with
// rank * ncols, not nrows * ncols.  A "method of four Russians" elimination
// over materialized matrices is available as an alternate kernel; the test
// suite runs both.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

namespace sprank {

using BitRow = std::vector<std::uint64_t>;

inline std::size_t bitrow_words(std::size_t ncols) { return (ncols + 63) / 64; }

inline void bitrow_set(BitRow& r, std::size_t col) { r[col >> 6] |= 1ULL << (col & 63); }

inline bool bitrow_get(const BitRow& r, std::size_t col) {
    return (r[col >> 6] >> (col & 63)) & 1ULL;
}

// Leading (smallest) set column, or npos for the zero row.
std::size_t bitrow_leading(const BitRow& r);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t nrows, std::size_t ncols)
        : nrows_(nrows), ncols_(ncols), rows_(nrows, BitRow(bitrow_words(ncols))) {}

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    BitRow& row(std::size_t i) { return rows_[i]; }
    const BitRow& row(std::size_t i) const { return rows_[i]; }
    void set(std::size_t i, std::size_t j) { bitrow_set(rows_[i], j); }
    bool get(std::size_t i, std::size_t j) const { return bitrow_get(rows_[i], j); }

    void append_row(BitRow r);
    BitMatrix transposed() const;

    // Row sums and column sums as counts.
    std::vector<std::size_t> row_sums() const;
    std::vector<std::size_t> col_sums() const;

private:
    std::size_t nrows_ = 0, ncols_ = 0;
    std::vector<BitRow> rows_;
};

// Pivot-indexed echelon basis over GF(2).
class EchelonBasisGF2 {
public:
    explicit EchelonBasisGF2(std::size_t ncols)
        : ncols_(ncols), pivot_of_col_(ncols, -1) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces r in place against the basis; returns the remainder's leading
    // column or npos if it vanished.  Does not modify the basis.
    std::size_t reduce(BitRow& r) const;

    // Reduce-and-store.  Returns true when the row increased the rank.
    bool insert(BitRow r);

private:
    std::size_t ncols_;
    std::vector<BitRow> rows_;               // stored reduced rows
    std::vector<std::int32_t> pivot_of_col_;  // col -> index into rows_, -1 if none
};

// Rank of a streamed sequence of rows.  The producer calls emit(row) once per
// row; rows may arrive in any order.  threads > 1 pre-reduces row batches
// against a frozen snapshot of the basis before the serial merge; the result
// is identical to the single-threaded run.
std::size_t rank_gf2_stream(
    const std::function<void(const std::function<void(BitRow)>& emit)>& produce,
    std::size_t ncols, int threads = 1);

std::size_t rank_gf2(const BitMatrix& m, int threads = 1);

// Four-Russians elimination (8-bit table kernel) over a materialized copy.
std::size_t rank_gf2_m4r(const BitMatrix& m);

// SMS sparse text format: "nrows ncols M" header, 1-based "i j v" triples,
// "0 0 0" terminator.  Values are reduced mod 2 on read.
void write_sms(std::ostream& os, const BitMatrix& m);
BitMatrix read_sms(std::istream& is);

}  // namespace sprank
