#include "sprank/gf2rank.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace sprank {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

void xor_into(BitRow& dst, const BitRow& src) {
    for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}
}  // namespace

std::size_t bitrow_leading(const BitRow& r) {
    for (std::size_t w = 0; w < r.size(); ++w) {
        if (r[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(r[w]));
    }
    return npos;
}

void BitMatrix::append_row(BitRow r) {
    if (r.size() != bitrow_words(ncols_)) {
        throw std::invalid_argument("row width mismatch");
    }
    rows_.push_back(std::move(r));
    ++nrows_;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(ncols_, nrows_);
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (get(i, j)) t.set(j, i);
        }
    }
    return t;
}

std::vector<std::size_t> BitMatrix::row_sums() const {
    std::vector<std::size_t> s(nrows_, 0);
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (std::uint64_t w : rows_[i]) s[i] += static_cast<std::size_t>(std::popcount(w));
    }
    return s;
}

std::vector<std::size_t> BitMatrix::col_sums() const {
    std::vector<std::size_t> s(ncols_, 0);
    for (std::size_t i = 0; i < nrows_; ++i) {
        for (std::size_t j = 0; j < ncols_; ++j) s[j] += get(i, j);
    }
    return s;
}

std::size_t EchelonBasisGF2::reduce(BitRow& r) const {
    if (r.size() != bitrow_words(ncols_)) {
        throw std::invalid_argument("row width mismatch");
    }
    std::size_t lead = bitrow_leading(r);
    while (lead != npos && pivot_of_col_[lead] >= 0) {
        xor_into(r, rows_[static_cast<std::size_t>(pivot_of_col_[lead])]);
        lead = bitrow_leading(r);
    }
    return lead;
}

bool EchelonBasisGF2::insert(BitRow r) {
    const std::size_t lead = reduce(r);
    if (lead == npos) return false;
    pivot_of_col_[lead] = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
}

std::size_t rank_gf2_stream(
    const std::function<void(const std::function<void(BitRow)>& emit)>& produce,
    std::size_t ncols, int threads) {
    EchelonBasisGF2 basis(ncols);
    if (threads <= 1) {
        produce([&](BitRow r) { basis.insert(std::move(r)); });
        return basis.rank();
    }

    // Batched mode: collect rows, pre-reduce each batch against a frozen
    // snapshot in parallel, then merge survivors serially.  Any row that a
    // peer in the same batch would have eliminated is caught by the serial
    // merge, so the final rank matches the single-threaded run.
    const std::size_t batch_cap = std::max<std::size_t>(256, 8 * static_cast<std::size_t>(threads));
    std::vector<BitRow> batch;
    batch.reserve(batch_cap);

    auto flush = [&]() {
        if (batch.empty()) return;
        const int nt = std::min<int>(threads, static_cast<int>(batch.size()));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nt));
        for (int th = 0; th < nt; ++th) {
            pool.emplace_back([&, th]() {
                for (std::size_t i = static_cast<std::size_t>(th); i < batch.size();
                     i += static_cast<std::size_t>(nt)) {
                    basis.reduce(batch[i]);
                }
            });
        }
        for (auto& w : pool) w.join();
        for (auto& r : batch) {
            if (bitrow_leading(r) != npos) basis.insert(std::move(r));
        }
        batch.clear();
    };

    produce([&](BitRow r) {
        batch.push_back(std::move(r));
        if (batch.size() >= batch_cap) flush();
    });
    flush();
    return basis.rank();
}

std::size_t rank_gf2(const BitMatrix& m, int threads) {
    return rank_gf2_stream(
        [&](const std::function<void(BitRow)>& emit) {
            for (std::size_t i = 0; i < m.nrows(); ++i) emit(m.row(i));
        },
        m.ncols(), threads);
}

std::size_t rank_gf2_m4r(const BitMatrix& m) {
    std::vector<BitRow> rows;
    rows.reserve(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
    const std::size_t nr = rows.size(), nc = m.ncols();
    const std::size_t words = bitrow_words(nc);

    std::size_t r = 0;  // rows [0, r) hold pivots from finished blocks
    std::vector<BitRow> table(256, BitRow(words));
    for (std::size_t c0 = 0; c0 < nc && r < nr; c0 += 8) {
        const int width = static_cast<int>(std::min<std::size_t>(8, nc - c0));
        int piv_bits[8];
        int s = 0;
        // Locate up to `width` pivot rows.  A candidate is cleared against the
        // pivots already found in this block before its bit is tested.
        for (int b = 0; b < width; ++b) {
            const std::size_t c = c0 + static_cast<std::size_t>(b);
            for (std::size_t i = r + static_cast<std::size_t>(s); i < nr; ++i) {
                for (int j = 0; j < s; ++j) {
                    if (bitrow_get(rows[i], c0 + static_cast<std::size_t>(piv_bits[j]))) {
                        xor_into(rows[i], rows[r + static_cast<std::size_t>(j)]);
                    }
                }
                if (bitrow_get(rows[i], c)) {
                    std::swap(rows[i], rows[r + static_cast<std::size_t>(s)]);
                    piv_bits[s++] = b;
                    break;
                }
            }
        }
        if (s == 0) continue;
        // Back-reduce the block pivots so each pivot column is elementary.
        for (int j1 = 0; j1 < s; ++j1) {
            for (int j2 = 0; j2 < s; ++j2) {
                if (j1 == j2) continue;
                if (bitrow_get(rows[r + static_cast<std::size_t>(j1)],
                               c0 + static_cast<std::size_t>(piv_bits[j2]))) {
                    xor_into(rows[r + static_cast<std::size_t>(j1)],
                             rows[r + static_cast<std::size_t>(j2)]);
                }
            }
        }
        // Table of all pivot combinations, indexed by block bit pattern.
        std::uint32_t pivmask = 0;
        std::fill(table[0].begin(), table[0].end(), 0);
        for (int j = 0; j < s; ++j) {
            const std::uint32_t bit = 1u << piv_bits[j];
            std::uint32_t p = pivmask;
            while (true) {  // all submasks of pivmask, including 0
                table[p | bit] = table[p];
                xor_into(table[p | bit], rows[r + static_cast<std::size_t>(j)]);
                if (p == 0) break;
                p = (p - 1) & pivmask;
            }
            pivmask |= bit;
        }
        // Sweep the remaining rows with one table XOR each.
        for (std::size_t i = r + static_cast<std::size_t>(s); i < nr; ++i) {
            std::uint32_t pat = 0;
            for (int b = 0; b < width; ++b) {
                if (bitrow_get(rows[i], c0 + static_cast<std::size_t>(b))) pat |= 1u << b;
            }
            pat &= pivmask;
            if (pat) xor_into(rows[i], table[pat]);
        }
        r += static_cast<std::size_t>(s);
    }
    return r;
}

void write_sms(std::ostream& os, const BitMatrix& m) {
    os << m.nrows() << ' ' << m.ncols() << " M\n";
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (m.get(i, j)) os << (i + 1) << ' ' << (j + 1) << " 1\n";
        }
    }
    os << "0 0 0\n";
}

BitMatrix read_sms(std::istream& is) {
    std::size_t nrows = 0, ncols = 0;
    std::string marker;
    if (!(is >> nrows >> ncols >> marker)) {
        throw std::runtime_error("SMS: bad header");
    }
    BitMatrix m(nrows, ncols);
    long long i = 0, j = 0, v = 0;
    while (is >> i >> j >> v) {
        if (i == 0 && j == 0 && v == 0) return m;
        if (i < 1 || j < 1 || i > static_cast<long long>(nrows) ||
            j > static_cast<long long>(ncols)) {
            throw std::runtime_error("SMS: entry out of range");
        }
        if (v % 2 != 0) m.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
    throw std::runtime_error("SMS: missing 0 0 0 terminator");
}

}  // namespace sprank
