#include "sprank/symplectic.hpp"

#include "sprank/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace sprank {

SympSpace::SympSpace(int m_, int t) : m(m_), ctx(t) {
    if (m_ < 1) throw std::invalid_argument("symplectic space needs m >= 1");
}

Vec SympSpace::basis_e(int i) const {
    Vec v(static_cast<std::size_t>(2 * m), 0);
    v[pos_x(i)] = 1;
    return v;
}

Vec SympSpace::basis_f(int i) const {
    Vec v(static_cast<std::size_t>(2 * m), 0);
    v[pos_y(i)] = 1;
    return v;
}

Fel form(const SympSpace& sp, const Vec& u, const Vec& v) {
    if (u.size() != static_cast<std::size_t>(2 * sp.m) || u.size() != v.size()) {
        throw std::invalid_argument("form: vectors must have length 2m");
    }
    Fel acc = 0;
    for (int i = 1; i <= sp.m; ++i) {
        acc = FieldCtx::add(acc, sp.ctx.mul(u[sp.pos_x(i)], v[sp.pos_y(i)]));
        acc = FieldCtx::add(acc, sp.ctx.mul(u[sp.pos_y(i)], v[sp.pos_x(i)]));
    }
    return acc;
}

ProjPoint normalize_point(const SympSpace& sp, const Vec& v) {
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (v[j] == 0) continue;
        ProjPoint p{v};
        if (v[j] != 1) {
            const Fel s = sp.ctx.inv(v[j]);
            for (std::size_t k = j; k < v.size(); ++k) p.coords[k] = sp.ctx.mul(p.coords[k], s);
        }
        return p;
    }
    throw std::invalid_argument("cannot normalize the zero vector");
}

Subspace make_subspace(const SympSpace& sp, const std::vector<Vec>& gens) {
    const std::size_t nc = static_cast<std::size_t>(2 * sp.m);
    QMatrix m(0, nc);
    for (const auto& g : gens) m.append_row(g);
    const std::size_t rank = rref_gfq(m, sp.ctx);
    Subspace w;
    w.dim = static_cast<int>(rank);
    for (std::size_t i = 0; i < rank; ++i) w.rows.push_back(m.row(i));
    w.isotropic = true;
    for (std::size_t i = 0; i < rank && w.isotropic; ++i) {
        for (std::size_t j = i + 1; j < rank; ++j) {
            if (form(sp, w.rows[i], w.rows[j]) != 0) { w.isotropic = false; break; }
        }
    }
    return w;
}

bool subspace_contains(const SympSpace& sp, const Subspace& w, const Vec& v) {
    Vec r = v;
    for (const auto& row : w.rows) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv] == 0) ++piv;
        if (piv < r.size() && r[piv] != 0) {
            const Fel f = r[piv];
            for (std::size_t j = piv; j < r.size(); ++j) {
                r[j] = FieldCtx::add(r[j], sp.ctx.mul(f, row[j]));
            }
        }
    }
    return std::all_of(r.begin(), r.end(), [](Fel x) { return x == 0; });
}

std::vector<ProjPoint> enumerate_points(const SympSpace& sp) {
    const int n = 2 * sp.m;
    const std::uint32_t q = sp.ctx.q();
    std::vector<ProjPoint> pts;
    for (int piv = 0; piv < n; ++piv) {
        Vec v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(piv)] = 1;
        while (true) {
            pts.push_back(ProjPoint{v});
            int j = n - 1;
            while (j > piv && v[static_cast<std::size_t>(j)] == q - 1) {
                v[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j == piv) break;
            ++v[static_cast<std::size_t>(j)];
        }
    }
    std::sort(pts.begin(), pts.end(),
              [](const ProjPoint& a, const ProjPoint& b) { return a.coords < b.coords; });
    return pts;
}

namespace {

// Nullspace basis of the row space of `constraints` (each row is a linear
// functional).  Standard free-column construction; char 2, so no negation.
std::vector<Vec> nullspace(const SympSpace& sp, const std::vector<Vec>& constraints) {
    const std::size_t nc = static_cast<std::size_t>(2 * sp.m);
    QMatrix c(0, nc);
    for (const auto& r : constraints) c.append_row(r);
    const std::size_t rank = rref_gfq(c, sp.ctx);
    std::vector<std::size_t> pivcol(rank);
    std::vector<bool> is_piv(nc, false);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t j = 0;
        while (c.at(i, j) == 0) ++j;
        pivcol[i] = j;
        is_piv[j] = true;
    }
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_piv[f]) continue;
        Vec v(nc, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivcol[i]] = c.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Functional v -> b(v, w) as a coefficient row.
Vec form_functional(const SympSpace& sp, const Vec& w) {
    const std::size_t nc = static_cast<std::size_t>(2 * sp.m);
    Vec c(nc, 0);
    for (int i = 1; i <= sp.m; ++i) {
        c[sp.pos_x(i)] = w[sp.pos_y(i)];
        c[sp.pos_y(i)] = w[sp.pos_x(i)];
    }
    return c;
}

// Depth-first generation of totally isotropic r-subspaces via their unique
// RREF representatives.  Rows are added in ascending pivot order; candidates
// for the next row range over the perp of the partial span intersected with
// the pivot-column-zero conditions, and any candidate whose pivot column is
// nonzero in an earlier row is rejected (its subspace is produced along its
// own RREF path instead).  No dedup set is needed.
void gen_isotropic(const SympSpace& sp, int r, std::vector<Vec>& rows,
                   std::vector<std::size_t>& pivots,
                   const std::function<void(const std::vector<Vec>&)>& sink) {
    if (static_cast<int>(rows.size()) == r) {
        sink(rows);
        return;
    }
    const std::size_t nc = static_cast<std::size_t>(2 * sp.m);
    const std::uint32_t q = sp.ctx.q();

    std::vector<Vec> constraints;
    for (const auto& w : rows) {
        constraints.push_back(form_functional(sp, w));
        Vec e(nc, 0);
        std::size_t piv = 0;
        while (w[piv] == 0) ++piv;
        e[piv] = 1;
        constraints.push_back(std::move(e));
    }
    const std::vector<Vec> ns = nullspace(sp, constraints);
    const std::size_t d = ns.size();
    if (d == 0) return;

    const std::size_t last_piv = pivots.empty() ? 0 : pivots.back() + 1;

    // One representative per line of the solution space: combinations whose
    // first nonzero coefficient is 1, in lexicographic coefficient order.
    std::vector<Fel> coeff(d, 0);
    for (std::size_t lead = 0; lead < d; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        while (true) {
            Vec w(nc, 0);
            for (std::size_t i = lead; i < d; ++i) {
                if (coeff[i] == 0) continue;
                for (std::size_t j = 0; j < nc; ++j) {
                    w[j] = FieldCtx::add(w[j], sp.ctx.mul(coeff[i], ns[i][j]));
                }
            }
            std::size_t piv = 0;
            while (piv < nc && w[piv] == 0) ++piv;
            bool ok = piv < nc && (rows.empty() || piv >= last_piv);
            if (ok) {
                for (const auto& prev : rows) {
                    if (prev[piv] != 0) { ok = false; break; }
                }
            }
            if (ok) {
                if (w[piv] != 1) {
                    const Fel s = sp.ctx.inv(w[piv]);
                    for (std::size_t j = piv; j < nc; ++j) w[j] = sp.ctx.mul(w[j], s);
                }
                rows.push_back(std::move(w));
                pivots.push_back(piv);
                gen_isotropic(sp, r, rows, pivots, sink);
                pivots.pop_back();
                rows.pop_back();
            }
            std::size_t j = d;
            while (j > lead + 1 && coeff[j - 1] == q - 1) coeff[--j] = 0;
            if (j == lead + 1) break;
            ++coeff[j - 1];
        }
    }
}

std::vector<Subspace> isotropic_subspaces(const SympSpace& sp, int r) {
    std::vector<Subspace> out;
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
    gen_isotropic(sp, r, rows, pivots, [&](const std::vector<Vec>& rs) {
        Subspace w;
        w.dim = r;
        w.rows = rs;
        w.isotropic = true;
        out.push_back(std::move(w));
    });
    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return a.rows < b.rows; });
    return out;
}

}  // namespace

Subspace perp(const SympSpace& sp, const Subspace& w) {
    std::vector<Vec> constraints;
    constraints.reserve(w.rows.size());
    for (const auto& row : w.rows) constraints.push_back(form_functional(sp, row));
    return make_subspace(sp, nullspace(sp, constraints));
}

std::vector<Subspace> enumerate_Ir(const SympSpace& sp, int r) {
    const int n = 2 * sp.m;
    if (r < 1 || r > n - 1) throw std::invalid_argument("enumerate_Ir: r out of range");
    if (r <= sp.m) return isotropic_subspaces(sp, r);
    std::vector<Subspace> out;
    for (const auto& w : isotropic_subspaces(sp, n - r)) {
        out.push_back(perp(sp, w));
    }
    std::sort(out.begin(), out.end(),
              [](const Subspace& a, const Subspace& b) { return a.rows < b.rows; });
    return out;
}

BigInt num_points(int m, const BigInt& q) {
    return (boost::multiprecision::pow(q, 2 * m) - 1) / (q - 1);
}

BigInt num_Ir(int m, int r, const BigInt& q) {
    const int k = std::min(r, 2 * m - r);
    BigInt n = gaussian_binomial(m, k, q);
    for (int i = m - k + 1; i <= m; ++i) n *= boost::multiprecision::pow(q, i) + 1;
    return n;
}

std::vector<ProjPoint> points_of_subspace(const SympSpace& sp, const Subspace& w) {
    const std::size_t nc = static_cast<std::size_t>(2 * sp.m);
    const std::uint32_t q = sp.ctx.q();
    const std::size_t d = w.rows.size();
    std::vector<ProjPoint> pts;
    std::vector<Fel> coeff(d, 0);
    for (std::size_t lead = 0; lead < d; ++lead) {
        std::fill(coeff.begin(), coeff.end(), 0);
        coeff[lead] = 1;
        while (true) {
            Vec v(nc, 0);
            for (std::size_t i = lead; i < d; ++i) {
                if (coeff[i] == 0) continue;
                for (std::size_t j = 0; j < nc; ++j) {
                    v[j] = FieldCtx::add(v[j], sp.ctx.mul(coeff[i], w.rows[i][j]));
                }
            }
            pts.push_back(normalize_point(sp, v));
            std::size_t j = d;
            while (j > lead + 1 && coeff[j - 1] == q - 1) coeff[--j] = 0;
            if (j == lead + 1) break;
            ++coeff[j - 1];
        }
    }
    return pts;
}

namespace {

std::uint64_t pack_coords(const Vec& v, int t) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        key |= static_cast<std::uint64_t>(v[i]) << (t * static_cast<int>(i));
    }
    return key;
}

}  // namespace

std::size_t stream_incidence_rows(const SympSpace& sp, int r,
                                  const std::function<void(BitRow)>& emit) {
    if (2 * sp.m * sp.ctx.t() > 64) {
        throw std::invalid_argument("point keys exceed 64 bits; configuration too large");
    }
    const auto points = enumerate_points(sp);
    std::unordered_map<std::uint64_t, std::size_t> col_of;
    col_of.reserve(points.size() * 2);
    for (std::size_t j = 0; j < points.size(); ++j) {
        col_of.emplace(pack_coords(points[j].coords, sp.ctx.t()), j);
    }
    const std::size_t ncols = points.size();
    for (const auto& w : enumerate_Ir(sp, r)) {
        BitRow row(bitrow_words(ncols));
        for (const auto& p : points_of_subspace(sp, w)) {
            bitrow_set(row, col_of.at(pack_coords(p.coords, sp.ctx.t())));
        }
        emit(std::move(row));
    }
    return ncols;
}

BitMatrix incidence_matrix(const SympSpace& sp, int r) {
    std::vector<BitRow> rows;
    const std::size_t ncols =
        stream_incidence_rows(sp, r, [&](BitRow b) { rows.push_back(std::move(b)); });
    BitMatrix m(0, ncols);
    for (auto& b : rows) m.append_row(std::move(b));
    return m;
}

}  // namespace sprank
