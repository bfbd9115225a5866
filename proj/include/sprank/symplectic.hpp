// The symplectic space k^{2m} with its standard alternating form, projective
// points, totally isotropic subspaces and their perps, and the point-in-
// subspace incidence matrix.
//
// Coordinates are ordered (x_1, ..., x_m, y_m, ..., y_1): x_i lives at index
// i-1 and y_i at index 2m-i.  The form is b(u,v) = sum_i (u_xi v_yi + u_yi v_xi).
#pragma once

#include "sprank/bigmat.hpp"
#include "sprank/gf2e.hpp"
#include "sprank/gf2rank.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sprank {

using Vec = std::vector<Fel>;

struct SympSpace {
    int m;
    FieldCtx ctx;

    SympSpace(int m_, int t);

    int dim() const { return 2 * m; }
    std::size_t pos_x(int i) const { return static_cast<std::size_t>(i - 1); }
    std::size_t pos_y(int i) const { return static_cast<std::size_t>(2 * m - i); }

    Vec basis_e(int i) const;  // e_i
    Vec basis_f(int i) const;  // f_i
};

Fel form(const SympSpace& sp, const Vec& u, const Vec& v);

struct ProjPoint {
    Vec coords;  // first nonzero coordinate is 1
};

// Normalizes a nonzero vector to its canonical projective representative.
ProjPoint normalize_point(const SympSpace& sp, const Vec& v);

struct Subspace {
    int dim = 0;
    std::vector<Vec> rows;  // RREF, pivots ascending, pivot columns elementary
    bool isotropic = false;
};

// Canonical subspace from an arbitrary spanning set.
Subspace make_subspace(const SympSpace& sp, const std::vector<Vec>& gens);

bool subspace_contains(const SympSpace& sp, const Subspace& w, const Vec& v);

// All (q^{2m}-1)/(q-1) projective points in lexicographic coordinate order.
// This order is the column order of the incidence matrix.
std::vector<ProjPoint> enumerate_points(const SympSpace& sp);

// I_r: totally isotropic r-subspaces for r <= m, perps of totally isotropic
// (2m-r)-subspaces for r > m.  Deterministic order (sorted by RREF rows).
std::vector<Subspace> enumerate_Ir(const SympSpace& sp, int r);

Subspace perp(const SympSpace& sp, const Subspace& w);

// Expected counts, used for scale guards and as cross-checks.
BigInt num_points(int m, const BigInt& q);
BigInt num_Ir(int m, int r, const BigInt& q);

// The points of a subspace, one canonical representative per line.
std::vector<ProjPoint> points_of_subspace(const SympSpace& sp, const Subspace& w);

// B_{r,1}: rows indexed by I_r, columns by I_1; entry 1 iff the point lies in
// the subspace.
BitMatrix incidence_matrix(const SympSpace& sp, int r);

// Streams the rows of B_{r,1} in enumeration order without materializing the
// matrix.  Returns the number of columns (|I_1|).
std::size_t stream_incidence_rows(const SympSpace& sp, int r,
                                  const std::function<void(BitRow)>& emit);

}  // namespace sprank
