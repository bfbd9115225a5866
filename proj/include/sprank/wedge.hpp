// Square-free polynomials in X_1..X_m, Y_1..Y_m viewed as the exterior
// algebra of the dual space: classes (rho, sigma, tau, upsilon), the level
// filtration of each graded piece, explicit level-0 bases, the degree
// duality, and the action of the symplectic generators.
//
// A class-(rho,sigma,tau,upsilon) element is
//   prod_i (W_{r_i} + W_{r'_i}) * prod_{i in S} W_i * prod_{i in T} Z_i,
// where W_i = X_i Y_i and Z_i is X_i or Y_i; sigma = |S| is its level.
#pragma once

#include "sprank/gf2e.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sprank {

struct ClassSig {
    int rho = 0, sigma = 0, tau = 0, upsilon = 0;
    bool operator==(const ClassSig&) const = default;
};

struct IndexedPoly {
    int m = 0;
    std::vector<std::pair<int, int>> pairs;  // (r_i, r'_i), 1-based, both ascending
    std::vector<int> fulls;                  // S, ascending
    std::vector<int> singles;                // T, ascending
    std::uint32_t single_y_mask = 0;         // bit k set: Z of singles[k] is Y_i

    bool operator==(const IndexedPoly&) const = default;
};

ClassSig class_of(const IndexedPoly& e);
int degree_of(const IndexedPoly& e);

// Square-free monomial as a 2m-bit mask: bit i-1 is X_i, bit m+i-1 is Y_i.
using Mono = std::uint32_t;

inline Mono x_bit(int i) { return 1u << (i - 1); }
inline Mono y_bit(int i, int m) { return 1u << (m + i - 1); }

struct WedgeElem {
    int m = 0;
    std::map<Mono, Fel> terms;  // monomial -> nonzero coefficient
};

// Expansion into monomials; all coefficients are 1 since the index sets of
// the factors are disjoint.
WedgeElem expand(const IndexedPoly& e);

// Coefficient vector of length 2^{2m}, indexed by monomial mask.
std::vector<Fel> coord_vector(const WedgeElem& w);

// dim S^lambda_level = C(2m,lambda) - C(2m, lambda-2*level-2) after clamping
// level to floor(lambda/2); zero when the clamped level is below lambda - m
// (empty class set) or negative.
long long dim_S(int m, int lambda, int level);

// Basis of the level-0 subspace, lambda <= m: all (R, R', T) with
// 2|R| + |T| = lambda, both pair lists ascending, r_i forced to be the
// smallest index outside T not yet used, and every X/Y choice on T.
std::vector<IndexedPoly> weyl_basis(int m, int lambda);

// Basis of the level-`level` subspace: for each level' in
// [max(0, lambda-m), level], the weyl basis of degree lambda - 2*level'
// multiplied by the product of W_s over the lexicographically smallest
// level'-subset of its unused indices.
std::vector<IndexedPoly> filtration_basis(int m, int lambda, int level);

// Degree duality: swaps S and U; class (rho,sigma,tau,upsilon) becomes
// (rho,upsilon,tau,sigma) and degree lambda becomes 2m - lambda.  Involution.
IndexedPoly delta_dual(const IndexedPoly& e);

// Monomial-level duality X_I Y_J -> X_{M\J} Y_{M\I}.
Mono delta_dual_mono(Mono mono, int m);

struct SpGenerator {
    enum class Kind { Diagonal, Permute, SwapXY1, G1, G2 };
    Kind kind = Kind::Diagonal;
    Fel alpha = 1;          // Diagonal, G1, G2
    std::vector<int> perm;  // Permute: 1-based images pi(1..m)
};

// Every generator instance for the given (m, q): diagonals and the two
// transvection families over all nonzero alpha, all index permutations, and
// the x_1/y_1 swap.
std::vector<SpGenerator> all_generators(int m, const FieldCtx& ctx);

// Linear substitution followed by exterior reduction (squares vanish).
WedgeElem sp_generator_action(const SpGenerator& g, const WedgeElem& e, const FieldCtx& ctx);

// Lemma-style stability check: the image of every filtration basis element
// under every generator stays inside the span of the basis.  On failure a
// description of the first offending (generator, element) lands in *witness.
bool filtration_stable_under_sp(int m, int lambda, int level, const FieldCtx& ctx,
                                std::string* witness = nullptr);

}  // namespace sprank
