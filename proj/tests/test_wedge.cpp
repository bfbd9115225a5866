#include "sprank/wedge.hpp"

#include "sprank/bigmat.hpp"
#include "sprank/gf2rank.hpp"
#include "sprank/qmatrix.hpp"

#include <doctest.h>

#include <bit>
#include <set>

using namespace sprank;

namespace {

long long c2m(int m, int k) { return binom(2 * m, k).convert_to<long long>(); }

// GF(2) rank of the expanded coordinate vectors.
std::size_t expansion_rank(const std::vector<IndexedPoly>& basis, int m) {
    BitMatrix mat(0, std::size_t{1} << (2 * m));
    for (const auto& e : basis) {
        BitRow row(bitrow_words(mat.ncols()));
        for (const auto& [mono, c] : expand(e).terms) {
            CHECK(c == 1);
            bitrow_set(row, mono);
        }
        mat.append_row(std::move(row));
    }
    return rank_gf2(mat);
}

}  // namespace

TEST_CASE("dim_S formula, clamping and empty cases") {
    CHECK(dim_S(3, 2, 0) == 14);
    CHECK(dim_S(2, 1, 0) == 4);
    CHECK(dim_S(2, 2, 0) == 5);
    for (int m = 1; m <= 6; ++m) CHECK(dim_S(m, 0, 0) == 1);
    for (int m = 2; m <= 6; ++m) {
        for (int lam = 0; lam <= m; ++lam) {
            CHECK(dim_S(m, lam, lam / 2) == c2m(m, lam));
            CHECK(dim_S(m, lam, lam / 2 + 5) == c2m(m, lam));  // clamp
        }
    }
    // Below lambda - m the class set is empty.
    CHECK(dim_S(3, 5, 1) == 0);
    CHECK(dim_S(3, 5, 2) == c2m(3, 5) - c2m(3, -1));
    CHECK(dim_S(2, 1, -1) == 0);
    CHECK_THROWS(dim_S(2, 5, 0));
    CHECK_THROWS(dim_S(2, -1, 0));
}

TEST_CASE("telescoping and quotient dimensions") {
    for (int m = 2; m <= 6; ++m) {
        for (int lam = 0; lam <= m; ++lam) {
            long long sum = 0;
            for (int l = 0; l <= lam / 2; ++l) {
                const long long quotient = dim_S(m, lam, l) - (l == 0 ? 0 : dim_S(m, lam, l - 1));
                CHECK(quotient == dim_S(m, lam - 2 * l, 0));
                sum += quotient;
            }
            CHECK(sum == c2m(m, lam));
        }
    }
}

TEST_CASE("dimension duality") {
    for (int m = 2; m <= 5; ++m) {
        for (int lam = m; lam <= 2 * m; ++lam) {
            for (int l = lam - m; l <= lam / 2; ++l) {
                CHECK(dim_S(m, lam, l) == dim_S(m, 2 * m - lam, l - (lam - m)));
            }
        }
    }
}

TEST_CASE("weyl basis small cases") {
    CHECK(weyl_basis(2, 0).size() == 1);  // the empty product
    CHECK(degree_of(weyl_basis(2, 0)[0]) == 0);
    CHECK(weyl_basis(2, 1).size() == 4);  // x1, y1, x2, y2
    CHECK(weyl_basis(2, 2).size() == 5);  // (w1+w2) and four Z_i Z_j
    int npairs = 0;
    for (const auto& e : weyl_basis(2, 2)) {
        if (!e.pairs.empty()) {
            ++npairs;
            CHECK(e.pairs == std::vector<std::pair<int, int>>{{1, 2}});
        }
        CHECK(class_of(e).sigma == 0);
        CHECK(degree_of(e) == 2);
    }
    CHECK(npairs == 1);
    CHECK_THROWS(weyl_basis(2, 3));
}

TEST_CASE("weyl basis count matches the binomial difference for m <= 6") {
    for (int m = 1; m <= 6; ++m) {
        for (int lam = 0; lam <= m; ++lam) {
            CHECK(weyl_basis(m, lam).size() ==
                  static_cast<std::size_t>(c2m(m, lam) - c2m(m, lam - 2)));
        }
    }
}

TEST_CASE("weyl basis satisfies the smallest-available-index condition") {
    for (int m = 2; m <= 5; ++m) {
        for (int lam = 0; lam <= m; ++lam) {
            for (const auto& e : weyl_basis(m, lam)) {
                std::set<int> gone(e.singles.begin(), e.singles.end());
                for (const auto& [r, rp] : e.pairs) {
                    // r is the smallest index outside T and the earlier pairs.
                    for (int i = 1; i < r; ++i) CHECK(gone.count(i) == 1);
                    CHECK(r < rp);
                    gone.insert(r);
                    gone.insert(rp);
                }
            }
        }
    }
}

TEST_CASE("filtration basis: level 0 equals the weyl basis") {
    for (int m = 2; m <= 4; ++m) {
        for (int lam = 0; lam <= m; ++lam) {
            CHECK(filtration_basis(m, lam, 0) == weyl_basis(m, lam));
        }
    }
}

TEST_CASE("filtration basis counts and expansion ranks equal dim_S (m <= 3)") {
    for (int m = 1; m <= 3; ++m) {
        for (int lam = 0; lam <= 2 * m; ++lam) {
            for (int l = std::max(0, lam - m); l <= lam / 2; ++l) {
                const auto basis = filtration_basis(m, lam, l);
                CHECK(basis.size() == static_cast<std::size_t>(dim_S(m, lam, l)));
                CHECK(expansion_rank(basis, m) == basis.size());
                for (const auto& e : basis) {
                    CHECK(degree_of(e) == lam);
                    CHECK(class_of(e).sigma <= l);
                }
            }
        }
    }
    CHECK(filtration_basis(3, 4, 1).size() == 14);
}

TEST_CASE("delta duality on indexed polynomials") {
    for (int m = 2; m <= 4; ++m) {
        for (int lam = 0; lam <= 2 * m; ++lam) {
            for (int l = std::max(0, lam - m); l <= lam / 2; ++l) {
                for (const auto& e : filtration_basis(m, lam, l)) {
                    const IndexedPoly d = delta_dual(e);
                    CHECK(delta_dual(d) == e);
                    const ClassSig ce = class_of(e), cd = class_of(d);
                    CHECK(cd.rho == ce.rho);
                    CHECK(cd.sigma == ce.upsilon);
                    CHECK(cd.tau == ce.tau);
                    CHECK(cd.upsilon == ce.sigma);
                    CHECK(degree_of(d) == 2 * m - lam);
                }
            }
        }
    }
}

TEST_CASE("delta duality agrees with the monomial-level map") {
    const int m = 3;
    for (int lam = 0; lam <= 2 * m; ++lam) {
        for (const auto& e : filtration_basis(m, lam, lam / 2)) {
            const WedgeElem lhs = expand(delta_dual(e));
            WedgeElem rhs;
            rhs.m = m;
            for (const auto& [mono, c] : expand(e).terms) {
                rhs.terms[delta_dual_mono(mono, m)] = c;
            }
            CHECK(lhs.terms == rhs.terms);
        }
    }
}

TEST_CASE("self-dual middle class") {
    // Degree-m elements of class (0,0,m,0) map to themselves class-wise.
    const int m = 3;
    IndexedPoly e;
    e.m = m;
    e.singles = {1, 2, 3};
    const IndexedPoly d = delta_dual(e);
    CHECK(class_of(d) == class_of(e));
    CHECK(degree_of(d) == m);
}

TEST_CASE("generator action: printed substitution facts") {
    const FieldCtx f = make_field(2);
    const int m = 2;
    IndexedPoly w1;
    w1.m = m;
    w1.fulls = {1};  // W_1 = X_1 Y_1

    for (Fel a = 1; a < 4; ++a) {
        // Diagonal: alpha * alpha^{-1} = 1 keeps W_1 fixed.
        const WedgeElem dw = sp_generator_action({SpGenerator::Kind::Diagonal, a, {}},
                                                 expand(w1), f);
        CHECK(dw.terms == expand(w1).terms);
        // g_1(alpha): the alpha Y_1^2 term dies under exterior reduction.
        const WedgeElem gw = sp_generator_action({SpGenerator::Kind::G1, a, {}},
                                                 expand(w1), f);
        CHECK(gw.terms == expand(w1).terms);
        // g_1(alpha) fixes Y_1.
        IndexedPoly y1;
        y1.m = m;
        y1.singles = {1};
        y1.single_y_mask = 1;
        const WedgeElem gy = sp_generator_action({SpGenerator::Kind::G1, a, {}},
                                                 expand(y1), f);
        CHECK(gy.terms == expand(y1).terms);
        // g_1(alpha) sends X_1 to X_1 + alpha Y_1.
        IndexedPoly x1;
        x1.m = m;
        x1.singles = {1};
        const WedgeElem gx = sp_generator_action({SpGenerator::Kind::G1, a, {}},
                                                 expand(x1), f);
        REQUIRE(gx.terms.size() == 2);
        CHECK(gx.terms.at(x_bit(1)) == 1);
        CHECK(gx.terms.at(y_bit(1, m)) == a);
    }
}

TEST_CASE("generator action preserves degree") {
    const FieldCtx f = make_field(2);
    const int m = 3;
    for (int lam = 0; lam <= 2 * m; ++lam) {
        for (const auto& e : filtration_basis(m, lam, lam / 2)) {
            for (const auto& g : all_generators(m, f)) {
                for (const auto& [mono, c] : sp_generator_action(g, expand(e), f).terms) {
                    CHECK(std::popcount(mono) == lam);
                    CHECK(c != 0);
                }
            }
        }
    }
}

TEST_CASE("every filtration subspace is stable under the symplectic generators") {
    // The full (m, q) sweep of the acceptance suite is larger; this covers
    // the q=2 and q=4 planes for m=2.
    for (int t : {1, 2}) {
        const FieldCtx f = make_field(t);
        for (int lam = 0; lam <= 4; ++lam) {
            for (int l = std::max(0, lam - 2); l <= lam / 2; ++l) {
                std::string witness;
                CHECK_MESSAGE(filtration_stable_under_sp(2, lam, l, f, &witness), witness);
            }
        }
    }
}
