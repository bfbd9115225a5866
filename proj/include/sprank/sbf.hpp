// Symplectic basis functions: t-digit products f_0 f_1^2 ... f_{t-1}^{2^{t-1}}
// of square-free digits drawn from the level-filtration bases, their
// enumeration under the r-admissibility constraints, their evaluation on
// projective points, and the numeric verification that the admissible ones
// form a basis of the incidence submodule.
#pragma once

#include "sprank/bigmat.hpp"
#include "sprank/htype.hpp"
#include "sprank/symplectic.hpp"
#include "sprank/wedge.hpp"

#include <string>
#include <vector>

namespace sprank {

struct SBF {
    HType htype;                      // (s_0, ..., s_{t-1})
    std::vector<IndexedPoly> digits;  // digit j has degree 2 s_{j+1} - s_j
};

// Digit levels for H-type s under r-admissibility, already clamped to
// floor(lambda_j / 2).
std::vector<int> clamped_levels(int m, int r, const HType& s);

// All nonconstant r-admissible SBFs: for every H-type below
// (2m-r, ..., 2m-r), the product over digits of the filtration basis at the
// clamped admissible level.  Count equals rank_closed_form(m, r, t) - 1.
std::vector<SBF> enumerate_admissible_sbfs(int m, int r, int t);

// Value of one digit at raw coordinates (x_1..x_m, y_m..y_1).
Fel evaluate_digit(const IndexedPoly& digit, const SympSpace& sp, const Vec& coords);

// prod_j digit_j(coords)^{2^j}.  Scalar-invariant on nonzero vectors, so it
// is well defined on projective points.
Fel evaluate_sbf(const SBF& f, const SympSpace& sp, const Vec& coords);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;  // first offending item when the check fails
};

struct BasisReport {
    int m = 0, r = 0, t = 0;
    BigInt rank_formula;
    std::size_t sbf_count = 0;
    std::size_t eval_rank = 0;        // GF(q) rank of {1} + SBF evaluation rows
    std::size_t bruteforce_rank = 0;  // GF(2) rank of B_{r,1}
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, double>> phase_ms;

    bool all_pass() const;
};

// Runs the three assertions behind the basis theorem at evaluation scale:
// independence of {constant} + admissible SBFs over GF(q), equality of that
// rank with the GF(2) rank of B_{r,1}, and no rank growth when the rows of
// B_{r,1} are stacked on top.  Refuses |P| > 50000 unless force is set.
BasisReport verify_basis_theorem(int m, int r, int t, bool force = false, int threads = 1);

}  // namespace sprank
