#include "sprank/sbf.hpp"

#include "sprank/qmatrix.hpp"
#include "sprank/rank_formulas.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace sprank {

namespace {
double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}
}  // namespace

std::vector<int> clamped_levels(int m, int r, const HType& s) {
    const int t = static_cast<int>(s.size());
    std::vector<int> levels(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        const int lambda = 2 * s[static_cast<std::size_t>((j + 1) % t)] - s[static_cast<std::size_t>(j)];
        const int ell = admissible_level(m, r, s[static_cast<std::size_t>(j)]);
        levels[static_cast<std::size_t>(j)] = std::min(ell, lambda / 2);
    }
    return levels;
}

std::vector<SBF> enumerate_admissible_sbfs(int m, int r, int t) {
    if (r < 1 || r > 2 * m - 1) throw std::invalid_argument("r out of range");
    if (t < 1) throw std::invalid_argument("t must be positive");
    const HType bound(static_cast<std::size_t>(t), 2 * m - r);
    std::vector<SBF> out;
    for (const HType& s : enumerate_htypes_leq(bound, m, t)) {
        const TypeTuple lambda = htype_to_type(s, m);
        // Total degree sum_j 2^j lambda_j = (q-1) s_0 makes values
        // scalar-invariant; anything else would be a construction bug.
        long long deg0 = 0;
        for (int j = 0; j < t; ++j) deg0 += (1LL << j) * lambda[static_cast<std::size_t>(j)];
        if (deg0 != ((1LL << t) - 1) * s[0]) {
            throw std::logic_error("twisted degree mismatch for H-type");
        }
        const std::vector<int> levels = clamped_levels(m, r, s);
        std::vector<std::vector<IndexedPoly>> digit_bases;
        bool empty = false;
        for (int j = 0; j < t; ++j) {
            const int lam = lambda[static_cast<std::size_t>(j)];
            const int lev = levels[static_cast<std::size_t>(j)];
            if (lev < std::max(0, lam - m)) { empty = true; break; }
            digit_bases.push_back(filtration_basis(m, lam, lev));
        }
        if (empty) continue;
        // Cartesian product, last digit varying fastest.
        std::vector<std::size_t> idx(static_cast<std::size_t>(t), 0);
        while (true) {
            SBF f;
            f.htype = s;
            for (int j = 0; j < t; ++j) {
                f.digits.push_back(digit_bases[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]]);
            }
            out.push_back(std::move(f));
            int j = t - 1;
            while (j >= 0 && ++idx[static_cast<std::size_t>(j)] ==
                                 digit_bases[static_cast<std::size_t>(j)].size()) {
                idx[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }
    return out;
}

Fel evaluate_digit(const IndexedPoly& digit, const SympSpace& sp, const Vec& coords) {
    const auto& ctx = sp.ctx;
    auto w = [&](int i) {
        return ctx.mul(coords[sp.pos_x(i)], coords[sp.pos_y(i)]);
    };
    Fel acc = 1;
    for (const auto& [a, b] : digit.pairs) {
        acc = ctx.mul(acc, FieldCtx::add(w(a), w(b)));
        if (acc == 0) return 0;
    }
    for (int i : digit.fulls) {
        acc = ctx.mul(acc, w(i));
        if (acc == 0) return 0;
    }
    for (std::size_t k = 0; k < digit.singles.size(); ++k) {
        const int i = digit.singles[k];
        const Fel z = (digit.single_y_mask >> k) & 1u ? coords[sp.pos_y(i)] : coords[sp.pos_x(i)];
        acc = ctx.mul(acc, z);
        if (acc == 0) return 0;
    }
    return acc;
}

Fel evaluate_sbf(const SBF& f, const SympSpace& sp, const Vec& coords) {
    Fel acc = 1;
    for (std::size_t j = 0; j < f.digits.size(); ++j) {
        Fel v = evaluate_digit(f.digits[j], sp, coords);
        for (std::size_t k = 0; k < j; ++k) v = sp.ctx.mul(v, v);  // v^(2^j)
        acc = sp.ctx.mul(acc, v);
        if (acc == 0) return 0;
    }
    return acc;
}

bool BasisReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

BasisReport verify_basis_theorem(int m, int r, int t, bool force, int threads) {
    BasisReport rep;
    rep.m = m;
    rep.r = r;
    rep.t = t;
    const BigInt q = BigInt(1) << t;
    const BigInt np = num_points(m, q);
    if (!force && np > 50000) {
        throw std::runtime_error(
            "verify_basis_theorem: |P| = " + np.str() +
            " exceeds 50000; rerun with force to enumerate this configuration");
    }

    auto t0 = std::chrono::steady_clock::now();
    SympSpace sp(m, t);
    const auto points = enumerate_points(sp);
    rep.phase_ms.emplace_back("enumerate_points", ms_since(t0));

    t0 = std::chrono::steady_clock::now();
    rep.rank_formula = rank_closed_form(m, r, t);
    const auto sbfs = enumerate_admissible_sbfs(m, r, t);
    rep.sbf_count = sbfs.size();
    rep.phase_ms.emplace_back("enumerate_sbfs", ms_since(t0));

    rep.checks.push_back({"count+1 == formula rank",
                          BigInt(sbfs.size()) + 1 == rep.rank_formula,
                          "count=" + std::to_string(sbfs.size()) +
                              " formula=" + rep.rank_formula.str()});

    // Evaluation matrix: constant row, then one row per SBF.
    t0 = std::chrono::steady_clock::now();
    EchelonBasisGFq span(points.size(), sp.ctx);
    std::vector<Fel> ones(points.size(), 1);
    span.insert(ones);
    std::string indep_witness;
    for (std::size_t i = 0; i < sbfs.size(); ++i) {
        std::vector<Fel> row(points.size());
        for (std::size_t j = 0; j < points.size(); ++j) {
            row[j] = evaluate_sbf(sbfs[i], sp, points[j].coords);
        }
        if (!span.insert(std::move(row)) && indep_witness.empty()) {
            indep_witness = "SBF #" + std::to_string(i) + " is dependent";
        }
    }
    rep.eval_rank = span.rank();
    rep.phase_ms.emplace_back("sbf_evaluation_rank", ms_since(t0));
    rep.checks.push_back({"SBF rows independent over GF(q)",
                          rep.eval_rank == sbfs.size() + 1, indep_witness});

    // Brute-force GF(2) rank of the incidence matrix.
    t0 = std::chrono::steady_clock::now();
    rep.bruteforce_rank = rank_gf2_stream(
        [&](const std::function<void(BitRow)>& emit) { stream_incidence_rows(sp, r, emit); },
        points.size(), threads);
    rep.phase_ms.emplace_back("bruteforce_rank", ms_since(t0));
    rep.checks.push_back({"GF(q) rank == GF(2) rank of B_{r,1}",
                          rep.eval_rank == rep.bruteforce_rank,
                          "eval=" + std::to_string(rep.eval_rank) +
                              " bruteforce=" + std::to_string(rep.bruteforce_rank)});

    // Containment: stacking the rows of B_{r,1} must not grow the span.
    t0 = std::chrono::steady_clock::now();
    std::string contain_witness;
    std::size_t row_idx = 0;
    bool contained = true;
    stream_incidence_rows(sp, r, [&](BitRow b) {
        std::vector<Fel> row(points.size(), 0);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (bitrow_get(b, j)) row[j] = 1;
        }
        if (span.insert(std::move(row))) {
            contained = false;
            if (contain_witness.empty()) {
                contain_witness = "row #" + std::to_string(row_idx) + " escapes the SBF span";
            }
        }
        ++row_idx;
    });
    rep.phase_ms.emplace_back("containment_rank", ms_since(t0));
    rep.checks.push_back({"stacking B_{r,1} does not raise rank", contained, contain_witness});
    return rep;
}

}  // namespace sprank
