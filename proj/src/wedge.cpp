#include "sprank/wedge.hpp"

#include "sprank/bigmat.hpp"
#include "sprank/qmatrix.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sprank {

ClassSig class_of(const IndexedPoly& e) {
    ClassSig c;
    c.rho = static_cast<int>(e.pairs.size());
    c.sigma = static_cast<int>(e.fulls.size());
    c.tau = static_cast<int>(e.singles.size());
    c.upsilon = e.m - 2 * c.rho - c.sigma - c.tau;
    return c;
}

int degree_of(const IndexedPoly& e) {
    const ClassSig c = class_of(e);
    return 2 * c.rho + 2 * c.sigma + c.tau;
}

WedgeElem expand(const IndexedPoly& e) {
    const int m = e.m;
    Mono base = 0;
    for (int i : e.fulls) base |= x_bit(i) | y_bit(i, m);
    for (std::size_t k = 0; k < e.singles.size(); ++k) {
        const int i = e.singles[k];
        base |= (e.single_y_mask >> k) & 1u ? y_bit(i, m) : x_bit(i);
    }
    std::vector<Mono> monos{base};
    for (const auto& [a, b] : e.pairs) {
        std::vector<Mono> next;
        next.reserve(monos.size() * 2);
        for (Mono mo : monos) {
            next.push_back(mo | x_bit(a) | y_bit(a, m));
            next.push_back(mo | x_bit(b) | y_bit(b, m));
        }
        monos = std::move(next);
    }
    WedgeElem w;
    w.m = m;
    for (Mono mo : monos) w.terms[mo] = 1;
    return w;
}

std::vector<Fel> coord_vector(const WedgeElem& w) {
    std::vector<Fel> v(std::size_t{1} << (2 * w.m), 0);
    for (const auto& [mono, c] : w.terms) v[mono] = c;
    return v;
}

long long dim_S(int m, int lambda, int level) {
    if (lambda < 0 || lambda > 2 * m) {
        throw std::invalid_argument("dim_S: lambda out of [0, 2m]");
    }
    const int lc = std::min(level, lambda / 2);
    if (lc < 0 || lc < lambda - m) return 0;
    const BigInt d = binom(2 * m, lambda) - binom(2 * m, lambda - 2 * lc - 2);
    return d.convert_to<long long>();
}

namespace {

void emit_with_zchoices(IndexedPoly base, std::vector<IndexedPoly>& out) {
    const std::uint32_t nz = 1u << base.singles.size();
    for (std::uint32_t zm = 0; zm < nz; ++zm) {
        base.single_y_mask = zm;
        out.push_back(base);
    }
}

// Pairs on `avail` (ascending): r_i is forced to avail's minimum, r'_i runs
// over the rest subject to the increasing-r' condition.
void gen_pairs(std::vector<int>& avail, int depth, int rho, int last_rprime,
               IndexedPoly& cur, std::vector<IndexedPoly>& out) {
    if (depth == rho) {
        emit_with_zchoices(cur, out);
        return;
    }
    const int r = avail.front();
    for (std::size_t k = 1; k < avail.size(); ++k) {
        const int rp = avail[k];
        if (rp <= last_rprime) continue;
        std::vector<int> rest;
        rest.reserve(avail.size() - 2);
        for (std::size_t j = 1; j < avail.size(); ++j) {
            if (j != k) rest.push_back(avail[j]);
        }
        cur.pairs.emplace_back(r, rp);
        gen_pairs(rest, depth + 1, rho, rp, cur, out);
        cur.pairs.pop_back();
    }
}

void for_each_subset(int m, int k, const std::function<void(const std::vector<int>&)>& f) {
    if (k > m) return;
    std::vector<int> sub(static_cast<std::size_t>(k));
    std::iota(sub.begin(), sub.end(), 1);
    if (k == 0) { f(sub); return; }
    while (true) {
        f(sub);
        int i = k - 1;
        while (i >= 0 && sub[static_cast<std::size_t>(i)] == m - (k - 1 - i)) --i;
        if (i < 0) break;
        ++sub[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            sub[static_cast<std::size_t>(j)] = sub[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace

std::vector<IndexedPoly> weyl_basis(int m, int lambda) {
    if (lambda < 0 || lambda > m) {
        throw std::invalid_argument("weyl_basis: need 0 <= lambda <= m");
    }
    std::vector<IndexedPoly> out;
    for (int rho = 0; 2 * rho <= lambda; ++rho) {
        const int tau = lambda - 2 * rho;
        for_each_subset(m, tau, [&](const std::vector<int>& T) {
            IndexedPoly cur;
            cur.m = m;
            cur.singles = T;
            std::vector<int> avail;
            for (int i = 1; i <= m; ++i) {
                if (!std::binary_search(T.begin(), T.end(), i)) avail.push_back(i);
            }
            gen_pairs(avail, 0, rho, 0, cur, out);
        });
    }
    return out;
}

std::vector<IndexedPoly> filtration_basis(int m, int lambda, int level) {
    if (lambda < 0 || lambda > 2 * m) {
        throw std::invalid_argument("filtration_basis: lambda out of [0, 2m]");
    }
    const int lo = std::max(0, lambda - m);
    if (level < lo || level > lambda / 2) {
        throw std::invalid_argument("filtration_basis: level out of range");
    }
    std::vector<IndexedPoly> out;
    for (int lp = lo; lp <= level; ++lp) {
        for (IndexedPoly f : weyl_basis(m, lambda - 2 * lp)) {
            // Multiply by W_s over the lexicographically smallest lp-subset
            // of the indices f leaves unused.
            std::vector<bool> used(static_cast<std::size_t>(m + 1), false);
            for (const auto& [a, b] : f.pairs) used[a] = used[b] = true;
            for (int i : f.singles) used[i] = true;
            for (int i = 1; i <= m && static_cast<int>(f.fulls.size()) < lp; ++i) {
                if (!used[static_cast<std::size_t>(i)]) f.fulls.push_back(i);
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

IndexedPoly delta_dual(const IndexedPoly& e) {
    IndexedPoly d = e;
    std::vector<bool> used(static_cast<std::size_t>(e.m + 1), false);
    for (const auto& [a, b] : e.pairs) used[a] = used[b] = true;
    for (int i : e.singles) used[i] = true;
    for (int i : e.fulls) used[i] = true;
    d.fulls.clear();
    for (int i = 1; i <= e.m; ++i) {
        if (!used[static_cast<std::size_t>(i)]) d.fulls.push_back(i);
    }
    return d;
}

Mono delta_dual_mono(Mono mono, int m) {
    const Mono low = (1u << m) - 1;
    const Mono xs = mono & low;            // I
    const Mono ys = (mono >> m) & low;     // J
    const Mono nx = ~ys & low;             // M \ J
    const Mono ny = ~xs & low;             // M \ I
    return nx | (ny << m);
}

std::vector<SpGenerator> all_generators(int m, const FieldCtx& ctx) {
    std::vector<SpGenerator> gens;
    for (std::uint32_t a = 1; a < ctx.q(); ++a) {
        gens.push_back({SpGenerator::Kind::Diagonal, static_cast<Fel>(a), {}});
    }
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        gens.push_back({SpGenerator::Kind::Permute, 1, perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    gens.push_back({SpGenerator::Kind::SwapXY1, 1, {}});
    for (std::uint32_t a = 1; a < ctx.q(); ++a) {
        gens.push_back({SpGenerator::Kind::G1, static_cast<Fel>(a), {}});
        if (m >= 2) gens.push_back({SpGenerator::Kind::G2, static_cast<Fel>(a), {}});
    }
    return gens;
}

namespace {

// Images of each variable (index 0..2m-1 in mask layout) as linear forms.
std::vector<std::vector<std::pair<int, Fel>>> substitution_of(const SpGenerator& g, int m,
                                                              const FieldCtx& ctx) {
    std::vector<std::vector<std::pair<int, Fel>>> img(static_cast<std::size_t>(2 * m));
    for (int v = 0; v < 2 * m; ++v) img[static_cast<std::size_t>(v)] = {{v, 1}};
    const int X1 = 0, Y1 = m, X2 = 1, Y2 = m + 1;
    switch (g.kind) {
        case SpGenerator::Kind::Diagonal:
            img[X1] = {{X1, g.alpha}};
            img[Y1] = {{Y1, ctx.inv(g.alpha)}};
            break;
        case SpGenerator::Kind::Permute:
            for (int i = 1; i <= m; ++i) {
                const int pi = g.perm[static_cast<std::size_t>(i - 1)];
                img[static_cast<std::size_t>(i - 1)] = {{pi - 1, 1}};
                img[static_cast<std::size_t>(m + i - 1)] = {{m + pi - 1, 1}};
            }
            break;
        case SpGenerator::Kind::SwapXY1:
            img[X1] = {{Y1, 1}};
            img[Y1] = {{X1, 1}};
            break;
        case SpGenerator::Kind::G1:
            img[X1] = {{X1, 1}, {Y1, g.alpha}};
            break;
        case SpGenerator::Kind::G2:
            if (m < 2) throw std::invalid_argument("G2 needs m >= 2");
            img[X1] = {{X1, 1}, {X2, g.alpha}};
            img[Y2] = {{Y1, g.alpha}, {Y2, 1}};
            break;
    }
    return img;
}

}  // namespace

WedgeElem sp_generator_action(const SpGenerator& g, const WedgeElem& e, const FieldCtx& ctx) {
    const auto img = substitution_of(g, e.m, ctx);
    WedgeElem out;
    out.m = e.m;
    std::vector<std::pair<Mono, Fel>> partial, next;
    for (const auto& [mono, coeff] : e.terms) {
        partial.assign(1, {0u, coeff});
        for (int v = 0; v < 2 * e.m; ++v) {
            if (!((mono >> v) & 1u)) continue;
            next.clear();
            for (const auto& [pm, pc] : partial) {
                for (const auto& [w, wc] : img[static_cast<std::size_t>(v)]) {
                    const Mono bit = 1u << w;
                    if (pm & bit) continue;  // square vanishes
                    next.emplace_back(pm | bit, ctx.mul(pc, wc));
                }
            }
            partial.swap(next);
        }
        for (const auto& [pm, pc] : partial) {
            auto [it, inserted] = out.terms.emplace(pm, pc);
            if (!inserted) {
                it->second = FieldCtx::add(it->second, pc);
                if (it->second == 0) out.terms.erase(it);
            }
        }
    }
    return out;
}

bool filtration_stable_under_sp(int m, int lambda, int level, const FieldCtx& ctx,
                                std::string* witness) {
    const auto basis = filtration_basis(m, lambda, level);
    EchelonBasisGFq span(std::size_t{1} << (2 * m), ctx);
    for (const auto& e : basis) span.insert(coord_vector(expand(e)));
    const auto gens = all_generators(m, ctx);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            const WedgeElem image = sp_generator_action(gens[gi], expand(basis[bi]), ctx);
            std::vector<Fel> v = coord_vector(image);
            if (span.reduce(v) != static_cast<std::size_t>(-1)) {
                if (witness) {
                    *witness = "generator #" + std::to_string(gi) + " escapes span on basis element #" +
                               std::to_string(bi) + " (lambda=" + std::to_string(lambda) +
                               ", level=" + std::to_string(level) + ")";
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace sprank
