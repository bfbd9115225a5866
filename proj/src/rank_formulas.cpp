#include "sprank/rank_formulas.hpp"

#include "sprank/htype.hpp"
#include "sprank/wedge.hpp"

#include <stdexcept>

namespace sprank {

namespace {

void check_hypotheses(int m, int r) {
    if (m < 2) throw std::invalid_argument("rank formula needs m >= 2");
    if (r < 1 || r > 2 * m - 1) throw std::invalid_argument("rank formula needs 1 <= r <= 2m-1");
}

}  // namespace

int admissible_level(int m, int r, int s) {
    return (r <= m ? m - r : 0) + (2 * m - r - s);
}

BigMat build_A(int m, int r) {
    check_hypotheses(m, r);
    const int n = 2 * m - r;
    const int shift = 2 * r - 4 * m - 2 - (r <= m ? 2 * (m - r) : 0);
    BigMat a(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            a.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                binom(2 * m, 2 * j - i) - binom(2 * m, 2 * j + i + shift);
        }
    }
    return a;
}

BigInt rank_closed_form(int m, int r, int t) {
    if (t < 1) throw std::invalid_argument("rank formula needs t >= 1");
    return 1 + mat_pow_trace(build_A(m, r), static_cast<unsigned long long>(t));
}

BigInt rank_via_htypes(int m, int r, int t) {
    check_hypotheses(m, r);
    if (t < 1) throw std::invalid_argument("rank formula needs t >= 1");
    const HType bound(static_cast<std::size_t>(t), 2 * m - r);
    BigInt total = 1;  // the constant function
    for (const HType& s : enumerate_htypes_leq(bound, m, t)) {
        BigInt prod = 1;
        const TypeTuple lambda = htype_to_type(s, m);
        for (int j = 0; j < t && prod != 0; ++j) {
            prod *= dim_S(m, lambda[static_cast<std::size_t>(j)],
                          admissible_level(m, r, s[static_cast<std::size_t>(j)]));
        }
        total += prod;
    }
    return total;
}

BigInt d_lambda(int p, int m, int lambda) {
    if (p < 2) throw std::invalid_argument("d_lambda needs p >= 2");
    BigInt acc = 0;
    if (lambda < 0) return 0;
    for (int k = 0; k * p <= lambda; ++k) {
        const BigInt term = binom(2 * m, k) * binom(2 * m - 1 + lambda - k * p, 2 * m - 1);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

BigMat build_A_prime(int p, int m) {
    if (m < 1) throw std::invalid_argument("build_A_prime needs m >= 1");
    BigMat a(static_cast<std::size_t>(m));
    const BigInt pm = boost::multiprecision::pow(BigInt(p), m);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            BigInt v = d_lambda(p, m, p * j - i);
            if (i == m && j == m) {
                if ((v + pm) % 2 != 0) {
                    throw std::logic_error("odd corner entry: (d_lambda + p^m) not even");
                }
                v = (v + pm) / 2;
            }
            a.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
        }
    }
    return a;
}

BigInt rank_odd_model(int p, int m, int t) {
    if (t < 1) throw std::invalid_argument("rank formula needs t >= 1");
    return 1 + mat_pow_trace(build_A_prime(p, m), static_cast<unsigned long long>(t));
}

}  // namespace sprank
