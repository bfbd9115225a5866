#include "sprank/htype.hpp"

#include <algorithm>
#include <stdexcept>

namespace sprank {

bool is_valid_htype(const HType& s, int m) {
    const int t = static_cast<int>(s.size());
    if (t == 0) return false;
    for (int j = 0; j < t; ++j) {
        if (s[j] < 1 || s[j] > 2 * m - 1) return false;
        const int lam = 2 * s[(j + 1) % t] - s[j];
        if (lam < 0 || lam > 2 * m) return false;
    }
    return true;
}

TypeTuple htype_to_type(const HType& s, int m) {
    const int t = static_cast<int>(s.size());
    const bool zero = std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
    if (!zero && !is_valid_htype(s, m)) {
        throw std::invalid_argument("not a valid H-type");
    }
    TypeTuple lambda(t);
    for (int j = 0; j < t; ++j) lambda[j] = 2 * s[(j + 1) % t] - s[j];
    return lambda;
}

std::optional<HType> type_to_htype(const TypeTuple& lambda, int m) {
    const int t = static_cast<int>(lambda.size());
    if (t == 0 || t > 30) return std::nullopt;
    const long long denom = (1LL << t) - 1;
    HType s(t);
    for (int e = 0; e < t; ++e) {
        long long acc = 0;
        for (int j = 0; j < t; ++j) {
            const int rem = ((j - e) % t + t) % t;
            acc += (1LL << rem) * lambda[j];
        }
        if (acc % denom != 0) return std::nullopt;
        const long long se = acc / denom;
        if (se < 0 || se > 2 * m - 1) {
            if (se == 0) continue;  // candidate all-zero tuple, checked below
            return std::nullopt;
        }
        s[e] = static_cast<int>(se);
    }
    const bool zero = std::all_of(s.begin(), s.end(), [](int v) { return v == 0; });
    if (zero) {
        const bool lzero =
            std::all_of(lambda.begin(), lambda.end(), [](int v) { return v == 0; });
        return lzero ? std::optional<HType>(s) : std::nullopt;
    }
    if (!is_valid_htype(s, m)) return std::nullopt;
    return s;
}

std::optional<HType> htype_of_exponents(const std::vector<int>& exps, int m, int t) {
    if (static_cast<int>(exps.size()) != 2 * m) {
        throw std::invalid_argument("exponent vector must have length 2m");
    }
    TypeTuple lambda(t, 0);
    for (int b : exps) {
        if (b < 0 || b >= (1 << t)) {
            throw std::invalid_argument("exponent out of [0, q-1]");
        }
        for (int j = 0; j < t; ++j) lambda[j] += (b >> j) & 1;
    }
    return type_to_htype(lambda, m);
}

std::vector<HType> enumerate_htypes_leq(const HType& bound, int m, int t) {
    if (static_cast<int>(bound.size()) != t) {
        throw std::invalid_argument("bound arity must equal t");
    }
    std::vector<HType> out;
    HType s(t, 1);
    // Odometer over [1, min(bound_j, 2m-1)]^t in lexicographic order.
    std::vector<int> cap(t);
    for (int j = 0; j < t; ++j) {
        cap[j] = std::min(bound[j], 2 * m - 1);
        if (cap[j] < 1) return out;
    }
    while (true) {
        if (is_valid_htype(s, m)) out.push_back(s);
        int j = t - 1;
        while (j >= 0 && s[j] == cap[j]) { s[j] = 1; --j; }
        if (j < 0) break;
        ++s[j];
    }
    return out;
}

}  // namespace sprank
