// Types and H-types: the two t-tuples attached to basis monomials of the
// point functional space, related digit-wise by lambda_j = 2 s_{j+1} - s_j
// (subscripts mod t).  H excludes the all-zero tuple; the constant function
// is accounted for separately by every consumer.
#pragma once

#include <optional>
#include <vector>

namespace sprank {

using TypeTuple = std::vector<int>;  // (lambda_0, ..., lambda_{t-1}), each in [0, 2m]
using HType = std::vector<int>;      // (s_0, ..., s_{t-1}), each in [1, 2m-1]

// Valid member of the poset H for the given m (all-zero excluded).
bool is_valid_htype(const HType& s, int m);

// lambda_j = 2 s_{j+1} - s_j, subscripts mod t.
TypeTuple htype_to_type(const HType& s, int m);

// Inverse map via twisted degrees: s_e = (sum_j 2^{[j-e]} lambda_j) / (2^t - 1),
// where [x] is the remainder of x mod t.  Returns nullopt when some s_e is
// non-integral or the H constraints fail.
std::optional<HType> type_to_htype(const TypeTuple& lambda, int m);

// H-type of a basis monomial given its exponent vector (b_1..b_{2m}), each
// 0 <= b_i <= q-1.  All-zero type maps to the all-zero tuple (the constant).
std::optional<HType> htype_of_exponents(const std::vector<int>& exps, int m, int t);

// All valid H-types s with s_j <= bound_j for every j, in lexicographic order.
std::vector<HType> enumerate_htypes_leq(const HType& bound, int m, int t);

}  // namespace sprank
