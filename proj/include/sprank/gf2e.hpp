// Arithmetic in GF(2^t), polynomial-basis representation.
//
// Elements are t-bit values; bit i is the coefficient of x^i.  Addition is
// XOR.  Multiplication is carry-less multiply followed by reduction modulo
// an irreducible polynomial chosen deterministically per degree.  For
// q <= 256 a log/antilog table over a cyclic generator is precomputed and
// used for mul/inv/pow.
#pragma once

#include <cstdint>
#include <vector>

namespace sprank {

using Fel = std::uint16_t;  // element of GF(2^t), t <= 16

class FieldCtx {
public:
    // Builds GF(2^t).  The modulus is the monic irreducible degree-t
    // polynomial with nonzero constant term whose bit encoding is smallest
    // (t=1: x+1, t=2: x^2+x+1, t=3: x^3+x+1, ...).
    explicit FieldCtx(int t);

    int t() const { return t_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }

    static Fel add(Fel a, Fel b) { return static_cast<Fel>(a ^ b); }
    Fel mul(Fel a, Fel b) const;
    Fel inv(Fel a) const;          // throws std::domain_error on a == 0
    Fel pow(Fel a, long long e) const;

    // Shift-and-XOR multiply, bypassing the tables.  Kept public so the
    // test suite can cross-check the two kernels.
    Fel mul_notable(Fel a, Fel b) const;

private:
    int t_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::vector<Fel> exp_;   // exp_[i] = g^i, size 2(q-1), empty if q > 256
    std::vector<int> log_;   // log_[a] = i with g^i = a, a != 0

    void build_tables();
};

// Factory matching the library's naming for context construction.
FieldCtx make_field(int t);

// Smallest-encoding monic irreducible degree-t polynomial over GF(2) with
// nonzero constant term, as a bit vector (bit t is the leading 1).
std::uint32_t smallest_irreducible(int t);

bool poly_is_irreducible(std::uint32_t poly, int deg);

}  // namespace sprank
