// Exact integer combinatorics: binomials with the zero-extension convention,
// Gaussian binomials, and square big-integer matrices with trace-of-power.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace sprank {

using BigInt = boost::multiprecision::cpp_int;

// C(n,k); zero whenever k < 0 or k > n.  This extension is what makes the
// rank-formula matrix entries come out right, so it is global policy here.
BigInt binom(long long n, long long k);

// Gaussian binomial [n choose k]_q.
BigInt gaussian_binomial(int n, int k, const BigInt& q);

class BigMat {
public:
    BigMat() = default;
    explicit BigMat(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }
    BigInt& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    BigMat operator*(const BigMat& o) const;
    bool operator==(const BigMat& o) const { return n_ == o.n_ && a_ == o.a_; }

    BigInt trace() const;
    static BigMat identity(std::size_t n);

private:
    std::size_t n_ = 0;
    std::vector<BigInt> a_;
};

// A^t by repeated squaring, t >= 0.
BigMat mat_pow(const BigMat& a, unsigned long long t);

// Trace(A^t), t >= 1.
BigInt mat_pow_trace(const BigMat& a, unsigned long long t);

}  // namespace sprank
