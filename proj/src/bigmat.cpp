#include "sprank/bigmat.hpp"

#include <stdexcept>

namespace sprank {

BigInt binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

BigInt gaussian_binomial(int n, int k, const BigInt& q) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= boost::multiprecision::pow(q, n - i) - 1;
        den *= boost::multiprecision::pow(q, i + 1) - 1;
    }
    return num / den;
}

BigMat BigMat::operator*(const BigMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BigMat size mismatch");
    BigMat r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return r;
}

BigInt BigMat::trace() const {
    BigInt s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += at(i, i);
    return s;
}

BigMat BigMat::identity(std::size_t n) {
    BigMat r(n);
    for (std::size_t i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

BigMat mat_pow(const BigMat& a, unsigned long long t) {
    BigMat acc = BigMat::identity(a.size());
    BigMat base = a;
    while (t) {
        if (t & 1) acc = acc * base;
        base = base * base;
        t >>= 1;
    }
    return acc;
}

BigInt mat_pow_trace(const BigMat& a, unsigned long long t) {
    if (t < 1) throw std::invalid_argument("mat_pow_trace needs t >= 1");
    return mat_pow(a, t).trace();
}

}  // namespace sprank
