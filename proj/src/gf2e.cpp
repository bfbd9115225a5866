#include "sprank/gf2e.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sprank {

namespace {

// Degree of a nonzero polynomial encoded in bits.
int poly_deg(std::uint32_t p) { return 31 - std::countl_zero(p); }

// Remainder of a mod b over GF(2).
std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_deg(b);
    while (a != 0 && poly_deg(a) >= db) {
        a ^= b << (poly_deg(a) - db);
    }
    return a;
}

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t mod) {
    const std::uint32_t top = 1u << poly_deg(mod);
    std::uint32_t acc = 0;
    while (b) {
        if (b & 1u) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= mod;
    }
    return acc;
}

}  // namespace

bool poly_is_irreducible(std::uint32_t poly, int deg) {
    if (deg < 1) return false;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (int d = 1; 2 * d <= deg; ++d) {
        for (std::uint32_t low = 0; low < (1u << d); ++low) {
            const std::uint32_t div = (1u << d) | low;
            if (poly_mod(poly, div) == 0) return false;
        }
    }
    return true;
}

std::uint32_t smallest_irreducible(int t) {
    // Odd encodings only: the constant term must be 1 so that x is a unit.
    for (std::uint32_t low = 1; low < (1u << t); low += 2) {
        const std::uint32_t cand = (1u << t) | low;
        if (poly_is_irreducible(cand, t)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldCtx::FieldCtx(int t) : t_(t) {
    if (t < 1 || t > 16) {
        throw std::invalid_argument("field degree t must be in [1,16], got " +
                                    std::to_string(t));
    }
    q_ = 1u << t;
    modulus_ = smallest_irreducible(t);
    if (q_ <= 256) build_tables();
}

FieldCtx make_field(int t) { return FieldCtx(t); }

Fel FieldCtx::mul_notable(Fel a, Fel b) const {
    return static_cast<Fel>(poly_mulmod(a, b, modulus_));
}

void FieldCtx::build_tables() {
    const std::uint32_t n = q_ - 1;
    log_.assign(q_, -1);
    if (n == 1) {  // GF(2): trivial multiplicative group
        exp_ = {1, 1};
        log_[1] = 0;
        return;
    }
    // Find a cyclic generator; x (=2) usually works, scan upward otherwise.
    for (std::uint32_t g = 2; g < q_; ++g) {
        exp_.clear();
        exp_.reserve(2 * n);
        std::uint32_t v = 1;
        bool ok = true;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (v == 1 && i != 0) { ok = false; break; }  // order < n
            exp_.push_back(static_cast<Fel>(v));
            v = poly_mulmod(v, g, modulus_);
        }
        if (ok && v == 1) {
            for (std::uint32_t i = 0; i < n; ++i) exp_.push_back(exp_[i]);
            for (std::uint32_t i = 0; i < n; ++i) log_[exp_[i]] = static_cast<int>(i);
            return;
        }
    }
    throw std::logic_error("no generator found");  // unreachable for q = 2^t
}

Fel FieldCtx::mul(Fel a, Fel b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) return exp_[log_[a] + log_[b]];
    return mul_notable(a, b);
}

Fel FieldCtx::inv(Fel a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(2^t)");
    if (!exp_.empty()) return exp_[(q_ - 1) - log_[a]];
    return pow(a, static_cast<long long>(q_) - 2);
}

Fel FieldCtx::pow(Fel a, long long e) const {
    const long long n = static_cast<long long>(q_) - 1;
    if (a == 0) {
        if (e < 0) throw std::domain_error("division by zero in GF(2^t)");
        return e == 0 ? Fel{1} : Fel{0};
    }
    long long r = e % n;
    if (r < 0) r += n;
    if (!exp_.empty()) {
        return exp_[(static_cast<long long>(log_[a]) * r) % n];
    }
    Fel base = a, acc = 1;
    while (r) {
        if (r & 1) acc = mul_notable(acc, base);
        base = mul_notable(base, base);
        r >>= 1;
    }
    return acc;
}

}  // namespace sprank
