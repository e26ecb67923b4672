#include "osc/field.hpp"

#include <cmath>
#include <numbers>

namespace osc {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
    base %= p;
    if (base < 0) base += p;
    std::int64_t r = 1;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

std::int64_t find_primitive_root(std::int64_t p) {
    for (std::int64_t r = 2; r < p; ++r) {
        bool full = true;
        // order of r divides p-1; full order iff r^((p-1)/q) != 1 for prime q | p-1
        std::int64_t n = p - 1;
        for (std::int64_t q = 2; q * q <= n; ++q) {
            if (n % q == 0) {
                if (pow_mod(r, (p - 1) / q, p) == 1) full = false;
                while (n % q == 0) n /= q;
            }
        }
        if (n > 1 && pow_mod(r, (p - 1) / n, p) == 1) full = false;
        if (full) return r;
    }
    return 1;  // p == 2, excluded by construction
}

}  // namespace

PrimeModulus::PrimeModulus(std::int64_t p, std::int64_t max_modulus) : p_(p) {
    if (p < 3 || p > max_modulus || !is_prime(p))
        throw NotPrime("p must be an odd prime in [3, " + std::to_string(max_modulus) + "], got " +
                       std::to_string(p));
    legendre_.resize(p);
    legendre_[0] = 0;
    for (std::int64_t a = 1; a < p; ++a)
        legendre_[a] = pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
    psi_.resize(p);
    for (std::int64_t t = 0; t < p; ++t) {
        double arg = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p);
        psi_[t] = cplx(std::cos(arg), std::sin(arg));
    }
    primitive_root_ = find_primitive_root(p);
}

std::int64_t PrimeModulus::pow(std::int64_t base, std::int64_t exp) const {
    return pow_mod(reduce(base), exp, p_);
}

std::int64_t PrimeModulus::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p_));
    return pow_mod(a, p_ - 2, p_);
}

Fp Fp::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    return raw(pow_mod(v_, e, p_));
}

Fp Fp::inv() const {
    if (v_ == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p_));
    return raw(pow_mod(v_, p_ - 2, p_));
}

}  // namespace osc
