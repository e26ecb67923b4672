#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "osc/errors.hpp"

namespace osc {

using cplx = std::complex<double>;

/// An odd prime modulus p together with the two character maps every other
/// module consumes: the additive character psi(t) = exp(2*pi*i*t/p) and the
/// quadratic (Legendre) character sigma. Character values are precomputed
/// once per modulus; instances are immutable and cheap to copy.
class PrimeModulus {
  public:
    static constexpr std::int64_t kDefaultMaxModulus = 101;

    explicit PrimeModulus(std::int64_t p, std::int64_t max_modulus = kDefaultMaxModulus);

    std::int64_t p() const { return p_; }

    /// The field constant 1/2 = (p+1)/2.
    std::int64_t half() const { return (p_ + 1) / 2; }

    /// Canonical least non-negative residue of x.
    std::int64_t reduce(std::int64_t x) const {
        std::int64_t r = x % p_;
        return r < 0 ? r + p_ : r;
    }

    /// Legendre symbol: +1 nonzero square, -1 nonzero non-square, 0 at zero.
    int legendre(std::int64_t a) const { return legendre_[reduce(a)]; }

    /// psi(t) = exp(2*pi*i*t/p).
    cplx psi(std::int64_t t) const { return psi_[reduce(t)]; }

    std::int64_t pow(std::int64_t base, std::int64_t exp) const;
    std::int64_t inv(std::int64_t a) const;

    /// Smallest generator of the cyclic group F_p^x.
    std::int64_t primitive_root() const { return primitive_root_; }

    bool operator==(const PrimeModulus& o) const { return p_ == o.p_; }

  private:
    std::int64_t p_;
    std::int64_t primitive_root_;
    std::vector<int> legendre_;
    std::vector<cplx> psi_;
};

/// Residue mod an odd prime with exact integer arithmetic.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t value, const PrimeModulus& mod) : v_(mod.reduce(value)), p_(mod.p()) {}
    Fp(std::int64_t value, std::int64_t p) : p_(p) {
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }

    Fp operator+(const Fp& o) const { return raw((v_ + o.check(p_)) % p_); }
    Fp operator-(const Fp& o) const { return raw((v_ - o.check(p_) + p_) % p_); }
    Fp operator*(const Fp& o) const { return raw(v_ * o.check(p_) % p_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }

    Fp pow(std::int64_t e) const;
    Fp inv() const;

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

  private:
    Fp raw(std::int64_t v) const {
        Fp r;
        r.v_ = v;
        r.p_ = p_;
        return r;
    }
    std::int64_t check(std::int64_t p) const {
        if (p_ != p) throw ModulusMismatch("field elements have different moduli");
        return v_;
    }

    std::int64_t v_;
    std::int64_t p_;
};

bool is_prime(std::int64_t n);

}  // namespace osc
