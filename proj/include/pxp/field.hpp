#ifndef PXP_FIELD_HPP
#define PXP_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "pxp/errors.hpp"

namespace pxp {

// Exact rational scalar backed by GMP. Values are kept canonical: fully
// reduced, positive denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rational from_int(long long n) { return Rational(n); }

    static Rational from_fraction(long long num, long long den) {
        if (den == 0) throw DivisionByZero();
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return Rational(std::move(q));
    }

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static std::string name() { return "Q"; }

    bool is_zero() const { return sgn(v_) == 0; }

    Rational inv() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(1 / v_);
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZero();
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    const mpq_class& value() const { return v_; }

    // True when printing needs a leading minus sign.
    bool prints_negative() const { return sgn(v_) < 0; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const { return v_.get_str(); }

  private:
    mpq_class v_;
};

// Prime-field scalar F_p. The modulus is a process-wide context set once
// before computation starts (default 32003); elements store only the value.
class Fp {
  public:
    Fp() : v_(0) {}

    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p > (1ull << 31) || !is_prime(p))
            throw InvalidInput("modulus must be a prime in [2, 2^31]: " + std::to_string(p));
        modulus_ = p;
    }
    static std::uint64_t modulus() { return modulus_; }

    static Fp from_int(long long n) {
        long long r = n % static_cast<long long>(modulus_);
        if (r < 0) r += static_cast<long long>(modulus_);
        return Fp(static_cast<std::uint64_t>(r));
    }

    static Fp from_fraction(long long num, long long den) {
        return from_int(num) / from_int(den);
    }

    static Fp zero() { return Fp(); }
    static Fp one() { return from_int(1); }
    static std::string name() { return "F_" + std::to_string(modulus_); }

    std::uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp inv() const {
        if (v_ == 0) throw DivisionByZero();
        // Extended Euclid on (v, p).
        long long t = 0, new_t = 1;
        long long r = static_cast<long long>(modulus_), new_r = static_cast<long long>(v_);
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += static_cast<long long>(modulus_);
        return Fp(static_cast<std::uint64_t>(t));
    }

    Fp operator-() const { return Fp(v_ == 0 ? 0 : modulus_ - v_); }
    Fp operator+(Fp o) const {
        std::uint64_t s = v_ + o.v_;
        if (s >= modulus_) s -= modulus_;
        return Fp(s);
    }
    Fp operator-(Fp o) const {
        std::uint64_t s = v_ + modulus_ - o.v_;
        if (s >= modulus_) s -= modulus_;
        return Fp(s);
    }
    Fp operator*(Fp o) const { return Fp((v_ * o.v_) % modulus_); }
    Fp operator/(Fp o) const { return *this * o.inv(); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }

    bool operator==(Fp o) const { return v_ == o.v_; }
    bool operator!=(Fp o) const { return v_ != o.v_; }

    bool prints_negative() const { return false; }
    Fp abs() const { return *this; }

    std::string str() const { return std::to_string(v_); }

  private:
    explicit Fp(std::uint64_t v) : v_(v) {}

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t v_;
    static inline std::uint64_t modulus_ = 32003;
};

// Maps an exact rational into the field K. For F_p the denominator must be
// invertible mod p; coordinates in this project are tiny so a failure means
// the modulus was chosen badly.
template <class K>
K field_from_rational(const Rational& q) {
    if constexpr (std::is_same_v<K, Rational>) {
        return q;
    } else {
        const mpq_class& v = q.value();
        mpz_class num = v.get_num() % mpz_class(static_cast<unsigned long>(Fp::modulus()));
        mpz_class den = v.get_den() % mpz_class(static_cast<unsigned long>(Fp::modulus()));
        return Fp::from_int(num.get_si()) / Fp::from_int(den.get_si());
    }
}

}  // namespace pxp

#endif
