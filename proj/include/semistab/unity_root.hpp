#pragma once

#include <string>

#include "semistab/rational.hpp"

namespace semistab {

// The root of unity e^{2*pi*i*k/N}, stored as the exponent k/N reduced to
// [0, 1). Canonical form 0 <= k < N, gcd(k, N) = 1 falls out of the reduced
// fraction; the identity is (0, 1).
class UnityRoot {
public:
    UnityRoot() : e_(0) {}
    UnityRoot(const mpz_class& k, const mpz_class& n) : e_(Rational(k, n).mod1()) {
        if (n <= 0) throw PreconditionFailed("unity root with non-positive order");
    }
    UnityRoot(long k, long n) : UnityRoot(mpz_class(k), mpz_class(n)) {}

    static UnityRoot from_exponent(const Rational& e) {
        UnityRoot r;
        r.e_ = e.mod1();
        return r;
    }
    static UnityRoot one() { return UnityRoot(); }
    static UnityRoot minus_one() { return UnityRoot(1, 2); }

    const mpz_class& k() const { return e_.num(); }
    const mpz_class& order() const { return e_.den(); }  // N in canonical (k, N)

    // The exponent k/N in [0, 1); also the Deligne residue representative.
    const Rational& exponent() const { return e_; }

    bool is_identity() const { return e_.is_zero(); }
    // True when the value is a rational number, i.e. +1 or -1.
    bool is_real() const { return order() <= 2; }
    Rational real_value() const {
        if (!is_real()) throw PreconditionFailed("unity root is not real");
        return order() == 1 ? Rational(1) : Rational(-1);
    }

    UnityRoot operator*(const UnityRoot& o) const { return from_exponent(e_ + o.e_); }
    UnityRoot inverse() const { return from_exponent(-e_); }
    UnityRoot pow(const mpz_class& exp) const { return from_exponent(e_ * Rational(exp)); }

    bool operator==(const UnityRoot& o) const { return e_ == o.e_; }
    bool operator!=(const UnityRoot& o) const { return e_ != o.e_; }
    bool operator<(const UnityRoot& o) const { return e_ < o.e_; }

    std::string str() const {
        if (is_identity()) return "1";
        if (order() == 2) return "-1";
        return "e(" + e_.str() + ")";
    }

private:
    Rational e_;
};

}  // namespace semistab
