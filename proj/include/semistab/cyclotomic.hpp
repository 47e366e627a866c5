#pragma once

#include <string>
#include <vector>

#include "semistab/polynomial.hpp"
#include "semistab/rational.hpp"
#include "semistab/unity_root.hpp"

namespace semistab {

// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in
// zeta_N of degree < phi(N), i.e. reduced modulo the N-th cyclotomic
// polynomial Phi_N. Phi_N is irreducible, so this is a field (unlike
// reduction mod x^N - 1, which has zero divisors).
//
// Binary operations on elements of different conductors promote both sides
// to the lcm conductor, so the type is closed under arithmetic and the
// rationals embed as conductor 1.
class CyclotomicNumber {
public:
    CyclotomicNumber() : conductor_(1), c_{Rational(0)} {}
    CyclotomicNumber(long v) : conductor_(1), c_{Rational(v)} {}  // NOLINT
    CyclotomicNumber(const Rational& v) : conductor_(1), c_{v} {}  // NOLINT

    static CyclotomicNumber zeta(long n);
    // Reduces an arbitrary polynomial in zeta_N modulo Phi_N.
    static CyclotomicNumber from_poly(long n, const std::vector<Rational>& poly);
    // Requires exactly phi(N) coefficients (the file-format contract).
    static CyclotomicNumber from_coeffs(long n, std::vector<Rational> coeffs);
    static CyclotomicNumber from_unity_root(const UnityRoot& u, long conductor);

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    // Re-expresses the element in Q(zeta_M); M must be a multiple of the
    // current conductor.
    CyclotomicNumber promoted(long m) const;

    bool is_zero() const;
    bool is_rational() const;  // all non-constant coordinates zero
    Rational rational_part() const { return c_[0]; }

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator/(const CyclotomicNumber& o) const { return *this * o.inverse(); }
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

    // Extended Euclidean algorithm against Phi_N.
    CyclotomicNumber inverse() const;

    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    std::string str() const;

private:
    CyclotomicNumber(long n, std::vector<Rational> c) : conductor_(n), c_(std::move(c)) {}

    long conductor_;
    std::vector<Rational> c_;
};

// Phi_N as a Polynomial over Rational.
Polynomial cyclotomic_modulus(long n);

}  // namespace semistab
