#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semistab/rational.hpp"

namespace semistab {

// Dense univariate polynomial over Rational, coefficients ascending,
// normalized (no trailing zero coefficients; the zero polynomial is {}).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Polynomial constant(const Rational& r) { return Polynomial({r}); }
    // x - r
    static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Rational(0);
    }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;

    // Quotient and remainder; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& den) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace semistab
