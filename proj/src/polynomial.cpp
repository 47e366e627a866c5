#include "semistab/polynomial.hpp"

#include <algorithm>

#include "semistab/errors.hpp"

namespace semistab {

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& den) const {
    if (den.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = c_;
    const int dd = den.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> quot(static_cast<size_t>(degree() - dd) + 1, Rational(0));
    for (int k = degree() - dd; k >= 0; --k) {
        Rational c = rem[static_cast<size_t>(k + dd)] / den.lead();
        quot[static_cast<size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(k + j)] -= c * den.c_[static_cast<size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& a = c_[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        if (!out.empty()) out += a.sign() < 0 ? " - " : " + ";
        else if (a.sign() < 0) out += "-";
        const Rational mag = a.abs();
        const bool unit = mag.is_one() && i > 0;
        if (!unit) out += mag.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace semistab
