#include "semistab/cyclotomic.hpp"

#include "semistab/errors.hpp"
#include "semistab/numtheory.hpp"

namespace semistab {

Polynomial cyclotomic_modulus(long n) {
    std::vector<Rational> coeffs;
    for (const mpz_class& z : cyclotomic_polynomial(n)) coeffs.emplace_back(z);
    return Polynomial(std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::zeta(long n) {
    std::vector<Rational> poly(2, Rational(0));
    poly[1] = Rational(1);
    return from_poly(n, poly);
}

CyclotomicNumber CyclotomicNumber::from_poly(long n, const std::vector<Rational>& poly) {
    if (n <= 0) throw PreconditionFailed("conductor must be positive");
    const Polynomial rem = Polynomial(poly).divmod(cyclotomic_modulus(n)).second;
    std::vector<Rational> c(static_cast<size_t>(euler_phi(n)), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = rem.coeff(static_cast<int>(i));
    return CyclotomicNumber(n, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_coeffs(long n, std::vector<Rational> coeffs) {
    if (static_cast<long>(coeffs.size()) != euler_phi(n))
        throw ParseError("cyclotomic coefficient list must have length phi(conductor)");
    return CyclotomicNumber(n, std::move(coeffs));
}

CyclotomicNumber CyclotomicNumber::from_unity_root(const UnityRoot& u, long conductor) {
    if (!u.order().fits_slong_p())
        throw PreconditionFailed("unity root order too large for cyclotomic embedding");
    const long n = u.order().get_si();
    if (conductor % n != 0)
        throw PreconditionFailed("conductor is not a multiple of the root's order");
    const long e = mpz_class(mpz_class(u.k() * (conductor / n)) % conductor).get_si();
    std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
    poly[static_cast<size_t>(e)] = Rational(1);
    return from_poly(conductor, poly);
}

CyclotomicNumber CyclotomicNumber::promoted(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0)
        throw PreconditionFailed("cannot promote: target conductor not a multiple");
    const long step = m / conductor_;
    std::vector<Rational> poly(static_cast<size_t>((c_.size() - 1) * step + 1), Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) poly[j * static_cast<size_t>(step)] = c_[j];
    return from_poly(m, poly);
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<Rational> c = c_;
    for (auto& x : c) x = -x;
    return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    const long m = static_cast<long>(lcm(conductor_, o.conductor_).get_si());
    if (m != conductor_ || m != o.conductor_) return promoted(m) + o.promoted(m);
    std::vector<Rational> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return CyclotomicNumber(conductor_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    const long m = static_cast<long>(lcm(conductor_, o.conductor_).get_si());
    if (m != conductor_ || m != o.conductor_) return promoted(m) * o.promoted(m);
    if (c_.size() == 1) {  // conductor 1: plain rational product
        return CyclotomicNumber(1, {c_[0] * o.c_[0]});
    }
    std::vector<Rational> prod(2 * c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    return from_poly(conductor_, prod);
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
    if (is_rational()) return CyclotomicNumber(conductor_ == 1 ? 1 : conductor_, [&] {
        std::vector<Rational> c(c_.size(), Rational(0));
        c[0] = c_[0].inverse();
        return c;
    }());
    // Extended Euclid in Q[x]: u * self + v * Phi_N = gcd = nonzero constant.
    Polynomial r0 = cyclotomic_modulus(conductor_);
    Polynomial r1 = Polynomial(c_);
    Polynomial u0, u1 = Polynomial::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Polynomial u2 = u0 - q * u1;
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    // r0 = gcd(self, Phi_N); Phi_N irreducible and deg(self) < deg(Phi_N),
    // so r0 is a nonzero constant.
    const Rational scale = r0.coeff(0).inverse();
    std::vector<Rational> inv;
    for (const auto& x : u0.coeffs()) inv.push_back(x * scale);
    return from_poly(conductor_, inv);
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    const long m = static_cast<long>(lcm(conductor_, o.conductor_).get_si());
    if (m != conductor_ || m != o.conductor_) return promoted(m) == o.promoted(m);
    return c_ == o.c_;
}

std::string CyclotomicNumber::str() const {
    if (is_rational()) return c_[0].str();
    return Polynomial(c_).str("z" + std::to_string(conductor_));
}

}  // namespace semistab
