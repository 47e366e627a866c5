#include "semistab/matrix.hpp"

#include <algorithm>
#include <set>

#include "semistab/numtheory.hpp"

namespace semistab {

Polynomial char_poly(const RationalMatrix& m) {
    const int n = m.n();
    // Faddeev-LeVerrier: M_1 = A, c_1 = -tr M_1; M_{k+1} = A (M_k + c_k I),
    // c_{k+1} = -tr(M_{k+1}) / (k+1). Then det(xI - A) = x^n + c_1 x^{n-1} + ...
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
    coeffs[static_cast<size_t>(n)] = Rational(1);
    RationalMatrix mk = m;
    Rational ck = -mk.trace();
    coeffs[static_cast<size_t>(n - 1)] = ck;
    for (int k = 2; k <= n; ++k) {
        RationalMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
        mk = m * shifted;
        ck = -(mk.trace() / Rational(k));
        coeffs[static_cast<size_t>(n - k)] = ck;
    }
    return Polynomial(std::move(coeffs));
}

std::vector<std::pair<Rational, int>> polynomial_rational_roots(const Polynomial& p) {
    std::vector<std::pair<Rational, int>> roots;
    if (p.degree() <= 0) return roots;

    Polynomial work = p;
    // Strip roots at zero first so the constant term is nonzero.
    int zero_mult = 0;
    while (work.degree() > 0 && work.coeff(0).is_zero()) {
        work = work.divmod(Polynomial({Rational(0), Rational(1)})).first;
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
    if (work.degree() == 0) return roots;

    // Rational root theorem on the integer polynomial L * work.
    mpz_class denom_lcm(1);
    for (const auto& c : work.coeffs()) denom_lcm = lcm(denom_lcm, c.den());
    const mpz_class constant = work.coeff(0).num() * (denom_lcm / work.coeff(0).den());
    const mpz_class leading = work.lead().num() * (denom_lcm / work.lead().den());

    std::set<Rational> candidates;
    for (const mpz_class& a : divisors(constant))
        for (const mpz_class& b : divisors(leading)) {
            candidates.insert(Rational(a, b));
            candidates.insert(Rational(-a, b));
        }

    for (const Rational& r : candidates) {
        int mult = 0;
        while (work.degree() > 0) {
            auto [quot, rem] = work.divmod(Polynomial::linear_root(r));
            if (!rem.is_zero()) break;
            work = quot;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<std::pair<Rational, int>> rational_eigenvalues(const RationalMatrix& m) {
    const Polynomial p = char_poly(m);
    auto roots = polynomial_rational_roots(p);
    int total = 0;
    for (const auto& [r, k] : roots) total += k;
    if (total != m.n())
        throw SpectrumNotRational("characteristic polynomial does not split over Q: " + p.str());
    return roots;
}

}  // namespace semistab
