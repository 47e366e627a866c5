#include "semistab/spectral.hpp"

#include <algorithm>

namespace semistab {

namespace {

bool nth_power_vanishes(const RationalMatrix& m) { return m.pow(m.n()).is_zero(); }

}  // namespace

RationalMatrix nilpotent_exp(const RationalMatrix& m, const Rational& scale) {
    if (!nth_power_vanishes(m)) throw NotNilpotent("matrix is not nilpotent");
    const int n = m.n();
    const RationalMatrix scaled = m.scaled(scale);
    RationalMatrix acc = RationalMatrix::identity(n);
    RationalMatrix term = RationalMatrix::identity(n);
    Rational factorial(1);
    for (int k = 1; k < n; ++k) {
        term = term * scaled;
        factorial *= Rational(k);
        acc = acc + term.scaled(factorial.inverse());
    }
    return acc;
}

RationalMatrix unipotent_log(const RationalMatrix& u) {
    const int n = u.n();
    const RationalMatrix nil = u - RationalMatrix::identity(n);
    if (!nth_power_vanishes(nil)) throw NotUnipotent("matrix is not unipotent");
    RationalMatrix acc(n);
    RationalMatrix term = RationalMatrix::identity(n);
    for (int k = 1; k < n; ++k) {
        term = term * nil;
        const Rational coeff = Rational(k % 2 == 1 ? 1 : -1, k);
        acc = acc + term.scaled(coeff);
    }
    return acc;
}

std::vector<std::pair<Eigenvalue, int>> spectrum(const TwistedMatrix& m) {
    std::vector<std::pair<Eigenvalue, int>> out;
    for (const auto& [q, mult] : rational_eigenvalues(m.body()))
        out.emplace_back(Eigenvalue(m.twist(), q), mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

// The rational eigenvalue of the body corresponding to lambda = twist * q,
// or nullopt when lambda is not of that shape.
std::optional<Rational> body_eigenvalue(const TwistedMatrix& m, const Eigenvalue& lambda) {
    if (lambda.scale.is_zero()) return Rational(0);
    if (lambda.unity == m.twist()) return lambda.scale;
    if (lambda.unity == m.twist() * UnityRoot::minus_one()) return -lambda.scale;
    return std::nullopt;
}

Partition partition_from_ranks(const RationalMatrix& shifted, int mult) {
    // r_k = rank(shifted^k); blocks of size >= k number r_{k-1} - r_k.
    const int n = shifted.n();
    std::vector<int> ranks{n};
    RationalMatrix power = RationalMatrix::identity(n);
    while (true) {
        power = power * shifted;
        ranks.push_back(power.rank());
        if (ranks[ranks.size() - 1] == ranks[ranks.size() - 2]) break;
    }
    Partition part;
    for (size_t k = 1; k < ranks.size(); ++k) {
        const int ge_k = ranks[k - 1] - ranks[k];
        const int ge_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (int i = 0; i < ge_k - ge_k1; ++i) part.push_back(static_cast<int>(k));
    }
    std::sort(part.rbegin(), part.rend());
    int total = 0;
    for (int p : part) total += p;
    if (total != mult) throw Error("internal: jordan partition does not sum to multiplicity");
    return part;
}

}  // namespace

Partition jordan_type(const TwistedMatrix& m, const Eigenvalue& lambda) {
    const auto q = body_eigenvalue(m, lambda);
    if (!q) throw NotAnEigenvalue("eigenvalue " + lambda.str() + " not in spectrum");
    const auto eigs = rational_eigenvalues(m.body());
    int mult = 0;
    for (const auto& [val, k] : eigs)
        if (val == *q) mult = k;
    if (mult == 0) throw NotAnEigenvalue("eigenvalue " + lambda.str() + " not in spectrum");
    RationalMatrix shifted = m.body();
    for (int i = 0; i < shifted.n(); ++i) shifted.at(i, i) -= *q;
    return partition_from_ranks(shifted, mult);
}

std::pair<bool, std::optional<Eigenvalue>> is_single_jordan_block(const TwistedMatrix& m) {
    const auto eigs = rational_eigenvalues(m.body());
    if (eigs.size() != 1) return {false, std::nullopt};
    const Rational& q = eigs.front().first;
    RationalMatrix shifted = m.body();
    for (int i = 0; i < shifted.n(); ++i) shifted.at(i, i) -= q;
    if (shifted.rank() != m.n() - 1) return {false, std::nullopt};
    return {true, Eigenvalue(m.twist(), q)};
}

MonodromyAnalysis analyze_monodromy(const SurfaceRepresentation& rep) {
    MonodromyAnalysis out;
    out.rank = rep.rank;
    for (const auto& c : rep.C) {
        PunctureAnalysis pa;
        try {
            pa.eigenvalues = spectrum(c);
            for (const auto& [lambda, mult] : pa.eigenvalues)
                pa.jordan.push_back(jordan_type(c, lambda));
            pa.single_eigenvalue = pa.eigenvalues.size() == 1;
            if (pa.single_eigenvalue) {
                pa.lambda = pa.eigenvalues.front().first;
                pa.single_block =
                    pa.jordan.front() == Partition{rep.rank};
            }
        } catch (const SpectrumNotRational&) {
            pa.spectrum_rational = false;
        }
        out.punctures.push_back(std::move(pa));
    }
    return out;
}

}  // namespace semistab
