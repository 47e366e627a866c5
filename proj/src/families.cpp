#include "semistab/families.hpp"

#include <random>

#include "semistab/spectral.hpp"

namespace semistab {

namespace {

RationalMatrix upper_shift(int n) {
    RationalMatrix s(n);
    for (int i = 0; i + 1 < n; ++i) s.at(i, i + 1) = Rational(1);
    return s;
}

std::vector<TwistedMatrix> identity_handles(int g, int n) {
    return std::vector<TwistedMatrix>(static_cast<size_t>(g), TwistedMatrix::identity(n));
}

}  // namespace

SurfaceRepresentation family1(int n, int m, const std::vector<Rational>& nu, int g) {
    if (n < 1) throw ShapeMismatch("family1 needs rank >= 1");
    if (m < 1) throw TooFewPunctures("family1 needs at least one puncture");
    if (g < 0) throw ShapeMismatch("family1 needs genus >= 0");
    if (static_cast<int>(nu.size()) != m)
        throw PreconditionFailed("family1 needs one nu per puncture");
    Rational sum(0);
    for (const auto& v : nu) sum += v;
    if (!sum.is_zero()) throw BadNuSum("nu values must sum to zero");
    if (m >= 2)
        for (const auto& v : nu)
            if (v.is_zero()) throw ZeroNu("nu values must be nonzero");

    const RationalMatrix shift = upper_shift(n);
    std::vector<TwistedMatrix> c;
    for (const auto& v : nu) c.emplace_back(nilpotent_exp(shift, v));
    return SurfaceRepresentation(g, m, n, identity_handles(g, n), identity_handles(g, n),
                                 std::move(c));
}

namespace {

RationalMatrix family2_c1() {
    return RationalMatrix{{Rational(1), Rational(1), Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(1), Rational(0)},
                          {Rational(0), Rational(0), Rational(1), Rational(1)},
                          {Rational(0), Rational(0), Rational(0), Rational(1)}};
}

RationalMatrix family2_c2() {
    return RationalMatrix{{Rational(3), Rational(1), Rational(1), Rational(-1)},
                          {Rational(-4), Rational(-1), Rational(1), Rational(2)},
                          {Rational(0), Rational(0), Rational(3), Rational(1)},
                          {Rational(0), Rational(0), Rational(-4), Rational(-1)}};
}

RationalMatrix family2_c3() {
    return RationalMatrix{{Rational(-1), Rational(0), Rational(2), Rational(-1)},
                          {Rational(4), Rational(-1), Rational(0), Rational(1)},
                          {Rational(0), Rational(0), Rational(-1), Rational(0)},
                          {Rational(0), Rational(0), Rational(4), Rational(-1)}};
}

}  // namespace

SurfaceRepresentation family2() {
    std::vector<TwistedMatrix> c{TwistedMatrix(family2_c1()), TwistedMatrix(family2_c2()),
                                 TwistedMatrix(family2_c3())};
    return SurfaceRepresentation(0, 3, 4, {}, {}, std::move(c));
}

SurfaceRepresentation family3(int m, int g) {
    if (m < 3) throw TooFewPunctures("family3 needs at least three punctures");
    if (g < 0) throw ShapeMismatch("family3 needs genus >= 0");
    const RationalMatrix n3 = unipotent_log(family2_c1());
    const RationalMatrix body = nilpotent_exp(n3, Rational(1, m - 2));
    const UnityRoot twist(1, 2 * m - 4);

    std::vector<TwistedMatrix> c;
    for (int i = 0; i < m - 2; ++i) c.emplace_back(twist, body);
    c.emplace_back(UnityRoot::minus_one(), family2_c2());
    c.emplace_back(family2_c3());
    return SurfaceRepresentation(g, m, 4, identity_handles(g, 4), identity_handles(g, 4),
                                 std::move(c));
}

SurfaceRepresentation family4(int m, int g) {
    if (g < 1) throw GenusTooSmall("family4 needs genus >= 1");
    if (m < 1) throw TooFewPunctures("family4 needs at least one puncture");
    const RationalMatrix a1{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    const RationalMatrix b1{{Rational(1), Rational(0)}, {Rational(0), Rational(2)}};
    const RationalMatrix ci{{Rational(1), Rational(-1, m)}, {Rational(0), Rational(1)}};

    auto a = identity_handles(g, 2);
    auto b = identity_handles(g, 2);
    a[0] = TwistedMatrix(a1);
    b[0] = TwistedMatrix(b1);
    std::vector<TwistedMatrix> c(static_cast<size_t>(m), TwistedMatrix(ci));
    return SurfaceRepresentation(g, m, 2, std::move(a), std::move(b), std::move(c));
}

namespace {

std::pair<RationalMatrix, RationalMatrix> family5_handles(int n) {
    const RationalMatrix alpha1{{Rational(1), Rational(2)}, {Rational(0), Rational(1)}};
    const RationalMatrix alpha2{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}};
    const RationalMatrix beta{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};

    RationalMatrix a1(n), b1(n);
    for (int blk = 0; blk * 2 < n; ++blk) {
        const int r = 2 * blk;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                a1.at(r + i, r + j) = alpha1.at(i, j);
                b1.at(r + i, r + j) = beta.at(i, j);
                if (r + 2 < n) a1.at(r + i, r + 2 + j) = alpha2.at(i, j);
            }
    }
    return {a1, b1};
}

}  // namespace

RationalMatrix family5_commutator(int n) {
    const auto [a1, b1] = family5_handles(n);
    return a1 * b1 * a1.inverse() * b1.inverse();
}

SurfaceRepresentation family5(int n, int m, int g) {
    if (g < 1) throw GenusTooSmall("family5 needs genus >= 1");
    if (n < 4 || n % 2 != 0) throw BadRankParity("family5 needs even rank >= 4");
    if (m < 1) throw TooFewPunctures("family5 needs at least one puncture");

    const auto [a1, b1] = family5_handles(n);
    const RationalMatrix k = a1 * b1 * a1.inverse() * b1.inverse();
    // K is a single Jordan block with eigenvalue -1, so -K is unipotent.
    const RationalMatrix log_minus_k = unipotent_log(-k);
    const RationalMatrix body = nilpotent_exp(log_minus_k, Rational(-1, m));

    auto a = identity_handles(g, n);
    auto b = identity_handles(g, n);
    a[0] = TwistedMatrix(a1);
    b[0] = TwistedMatrix(b1);
    std::vector<TwistedMatrix> c(static_cast<size_t>(m),
                                 TwistedMatrix(UnityRoot(1, 2 * m), body));
    return SurfaceRepresentation(g, m, n, std::move(a), std::move(b), std::move(c));
}

std::vector<Rational> default_nu(int m) {
    if (m == 1) return {Rational(0)};
    std::vector<Rational> nu(static_cast<size_t>(m), Rational(1));
    nu.back() = Rational(-(m - 1));
    return nu;
}

RepInput mainthm_witness(int g, int m, int n) {
    const bool genus_zero_range = g == 0 && m >= 3 && n >= 4;
    const bool higher_genus_range = g >= 1 && m >= 1 && n >= 5;
    if (!genus_zero_range && !higher_genus_range)
        throw OutOfTheoremRange("no witness outside (g=0, m>=3, n>=4) or (g>=1, m>=1, n>=5)");

    if (g == 0) {
        if (n == 4) return family3(m, 0);
        return direct_sum(family1(n - 4, m, default_nu(m), 0), family3(m, 0));
    }
    if (n % 2 == 1) return direct_sum(family1(1, m, default_nu(m), g), family5(n - 1, m, g));
    return direct_sum(family4(m, g), family5(n - 2, m, g));
}

SurfaceRepresentation remark52_build(const SurfaceRepresentation& rho2, unsigned long seed) {
    if (rho2.rank != 2) throw PreconditionFailed("remark52_build needs a rank-2 input");
    if (rho2.punctures < 2) throw PreconditionFailed("remark52_build needs at least two punctures");
    if (!is_valid(rho2)) throw PreconditionFailed("remark52_build input must satisfy the relation");
    for (const auto* list : {&rho2.A, &rho2.B})
        for (const auto& x : *list)
            if (!x.twist().is_identity())
                throw PreconditionFailed("remark52_build needs untwisted handle matrices");

    const int m = rho2.punctures;
    // Single local eigenvalue per puncture (as the rational eigenvalue of the
    // body; the twist rides along unchanged).
    std::vector<Rational> q;
    UnityRoot unity_product;
    Rational scale_product(1);
    for (const auto& c : rho2.C) {
        const auto [single, lambda] = is_single_jordan_block(c);
        if (!single)
            throw PreconditionFailed("every local monodromy must be a single Jordan block");
        q.push_back(rational_eigenvalues(c.body()).front().first);
        unity_product = unity_product * lambda->unity;
        scale_product *= lambda->scale;
    }
    if (!(unity_product.is_identity() && scale_product.is_one()))
        throw PreconditionFailed("product of local eigenvalues must be 1");

    auto embed_handle = [](const TwistedMatrix& x) {
        RationalMatrix e(3);
        e.at(0, 0) = Rational(1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) e.at(1 + i, 1 + j) = x.body().at(i, j);
        return TwistedMatrix(e);
    };
    std::vector<TwistedMatrix> a3, b3;
    for (const auto& x : rho2.A) a3.push_back(embed_handle(x));
    for (const auto& x : rho2.B) b3.push_back(embed_handle(x));

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-9, 9);

    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<TwistedMatrix> c3;
        for (int i = 0; i + 1 < m; ++i) {
            RationalMatrix body(3);
            body.at(0, 0) = q[static_cast<size_t>(i)];
            body.at(0, 1) = Rational(small(rng));
            body.at(0, 2) = Rational(small(rng));
            for (int r = 0; r < 2; ++r)
                for (int col = 0; col < 2; ++col)
                    body.at(1 + r, 1 + col) = rho2.C[static_cast<size_t>(i)].body().at(r, col);
            c3.emplace_back(rho2.C[static_cast<size_t>(i)].twist(), body);
        }
        // The relation forces C_m = Q^{-1}; Q is block upper-triangular with
        // the right diagonal blocks, so C_m automatically has the required
        // shape and its lower-right block reproduces the old C_m.
        TwistedMatrix prefix = TwistedMatrix::identity(3);
        for (size_t i = 0; i < a3.size(); ++i)
            prefix = prefix * a3[i] * b3[i] * a3[i].inverse() * b3[i].inverse();
        for (const auto& c : c3) prefix = prefix * c;
        c3.push_back(prefix.inverse());

        SurfaceRepresentation out(rho2.genus, m, 3, a3, b3, c3);
        if (!is_valid(out)) throw Error("internal: remark52 relation solve failed");

        bool all_single = true;
        for (const auto& c : out.C)
            if (!is_single_jordan_block(c).first) {
                all_single = false;
                break;
            }
        if (all_single) return out;
    }
    throw GenericityExhausted("no generic gamma found in 32 attempts");
}

}  // namespace semistab
