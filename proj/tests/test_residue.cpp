#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "semistab/families.hpp"
#include "semistab/reducibility.hpp"
#include "semistab/residue.hpp"
#include "test_util.hpp"

using namespace semistab;
using semistab::testing::random_invertible;

namespace {

bool has_reason(const Verdict& v, const std::string& code) {
    return std::find(v.reasons.begin(), v.reasons.end(), code) != v.reasons.end();
}

}  // namespace

TEST_CASE("deligne_residue on the worked examples") {
    CHECK(deligne_residue(UnityRoot()) == Rational(0));
    CHECK(deligne_residue(UnityRoot::minus_one()) == Rational(1, 2));
    CHECK(deligne_residue(UnityRoot(1, 3)) == Rational(1, 3));
}

TEST_CASE("deligne residue exponentiates back to the root") {
    for (long n = 1; n <= 24; ++n)
        for (long k = 0; k < n; ++k) {
            const UnityRoot lambda(k, n);
            CHECK(UnityRoot::from_exponent(deligne_residue(lambda)) == lambda);
        }
}

TEST_CASE("fuchs_degree on the worked examples") {
    const std::vector<Rational> zeros(4, Rational(0));
    const std::vector<Rational> halves(4, Rational(1, 2));
    CHECK(fuchs_degree({zeros, zeros, halves}) == Rational(-2));
    CHECK(fuchs_degree({zeros, zeros}) == Rational(0));
    CHECK(fuchs_degree({{Rational(1, 2)}, {Rational(1, 2)}}) == Rational(-1));
}

TEST_CASE("fuchs_degree is additive under concatenation") {
    const std::vector<std::vector<Rational>> a{{Rational(1, 3)}, {Rational(2, 3)}};
    const std::vector<std::vector<Rational>> b{{Rational(1, 2), Rational(3, 2)}};
    std::vector<std::vector<Rational>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(fuchs_degree(both) == fuchs_degree(a) + fuchs_degree(b));
}

TEST_CASE("rank-1 valid representations have integral Deligne degree") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<long> pick(0, 4);
    const std::vector<UnityRoot> pool{UnityRoot(), UnityRoot::minus_one(), UnityRoot(1, 3),
                                      UnityRoot(2, 3), UnityRoot(1, 4)};
    for (int t = 0; t < 100; ++t) {
        const int m = 2 + t % 4;
        std::vector<UnityRoot> lambdas;
        UnityRoot prod;
        for (int i = 0; i + 1 < m; ++i) {
            lambdas.push_back(pool[static_cast<size_t>(pick(rng))]);
            prod = prod * lambdas.back();
        }
        lambdas.push_back(prod.inverse());  // scalars commute: product must be 1
        std::vector<std::vector<Rational>> betas;
        for (const auto& l : lambdas) betas.push_back({deligne_residue(l)});
        CHECK(fuchs_degree(betas).is_integer());
    }
}

TEST_CASE("residue profile of the Bolibruch example") {
    const auto profile = make_residue_profile(analyze_monodromy(family2()));
    CHECK(profile.rank == 4);
    CHECK(profile.lambda ==
          std::vector<UnityRoot>{UnityRoot(), UnityRoot(), UnityRoot::minus_one()});
    CHECK(profile.beta == std::vector<Rational>{Rational(0), Rational(0), Rational(1, 2)});
    CHECK(fuchs_degree({profile.beta, profile.beta, profile.beta}).is_integer() == false);
}

TEST_CASE("thm_ss_constraint on the Bolibruch example (genus 0 empties the class)") {
    const SurfaceRepresentation rep = family2();
    const SlopeConstraint c = thm_ss_constraint(rep, analyze_monodromy(rep), true);
    CHECK(c.rank == 4);
    CHECK(c.slope_class == Rational(1, 2));
    CHECK(c.genus_zero_applied);
    CHECK_FALSE(c.admissible.has_value());
    CHECK(c.forced_beta == std::vector<Rational>{Rational(0), Rational(0), Rational(1, 2)});
}

TEST_CASE("thm_ss_constraint keeps degrees 2 mod 4 at genus 1") {
    // the same puncture matrices on a genus-1 surface with trivial handles
    const SurfaceRepresentation f2 = family2();
    const SurfaceRepresentation rep(1, 3, 4, {TwistedMatrix::identity(4)},
                                    {TwistedMatrix::identity(4)}, f2.C);
    const SlopeConstraint c = thm_ss_constraint(rep, analyze_monodromy(rep), true);
    REQUIRE(c.admissible.has_value());
    CHECK(c.admissible->start == 2);
    CHECK(c.admissible->step == 4);
    CHECK_FALSE(c.genus_zero_applied);
}

TEST_CASE("thm_ss_constraint with unit product keeps multiples of n at genus 0") {
    const SurfaceRepresentation rep = family1(3, 2, {Rational(1), Rational(-1)}, 0);
    const SlopeConstraint c = thm_ss_constraint(rep, analyze_monodromy(rep), true);
    CHECK(c.slope_class == Rational(0));
    CHECK(c.genus_zero_applied);
    REQUIRE(c.admissible.has_value());
    CHECK(c.admissible->start == 0);
    CHECK(c.admissible->step == 3);
}

TEST_CASE("thm_ss_constraint admissible degrees all match the slope class") {
    const SurfaceRepresentation rep = family5(6, 2, 1);
    const SlopeConstraint c = thm_ss_constraint(rep, analyze_monodromy(rep), true);
    REQUIRE(c.admissible.has_value());
    for (long t = -5; t <= 5; ++t) {
        const Rational d(mpz_class(c.admissible->start + t * c.admissible->step));
        CHECK((d / Rational(c.rank)).mod1() == c.slope_class);
    }
    // emptiness <=> N does not divide n (at positive genus)
    CHECK(mpz_class(c.rank) % c.slope_class.den() == 0);
}

TEST_CASE("thm_ss_constraint rejects broken hypotheses") {
    std::vector<TwistedMatrix> ids{TwistedMatrix::identity(2)};
    const SurfaceRepresentation id_rep(0, 1, 2, {}, {}, ids);
    CHECK_THROWS_AS(thm_ss_constraint(id_rep, analyze_monodromy(id_rep), true),
                    HypothesisNotMet);  // identity is not a single block

    const SurfaceRepresentation f2 = family2();
    CHECK_THROWS_AS(thm_ss_constraint(f2, analyze_monodromy(f2), false), HypothesisNotMet);
}

TEST_CASE("thm_ss_constraint degrades on non-unity eigenvalues") {
    // C = diag-free single block with eigenvalue 2: hypotheses hold but the
    // eigenvalue is no root of unity
    RationalMatrix c(2);
    c.at(0, 0) = Rational(2);
    c.at(0, 1) = Rational(1);
    c.at(1, 1) = Rational(2);
    RationalMatrix cinv = c.inverse();
    std::vector<TwistedMatrix> cs{TwistedMatrix(c), TwistedMatrix(cinv)};
    const SurfaceRepresentation rep(0, 2, 2, {}, {}, cs);
    REQUIRE(is_valid(rep));
    CHECK_THROWS_AS(thm_ss_constraint(rep, analyze_monodromy(rep), true), UnsupportedEigenvalue);
    const Verdict v = realizability_report(rep);
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(has_reason(v, "unsupported-eigenvalue"));
}

TEST_CASE("thm_sums_verdict on the worked combinations") {
    const RepAnalysis f1 = analyze_representation(family1(1, 1, {Rational(0)}, 1));
    const RepAnalysis f5 = analyze_representation(family5(4, 1, 1));
    const Verdict v = thm_sums_verdict(f1, f5);
    CHECK(v.kind == VerdictKind::NoSemistableRealization);
    CHECK(has_reason(v, "thm-3.1"));

    // two unipotent families share lambda_i = 1: inconclusive
    const RepAnalysis a2 = analyze_representation(family1(2, 2, {Rational(1), Rational(-1)}, 1));
    const RepAnalysis a3 = analyze_representation(family1(3, 2, {Rational(1), Rational(-1)}, 1));
    const Verdict w = thm_sums_verdict(a2, a3);
    CHECK(w.kind == VerdictKind::Inconclusive);
    CHECK(has_reason(w, "lambda-equal:p1"));
    CHECK(has_reason(w, "lambda-equal:p2"));

    const RepAnalysis f4 = analyze_representation(family4(2, 1));
    const RepAnalysis f5b = analyze_representation(family5(4, 2, 1));
    CHECK(thm_sums_verdict(f4, f5b).kind == VerdictKind::NoSemistableRealization);

    CHECK_THROWS_AS(thm_sums_verdict(f1, f5b), ShapeMismatch);
}

TEST_CASE("thm_sums_verdict is symmetric in its summands") {
    const RepAnalysis f4 = analyze_representation(family4(2, 1));
    const RepAnalysis f5 = analyze_representation(family5(4, 2, 1));
    CHECK(thm_sums_verdict(f4, f5).kind == thm_sums_verdict(f5, f4).kind);

    const RepAnalysis a2 = analyze_representation(family1(2, 2, {Rational(1), Rational(-1)}, 1));
    CHECK(thm_sums_verdict(a2, a2).kind == VerdictKind::Inconclusive);
}

TEST_CASE("realizability_report on the worked examples") {
    const Verdict v2 = realizability_report(family2());
    CHECK(v2.kind == VerdictKind::NoSemistableRealization);
    CHECK(has_reason(v2, "thm-1.1"));
    CHECK(has_reason(v2, "genus-0-integral-slope"));

    const Verdict vmain = realizability_report(mainthm_witness(1, 1, 5));
    CHECK(vmain.kind == VerdictKind::NoSemistableRealization);
    CHECK(has_reason(vmain, "thm-3.1"));

    std::vector<TwistedMatrix> ids{TwistedMatrix::identity(2)};
    const Verdict vid = realizability_report(SurfaceRepresentation(0, 1, 2, {}, {}, ids));
    CHECK(vid.kind == VerdictKind::Inconclusive);
    CHECK(has_reason(vid, "not-single-block:p1"));

    const Verdict v5 = realizability_report(family5(4, 1, 1));
    CHECK(v5.kind == VerdictKind::Constrained);
    REQUIRE(v5.constraint.has_value());
    REQUIRE(v5.constraint->admissible.has_value());
    CHECK(v5.constraint->admissible->start == 2);
    CHECK(v5.constraint->admissible->step == 4);
}

TEST_CASE("rank-1 representations satisfy the constraint trivially") {
    const Verdict v = realizability_report(family1(1, 2, {Rational(1), Rational(-1)}, 0));
    CHECK(v.kind == VerdictKind::Constrained);
    REQUIRE(v.constraint.has_value());
    REQUIRE(v.constraint->admissible.has_value());
    CHECK(v.constraint->admissible->start == 0);
    CHECK(v.constraint->admissible->step == 1);
    CHECK(v.constraint->slope_class == Rational(0));
}

TEST_CASE("realizability_report rejects non-representations") {
    SurfaceRepresentation broken = family4(2, 1);
    broken.C[0] = TwistedMatrix::identity(2);
    CHECK_THROWS_AS(realizability_report(broken), InvalidRepresentation);
}

TEST_CASE("irreducible single representations are inconclusive") {
    // swap and diag do not satisfy any relation with C = their commutator's
    // inverse; build a valid irreducible rep: A=swap, B=diag(2,1), C = [B,A]
    const RationalMatrix a = semistab::testing::mat({{0, 1}, {1, 0}});
    const RationalMatrix b = semistab::testing::mat({{2, 0}, {0, 1}});
    const RationalMatrix comm = a * b * a.inverse() * b.inverse();
    std::vector<TwistedMatrix> cs{TwistedMatrix(comm.inverse())};
    const SurfaceRepresentation rep(1, 1, 2, {TwistedMatrix(a)}, {TwistedMatrix(b)}, cs);
    REQUIRE(is_valid(rep));
    REQUIRE(is_irreducible(rep));
    const Verdict v = realizability_report(rep);
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(has_reason(v, "irreducible"));
}

TEST_CASE("verdicts are invariant under conjugation") {
    std::mt19937_64 rng(52);
    const SurfaceRepresentation rep = family5(4, 1, 1);
    const Verdict base = realizability_report(rep);
    for (int t = 0; t < 10; ++t) {
        const RationalMatrix p = random_invertible(rng, 4, 2);
        const Verdict conj = realizability_report(conjugate(rep, p));
        CHECK(conj.kind == base.kind);
        CHECK(conj.reasons == base.reasons);
    }
}

TEST_CASE("direct-sum verdicts are invariant under summand order") {
    const auto s1 = direct_sum(family4(2, 1), family5(4, 2, 1));
    const auto s2 = direct_sum(family5(4, 2, 1), family4(2, 1));
    CHECK(realizability_report(s1).kind == realizability_report(s2).kind);
}
