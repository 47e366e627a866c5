#include "semistab/residue.hpp"

#include "semistab/reducibility.hpp"

namespace semistab {

Rational fuchs_degree(const std::vector<std::vector<Rational>>& betas) {
    Rational sum(0);
    for (const auto& puncture : betas)
        for (const auto& b : puncture) sum += b;
    return -sum;
}

ResidueProfile make_residue_profile(const MonodromyAnalysis& analysis) {
    ResidueProfile profile;
    profile.rank = analysis.rank;
    for (size_t i = 0; i < analysis.punctures.size(); ++i) {
        const auto& p = analysis.punctures[i];
        if (!p.spectrum_rational || !p.single_eigenvalue)
            throw HypothesisNotMet("puncture " + std::to_string(i + 1) +
                                   " does not have a single eigenvalue");
        const UnityRoot lambda = p.lambda->as_unity_root();
        profile.lambda.push_back(lambda);
        profile.beta.push_back(deligne_residue(lambda));
    }
    return profile;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::NoSemistableRealization: return "NoSemistableRealization";
        case VerdictKind::Constrained: return "Constrained";
        case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

SlopeConstraint thm_ss_constraint(const SurfaceRepresentation& rep,
                                  const MonodromyAnalysis& analysis, bool reducible) {
    for (size_t i = 0; i < analysis.punctures.size(); ++i)
        if (!analysis.punctures[i].single_block)
            throw HypothesisNotMet("local monodromy at puncture " + std::to_string(i + 1) +
                                   " is not a single Jordan block");
    if (!reducible && rep.rank > 1)
        throw HypothesisNotMet("representation is neither reducible nor of rank 1");

    const ResidueProfile profile = make_residue_profile(analysis);

    UnityRoot product;
    for (const auto& l : profile.lambda) product = product * l;

    SlopeConstraint out;
    out.rank = rep.rank;
    out.slope_class = product.exponent();
    out.forced_beta = profile.beta;

    const mpz_class n(rep.rank);
    const mpz_class& order = product.order();
    if (n % order == 0) {
        // d = n*k/N + t*n; start already lies in [0, n) since k/N < 1.
        DegreeProgression prog;
        prog.start = (n / order) * product.k();
        prog.step = n;
        out.admissible = prog;
    }
    if (rep.genus == 0) {
        // Semistable on the projective line means integral slope, so only
        // multiples of n survive; nonempty iff prod lambda_i = 1.
        out.genus_zero_applied = true;
        if (!product.is_identity()) out.admissible.reset();
    }
    return out;
}

RepAnalysis analyze_representation(const SurfaceRepresentation& rep) {
    RepAnalysis out;
    out.rank = rep.rank;
    out.genus = rep.genus;
    out.punctures = rep.punctures;
    out.mono = analyze_monodromy(rep);
    out.reducible = !is_irreducible(rep);
    return out;
}

namespace {

// Reasons a summand fails the Thm 3.1 hypotheses; empty when it passes.
void collect_summand_failures(const RepAnalysis& a, const std::string& tag,
                              std::vector<std::string>& reasons) {
    for (size_t i = 0; i < a.mono.punctures.size(); ++i) {
        const auto& p = a.mono.punctures[i];
        if (!p.spectrum_rational)
            reasons.push_back("spectrum-not-rational:" + tag + ":p" + std::to_string(i + 1));
        else if (!p.single_block)
            reasons.push_back("not-single-block:" + tag + ":p" + std::to_string(i + 1));
    }
    if (!a.reducible && a.rank > 1) reasons.push_back("not-reducible:" + tag);
}

std::optional<Eigenvalue> product_of_lambdas(const RepAnalysis& a) {
    UnityRoot unity;
    Rational scale(1);
    for (const auto& p : a.mono.punctures) {
        if (!p.lambda) return std::nullopt;
        unity = unity * p.lambda->unity;
        scale *= p.lambda->scale;
    }
    return Eigenvalue(unity, scale);
}

Verdict report_single(const SurfaceRepresentation& rep) {
    if (!is_valid(rep)) throw InvalidRepresentation("group relation fails");
    const RepAnalysis a = analyze_representation(rep);

    Verdict v;
    std::vector<std::string> blockers;
    for (size_t i = 0; i < a.mono.punctures.size(); ++i) {
        const auto& p = a.mono.punctures[i];
        if (!p.spectrum_rational)
            blockers.push_back("spectrum-not-rational:p" + std::to_string(i + 1));
        else if (!p.single_block)
            blockers.push_back("not-single-block:p" + std::to_string(i + 1));
    }
    if (!a.reducible && rep.rank > 1) blockers.push_back("irreducible");
    if (!blockers.empty()) {
        v.kind = VerdictKind::Inconclusive;
        v.reasons = std::move(blockers);
        return v;
    }

    SlopeConstraint constraint;
    try {
        constraint = thm_ss_constraint(rep, a.mono, a.reducible);
    } catch (const UnsupportedEigenvalue&) {
        v.kind = VerdictKind::Inconclusive;
        v.reasons = {"unsupported-eigenvalue"};
        return v;
    }

    v.constraint = constraint;
    v.reasons = {"thm-1.1"};
    if (constraint.admissible) {
        v.kind = VerdictKind::Constrained;
    } else {
        v.kind = VerdictKind::NoSemistableRealization;
        const mpz_class n(constraint.rank);
        if (n % constraint.slope_class.den() != 0)
            v.reasons.push_back("slope-class-has-no-integral-degree");
        else
            v.reasons.push_back("genus-0-integral-slope");
    }
    return v;
}

}  // namespace

Verdict thm_sums_verdict(const RepAnalysis& a1, const RepAnalysis& a2) {
    if (a1.punctures != a2.punctures)
        throw ShapeMismatch("summands have different puncture counts");

    std::vector<std::string> failures;
    collect_summand_failures(a1, "summand1", failures);
    collect_summand_failures(a2, "summand2", failures);

    if (failures.empty()) {
        // Hypotheses so far guarantee single eigenvalues at every puncture.
        for (int i = 0; i < a1.punctures; ++i) {
            const auto& l1 = a1.mono.punctures[static_cast<size_t>(i)].lambda;
            const auto& l2 = a2.mono.punctures[static_cast<size_t>(i)].lambda;
            if (*l1 == *l2) failures.push_back("lambda-equal:p" + std::to_string(i + 1));
        }
        const auto prod1 = product_of_lambdas(a1);
        const auto prod2 = product_of_lambdas(a2);
        if (prod1 && prod2 && *prod1 == *prod2) failures.push_back("product-equal");
    }

    Verdict v;
    if (failures.empty()) {
        v.kind = VerdictKind::NoSemistableRealization;
        v.reasons = {"thm-3.1"};
    } else {
        v.kind = VerdictKind::Inconclusive;
        v.reasons = std::move(failures);
    }
    return v;
}

Verdict realizability_report(const RepInput& input) {
    if (std::holds_alternative<SurfaceRepresentation>(input))
        return report_single(std::get<SurfaceRepresentation>(input));

    const auto& sum = std::get<DirectSumRepresentation>(input);
    if (!is_valid(sum)) throw InvalidRepresentation("group relation fails in a summand");
    if (sum.summands.size() == 1) return report_single(sum.summands.front());
    if (sum.summands.size() != 2) {
        Verdict v;
        v.kind = VerdictKind::Inconclusive;
        v.reasons = {"direct-sum-arity-unsupported"};
        return v;
    }
    return thm_sums_verdict(analyze_representation(sum.summands[0]),
                            analyze_representation(sum.summands[1]));
}

}  // namespace semistab
