#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semistab/spectral.hpp"
#include "semistab/surface_rep.hpp"

namespace semistab {

// Deligne residue representative: the unique beta in [0, 1) with
// e^{2 pi i beta} = lambda; for canonical (k, N) this is k/N.
inline Rational deligne_residue(const UnityRoot& lambda) { return lambda.exponent(); }

// -sum of all residues: the degree a logarithmic connection with these
// residues forces on the underlying bundle (Fuchs relation).
Rational fuchs_degree(const std::vector<std::vector<Rational>>& betas);

// Per-puncture local data when every local monodromy has a single
// eigenvalue that is a root of unity: lambda_i and its Deligne
// representative beta_i = k_i/N_i in [0, 1).
struct ResidueProfile {
    int rank;
    std::vector<UnityRoot> lambda;
    std::vector<Rational> beta;
};

// Builds the profile from a monodromy analysis; requires single-eigenvalue
// punctures with root-of-unity eigenvalues (UnsupportedEigenvalue /
// HypothesisNotMet otherwise).
ResidueProfile make_residue_profile(const MonodromyAnalysis& analysis);

// The set {start + t*step : t in Z}.
struct DegreeProgression {
    mpz_class start;  // normalized into [0, step)
    mpz_class step;
};

// Outcome of the slope constraint: degrees d with d/n = slope_class mod 1,
// possibly cut down by the genus-0 integrality rule.
struct SlopeConstraint {
    int rank = 0;
    Rational slope_class;  // k/N in [0,1) with prod lambda_i = zeta(k, N)
    std::optional<DegreeProgression> admissible;  // nullopt = no degree works
    std::vector<Rational> forced_beta;
    bool genus_zero_applied = false;
};

// The necessary condition a semistable realization must satisfy when the
// representation is reducible (or rank 1) and every local monodromy is a
// single Jordan block: each residue is the Deligne representative and
// e^{2 pi i mu(E)} = prod lambda_i. On genus 0 the slope must additionally
// be an integer.
SlopeConstraint thm_ss_constraint(const SurfaceRepresentation& rep,
                                  const MonodromyAnalysis& analysis, bool reducible);

enum class VerdictKind { NoSemistableRealization, Constrained, Inconclusive };

std::string to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<SlopeConstraint> constraint;
    std::vector<std::string> reasons;
};

// Monodromy analysis bundled with the reducibility decision; the input
// shape expected by the direct-sum verdict.
struct RepAnalysis {
    int rank = 0;
    int genus = 0;
    int punctures = 0;
    bool reducible = false;
    MonodromyAnalysis mono;
};

RepAnalysis analyze_representation(const SurfaceRepresentation& rep);

// Direct-sum obstruction: rho_1 (+) rho_2 has no semistable realization when
// both summands are reducible (or rank 1) with all-single-block local
// monodromy, lambda_i^1 != lambda_i^2 at every puncture, and
// prod lambda^1 != prod lambda^2. Anything else is Inconclusive, with the
// failed conditions listed.
Verdict thm_sums_verdict(const RepAnalysis& a1, const RepAnalysis& a2);

// Orchestrator: validity, spectral analysis, reducibility, then the slope
// constraint (single representations) or the direct-sum obstruction
// (two-summand sums). Throws InvalidRepresentation when the group relation
// fails.
Verdict realizability_report(const RepInput& input);

}  // namespace semistab
