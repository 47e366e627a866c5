#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semistab/surface_rep.hpp"
#include "semistab/twisted_matrix.hpp"

namespace semistab {

// Exact eigenvalue of a twisted matrix: (root of unity) * (non-negative
// rational). Normalized so the sign of the rational part is folded into the
// unity part (and the unity part of 0 is 1); the value is a root of unity
// exactly when scale == 1. Zero only occurs for singular inputs, which never
// arise from representations but are legal for spectral bookkeeping.
struct Eigenvalue {
    UnityRoot unity;
    Rational scale;

    Eigenvalue(UnityRoot u, Rational s) : unity(u), scale(std::move(s)) {
        if (scale.sign() < 0) {
            unity = unity * UnityRoot::minus_one();
            scale = -scale;
        }
        if (scale.is_zero()) unity = UnityRoot::one();
    }

    bool is_unity_root() const { return scale.is_one(); }
    const UnityRoot& as_unity_root() const {
        if (!is_unity_root()) throw UnsupportedEigenvalue("eigenvalue is not a root of unity: " + str());
        return unity;
    }

    bool operator==(const Eigenvalue& o) const { return unity == o.unity && scale == o.scale; }
    bool operator!=(const Eigenvalue& o) const { return !(*this == o); }
    bool operator<(const Eigenvalue& o) const {
        if (unity != o.unity) return unity < o.unity;
        return scale < o.scale;
    }

    std::string str() const {
        if (unity.is_identity()) return scale.str();
        if (unity.order() == 2) return (-scale).str();
        return scale.is_one() ? unity.str() : unity.str() + "*" + scale.str();
    }
};

// Jordan partition: block sizes, descending.
using Partition = std::vector<int>;

// exp(scale * M) = sum_{k < n} (scale M)^k / k! for nilpotent M.
RationalMatrix nilpotent_exp(const RationalMatrix& m, const Rational& scale);

// log U = sum_{1 <= k < n} (-1)^{k+1} (U - I)^k / k for unipotent U;
// inverse of nilpotent_exp(., 1).
RationalMatrix unipotent_log(const RationalMatrix& u);

// Eigenvalues of twist * body, exact; sorted ascending with multiplicities.
std::vector<std::pair<Eigenvalue, int>> spectrum(const TwistedMatrix& m);

// Jordan block sizes for lambda, decoded from the rank sequence
// r_k = rank((M - lambda I)^k): #blocks of size >= k is r_{k-1} - r_k.
Partition jordan_type(const TwistedMatrix& m, const Eigenvalue& lambda);

// True iff M has a single eigenvalue lambda and rank(M - lambda I) = n - 1;
// returns lambda when true.
std::pair<bool, std::optional<Eigenvalue>> is_single_jordan_block(const TwistedMatrix& m);

// Per-puncture spectral report for a representation's local monodromies.
struct PunctureAnalysis {
    bool spectrum_rational = true;  // false when SpectrumNotRational was hit
    std::vector<std::pair<Eigenvalue, int>> eigenvalues;
    std::vector<Partition> jordan;  // parallel to eigenvalues
    bool single_eigenvalue = false;
    bool single_block = false;
    std::optional<Eigenvalue> lambda;  // set when single_eigenvalue
};

struct MonodromyAnalysis {
    int rank = 0;
    std::vector<PunctureAnalysis> punctures;

    bool all_single_block() const {
        for (const auto& p : punctures)
            if (!p.single_block) return false;
        return true;
    }
};

MonodromyAnalysis analyze_monodromy(const SurfaceRepresentation& rep);

}  // namespace semistab
