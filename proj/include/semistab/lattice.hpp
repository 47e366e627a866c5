#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semistab/rational.hpp"
#include "semistab/unity_root.hpp"

namespace semistab {

// Residue/degree shadow of a rank-1 piece (the subbundle F or the quotient
// E/F): per-puncture local monodromy eigenvalue lambda(p), a residue
// representative beta(p) with e^{2 pi i beta(p)} = lambda(p), and the
// degree. The Fuchs identity degree = -sum beta is structural and re-checked
// after every mutation.
class LatticeLine {
public:
    LatticeLine(std::vector<UnityRoot> lambda, std::vector<Rational> beta);

    int punctures() const { return static_cast<int>(lambda_.size()); }
    const std::vector<UnityRoot>& lambda() const { return lambda_; }
    const std::vector<Rational>& beta() const { return beta_; }
    const Rational& degree() const { return degree_; }

    // beta(p) -> beta(p) - 1, degree -> degree + 1 (one elementary lattice
    // modification at p along this line's eigenspace).
    LatticeLine lowered_at(int p) const;

private:
    void check_invariants() const;

    std::vector<UnityRoot> lambda_;
    std::vector<Rational> beta_;
    Rational degree_;
};

// Deligne choice: beta(p) = k/N in [0, 1); requires prod lambda = 1 (rank-1
// validity), which makes the degree an integer.
LatticeLine deligne_line(const std::vector<UnityRoot>& lambdas);

// Sub/quotient pair for the extension 0 -> F -> E -> E/F -> 0.
struct LatticePair {
    LatticePair(LatticeLine sub_, LatticeLine quot_);

    Rational total_degree() const { return sub.degree() + quot.degree(); }

    LatticeLine sub;
    LatticeLine quot;
};

enum class Side { Sub, Quot };

struct GabberMove {
    int puncture = 0;  // 0-based
    Side side = Side::Sub;
};

// One elementary modification at puncture p on the chosen side; requires the
// residue eigenspaces to split there (lambda_sub(p) != lambda_quot(p)).
LatticePair gabber_move(const LatticePair& pair, int p, Side side);

// Raises the smaller-degree side at the lowest-index splitting puncture
// until deg F = deg E/F; the trace has exactly |initial degree difference|
// moves and the final total degree is even.
std::pair<LatticePair, std::vector<GabberMove>> balance(const LatticePair& pair);

// Lemma-style residue bookkeeping: sorts `full` (all pairwise differences
// must be integers) and checks that `sub` is exactly its bottom slice.
bool flag_residue_check(const std::vector<Rational>& full, const std::vector<Rational>& sub);

std::string to_string(Side side);

}  // namespace semistab
