#pragma once

#include <optional>
#include <vector>

#include "semistab/matrix.hpp"
#include "semistab/surface_rep.hpp"

namespace semistab {

// Incrementally maintained row-echelon basis of a subspace of Q^d.
class VectorSpan {
public:
    explicit VectorSpan(int ambient_dim) : dim_(ambient_dim) {}

    // Returns true when v was independent of the current span.
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return dim_; }
    const std::vector<std::vector<Rational>>& basis() const { return rows_; }

private:
    // Reduces v against the basis; returns the pivot index or -1 if v reduced
    // to zero.
    int reduce(std::vector<Rational>& v) const;

    int dim_;
    std::vector<std::vector<Rational>> rows_;  // echelonized, pivots increasing
    std::vector<int> pivots_;
};

// Dimension of the unital matrix algebra generated by the tuple, via span
// closure under left multiplication (Burnside criterion support).
int algebra_dimension(const std::vector<RationalMatrix>& generators);

// Burnside: the tuple acts irreducibly on C^n iff the generated algebra is
// all of n x n matrices. Decided over Q, which is equivalent for rational
// generators since dim_C(A tensor C) = dim_Q(A).
bool tuple_irreducible(const std::vector<RationalMatrix>& generators);

// Strips twists (scalars preserve every subspace) and applies the Burnside
// criterion to the generator bodies. Rank 1 is always irreducible.
bool is_irreducible(const SurfaceRepresentation& rep);

// Best-effort invariant-subspace search: span closures of rational
// eigenvectors of the generator bodies. A returned basis is always a proper
// nonzero invariant subspace; nullopt is NOT a proof of irreducibility.
std::optional<std::vector<std::vector<Rational>>> invariant_subspace_witness(
    const SurfaceRepresentation& rep);

// w = M v.
std::vector<Rational> mat_vec(const RationalMatrix& m, const std::vector<Rational>& v);

}  // namespace semistab
