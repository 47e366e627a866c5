#pragma once

#include <variant>
#include <vector>

#include "semistab/twisted_matrix.hpp"

namespace semistab {

// Representation of the fundamental group of a genus-g surface with m
// punctures: matrices for the generators a_1, b_1, ..., a_g, b_g,
// c_1, ..., c_m in that fixed order. The representation is a homomorphism
// exactly when relation_defect() is the identity.
struct SurfaceRepresentation {
    SurfaceRepresentation(int genus, int punctures, int rank,
                          std::vector<TwistedMatrix> a, std::vector<TwistedMatrix> b,
                          std::vector<TwistedMatrix> c);

    int genus;
    int punctures;
    int rank;
    std::vector<TwistedMatrix> A;
    std::vector<TwistedMatrix> B;
    std::vector<TwistedMatrix> C;
};

// Formal direct sum of representations on the same punctured surface,
// kept composite so everything stays in rational arithmetic; flatten() is
// the explicit cyclotomic escape hatch.
struct DirectSumRepresentation {
    explicit DirectSumRepresentation(std::vector<SurfaceRepresentation> parts);

    int genus() const { return summands.front().genus; }
    int punctures() const { return summands.front().punctures; }
    int total_rank() const;

    std::vector<SurfaceRepresentation> summands;
};

using RepInput = std::variant<SurfaceRepresentation, DirectSumRepresentation>;

// prod_i [A_i, B_i] * prod_j C_j; identity certifies validity.
TwistedMatrix relation_defect(const SurfaceRepresentation& rep);

bool is_valid(const SurfaceRepresentation& rep);
bool is_valid(const DirectSumRepresentation& rep);

// Conjugates every generator by P (P X P^{-1}).
SurfaceRepresentation conjugate(const SurfaceRepresentation& rep, const RationalMatrix& p);

DirectSumRepresentation direct_sum(const SurfaceRepresentation& r1,
                                   const SurfaceRepresentation& r2);

// Block-diagonal cyclotomic form of a direct sum, at the lcm conductor of
// all twists.
struct FlattenedRepresentation {
    int genus;
    int punctures;
    int rank;
    long conductor;
    std::vector<Matrix<CyclotomicNumber>> A;
    std::vector<Matrix<CyclotomicNumber>> B;
    std::vector<Matrix<CyclotomicNumber>> C;
};

FlattenedRepresentation flatten(const DirectSumRepresentation& rep);

Matrix<CyclotomicNumber> flat_relation_defect(const FlattenedRepresentation& rep);
bool is_valid(const FlattenedRepresentation& rep);

}  // namespace semistab
