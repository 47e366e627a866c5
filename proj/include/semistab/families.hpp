#pragma once

#include <vector>

#include "semistab/surface_rep.hpp"

namespace semistab {

// Unipotent family: C_i = exp(nu_i N) for the rank-(n-1) upper shift N and
// nu summing to zero; trivial handle matrices. All local eigenvalues are 1.
SurfaceRepresentation family1(int n, int m, const std::vector<Rational>& nu, int g);

// Bolibruch's 4x4 example on the 3-punctured line (fixed matrices);
// lambda = (1, 1, -1).
SurfaceRepresentation family2();

// Twisted variant of family2 spread over m >= 3 punctures: the first m-2
// matrices share the twist zeta(1, 2m-4), then -C2 and C3 of family2;
// product of eigenvalues is -1.
SurfaceRepresentation family3(int m, int g);

// Rank-2 family on positive genus: one nontrivial handle, parabolic
// C_i = [[1, -1/m], [0, 1]]; all local eigenvalues 1.
SurfaceRepresentation family4(int m, int g);

// Even-rank family on positive genus whose handle commutator is a single
// n x n Jordan block with eigenvalue -1; C_i = zeta(1, 2m) *
// exp(-log(-K)/m). Product of eigenvalues is -1.
SurfaceRepresentation family5(int n, int m, int g);

// The handle commutator K = A1 B1 A1^{-1} B1^{-1} of family5 (exposed for
// the structural checks on its blocks).
RationalMatrix family5_commutator(int n);

// Witness for the main non-realizability theorem at (g, m, n):
//   g=0: family3 alone (n=4) or family1(n-4) + family3;
//   g>=1: family1(1) + family5(n-1) for odd n, family4 + family5(n-2) for
//   even n.
RepInput mainthm_witness(int g, int m, int n);

// Default nu pattern used by mainthm_witness: (1, ..., 1, -(m-1)),
// normalized to sum zero; (0) when m = 1.
std::vector<Rational> default_nu(int m);

// Extends a rank-2 representation (single-block local monodromies, product
// of eigenvalues 1, m >= 2) to a rank-3 one with a one-dimensional
// subrepresentation: A_i, B_i become diag(1, -), C_i get a free gamma row
// for i < m while C_m is forced by the relation. Resamples gamma from the
// seed until every C_i is a single 3x3 Jordan block (at most 32 attempts).
SurfaceRepresentation remark52_build(const SurfaceRepresentation& rho2, unsigned long seed);

}  // namespace semistab
