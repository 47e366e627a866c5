#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace semistab {

// Prime factorization (trial division then Pollard rho; inputs here are
// characteristic-polynomial constants, small in practice).
std::map<mpz_class, int> factorize(mpz_class n);

// All positive divisors, ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

long euler_phi(long n);

// Positive divisors of a machine integer, ascending.
std::vector<long> divisors_long(long n);

// Coefficients of the N-th cyclotomic polynomial, ascending degree,
// length euler_phi(N) + 1, integral and monic.
std::vector<mpz_class> cyclotomic_polynomial(long n);

}  // namespace semistab
