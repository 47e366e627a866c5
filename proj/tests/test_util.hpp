#pragma once

#include <random>
#include <vector>

#include "semistab/matrix.hpp"

namespace semistab::testing {

inline RationalMatrix mat(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<Rational> entries;
    for (const auto& row : rows)
        for (long x : row) entries.emplace_back(x);
    return RationalMatrix(n, std::move(entries));
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound = 9, long den_bound = 9) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long num_bound = 9,
                                        long den_bound = 9) {
    while (true) {
        Rational r = random_rational(rng, num_bound, den_bound);
        if (!r.is_zero()) return r;
    }
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, int n, long bound = 3) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rational(entry(rng));
    return m;
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, int n, long bound = 3) {
    while (true) {
        RationalMatrix m = random_matrix(rng, n, bound);
        if (m.rank() == n) return m;
    }
}

inline RationalMatrix random_strict_upper(std::mt19937_64& rng, int n, long num_bound = 5,
                                          long den_bound = 3) {
    RationalMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.at(i, j) = random_rational(rng, num_bound, den_bound);
    return m;
}

}  // namespace semistab::testing
