#include "semistab/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

#include "semistab/errors.hpp"

namespace semistab {

namespace {

bool is_probable_prime(const mpz_class& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

mpz_class pollard_rho(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xb5297a4dUL);
    while (true) {
        mpz_class x = rng.get_z_range(n - 2) + 2;
        mpz_class y = x;
        mpz_class c = rng.get_z_range(n - 1) + 1;
        mpz_class d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle without factor, retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, int> factorize(mpz_class n) {
    if (n < 0) n = -n;
    std::map<mpz_class, int> out;
    if (n <= 1) return out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (n % p == 0) {
            out[mpz_class(p)] += 1;
            n /= p;
        }
    }
    // Trial division up to 10^5 clears everything small before rho.
    for (long p = 41; p < 100000 && n > 1; p += 2) {
        while (n % p == 0) {
            out[mpz_class(p)] += 1;
            n /= p;
        }
    }
    if (n > 1) factor_into(n, out);
    return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
    auto fac = factorize(n);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        const size_t base = divs.size();
        mpz_class pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

long euler_phi(long n) {
    if (n <= 0) throw PreconditionFailed("euler_phi needs n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors_long(long n) {
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Exact division of integer polynomials, remainder known to be zero.
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
    const size_t dn = num.size() - 1;
    const size_t dd = den.size() - 1;
    std::vector<mpz_class> quot(dn - dd + 1, mpz_class(0));
    for (size_t k = dn - dd + 1; k-- > 0;) {
        mpz_class c = num[k + dd] / den[dd];
        quot[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
    if (n <= 0) throw PreconditionFailed("cyclotomic polynomial needs n >= 1");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<mpz_class> num(static_cast<size_t>(n) + 1, mpz_class(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d : divisors_long(n)) {
        if (d == n) continue;
        num = poly_divide_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

}  // namespace semistab
