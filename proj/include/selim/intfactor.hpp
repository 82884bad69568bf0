#ifndef SELIM_INTFACTOR_HPP
#define SELIM_INTFACTOR_HPP

/* Integer factorization support for the rational-root divisor test:
 * trial division + Pollard rho (Brent variant) on GMP integers.
 */

#include <cstdint>
#include <map>
#include <vector>
#include <stdexcept>
#include <gmpxx.h>
#include "selim/modarith.hpp"

namespace selim {

inline bool is_prime_mpz(const mpz_class& n) {
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;   // BPSW + MR rounds
}

namespace detail {

inline mpz_class rho_brent(const mpz_class& n, unsigned long c0) {
    // Brent's cycle variant of Pollard rho with f(x) = x^2 + c
    mpz_class y = 2, c = c0, m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
        mpz_class k = 0;
        while (k < r && g == 1) {
            ys = y;
            mpz_class lim = r - k;
            if (m < lim) lim = m;
            for (mpz_class i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = (ys * ys + c) % n;
            mpz_class d = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

} // namespace detail

/* Full factorization n = prod p^e (n > 0).  Throws if a composite cofactor
 * survives max_effort rho rounds (arbitrary-precision semiprimes of ~50+
 * digits are outside this project's needs).
 */
inline std::map<mpz_class, unsigned> factor_integer(mpz_class n, int max_effort = 64) {
    if (n <= 0) throw std::invalid_argument("factor_integer: need n > 0");
    std::map<mpz_class, unsigned> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    std::vector<mpz_class> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        mpz_class v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_prime_mpz(v)) {
            ++out[v];
            continue;
        }
        mpz_class d = v;
        for (int c = 1; c <= max_effort && (d == v || d == 1); ++c)
            d = detail::rho_brent(v, (unsigned long)c);
        if (d == v || d == 1) throw std::runtime_error("factor_integer: rho budget exhausted");
        stack.push_back(d);
        stack.push_back(v / d);
    }
    return out;
}

// All positive divisors of n (n > 0), unsorted.
inline std::vector<mpz_class> divisors(const mpz_class& n, int max_effort = 64) {
    auto fac = factor_integer(n, max_effort);
    std::vector<mpz_class> out{1};
    for (auto& [p, e] : fac) {
        size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

} // namespace selim

#endif
