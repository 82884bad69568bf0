#ifndef SELIM_LINALG_HPP
#define SELIM_LINALG_HPP

/* Exact integer linear algebra: fraction-free (Bareiss) determinants,
 * determinants over F_p, and Hadamard row bounds.  This is the substrate
 * under the resultant, subresultant and discriminant matrices.
 */

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>
#include <gmpxx.h>
#include "selim/modarith.hpp"

namespace selim {

struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;   // row-major

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c) {
        if (r == 0 || c == 0) throw std::invalid_argument("IntMatrix: dimensions >= 1");
    }
    mpz_class& at(size_t i, size_t j) { return a[i * cols + j]; }
    const mpz_class& at(size_t i, size_t j) const { return a[i * cols + j]; }
    bool square() const { return rows == cols; }
};

/* Bareiss fraction-free elimination.  All divisions are exact, intermediate
 * entries are minors of the input, which keeps the swell polynomial.
 */
inline mpz_class det_exact(IntMatrix M) {
    if (!M.square()) throw std::invalid_argument("det_exact: non-square input");
    const size_t n = M.rows;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            size_t piv = k + 1;
            while (piv < n && M.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (size_t j = k; j < n; ++j) std::swap(M.at(k, j), M.at(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : mpz_class(-M.at(n - 1, n - 1));
}

inline std::uint64_t det_mod_p(const IntMatrix& M, std::uint64_t p) {
    if (!M.square()) throw std::invalid_argument("det_mod_p: non-square input");
    if (!is_prime_u64(p)) throw std::invalid_argument("det_mod_p: p not prime");
    PrimeField F(p);
    const size_t n = M.rows;
    std::vector<std::uint64_t> a(n * n);
    for (size_t i = 0; i < n * n; ++i) a[i] = F.from_mpz(M.a[i]);
    std::uint64_t det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            det = F.neg(det);
        }
        std::uint64_t d = a[k * n + k];
        det = F.mul(det, d);
        std::uint64_t di = F.inv(d);
        for (size_t i = k + 1; i < n; ++i) {
            std::uint64_t f = F.mul(a[i * n + k], di);
            if (!f) continue;
            std::uint64_t fneg = F.neg(f);
            for (size_t j = k; j < n; ++j)
                a[i * n + j] = F.red(a[i * n + j] + fneg * a[k * n + j]);
        }
    }
    return det;
}

// log of the Hadamard bound: sum over rows of (1/2) log(sum of squares)
inline double hadamard_log_bound(const IntMatrix& M) {
    if (!M.square()) throw std::invalid_argument("hadamard_bound: non-square input");
    double s = 0;
    for (size_t i = 0; i < M.rows; ++i) {
        mpz_class q = 0;
        for (size_t j = 0; j < M.cols; ++j) q += M.at(i, j) * M.at(i, j);
        if (q == 0) return -std::numeric_limits<double>::infinity();
        long exp2;
        double m = mpz_get_d_2exp(&exp2, q.get_mpz_t());
        s += 0.5 * (std::log(m) + (double)exp2 * std::log(2.0));
    }
    return s;
}

inline double hadamard_bound(const IntMatrix& M) {
    return std::exp(hadamard_log_bound(M));
}

// natural log of |z| (z nonzero), accurate enough for bound checks
inline double log_abs(const mpz_class& z) {
    if (z == 0) throw std::domain_error("log_abs(0)");
    long exp2;
    double m = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(m)) + (double)exp2 * std::log(2.0);
}

} // namespace selim

#endif
