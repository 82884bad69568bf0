#ifndef SELIM_UNIPOLY_HPP
#define SELIM_UNIPOLY_HPP

/* Exact univariate polynomials over Z: arithmetic, subresultant-PRS gcd,
 * square-free parts, the bordered-matrix discriminant and first subresultant,
 * Sturm real-root counting, rational roots, mod-p reductions and the
 * classical Mignotte / Cauchy coefficient and root bounds.
 */

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>
#include <gmpxx.h>
#include "selim/linalg.hpp"
#include "selim/intfactor.hpp"

namespace selim {

struct UniPoly {
    // coefficient of x^i at index i; normalized (no leading zeros), zero = empty
    std::vector<mpz_class> c;

    UniPoly() = default;
    UniPoly(std::initializer_list<long> v) {
        for (long x : v) c.emplace_back(x);
        normalize();
    }
    explicit UniPoly(std::vector<mpz_class> v) : c(std::move(v)) { normalize(); }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    const mpz_class& lc() const {
        static const mpz_class zero = 0;
        return c.empty() ? zero : c.back();
    }
    mpz_class coeff(int i) const {
        return (i >= 0 && i < (int)c.size()) ? c[i] : mpz_class(0);
    }
    static UniPoly x() { return UniPoly{0, 1}; }
    static UniPoly constant(const mpz_class& v) {
        UniPoly p;
        if (v != 0) p.c.push_back(v);
        return p;
    }
};

inline UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    r.normalize();
    return r;
}

inline UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] -= b.c[i];
    }
    r.normalize();
    return r;
}

inline UniPoly operator-(const UniPoly& a) {
    UniPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

inline UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    UniPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

inline UniPoly operator*(const UniPoly& a, const mpz_class& s) {
    if (s == 0) return {};
    UniPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

inline bool operator==(const UniPoly& a, const UniPoly& b) { return a.c == b.c; }

inline UniPoly derivative(const UniPoly& f) {
    UniPoly r;
    if (f.deg() < 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = f.c[i] * (long)i;
    r.normalize();
    return r;
}

inline mpz_class eval(const UniPoly& f, const mpz_class& x) {
    mpz_class r = 0;
    for (size_t i = f.c.size(); i-- > 0;) r = r * x + f.c[i];
    return r;
}

// q^deg(f) * f(p/q) as an exact integer
inline mpz_class eval_scaled(const UniPoly& f, const mpz_class& p, const mpz_class& q) {
    if (f.is_zero()) return 0;
    mpz_class r = f.c.back(), qpow = 1;
    for (size_t i = f.c.size() - 1; i-- > 0;) {
        qpow *= q;
        r = r * p + f.c[i] * qpow;
    }
    return r;
}

inline mpz_class content(const UniPoly& f) {
    mpz_class g = 0;
    for (auto& v : f.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// content removed, leading coefficient made positive
inline UniPoly primitive_part(const UniPoly& f) {
    if (f.is_zero()) return f;
    mpz_class g = content(f);
    if (f.lc() < 0) g = -g;
    UniPoly r = f;
    for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

// exact division; throws if g does not divide f over Z
inline UniPoly exact_divide(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw std::domain_error("exact_divide: by zero");
    if (f.is_zero()) return {};
    if (f.deg() < g.deg()) throw std::domain_error("exact_divide: not divisible");
    UniPoly r = f, q;
    q.c.assign(f.deg() - g.deg() + 1, mpz_class(0));
    for (int k = f.deg() - g.deg(); k >= 0; --k) {
        if (r.deg() != g.deg() + k) {
            if (r.deg() < g.deg() + k) continue;
            throw std::domain_error("exact_divide: not divisible");
        }
        mpz_class t;
        mpz_class rem;
        mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), r.lc().get_mpz_t(), g.lc().get_mpz_t());
        if (rem != 0) throw std::domain_error("exact_divide: not divisible");
        q.c[k] = t;
        UniPoly shift;
        shift.c.assign(k + 1, mpz_class(0));
        shift.c[k] = t;
        r = r - shift * g;
    }
    if (!r.is_zero()) throw std::domain_error("exact_divide: not divisible");
    q.normalize();
    return q;
}

/* Pseudo-remainder: returns r with lc(g)^(deg f - deg g + 1) * f = q*g + r.
 * sign_fixed variant post-multiplies so the result has the sign of the true
 * rational remainder times a positive constant (needed by Sturm chains).
 */
inline UniPoly prem(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) throw std::domain_error("prem: by zero");
    UniPoly r = f;
    int dg = g.deg();
    while (!r.is_zero() && r.deg() >= dg) {
        int k = r.deg() - dg;
        mpz_class cr = r.lc();
        UniPoly shift;
        shift.c.assign(k + 1, mpz_class(0));
        shift.c[k] = cr;
        r = r * g.lc() - shift * g;
    }
    return r;
}

inline UniPoly prem_sign_fixed(const UniPoly& f, const UniPoly& g) {
    UniPoly r = prem(f, g);
    int e = f.deg() - g.deg() + 1;
    if (g.lc() < 0 && (e & 1)) for (auto& v : r.c) v = -v;
    return r;
}

/* GCD by the subresultant polynomial remainder sequence (Knuth 4.6.1,
 * Algorithm C), primitive result with positive leading coefficient.
 */
inline UniPoly gcd_poly(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero()) return primitive_part(g);
    if (g.is_zero()) return primitive_part(f);
    mpz_class cf = content(f), cg = content(g), cc;
    mpz_gcd(cc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    UniPoly a = primitive_part(f), b = primitive_part(g);
    if (a.deg() < b.deg()) std::swap(a, b);
    mpz_class gc = 1, h = 1;
    while (true) {
        int d = a.deg() - b.deg();
        UniPoly r = prem(a, b);
        if (r.is_zero()) break;
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), (unsigned long)d);
        mpz_class div = gc * hd;
        for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
        a = b;
        b = r;
        gc = a.lc();
        if (d >= 1) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), gc.get_mpz_t(), (unsigned long)d);
            if (d == 1) h = gd;
            else {
                mpz_class hd1;
                mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), (unsigned long)(d - 1));
                mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
            }
        }
    }
    UniPoly out = primitive_part(b);
    return out * cc;
}

// f / gcd(f, f'), primitive, positive leading coefficient
inline UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero input");
    if (f.deg() == 0) return UniPoly{1};
    UniPoly g = gcd_poly(f, derivative(f));
    UniPoly q = exact_divide(primitive_part(f), primitive_part(g));
    return primitive_part(q);
}

// Sylvester-matrix resultant (exact); test oracle and small-scale tool
inline mpz_class resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    int d1 = f.deg(), d2 = g.deg();
    if (d1 == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.c[0].get_mpz_t(), (unsigned long)d2);
        return r;
    }
    if (d2 == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.c[0].get_mpz_t(), (unsigned long)d1);
        return r;
    }
    IntMatrix M(d1 + d2, d1 + d2);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j <= d1; ++j) M.at(i, i + j) = f.c[d1 - j];
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j <= d2; ++j) M.at(d2 + i, i + j) = g.c[d2 - j];
    return det_exact(M);
}

/* Discriminant via the (2D-1) x (2D-1) bordered matrix: first D-1 rows carry
 * the coefficients of f, the last D rows those of f'; the determinant divided
 * by the leading coefficient and signed by (-1)^(D(D-1)/2).
 */
inline mpz_class discriminant(const UniPoly& f) {
    int D = f.deg();
    if (D < 1) throw std::domain_error("discriminant: degree 0 input");
    if (D == 1) return 1;
    IntMatrix M(2 * D - 1, 2 * D - 1);
    for (int i = 0; i < D - 1; ++i)
        for (int j = 0; j <= D; ++j) M.at(i, i + j) = f.c[j];
    for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) M.at(D - 1 + i, i + j) = f.c[j + 1] * (long)(j + 1);
    mpz_class det = det_exact(M);
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), det.get_mpz_t(), f.lc().get_mpz_t());
    if (((long)D * (D - 1) / 2) & 1) q = -q;
    return q;
}

/* First subresultant of (f, g) as the pair (R0, R1) with R0 + R1*t the
 * degree-one subresultant: dets of the (d1+d2-2) x (d1+d2-1) coefficient
 * matrix (d1-1 rows of g, d2-1 rows of f) with the second-to-last (R0)
 * resp. last (R1) column deleted.  Requires d1, d2 >= 2.
 */
struct SubresultantPair {
    mpz_class R0, R1;
};

inline SubresultantPair first_subresultant(const UniPoly& f, const UniPoly& g) {
    int d1 = f.deg(), d2 = g.deg();
    if (d1 < 2 || d2 < 2) throw std::domain_error("first_subresultant: need degrees >= 2");
    int rows = d1 + d2 - 2, cols = d1 + d2 - 1;
    auto build = [&](int skip) {
        IntMatrix M(rows, rows);
        for (int i = 0; i < d1 - 1; ++i) {
            int cc = 0;
            for (int j = 0; j < cols; ++j) {
                if (j == skip) continue;
                int k = j - i;
                M.at(i, cc++) = (k >= 0 && k <= d2) ? g.c[k] : mpz_class(0);
            }
        }
        for (int i = 0; i < d2 - 1; ++i) {
            int cc = 0;
            for (int j = 0; j < cols; ++j) {
                if (j == skip) continue;
                int k = j - i;
                M.at(d1 - 1 + i, cc++) = (k >= 0 && k <= d1) ? f.c[k] : mpz_class(0);
            }
        }
        return M;
    };
    SubresultantPair out;
    out.R0 = det_exact(build(cols - 2));
    out.R1 = det_exact(build(cols - 1));
    return out;
}

// ------------------------------------------------------------------ Sturm

namespace detail {

inline int sign_of(const mpz_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// strip positive content, preserving signs
inline UniPoly strip_positive_content(const UniPoly& f) {
    if (f.is_zero()) return f;
    mpz_class g = content(f);
    UniPoly r = f;
    for (auto& v : r.c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return r;
}

}  // namespace detail

// number of distinct real roots of f (f nonzero)
inline int real_root_count(const UniPoly& f_in) {
    if (f_in.is_zero()) throw std::domain_error("real_root_count: zero polynomial");
    if (f_in.deg() == 0) return 0;
    UniPoly f = squarefree_part(f_in);
    std::vector<UniPoly> chain{f, derivative(f)};
    while (!chain.back().is_zero() && chain.back().deg() >= 1) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = prem_sign_fixed(a, b);
        if (r.is_zero()) break;
        chain.push_back(detail::strip_positive_content(-r));
    }
    auto variations = [&](bool at_plus_inf) {
        int v = 0, prev = 0;
        for (auto& p : chain) {
            if (p.is_zero()) continue;
            int s = detail::sign_of(p.lc());
            if (!at_plus_inf && (p.deg() & 1)) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++v;
            if (s != 0) prev = s;
        }
        return v;
    };
    return variations(false) - variations(true);
}

// all rational roots, as (num, den) pairs with den > 0 and gcd(num, den) = 1
inline std::vector<std::pair<mpz_class, mpz_class>> rational_roots(const UniPoly& f_in) {
    if (f_in.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    std::vector<std::pair<mpz_class, mpz_class>> out;
    UniPoly f = primitive_part(f_in);
    // strip powers of x
    size_t v = 0;
    while (v < f.c.size() && f.c[v] == 0) ++v;
    if (v > 0) {
        out.emplace_back(0, 1);
        f.c.erase(f.c.begin(), f.c.begin() + v);
    }
    if (f.deg() < 1) return out;
    mpz_class a0 = f.c[0];
    if (a0 < 0) a0 = -a0;
    mpz_class ad = f.lc();
    if (ad < 0) ad = -ad;
    auto ps = divisors(a0);
    auto qs = divisors(ad);
    for (auto& p : ps)
        for (auto& q : qs) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            if (eval_scaled(f, p, q) == 0) out.emplace_back(p, q);
            mpz_class mp = -p;
            if (eval_scaled(f, mp, q) == 0) out.emplace_back(mp, q);
        }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) {
        return a.first * b.second < b.first * a.second;
    });
    return out;
}

// ------------------------------------------------------------------ mod p

inline ModPoly reduce_mod(const UniPoly& f, const PrimeField& F) {
    ModPoly r;
    r.c.resize(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) r.c[i] = F.from_mpz(f.c[i]);
    r.normalize();
    return r;
}

struct ModpRootCount {
    bool degenerate = false;   // f vanishes identically mod p
    int count = 0;
};

// count of distinct roots of f in Z/pZ, p prime
inline ModpRootCount modp_distinct_roots(const UniPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw std::domain_error("modp_distinct_roots: zero polynomial");
    if (!is_prime_u64(p) || p >= (1ull << 31)) throw std::invalid_argument("modp_distinct_roots: bad prime");
    PrimeField F(p);
    ModPoly fp = reduce_mod(f, F);
    if (fp.is_zero()) return {true, 0};
    if (fp.deg() == 0) return {false, 0};
    return {false, mp_count_roots(F, fp)};
}

// ------------------------------------------------------------------ bounds

// Mignotte: any divisor of a degree-D polynomial with |coeffs| <= c has
// coefficients bounded by sqrt(D+1) * 2^D * c
inline double mignotte_bound(int D, double c) {
    if (D < 0 || c < 0) throw std::invalid_argument("mignotte_bound: bad input");
    return std::sqrt((double)D + 1.0) * std::ldexp(1.0, D) * c;
}

inline double mignotte_log_bound(int D, double log_c) {
    return 0.5 * std::log((double)D + 1.0) + D * std::log(2.0) + log_c;
}

// Cauchy: all complex roots have |z| <= 1 + max|a_i| / |a_D|
inline double cauchy_root_bound(const UniPoly& f) {
    if (f.deg() < 1) throw std::domain_error("cauchy_root_bound: degree < 1");
    double m = 0;
    for (int i = 0; i < f.deg(); ++i)
        if (f.c[i] != 0) m = std::max(m, std::exp(log_abs(f.c[i]) - log_abs(f.lc())));
    return 1.0 + m;
}

// bound on log|disc(g)| for g the square-free part (degree D') of a degree-D
// polynomial with |coeffs| <= c:  D'(D log2 + log(D'+1) + log c)
inline double disc_of_squarefree_bound(int D, int Dprime, double c) {
    if (D < Dprime || Dprime < 1 || c < 1) throw std::invalid_argument("disc_of_squarefree_bound: bad input");
    return (double)Dprime * ((double)D * std::log(2.0) + std::log((double)Dprime + 1.0) + std::log(c));
}

// ------------------------------------------------------------------ misc

inline std::string to_string(const UniPoly& f) {
    std::ostringstream os;
    if (f.is_zero()) return "0";
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (i) os << ' ';
        os << f.c[i].get_str();
    }
    return os.str();
}

// f(a + b*x), exact
inline UniPoly compose_linear(const UniPoly& f, const mpz_class& a, const mpz_class& b) {
    UniPoly r;
    UniPoly lin;
    lin.c = {a, b};
    lin.normalize();
    for (size_t i = f.c.size(); i-- > 0;) {
        r = r * lin;
        r = r + UniPoly::constant(f.c[i]);
    }
    return r;
}

inline double sigma_height(const UniPoly& f) {
    // max over coefficients of log|c|; 0 for the zero polynomial
    double s = 0;
    for (auto& v : f.c)
        if (v != 0) s = std::max(s, log_abs(v));
    return s;
}

} // namespace selim

#endif
