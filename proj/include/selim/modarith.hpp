#ifndef SELIM_MODARITH_HPP
#define SELIM_MODARITH_HPP

/* Word-size prime fields and the modular toolbox used by the heavy
 * determinant and RUR machinery: 31-bit primes with Barrett reduction
 * (fast enough for O(N^3) eliminations), dense polynomials over F_p,
 * incremental CRT and rational reconstruction over GMP integers.
 */

#include <cstdint>
#include <vector>
#include <random>
#include <stdexcept>
#include <gmpxx.h>

namespace selim {

// ---------------------------------------------------------------- primality

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)((unsigned __int128)a * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

// ------------------------------------------------------------- prime field

/* F_p for p < 2^31, Barrett-style reduction of 64-bit values.
 * Elements are plain uint64_t in [0, p).
 */
struct PrimeField {
    std::uint64_t p;
    std::uint64_t magic;   // floor(2^64 / p)

    explicit PrimeField(std::uint64_t p_) : p(p_) {
        if (p < 2 || p >= (1ull << 31)) throw std::invalid_argument("PrimeField: need 2 <= p < 2^31");
        magic = (std::uint64_t)(~(unsigned __int128)0 / p);
    }

    // reduce any 64-bit value
    std::uint64_t red(std::uint64_t x) const {
        std::uint64_t q = (std::uint64_t)(((unsigned __int128)x * magic) >> 64);
        std::uint64_t r = x - q * p;
        if (r >= p) r -= p;
        return r;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return red(a * b); }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        // extended Euclid; throws on non-invertible input
        std::int64_t t = 0, nt = 1;
        std::int64_t r = (std::int64_t)p, nr = (std::int64_t)(a % p);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("PrimeField::inv: not invertible");
        if (t < 0) t += (std::int64_t)p;
        return (std::uint64_t)t;
    }
    std::uint64_t from_mpz(const mpz_class& z) const {
        mpz_class r = z % (long)p;
        if (r < 0) r += (long)p;
        return r.get_ui();
    }
    std::uint64_t from_long(long v) const {
        long r = v % (long)p;
        if (r < 0) r += (long)p;
        return (std::uint64_t)r;
    }
};

/* Deterministic stream of 31-bit primes, largest first.  Seed shifts the
 * starting point so independent consumers can draw disjoint-ish streams.
 */
struct PrimeSource {
    std::uint64_t next;
    explicit PrimeSource(std::uint64_t seed = 0) : next((1ull << 31) - 1 - 2 * (seed % 1024)) {}
    std::uint64_t operator()() {
        while (!is_prime_u64(next)) next -= 2;
        std::uint64_t p = next;
        next -= 2;
        if (next < (1ull << 30)) throw std::runtime_error("PrimeSource exhausted");
        return p;
    }
};

// --------------------------------------------------------------- F_p[x]

/* Dense univariate polynomials over F_p; coefficient of x^i at index i.
 * Normalized: no trailing zero limbs (zero polynomial = empty vector).
 */
struct ModPoly {
    std::vector<std::uint64_t> c;

    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }   // -1 for zero
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    static ModPoly x() { return ModPoly{{0, 1}}; }
    static ModPoly constant(std::uint64_t v) { return v ? ModPoly{{v}} : ModPoly{}; }
};

inline ModPoly mp_add(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
    ModPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t va = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t vb = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.add(va, vb);
    }
    r.normalize();
    return r;
}

inline ModPoly mp_sub(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
    ModPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t va = i < a.c.size() ? a.c[i] : 0;
        std::uint64_t vb = i < b.c.size() ? b.c[i] : 0;
        r.c[i] = F.sub(va, vb);
    }
    r.normalize();
    return r;
}

inline ModPoly mp_mul(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ModPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.red(r.c[i + j] + F.mul(a.c[i], b.c[j]));
    }
    r.normalize();
    return r;
}

inline ModPoly mp_scale(const PrimeField& F, const ModPoly& a, std::uint64_t s) {
    if (s == 0) return {};
    ModPoly r = a;
    for (auto& v : r.c) v = F.mul(v, s);
    r.normalize();
    return r;
}

// remainder of a by monic-izable b (b nonzero); also exposes the quotient
inline ModPoly mp_divrem(const PrimeField& F, const ModPoly& a, const ModPoly& b, ModPoly* quot = nullptr) {
    if (b.is_zero()) throw std::domain_error("mp_divrem: division by zero");
    ModPoly r = a, q;
    int db = b.deg();
    std::uint64_t li = F.inv(b.c.back());
    if (r.deg() >= db) q.c.assign(r.deg() - db + 1, 0);
    while (r.deg() >= db) {
        std::uint64_t f = F.mul(r.c.back(), li);
        int shift = r.deg() - db;
        q.c[shift] = f;
        for (int i = 0; i <= db; ++i)
            r.c[shift + i] = F.sub(r.c[shift + i], F.mul(f, b.c[i]));
        r.normalize();
    }
    if (quot) { q.normalize(); *quot = q; }
    return r;
}

inline ModPoly mp_gcd(const PrimeField& F, ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = mp_divrem(F, a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = mp_scale(F, a, F.inv(a.c.back()));   // monic
    return a;
}

inline ModPoly mp_deriv(const PrimeField& F, const ModPoly& a) {
    ModPoly r;
    if (a.deg() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F.mul(a.c[i], i % F.p);
    r.normalize();
    return r;
}

inline std::uint64_t mp_eval(const PrimeField& F, const ModPoly& a, std::uint64_t x) {
    std::uint64_t r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

// a^e mod m (m nonzero, deg m >= 1)
inline ModPoly mp_powmod(const PrimeField& F, ModPoly a, mpz_class e, const ModPoly& m) {
    ModPoly r = ModPoly::constant(1);
    a = mp_divrem(F, a, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = mp_divrem(F, mp_mul(F, r, a), m);
        a = mp_divrem(F, mp_mul(F, a, a), m);
        e >>= 1;
    }
    return r;
}

// x^p - x mod f, gcd with f: product of the distinct linear factors of f over F_p
inline ModPoly mp_linear_part(const PrimeField& F, const ModPoly& f) {
    if (f.deg() < 1) return {};
    ModPoly xp = mp_powmod(F, ModPoly::x(), mpz_class((unsigned long)F.p), f);
    ModPoly d = mp_sub(F, xp, ModPoly::x());
    return mp_gcd(F, f, d);
}

// number of distinct roots of f in F_p (f nonzero mod p)
inline int mp_count_roots(const PrimeField& F, const ModPoly& f) {
    if (f.is_zero()) throw std::domain_error("mp_count_roots: zero polynomial");
    ModPoly g = mp_linear_part(F, f);
    return g.deg() < 0 ? 0 : g.deg();
}

/* All roots of f in F_p via equal-degree splitting of the linear part.
 * Deterministic given the seed.
 */
inline void mp_roots(const PrimeField& F, const ModPoly& f, std::vector<std::uint64_t>& out,
                     std::uint64_t seed = 12345) {
    ModPoly g = mp_linear_part(F, f);
    out.clear();
    if (g.deg() < 1) return;
    std::mt19937_64 rng(seed ^ F.p);
    std::vector<ModPoly> stack{g};
    while (!stack.empty()) {
        ModPoly h = stack.back();
        stack.pop_back();
        if (h.deg() == 1) {
            // monic x + c -> root -c
            out.push_back(F.neg(F.mul(h.c[0], F.inv(h.c[1]))));
            continue;
        }
        if (h.c[0] == 0) {
            out.push_back(0);
            ModPoly xm = ModPoly::x();
            ModPoly q;
            mp_divrem(F, h, xm, &q);
            stack.push_back(q);
            continue;
        }
        // random split: gcd(h, (x+a)^((p-1)/2) - 1)
        while (true) {
            std::uint64_t a = rng() % F.p;
            ModPoly shift{{a, 1}};
            ModPoly t = mp_powmod(F, shift, mpz_class((unsigned long)((F.p - 1) / 2)), h);
            t = mp_sub(F, t, ModPoly::constant(1));
            ModPoly d = mp_gcd(F, h, t);
            if (d.deg() >= 1 && d.deg() < h.deg()) {
                ModPoly q;
                mp_divrem(F, h, d, &q);
                if (!q.is_zero()) q = mp_scale(F, q, F.inv(q.c.back()));
                stack.push_back(d);
                stack.push_back(q);
                break;
            }
        }
    }
}

// ----------------------------------------------------------------- CRT

/* Incremental CRT accumulator for signed integers: after feeding residues
 * modulo pairwise distinct primes, value() returns the symmetric remainder.
 */
struct CrtAccum {
    mpz_class value_;   // in [0, mod)
    mpz_class mod_ = 1;

    void add(std::uint64_t residue, std::uint64_t p) {
        mpz_class pz((unsigned long)p);
        if (mod_ == 1) {
            value_ = (unsigned long)residue;
            mod_ = pz;
            return;
        }
        // x = value_ + mod_ * t,  t = (residue - value_) / mod_  (mod p)
        mpz_class vp = value_ % pz;
        mpz_class diff = ((long)residue - vp) % pz;
        if (diff < 0) diff += pz;
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), mpz_class(mod_ % pz).get_mpz_t(), pz.get_mpz_t());
        mpz_class t = (diff * minv) % pz;
        value_ += mod_ * t;
        mod_ *= pz;
    }
    mpz_class symmetric() const {
        if (value_ * 2 >= mod_) return value_ - mod_;
        return value_;
    }
};

/* Rational reconstruction: find n/d with |n|, d <= bound, d > 0,
 * n = d*a mod m, gcd(d, m) = 1.  Returns false if none exists.
 * Classical half-extended Euclid (e.g. von zur Gathen & Gerhard 5.10).
 */
inline bool rational_reconstruct(const mpz_class& a_in, const mpz_class& m,
                                 const mpz_class& bound, mpz_class& num, mpz_class& den) {
    mpz_class r0 = m, r1 = a_in % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return false;
    if (t1 < 0) { t1 = -t1; r1 = -r1; }
    if (t1 > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    mpz_class gm;
    mpz_gcd(gm.get_mpz_t(), t1.get_mpz_t(), m.get_mpz_t());
    if (gm != 1) return false;
    num = r1;
    den = t1;
    return true;
}

} // namespace selim

#endif
