#include <catch2/catch_amalgamated.hpp>
#include <random>
#include "selim/modarith.hpp"
#include "selim/intfactor.hpp"
#include "selim/linalg.hpp"
#include "oracles.hpp"

using namespace selim;

TEST_CASE("miller-rabin on known values") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK(is_prime_u64((1ull << 31) - 1));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));          // Carmichael
    CHECK_FALSE(is_prime_u64(3215031751ull));
    CHECK(is_prime_u64(1000000007ull));
}

TEST_CASE("prime field basics") {
    PrimeField F(1000000007ull);
    CHECK(F.mul(1000000006ull, 1000000006ull) == 1);
    CHECK(F.inv(2) == 500000004ull);
    for (std::uint64_t a : {1ull, 2ull, 999999999ull, 123456789ull})
        CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.pow(3, 1000000006ull) == 1);   // Fermat
}

TEST_CASE("prime source emits distinct 31-bit primes") {
    PrimeSource src;
    std::uint64_t a = src(), b = src(), c = src();
    CHECK(a != b);
    CHECK(b != c);
    CHECK(is_prime_u64(a));
    CHECK(is_prime_u64(b));
    CHECK(a < (1ull << 31));
}

TEST_CASE("modpoly gcd and root counting") {
    PrimeField F(13);
    // x^2 - 1 mod 13 has roots 1, 12
    ModPoly f{{F.p - 1, 0, 1}};
    CHECK(mp_count_roots(F, f) == 2);
    std::vector<std::uint64_t> roots;
    mp_roots(F, f, roots);
    std::sort(roots.begin(), roots.end());
    CHECK(roots == std::vector<std::uint64_t>{1, 12});
}

TEST_CASE("crt and rational reconstruction") {
    CrtAccum crt;
    crt.add(3, 5);
    crt.add(4, 7);
    CHECK(crt.value_ == 18);
    CrtAccum c2;
    mpz_class target("-123456789123456789");
    for (std::uint64_t p : {2147483647ull, 2147483629ull, 2147483587ull}) {
        mpz_class r = target % (long)p;
        if (r < 0) r += (long)p;
        c2.add(r.get_ui(), p);
    }
    CHECK(c2.symmetric() == target);

    // reconstruct 22/7 mod a big modulus
    mpz_class m("100000000000000003"), num, den;
    mpz_class inv7;
    mpz_invert(inv7.get_mpz_t(), mpz_class(7).get_mpz_t(), m.get_mpz_t());
    mpz_class a = (22 * inv7) % m;
    REQUIRE(rational_reconstruct(a, m, mpz_class(1000000), num, den));
    CHECK(num == 22);
    CHECK(den == 7);
}

TEST_CASE("pollard rho factorization") {
    auto f = factor_integer(mpz_class("8681150210659989300"));
    mpz_class back = 1;
    for (auto& [p, e] : f) {
        CHECK(is_prime_mpz(p));
        for (unsigned k = 0; k < e; ++k) back *= p;
    }
    CHECK(back == mpz_class("8681150210659989300"));
    auto d = divisors(mpz_class(12));
    std::sort(d.begin(), d.end());
    CHECK(d == std::vector<mpz_class>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("det_exact identity and 2x2") {
    IntMatrix I(5, 5);
    for (int i = 0; i < 5; ++i) I.at(i, i) = 1;
    CHECK(det_exact(I) == 1);
    IntMatrix M(2, 2);
    M.at(0, 0) = 2; M.at(0, 1) = 1;
    M.at(1, 0) = 1; M.at(1, 1) = 1;
    CHECK(det_exact(M) == 1);
}

TEST_CASE("det_exact vs cofactor oracle on random 6x6") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix M(6, 6);
        for (auto& v : M.a) v = d(rng);
        CHECK(det_exact(M) == oracle::det_cofactor(M));
    }
}

TEST_CASE("det_mod_p agrees with exact reduction") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    PrimeSource src(3);
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 2 + trial % 5;
        IntMatrix M(n, n);
        for (auto& v : M.a) v = d(rng);
        std::uint64_t p = src();
        mpz_class expect = det_exact(M) % (long)p;
        if (expect < 0) expect += (long)p;
        CHECK(det_mod_p(M, p) == expect.get_ui());
    }
}

TEST_CASE("det_mod_p basics") {
    IntMatrix I(3, 3);
    for (int i = 0; i < 3; ++i) I.at(i, i) = 1;
    CHECK(det_mod_p(I, 7) == 1);
    IntMatrix M(2, 2);
    M.at(0, 0) = 2; M.at(0, 1) = 1;
    M.at(1, 0) = 1; M.at(1, 1) = 1;
    CHECK(det_mod_p(M, 2) == 1);
    IntMatrix S(2, 2);                       // singular
    S.at(0, 0) = 1; S.at(0, 1) = 2;
    S.at(1, 0) = 2; S.at(1, 1) = 4;
    CHECK(det_mod_p(S, 5) == 0);
    CHECK_THROWS(det_mod_p(I, 8));           // not prime
}

TEST_CASE("hadamard bound dominates determinant") {
    IntMatrix M(2, 2);
    M.at(0, 0) = 3; M.at(0, 1) = 4;
    M.at(1, 0) = 0; M.at(1, 1) = 5;
    CHECK(hadamard_bound(M) == Catch::Approx(25.0));
    CHECK(abs(det_exact(M)) <= 25);
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(-20, 20);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix R(5, 5);
        for (auto& v : R.a) v = d(rng);
        mpz_class dt = det_exact(R);
        if (dt == 0) continue;
        CHECK(log_abs(dt) <= hadamard_log_bound(R) + 1e-9);
    }
}
