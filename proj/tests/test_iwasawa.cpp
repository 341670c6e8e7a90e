#include <doctest.h>

#include "core/bernoulli.hpp"
#include "core/errors.hpp"
#include "core/iwasawa.hpp"

using namespace iwk;

TEST_CASE("value at the origin matches the negated twisted average") {
    auto a = approximant(5, 3, 1, 2);
    mpz_class got = a->value_at_integer(0).residue();
    mpz_class want = (25 - b1_chi(5, 3, 2).residue()) % 25;
    CHECK(got == want);
    CHECK(a->certified() == 2);
}

TEST_CASE("one-point values match a frozen residue") {
    PadicElement s(5, 2, -1);
    CHECK(lp_value(5, 3, s, 2).residue() == 17);
}

TEST_CASE("classical quotients by both routes agree") {
    for (long m : {2L, 6L, 10L, 14L}) {
        PadicElement ex = bm_over_m_mod(5, m, 2, "exact");
        PadicElement se = bm_over_m_mod(5, m, 2, "series");
        CHECK(ex.residue() == se.residue());
    }
    for (long m : {2L, 4L, 8L, 10L, 14L, 16L}) {
        PadicElement ex = bm_over_m_mod(7, m, 2, "exact");
        PadicElement se = bm_over_m_mod(7, m, 2, "series");
        CHECK(ex.residue() == se.residue());
    }
    CHECK_THROWS_AS(bm_over_m_mod(5, 3, 2, "exact"), domain_error); // odd index
    CHECK_THROWS_AS(bm_over_m_mod(5, 8, 2, "exact"), domain_error); // divisible by p-1
}

TEST_CASE("interpolation identity holds at many nodes") {
    for (long p : {5L, 7L, 11L}) {
        for (long m = 2; m <= 40; m += 2) {
            if (m % (p - 1) == 0)
                continue;
            long i = ((p - m) % (p - 1) + (p - 1)) % (p - 1);
            PadicElement s(p, 2, 1 - m);
            PadicElement lhs = lp_value(p, i, s, 2);
            mpz_class mod = p_power(p, 2);
            mpz_class want = (mod - bm_over_m_mod(p, m, 2, "exact").residue()) % mod;
            CHECK(lhs.residue() == want);
        }
    }
}

TEST_CASE("levels agree where both are certified") {
    auto a1 = approximant(5, 3, 1, 3);
    auto a2 = approximant(5, 3, 2, 3);
    for (long s : {0L, 5L, 10L, -5L}) {
        mpz_class v1 = a1->value_at_integer(s).with_precision(2).residue();
        mpz_class v2 = a2->value_at_integer(s).with_precision(2).residue();
        CHECK(v1 == v2);
    }
}

TEST_CASE("first unit position is 1 on irregular branches, 0 on regular") {
    CHECK(lambda_invariant(37, 5) == 1);
    CHECK(lambda_invariant(59, 15) == 1);
    CHECK(lambda_invariant(5, 3) == 0);
    CHECK(lambda_invariant(7, 5) == 0);
}

TEST_CASE("difference operator is the finite difference of values") {
    long p = 37, i = 5;
    PadicElement u(p, 3, p - 1);
    PadicElement s(p, 3, 0);
    PadicElement d1 = delta_power(p, i, u, 1, s, 3);
    PadicElement lhs = lp_value(p, i, s + u, 3) - lp_value(p, i, s, 3);
    CHECK(d1.with_precision(2).residue() == lhs.with_precision(2).residue());
}

TEST_CASE("exponent ladder from a frozen zero") {
    BetaData b = beta_and_t(37, 5, 1, mpz_class(447047), 4);
    REQUIRE(b.digits.size() == 4);
    CHECK(b.digits[0] == 7);
    CHECK(b.digits[1] == 28);
    CHECK(b.digits[2] == 21);
    CHECK(b.digits[3] == 30);
    REQUIRE(b.t_exponents.size() >= 3);
    CHECK(b.t_exponents[0] == 32);
    CHECK(b.t_exponents[1] == 284);
    CHECK(b.t_exponents[2] == 37580);
}

TEST_CASE("certified zero for the first irregular prime") {
    ZeroCertificate cert = find_s0(37, 5, mpz_class(36), 4);
    CHECK(cert.seed == 13);
    CHECK(cert.digits >= 4);
    mpz_class mod4 = p_power(37, 4);
    CHECK(cert.s0 % mod4 == 447047);
    CHECK(cert.residual_valuation >= 4);
    CHECK(cert.witness_valuation <= 1);
    CHECK(cert.lambda == 1);
    CHECK(cert.beta.t_exponents.at(1) == 284);
}

TEST_CASE("zero hunt refuses regular branches") {
    CHECK_THROWS_AS(find_s0(5, 3, mpz_class(4), 3), domain_error);
}
