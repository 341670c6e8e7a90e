#include <doctest.h>

#include <random>

#include "core/errors.hpp"
#include "core/padic.hpp"

using namespace iwk;

TEST_CASE("residues reduce into the canonical range") {
    PadicElement a(5, 2, -3);
    CHECK(a.residue() == 22);
    PadicElement b(5, 2, 27);
    CHECK(b.residue() == 2);
    CHECK(a.modulus() == 25);
}

TEST_CASE("construction rejects unusable parameters") {
    CHECK_THROWS_AS(PadicElement(4, 2, 1), usage_error);
    CHECK_THROWS_AS(PadicElement(2, 2, 1), usage_error);
    CHECK_THROWS_AS(PadicElement(5, 0, 1), usage_error);
}

TEST_CASE("ring operations keep the weaker precision claim") {
    PadicElement a(7, 4, 123);
    PadicElement b(7, 2, 5);
    CHECK((a + b).precision() == 2);
    CHECK((a * b).precision() == 2);
    CHECK((a - b).precision() == 2);
    CHECK((a + b).residue() == (123 + 5) % 49);
}

TEST_CASE("valuation is capped at the precision") {
    CHECK(PadicElement(5, 3, 50).valuation() == 2);
    CHECK(PadicElement(5, 3, 0).valuation() == 3);
    CHECK(PadicElement(5, 3, 7).valuation() == 0);
    CHECK(PadicElement(5, 3, 25).unit_part().residue() == 1);
    CHECK(PadicElement(5, 3, 25).unit_part().precision() == 1);
}

TEST_CASE("inversion agrees with a frozen value and round-trips") {
    PadicElement x(5, 2, 12);
    PadicElement y = x.invert();
    CHECK(y.residue() == 23);
    CHECK((x * y).residue() == 1);
    CHECK_THROWS_AS(PadicElement(5, 2, 10).invert(), domain_error);

    std::mt19937 rng(20260817);
    for (int trial = 0; trial < 50; ++trial) {
        long r = rng() % 343;
        if (r % 7 == 0)
            continue;
        PadicElement u(7, 3, r);
        CHECK((u * u.invert()).residue() == 1);
    }
}

TEST_CASE("exact division costs the divisor valuation") {
    PadicElement num(5, 4, 250); // 2 * 5^3
    PadicElement den(5, 4, 25);
    PadicElement q = num.div_exact(den);
    CHECK(q.residue() == 10);
    CHECK(q.precision() == 2);
    CHECK_THROWS_AS(PadicElement(5, 4, 5).div_exact(PadicElement(5, 4, 25)), domain_error);
}

TEST_CASE("lift fixed points reduce correctly and are multiplicative") {
    PadicElement w = teichmuller(2, 5, 2);
    CHECK(w.residue() == 7);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        long a = 1 + static_cast<long>(rng() % 12);
        long b = 1 + static_cast<long>(rng() % 12);
        PadicElement wa = teichmuller(a, 13, 3);
        PadicElement wb = teichmuller(b, 13, 3);
        PadicElement wab = teichmuller(a * b, 13, 3);
        CHECK((wa * wb).residue() == wab.residue());
        // fixed point of x -> x^p
        PadicElement pw = wa;
        for (int k = 1; k < 13; ++k)
            pw = pw * wa;
        CHECK(pw.residue() == wa.residue());
        CHECK(wa.residue() % 13 == a % 13);
    }
}

TEST_CASE("binomial exponential matches integer powers and a frozen root") {
    PadicElement half = PadicElement(5, 2, 2).invert();
    PadicElement r = pow_one_plus_p(half, 2);
    CHECK(r.residue() == 16);
    CHECK((r * r).residue() == 6 % 25);

    // integer exponents agree with direct powering
    for (long e = 0; e <= 6; ++e) {
        PadicElement s(7, 3, e);
        mpz_class direct = 1;
        for (long k = 0; k < e; ++k)
            direct = (direct * 8) % 343;
        CHECK(pow_one_plus_p(s, 4).with_precision(3).residue() == direct);
    }

    // additivity in the exponent
    PadicElement s1(7, 3, 45), s2(7, 3, 17);
    PadicElement lhs = pow_one_plus_p(s1 + s2, 4);
    PadicElement rhs = pow_one_plus_p(s1, 4) * pow_one_plus_p(s2, 4);
    CHECK(lhs.with_precision(3).residue() == rhs.with_precision(3).residue());
}

TEST_CASE("series evaluation claims the right digits") {
    TruncatedSeries s(5, 3, {mpz_class(1), mpz_class(1), mpz_class(1)});
    PadicElement v = s.evaluate(PadicElement(5, 3, 5));
    CHECK(v.residue() == 31);
    CHECK(v.precision() == 3);

    TruncatedSeries two(5, 4, {mpz_class(3), mpz_class(2)});
    CHECK(two.evaluate(PadicElement(5, 4, 10)).precision() == 2);
    CHECK(two.derivative().coeff(0) == 2);
    CHECK_THROWS_AS(s.evaluate(PadicElement(5, 3, 2)), domain_error);
}

TEST_CASE("divisor exponents are nondecreasing and match a frozen case") {
    std::vector<std::vector<mpz_class>> m = {{5, 5}, {0, 25}};
    DivisorSequence d = smith_normal_form(m, 5, 4);
    REQUIRE(d.exponents.size() == 2);
    CHECK(d.exponents[0] == 1);
    CHECK(d.exponents[1] == 2);
    CHECK_FALSE(d.saturated[0]);
    CHECK_FALSE(d.saturated[1]);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::vector<mpz_class>> a(3, std::vector<mpz_class>(3));
        for (auto& row : a)
            for (auto& x : row)
                x = static_cast<long>(rng() % 125);
        DivisorSequence ds = smith_normal_form(a, 5, 3);
        for (size_t k = 1; k < ds.exponents.size(); ++k)
            CHECK(ds.exponents[k - 1] <= ds.exponents[k]);
    }
}

TEST_CASE("divisors are invariant under row and column shuffles") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<mpz_class>> a(3, std::vector<mpz_class>(3));
        for (auto& row : a)
            for (auto& x : row)
                x = static_cast<long>(rng() % 343);
        DivisorSequence base = smith_normal_form(a, 7, 3);
        std::swap(a[0], a[2]);
        for (auto& row : a)
            std::swap(row[1], row[2]);
        DivisorSequence shuffled = smith_normal_form(a, 7, 3);
        CHECK(base.exponents == shuffled.exponents);
    }
}

TEST_CASE("zero refinement certifies a square root") {
    PadicFunction f;
    f.eval = [](const PadicElement& s, int w) {
        PadicElement x = s.with_precision(std::min(w, s.precision()));
        return x * x - PadicElement(x.prime(), x.precision(), 6);
    };
    PadicElement z = hensel_zero(f, PadicElement(5, 3, 1), 3, 3);
    CHECK(z.residue() == 16);

    // seed in the wrong disc: certificate condition fails
    CHECK_THROWS_AS(hensel_zero(f, PadicElement(5, 3, 2), 3, 3), domain_error);
}

TEST_CASE("zero refinement returns a seed that is already deep enough") {
    PadicFunction f;
    f.eval = [](const PadicElement& s, int w) {
        PadicElement x = s.with_precision(std::min(w, s.precision()));
        return x * x - PadicElement(x.prime(), x.precision(), 6);
    };
    PadicElement z = hensel_zero(f, PadicElement(5, 3, 16), 3, 3);
    CHECK(z.residue() == 16);
}
