#include <doctest.h>

#include "core/bernoulli.hpp"
#include "core/errors.hpp"

using namespace iwk;

TEST_CASE("exact table matches published values") {
    auto& tab = BernoulliTable::instance();
    CHECK(tab.bernoulli(0) == 1);
    CHECK(tab.bernoulli(1) == mpq_class(-1, 2));
    CHECK(tab.bernoulli(2) == mpq_class(1, 6));
    CHECK(tab.bernoulli(3) == 0);
    CHECK(tab.bernoulli(4) == mpq_class(-1, 30));
    CHECK(tab.bernoulli(10) == mpq_class(5, 66));
    CHECK(tab.bernoulli(12) == mpq_class(-691, 2730));
    CHECK(tab.bernoulli(20) == mpq_class(-174611, 330));
}

TEST_CASE("numerator divisibility pins the known pairs") {
    CHECK(divides_bernoulli_numerator(37, 32));
    CHECK_FALSE(divides_bernoulli_numerator(37, 30));
    CHECK(divides_bernoulli_numerator(691, 12));
    CHECK_FALSE(divides_bernoulli_numerator(5, 2));
}

TEST_CASE("pair scan finds exactly the known irregular indices") {
    CHECK(irregular_scan(5).empty());
    CHECK(irregular_scan(7).empty());
    CHECK(irregular_scan(31).empty());

    auto v37 = irregular_scan(37);
    REQUIRE(v37.size() == 1);
    CHECK(v37[0].k == 32);
    CHECK(v37[0].i == 5);

    auto v157 = irregular_scan(157);
    REQUIRE(v157.size() == 2);
    CHECK(v157[0].k == 62);
    CHECK(v157[0].i == 95);
    CHECK(v157[1].k == 110);
    CHECK(v157[1].i == 47);

    CHECK_THROWS_AS(irregular_scan(4), usage_error);
    CHECK_THROWS_AS(irregular_scan(3), usage_error);
}

TEST_CASE("twisted averages match the classical quotient mod p") {
    // B at the companion even index, divided by it, taken mod p
    auto bridge = [](long p, long i) {
        long k = p - i;
        mpq_class q = BernoulliTable::instance().bernoulli(k) / k;
        mpz_class num = q.get_num() % p, den = q.get_den() % p;
        if (num < 0)
            num += p;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
        return mpz_class((num * inv) % p);
    };
    CHECK(b1_chi(5, 3, 1).residue() == 3);
    CHECK(b1_chi(7, 3, 1).residue() == 6);
    for (long i : {3L, 5L, 7L, 9L})
        CHECK(b1_chi(11, i, 1).residue() == bridge(11, i));
    for (long i : {3L, 5L, 7L, 9L, 11L})
        CHECK(b1_chi(13, i, 1).residue() == bridge(13, i));
}

TEST_CASE("twisted average rejects degenerate twists") {
    CHECK_THROWS_AS(b1_chi(5, 4, 1), domain_error); // trivial twist
    CHECK_THROWS_AS(b1_chi(5, 0, 1), domain_error);
    CHECK_THROWS_AS(b1_chi(5, 3, 0), usage_error);  // no digits requested
}

TEST_CASE("depth invariant is 1 on the small irregular pairs") {
    CHECK(s_invariant(37, 5) == 1);
    CHECK(s_invariant(59, 15) == 1);
    CHECK(s_invariant(67, 9) == 1);
    CHECK_THROWS_AS(s_invariant(7, 3, 6), domain_error); // regular index
}
