#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "core/class_structure.hpp"
#include "core/errors.hpp"
#include "core/padic.hpp"

using namespace iwk;

namespace {

// Brute-force cokernel exponents of x -> Mx on (Z/p^N)^d: enumerate the
// column span, count quotient elements of order dividing p^j, and read the
// cyclic exponents off the counts. Feasible for p^(N*d) in the thousands.
std::vector<int> brute_cokernel(const std::vector<std::vector<long>>& m, long p, int N) {
    const int d = static_cast<int>(m.size());
    long q = 1;
    for (int k = 0; k < N; ++k)
        q *= p;
    long total = 1;
    for (int k = 0; k < d; ++k)
        total *= q;

    auto encode = [&](const std::vector<long>& v) {
        long code = 0;
        for (int k = d - 1; k >= 0; --k)
            code = code * q + (v[static_cast<size_t>(k)] % q + q) % q;
        return code;
    };

    // column span: all Z/q combinations of the d columns
    std::set<long> image;
    std::vector<long> coef(static_cast<size_t>(d), 0);
    for (long it = 0; it < total; ++it) {
        long rem = it;
        for (int k = 0; k < d; ++k) {
            coef[static_cast<size_t>(k)] = rem % q;
            rem /= q;
        }
        std::vector<long> v(static_cast<size_t>(d), 0);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                v[static_cast<size_t>(r)] =
                    (v[static_cast<size_t>(r)] +
                     m[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                         coef[static_cast<size_t>(c)]) %
                    q;
        image.insert(encode(v));
    }

    // counts[j] = elements of the quotient killed by p^j
    std::vector<long> counts(static_cast<size_t>(N) + 1, 0);
    for (long it = 0; it < total; ++it) {
        long rem = it;
        std::vector<long> v(static_cast<size_t>(d), 0);
        for (int k = 0; k < d; ++k) {
            v[static_cast<size_t>(k)] = rem % q;
            rem /= q;
        }
        long scale = 1;
        for (int j = 0; j <= N; ++j) {
            std::vector<long> w(static_cast<size_t>(d), 0);
            for (int k = 0; k < d; ++k)
                w[static_cast<size_t>(k)] = (v[static_cast<size_t>(k)] * scale) % q;
            if (image.count(encode(w)))
                ++counts[static_cast<size_t>(j)];
            scale *= p;
        }
    }
    for (auto& c : counts)
        c /= static_cast<long>(image.size());

    auto logp = [&](long v) {
        int e = 0;
        while (v > 1) {
            v /= p;
            ++e;
        }
        return e;
    };
    // #exponents >= j is the digit gain from j-1 to j
    std::vector<int> exps;
    for (int j = N; j >= 1; --j) {
        int atleast = logp(counts[static_cast<size_t>(j)]) -
                      logp(counts[static_cast<size_t>(j) - 1]);
        while (static_cast<int>(exps.size()) < atleast)
            exps.push_back(j);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

} // namespace

TEST_CASE("descriptor order multiplies the cyclic factors") {
    AbelianGroupDescriptor g{5, {2, 1}, "formula-structure"};
    CHECK(g.order() == 125);
    AbelianGroupDescriptor t{5, {}, "formula-structure"};
    CHECK(t.order() == 1);
}

TEST_CASE("divisor computation matches a brute-force cokernel") {
    std::mt19937 rng(318008);
    auto run = [&](long p, int N, int d, int trials) {
        long q = 1;
        for (int k = 0; k < N; ++k)
            q *= p;
        for (int t = 0; t < trials; ++t) {
            std::vector<std::vector<long>> m(static_cast<size_t>(d),
                                             std::vector<long>(static_cast<size_t>(d)));
            std::vector<std::vector<mpz_class>> mz(static_cast<size_t>(d),
                                                   std::vector<mpz_class>(static_cast<size_t>(d)));
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) {
                    long v = static_cast<long>(rng() % static_cast<unsigned long>(q));
                    m[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
                    mz[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
                }
            std::vector<int> want = brute_cokernel(m, p, N);
            DivisorSequence got = smith_normal_form(mz, p, N);
            std::vector<int> exps;
            for (int e : got.exponents)
                if (e > 0)
                    exps.push_back(e);
            std::sort(exps.begin(), exps.end());
            CHECK(exps == want);
        }
    };
    run(3, 2, 2, 25);
    run(3, 2, 3, 10);
    run(5, 2, 2, 25);
    run(3, 3, 2, 10);
    run(5, 3, 2, 10);
}

TEST_CASE("closed-form shapes") {
    AbelianGroupDescriptor f0 = sni_formula(37, 0, 1, 1);
    CHECK(f0.exponents == std::vector<int>{1});
    AbelianGroupDescriptor f1 = sni_formula(37, 1, 1, 1);
    CHECK(f1.exponents == std::vector<int>{2});
    // two branches, one extra small factor each at n >= 1
    AbelianGroupDescriptor f2 = sni_formula(157, 1, 1, 2);
    CHECK(f2.exponents == std::vector<int>({2, 1}));
    // at n = 0 the lambda - 1 spare factors are trivial and vanish
    AbelianGroupDescriptor f3 = sni_formula(157, 0, 1, 2);
    CHECK(f3.exponents == std::vector<int>{1});
}

TEST_CASE("computed structures match the closed form on the first pair") {
    AbelianGroupDescriptor s0 = sni_structure(37, 5, 0, 4);
    CHECK(s0.exponents == std::vector<int>{1});
    CHECK(s0.provenance == "computed-snf");
    AbelianGroupDescriptor s1 = sni_structure(37, 5, 1, 5);
    CHECK(s1.exponents == std::vector<int>{2});
    CHECK(s1 == sni_formula(37, 1, 1, 1));
}

TEST_CASE("unit-quotient readings differ by exactly one twist everywhere") {
    for (int n = 1; n <= 4; ++n) {
        AbelianGroupDescriptor u = v_plus_ullom(37, n, 1, 1);
        AbelianGroupDescriptor s = v_plus_shifted(37, n, 1, 1);
        CHECK(s.order() == u.order() * 37);
        CHECK(u.exponents == std::vector<int>{n});
        CHECK(s.exponents == std::vector<int>{n + 1});
    }
    AbelianGroupDescriptor u2 = v_plus_ullom(157, 2, 2, 2);
    CHECK(u2.exponents == std::vector<int>({2, 2}));
    AbelianGroupDescriptor u3 = v_plus_ullom(157, 2, 1, 2);
    CHECK(u3.exponents == std::vector<int>({2, 1}));
    AbelianGroupDescriptor s3 = v_plus_shifted(157, 2, 1, 2);
    CHECK(s3.exponents == std::vector<int>({3, 2}));
    CHECK(s3.order() == u3.order() * 157 * 157);
}

TEST_CASE("ullom reading needs a positive level") {
    CHECK_THROWS_AS(v_plus_ullom(37, 0, 1, 1), usage_error);
    AbelianGroupDescriptor s = v_plus_shifted(37, 0, 1, 1);
    CHECK(s.exponents == std::vector<int>{1});
}

TEST_CASE("structure computation enforces the dimension cap") {
    CHECK_THROWS_AS(sni_structure(37, 5, 3, 5, 100), resource_error);
}
