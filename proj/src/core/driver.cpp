#include "core/driver.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "core/errors.hpp"
#include "core/padic.hpp"

namespace iwk {

bool is_prime(long v) {
    if (v < 2)
        return false;
    if (v < 4)
        return true;
    if (v % 2 == 0)
        return false;
    for (long d = 3; d * d <= v; d += 2)
        if (v % d == 0)
            return false;
    return true;
}

namespace {

std::vector<int> merged_exponents(const std::vector<AbelianGroupDescriptor>& parts) {
    std::vector<int> all;
    for (const auto& g : parts)
        all.insert(all.end(), g.exponents.begin(), g.exponents.end());
    std::sort(all.rbegin(), all.rend());
    return all;
}

// p^e as mpz, for order bookkeeping only.
mpz_class order_power(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

} // namespace

SpectrumReport analyze_prime(long p, const AnalyzeOptions& opt) {
    if (p < 5 || !is_prime(p))
        throw usage_error("analyze_prime: p must be a prime >= 5");
    if (opt.n_max < 0)
        throw usage_error("analyze_prime: n_max must be >= 0");

    SpectrumReport rep;
    rep.p = p;
    rep.n_max = opt.n_max;
    rep.pairs = irregular_scan(p);
    rep.r0 = static_cast<int>(rep.pairs.size());

    bool all_s = true;
    bool all_lambda = true;
    for (auto& d : rep.pairs) {
        std::string tag = "i=" + std::to_string(d.i);
        try {
            d.s = s_invariant(p, d.i, opt.s_probe_cap);
        } catch (const std::exception& e) {
            rep.field_errors["s[" + tag + "]"] = e.what();
            all_s = false;
        }
        try {
            d.lambda = lambda_invariant(p, d.i);
        } catch (const std::exception& e) {
            rep.field_errors["lambda[" + tag + "]"] = e.what();
            all_lambda = false;
        }
    }

    rep.lambda_total = 0;
    rep.nu = 0;
    for (const auto& d : rep.pairs) {
        if (d.lambda)
            rep.lambda_total += *d.lambda;
        if (d.s)
            rep.nu += *d.s;
    }
    rep.km_verdict = all_s;
    for (const auto& d : rep.pairs)
        if (d.s && *d.s != 1)
            rep.km_verdict = false;
    if (!all_lambda)
        rep.consistency_ok = false;
    if (all_lambda && rep.lambda_total < rep.r0)
        rep.consistency_ok = false; // each irregular index contributes at least 1

    long lam = rep.lambda_total;
    for (int n = 0; n <= opt.n_max; ++n) {
        StructureRow row;
        row.n = n;

        bool any_computed = false;
        bool any_formula = false;
        for (const auto& d : rep.pairs) {
            if (!d.s || !d.lambda) {
                row.snf_matches_formula = false;
                rep.consistency_ok = false;
                continue;
            }
            AbelianGroupDescriptor want = sni_formula(p, n, *d.s, *d.lambda);
            AbelianGroupDescriptor got;
            try {
                int prec = n + *d.s + 3;
                got = sni_structure(p, d.i, n, prec, opt.dim_cap);
                any_computed = true;
                if (!(got == want)) {
                    row.snf_matches_formula = false;
                    rep.consistency_ok = false;
                    rep.field_errors["snf[i=" + std::to_string(d.i) +
                                     ",n=" + std::to_string(n) + "]"] =
                        "computed divisors disagree with the closed form";
                }
            } catch (const resource_error& e) {
                got = want;
                any_formula = true;
                rep.field_errors["snf[i=" + std::to_string(d.i) + ",n=" + std::to_string(n) +
                                 "]"] = std::string("fallback to closed form: ") + e.what();
            }
            row.s_components.push_back(got);
        }
        row.s_aggregate = merged_exponents(row.s_components);
        if (row.s_components.empty())
            row.s_provenance = "none";
        else if (any_computed && any_formula)
            row.s_provenance = "mixed";
        else if (any_computed)
            row.s_provenance = "computed-snf";
        else
            row.s_provenance = "formula-structure";

        if (all_lambda) {
            if (n >= 1) {
                row.v_ullom = v_plus_ullom(p, n, rep.r0, lam);
                mpz_class want = order_power(p, rep.r0 + static_cast<long>(n - 1) * lam);
                row.counts_consistent = (row.v_ullom.order() == want);
            } else {
                row.v_ullom = AbelianGroupDescriptor{p, {}, "formula-unit-ullom"};
                row.counts_consistent = true;
            }
            row.v_shifted = v_plus_shifted(p, n, rep.r0, lam);
            row.shifted_discrepancy = (row.v_shifted.order() != row.v_ullom.order());
            if (!row.counts_consistent)
                rep.consistency_ok = false;
        } else {
            row.counts_consistent = false;
        }

        rep.rows.push_back(std::move(row));
    }

    return rep;
}

std::vector<SpectrumReport> scan_range(long pmin, long pmax, const AnalyzeOptions& opt,
                                       int jobs) {
    if (pmin > pmax)
        throw usage_error("scan_range: empty range");
    std::vector<long> primes;
    for (long v = std::max(pmin, 5L); v <= pmax; ++v)
        if (is_prime(v))
            primes.push_back(v);

    std::vector<SpectrumReport> out(primes.size());
    if (jobs < 1)
        jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(primes.size() ? primes.size() : 1));

    auto work = [&](size_t idx) {
        try {
            out[idx] = analyze_prime(primes[idx], opt);
        } catch (const std::exception& e) {
            SpectrumReport rep;
            rep.p = primes[idx];
            rep.n_max = opt.n_max;
            rep.consistency_ok = false;
            rep.km_verdict = false;
            rep.field_errors["analyze"] = e.what();
            out[idx] = std::move(rep);
        }
    };

    if (jobs == 1) {
        for (size_t idx = 0; idx < primes.size(); ++idx)
            work(idx);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t idx = next.fetch_add(1);
                    if (idx >= primes.size())
                        return;
                    work(idx);
                }
            });
        for (auto& th : pool)
            th.join();
    }
    return out;
}

SelftestResult selftest() {
    SelftestResult res;
    auto check = [&](const std::string& name, bool ok) {
        res.checks.emplace_back(name, ok);
        if (!ok)
            res.ok = false;
    };
    auto guarded = [&](const std::string& name, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (...) {
            ok = false;
        }
        check(name, ok);
    };

    guarded("padic-invert", [] {
        PadicElement x(5, 2, 12);
        return x.invert().residue() == 23;
    });
    guarded("teichmuller-fixed-point", [] {
        PadicElement w = teichmuller(2, 5, 2);
        if (w.residue() != 7)
            return false;
        PadicElement a = teichmuller(2, 13, 2), b = teichmuller(3, 13, 2);
        return (a * b).residue() == teichmuller(6, 13, 2).residue();
    });
    guarded("binomial-exponential", [] {
        PadicElement half = PadicElement(5, 2, 2).invert();
        return pow_one_plus_p(half, 2).residue() == 16;
    });
    guarded("series-evaluate", [] {
        TruncatedSeries s(5, 3, {mpz_class(1), mpz_class(1), mpz_class(1)});
        return s.evaluate(PadicElement(5, 3, 5)).residue() == 31;
    });
    guarded("smith-divisors", [] {
        std::vector<std::vector<mpz_class>> m = {{5, 5}, {0, 25}};
        DivisorSequence d = smith_normal_form(m, 5, 4);
        return d.exponents.size() == 2 && d.exponents[0] == 1 && d.exponents[1] == 2;
    });
    guarded("hensel-sqrt", [] {
        PadicFunction f;
        f.eval = [](const PadicElement& s, int w) {
            PadicElement x = s.with_precision(std::min(w, s.precision()));
            return x * x - PadicElement(x.prime(), x.precision(), 6);
        };
        PadicElement z = hensel_zero(f, PadicElement(5, 3, 1), 3, 3);
        return z.residue() == 16;
    });
    guarded("bernoulli-numerator", [] {
        mpq_class b = BernoulliTable::instance().bernoulli(12);
        return b == mpq_class(-691, 2730);
    });
    guarded("irregular-pair-detect", [] {
        auto v = irregular_scan(37);
        return v.size() == 1 && v[0].k == 32 && v[0].i == 5;
    });
    guarded("twisted-sum-spot", [] {
        return b1_chi(5, 3, 1).residue() == 3;
    });
    guarded("interpolation-node", [] {
        // value at 1-m equals the negated corrected quotient for m = 2
        PadicElement lhs = lp_value(5, 3, PadicElement(5, 2, -1), 2);
        PadicElement rhs = -bm_over_m_mod(5, 2, 2, "exact");
        return lhs.residue() == rhs.residue();
    });
    return res;
}

PairsCrossCheck cross_check_pairs(const std::vector<SpectrumReport>& reports,
                                  const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw usage_error("cross_check_pairs: cannot open " + path);
    std::map<long, std::set<long>> listed;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long p = 0, k = 0;
        if (ls >> p >> k)
            listed[p].insert(k);
    }

    PairsCrossCheck out;
    for (const auto& rep : reports) {
        auto it = listed.find(rep.p);
        if (it == listed.end()) {
            if (rep.r0 != 0)
                out.mismatches.push_back("p=" + std::to_string(rep.p) +
                                         ": detected irregular pairs but reference lists none");
            continue;
        }
        std::set<long> got;
        for (const auto& d : rep.pairs)
            got.insert(d.k);
        if (got != it->second) {
            std::string msg = "p=" + std::to_string(rep.p) + ": detected {";
            for (long k : got)
                msg += std::to_string(k) + " ";
            msg += "} reference {";
            for (long k : it->second)
                msg += std::to_string(k) + " ";
            msg += "}";
            out.mismatches.push_back(msg);
        }
    }
    out.ok = out.mismatches.empty();
    return out;
}

} // namespace iwk
