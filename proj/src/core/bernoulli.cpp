#include "core/bernoulli.hpp"

#include <mutex>

namespace iwk {

BernoulliTable& BernoulliTable::instance() {
    static BernoulliTable t;
    return t;
}

mpq_class BernoulliTable::bernoulli(long m) {
    if (m < 0)
        throw usage_error("bernoulli: negative index");
    if (m > cap_)
        throw resource_error("bernoulli: index " + std::to_string(m) + " above exact-numerator cap " +
                             std::to_string(cap_));
    {
        std::shared_lock lk(mu_);
        if (static_cast<size_t>(m) < table_.size())
            return table_[static_cast<size_t>(m)];
    }
    std::unique_lock lk(mu_);
    extend_locked(m);
    return table_[static_cast<size_t>(m)];
}

void BernoulliTable::extend_locked(long m) {
    if (table_.empty())
        table_.emplace_back(1);
    for (long n = static_cast<long>(table_.size()); n <= m; ++n) {
        if (n > 1 && n % 2 == 1) {
            table_.emplace_back(0);
            continue;
        }
        // sum_{j<=n} C(n+1,j) B_j = 0 with B_n unknown.
        mpq_class sum(0);
        mpz_class binom(1); // C(n+1, j), updated incrementally
        for (long j = 0; j < n; ++j) {
            if (j < 2 || j % 2 == 0)
                sum += mpq_class(binom) * table_[static_cast<size_t>(j)];
            binom *= (n + 1 - j);
            binom /= (j + 1);
        }
        mpq_class b = -sum / mpq_class(binom); // C(n+1, n) = n+1
        b.canonicalize();
        table_.push_back(b);
    }
}

std::vector<IrregularDatum> irregular_scan(long p) {
    if (p < 5)
        throw usage_error("irregular_scan: p must be an odd prime >= 5");
    std::vector<IrregularDatum> out;
    for (long k = 2; k <= p - 3; k += 2) {
        if (divides_bernoulli_numerator(p, k)) {
            IrregularDatum d;
            d.p = p;
            d.k = k;
            d.i = p - k;
            out.push_back(d);
        }
    }
    return out;
}

bool divides_bernoulli_numerator(long p, long k) {
    mpq_class b = BernoulliTable::instance().bernoulli(k);
    return mpz_divisible_ui_p(b.get_num().get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

PadicElement b1_chi(long p, long i, int precision) {
    if (precision < 1)
        throw usage_error("b1_chi: precision must be >= 1");
    long im = ((i % (p - 1)) + (p - 1)) % (p - 1);
    if (im == 0)
        throw domain_error("b1_chi: character is trivial (i divisible by p-1)");
    int level = precision;
    int work = precision + level;
    mpz_class mod = p_power(p, work);
    // chi(a) depends on a mod p only, so sum over a < p^level in closed form:
    // the class of r contributes chi(r) * p^(level-1) * (r + p*(p^(level-1)-1)/2).
    mpz_class plm1 = p_power(p, level - 1);
    mpz_class half_shift = p * ((plm1 - 1) / 2) % mod; // (p^(level-1)-1)/2 * p, p odd
    unsigned long e = static_cast<unsigned long>(p - 1 - im);
    mpz_class acc = 0;
    for (long r = 1; r < p; ++r) {
        mpz_class w = teichmuller(r, p, work).residue();
        mpz_class chi;
        mpz_powm_ui(chi.get_mpz_t(), w.get_mpz_t(), e, mod.get_mpz_t());
        acc = (acc + chi * ((r + half_shift) % mod)) % mod;
    }
    acc = (acc * plm1) % mod;
    mpz_class scale = p_power(p, level);
    if (!mpz_divisible_p(acc.get_mpz_t(), scale.get_mpz_t()))
        throw construction_error("b1_chi: level average not divisible by p^level");
    mpz_class q = acc / scale;
    return PadicElement(p, precision, q);
}

int s_invariant(long p, long i, int probe_cap) {
    {
        PadicElement probe = b1_chi(p, i, 2);
        if (probe.valuation() == 0)
            throw domain_error("s_invariant: index is regular (B_{1,chi} is a unit)");
    }
    for (int n = 2; n <= probe_cap; ++n) {
        PadicElement b = b1_chi(p, i, n);
        int v = b.valuation();
        if (v < n)
            return v;
    }
    throw resource_error("s_invariant: valuation at least " + std::to_string(probe_cap) +
                         " (probe cap reached)");
}

} // namespace iwk
