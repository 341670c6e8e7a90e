#include "core/congruence.hpp"

#include "core/bernoulli.hpp"

namespace iwk {

CongruenceCertificate verify_congruence(long p, long i, int n, int modulus_digits) {
    if (n < 0)
        throw usage_error("verify_congruence: level must be >= 0");
    int lambda = lambda_invariant(p, i);
    if (lambda < 1)
        throw domain_error("verify_congruence: index is regular (lambda = 0)");
    int required = n + lambda;
    int digits = modulus_digits > 0 ? modulus_digits : required + 1;
    if (digits < required + 1)
        throw usage_error("verify_congruence: modulus digits below n + lambda + 1");

    CongruenceCertificate cert;
    cert.p = p;
    cert.i = i;
    cert.n = n;
    cert.lambda = lambda;
    cert.modulus_digits = digits;
    cert.required = required;

    if (n == 0) {
        cert.t_exponent = p - i;
        cert.s0_used = 0;
        cert.s0_digits = 0;
    } else {
        ZeroCertificate z = find_s0(p, i, p - 1, std::max(n + 1, 2));
        cert.t_exponent = z.beta.t_exponents.at(static_cast<size_t>(n));
        cert.s0_used = z.s0;
        cert.s0_digits = z.digits;
    }

    mpz_class mod = p_power(p, digits);
    long cap = BernoulliTable::instance().cap();
    mpz_class sum = 0;
    mpz_class binom = 1; // C(lambda-1, k)
    for (int k = 0; k < lambda; ++k) {
        long m = cert.t_exponent + static_cast<long>(k) * (p - 1);
        std::string route = m <= cap ? "exact" : "series";
        PadicElement val = bm_over_m_mod(p, m, digits, route);
        mpz_class term = (binom * val.residue()) % mod;
        if ((lambda - 1 - k) % 2 != 0)
            term = (mod - term) % mod;
        cert.term_residues.push_back(term);
        cert.term_routes.push_back(route);
        sum = (sum + term) % mod;
        binom *= (lambda - 1 - k);
        binom /= (k + 1);
    }
    cert.sum_residue = sum;
    cert.valuation = valuation_capped(sum, p, digits);
    cert.verdict = cert.valuation >= required;
    return cert;
}

bool replay_certificate(const CongruenceCertificate& cert) {
    if (cert.term_residues.size() != static_cast<size_t>(cert.lambda))
        return false;
    mpz_class mod = p_power(cert.p, cert.modulus_digits);
    mpz_class sum = 0;
    for (const auto& t : cert.term_residues)
        sum = (sum + t) % mod;
    if (sum != cert.sum_residue)
        return false;
    int val = valuation_capped(sum, cert.p, cert.modulus_digits);
    if (val != cert.valuation)
        return false;
    return (val >= cert.required) == cert.verdict;
}

} // namespace iwk
