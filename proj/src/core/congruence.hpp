#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "core/iwasawa.hpp"

namespace iwk {

// One verified instance of the alternating Kummer-type congruence attached
// to the zero ladder: the lambda-term binomial alternation of
// (1 - p^(m_k - 1)) B_(m_k) / m_k at m_k = t_n + k(p-1) must vanish to
// n + lambda digits. Terms carry their evaluation route so a stored
// certificate can be replayed bit for bit.
struct CongruenceCertificate {
    long p = 0;
    long i = 0;
    int n = 0;
    int lambda = 0;
    long t_exponent = 0;
    int modulus_digits = 0; // K
    int required = 0;       // n + lambda
    std::vector<mpz_class> term_residues; // signed contributions mod p^K
    std::vector<std::string> term_routes; // "exact" or "series" per term
    mpz_class sum_residue;
    int valuation = 0; // capped at K
    bool verdict = false;
    mpz_class s0_used; // zero residue feeding t_n (0 when n = 0)
    int s0_digits = 0;
};

// Evaluate the congruence at level n. modulus_digits = -1 selects the
// default K = n + lambda + 1 (one guard digit); explicit smaller values are
// rejected. Terms under the exact-numerator cap use rational arithmetic,
// larger ones the series route; each term records its route.
CongruenceCertificate verify_congruence(long p, long i, int n, int modulus_digits = -1);

// Recompute sum, valuation and verdict from the stored term residues.
// True when they reproduce the certificate exactly.
bool replay_certificate(const CongruenceCertificate& cert);

} // namespace iwk
