#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "core/bernoulli.hpp"
#include "core/padic.hpp"

namespace iwk {

// Finite-level approximant to the branch power series attached to the odd
// index i: the Stickelberger average pushed into Z_p[Gamma_n] with
// Gamma_n = <gamma>, gamma = 1+p, gamma^(p^n) = 1. The calibrated
// orientation (eps, sigma) is baked into the stored coefficients, so
// value(s) = sum_j coeffs[j] * u0^(j * s) with u0 = 1+p; the two fields only
// record the calibration outcome.
//
// Values at points of valuation >= 1 agree with the limit series to
// min(precision, level+1) digits (the coefficients themselves are exact mod
// p^precision for the level-n projection).
struct IwasawaApproximant {
    long p = 0;
    long i = 0;
    int level = 0;     // n
    int precision = 0; // digits per coefficient
    int eps = 0;       // exponent orientation, +1 or -1
    int sigma = 0;     // global sign, +1 or -1
    std::vector<mpz_class> coeffs; // size p^level, reduced mod p^precision
    std::vector<std::uint64_t> coeffs_u64; // mirror when p^precision fits a word

    int certified() const { return std::min(precision, level + 1); }

    // Evaluate at gamma -> u0^s. Claims min(certified, s.precision+1) digits.
    PadicElement value_at(const PadicElement& s) const;
    PadicElement value_at_integer(const mpz_class& s) const;

    // First `count` coefficients of the T-basis rewrite
    // sum_j c_j (1+T)^j = sum_k b_k T^k, each mod p^precision.
    std::vector<mpz_class> t_coefficients(int count) const;
};

// Build the level-n approximant with `precision` coefficient digits.
// The working modulus is p^(n+1+precision); the grouped averages must be
// exactly divisible by p^(n+1), orientation is fixed against two exact
// interpolation targets (a third node arbitrates ties), and with
// cross_check the coefficients are compared against an independently built
// adjacent level through the exact fiber-sum projection between levels.
// Any mismatch is a construction_error.
IwasawaApproximant build_approximant(long p, long i, int level, int precision,
                                     bool cross_check = true);

// Process-wide memo of approximants (memory first, then the cache store).
// Returned pointers are immutable and shared.
std::shared_ptr<const IwasawaApproximant> approximant(long p, long i, int level, int precision);

// Interpolation target (1 - p^(m-1)) * B_m / m in Z/p^precision for even
// m >= 2 with (p-1) ∤ m. route = "exact" (rational arithmetic, capped),
// "series" (approximant at 1-m), or "auto" (exact under the cap, else
// series).
PadicElement bm_over_m_mod(long p, long m, int precision, const std::string& route = "auto");

// lambda_i: index of the first unit T-coefficient of the level-1
// approximant. The search range [0, p-1] is exhaustive for mu = 0; no unit
// there raises theorem_violation. Regular indices give 0.
int lambda_invariant(long p, long i);

// One-point value L(s) to `precision` digits (level max(precision-1, 1)).
PadicElement lp_value(long p, long i, const PadicElement& s, int precision);

// k-th forward difference with step u: sum_j C(k,j) (-1)^(k-j) L(s + j u).
PadicElement delta_power(long p, long i, const PadicElement& u, int k, const PadicElement& s,
                         int precision);

// Digits of beta = 1 - lambda + (1 - p + i - s0)/(p - 1) and the exponent
// ladder t_n = p - i + (p-1) * (beta mod p^n), for n = 0..digits.
struct BetaData {
    mpz_class beta;               // mod p^digits
    std::vector<int> digits;      // base-p digits, least significant first
    std::vector<long> t_exponents; // index n
};
BetaData beta_and_t(long p, long i, int lambda, const mpz_class& s0, int digits);

// Certified zero of the lambda-fold difference of L on Z_p.
struct ZeroCertificate {
    long p = 0;
    long i = 0;
    mpz_class u;            // difference step
    int lambda = 0;
    long seed = 0;          // unique deep residue mod p
    mpz_class s0;           // residue mod p^digits
    int digits = 0;         // certified digits of s0
    int residual_valuation = 0; // valuation of Delta^(lambda-1) L at s0
    int witness_valuation = 0;  // valuation of Delta^lambda L at s0
    int target_digits = 0;
    BetaData beta;
};

// Locate the unique zero s0 of Delta_u^(lambda-1) L on Z_p to target_digits
// digits: residue scan mod p (refined mod p^2 and deeper until the Newton
// certificate condition holds), demanding exactly one deep candidate, then
// hensel_zero. Verifies residual valuation >= target_digits and that the
// order witness Delta^lambda stays shallow.
ZeroCertificate find_s0(long p, long i, const mpz_class& u, int target_digits);

} // namespace iwk
