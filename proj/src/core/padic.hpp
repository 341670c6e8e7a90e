#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "core/errors.hpp"

namespace iwk {

// p^n as an exact integer. n >= 0.
mpz_class p_power(long p, int n);

// Valuation of r at p, capped at `cap` (returns cap when r == 0 mod p^cap).
int valuation_capped(const mpz_class& r, long p, int cap);

// Element of Z/p^N viewed as a p-adic approximation: a residue in [0, p^N)
// together with the claimed number N of known digits. Arithmetic tracks the
// claim: results never pretend to more digits than the inputs support, and
// exact division by p^k costs k digits.
class PadicElement {
  public:
    PadicElement(long p, int precision, mpz_class residue);

    long prime() const { return p_; }
    int precision() const { return prec_; }
    const mpz_class& residue() const { return res_; }
    mpz_class modulus() const { return p_power(p_, prec_); }

    // min(v_p(residue), precision); equal to precision() means
    // "indistinguishable from 0 at this precision".
    int valuation() const;
    bool is_zero() const { return res_ == 0; }
    bool is_unit() const;

    // Truncate the claim to n <= precision() digits.
    PadicElement with_precision(int n) const;
    // x / p^valuation() at precision() - valuation() digits. Requires x != 0.
    PadicElement unit_part() const;

    PadicElement operator+(const PadicElement& o) const;
    PadicElement operator-(const PadicElement& o) const;
    PadicElement operator*(const PadicElement& o) const;
    PadicElement operator-() const;

    // Multiplicative inverse of a unit, same precision. domain_error on
    // non-units.
    PadicElement invert() const;

    // x / y where valuation(y) <= valuation(x) and y != 0. The quotient is
    // exact; the result carries min precisions minus valuation(y) digits.
    PadicElement div_exact(const PadicElement& y) const;

    bool operator==(const PadicElement& o) const;

  private:
    long p_;
    int prec_;
    mpz_class res_;
};

// Teichmuller representative of a mod p^precision: the fixed point of
// x -> x^p congruent to a mod p. Requires p odd prime, a a unit mod p.
PadicElement teichmuller(const mpz_class& a, long p, int precision);

// (1+p)^s for a p-adic integer s, by the generalized binomial series
// sum_k C(s,k) p^k evaluated to `precision` digits. The result depends on s
// only mod p^(precision-1), so the claimed precision is capped at
// s.precision()+1.
PadicElement pow_one_plus_p(const PadicElement& s, int precision);

// Polynomial truncation sum_{k<M} a_k T^k with coefficients in Z/p^N.
class TruncatedSeries {
  public:
    TruncatedSeries(long p, int precision, std::vector<mpz_class> coeffs);

    long prime() const { return p_; }
    int precision() const { return prec_; }
    int length() const { return static_cast<int>(coeffs_.size()); }
    const mpz_class& coeff(int k) const { return coeffs_.at(k); }

    // Horner evaluation at t with valuation(t) >= 1. The discarded tail has
    // valuation >= length(), so the result claims
    // min(precision, t.precision, length) digits.
    PadicElement evaluate(const PadicElement& t) const;

    TruncatedSeries derivative() const;

  private:
    long p_;
    int prec_;
    std::vector<mpz_class> coeffs_;
};

// Elementary divisor exponents of a matrix over Z/p^N, nondecreasing.
// saturated[k] means the k-th divisor reached p^N and is only a lower bound.
struct DivisorSequence {
    long p = 0;
    int precision = 0;
    std::vector<int> exponents;
    std::vector<bool> saturated;
};

// Smith normal form over Z/p^N by minimal-valuation pivoting (ties: smallest
// row, then smallest column). Every Z/p^N matrix is equivalent to
// diag(p^e1, p^e2, ...) with e1 <= e2 <= ...; rectangular inputs are allowed.
DivisorSequence smith_normal_form(std::vector<std::vector<mpz_class>> m, long p, int precision);

// A p-adic map for zero finding. eval(s, w) must return F(s) claimed to w
// digits; deriv is optional (numeric forward difference used when absent).
struct PadicFunction {
    std::function<PadicElement(const PadicElement&, int)> eval;
    std::function<PadicElement(const PadicElement&, int)> deriv;
};

// Newton refinement of `seed` until valuation(F(s)) >= target_valuation,
// carried out with residues mod p^working_precision. Requires the certificate
// condition valuation(F(seed)) > 2*valuation(F'(seed)); each step is checked
// to gain at least one digit, and a stall raises precision_error. diff_step
// h > 0 fixes the numeric-derivative step p^h (default ceil(target/2)+1).
PadicElement hensel_zero(const PadicFunction& f, const PadicElement& seed, int target_valuation,
                         int working_precision, int diff_step = -1);

} // namespace iwk
