#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "core/padic.hpp"

namespace iwk {

// Finite abelian p-group as the multiset of its cyclic exponents
// (descending, zero factors dropped), tagged with how it was obtained.
struct AbelianGroupDescriptor {
    long p = 0;
    std::vector<int> exponents;
    std::string provenance;

    mpz_class order() const;
    bool operator==(const AbelianGroupDescriptor& o) const {
        return p == o.p && exponents == o.exponents;
    }
};

// Structure of the level-n quotient attached to the odd index i, computed
// from first principles: the cokernel of multiplication by the level-n
// approximant on the group algebra (Z/p^precision)[Gamma_n]. In the group
// basis that matrix is a circulant; the binomial change to the T-basis is
// unimodular, so elementary divisors are unaffected. Any divisor that
// saturates p^precision raises precision_error (retry with a larger
// precision); p^n above dim_cap raises resource_error.
AbelianGroupDescriptor sni_structure(long p, long i, int n, int precision, int dim_cap = 512);

// The same group by the closed-form shape: Z/p^(n+s_i) + (lambda_i - 1)
// copies of Z/p^n.
AbelianGroupDescriptor sni_formula(long p, int n, int s_i, int lambda_i);

// Unit-quotient shapes at level n: r0 large factors and lambda - r0 small
// ones. The two published displays differ by one in both exponents; both are
// emitted, never reconciled. Ullom reading needs n >= 1.
AbelianGroupDescriptor v_plus_ullom(long p, int n, int r0, int lambda);
AbelianGroupDescriptor v_plus_shifted(long p, int n, int r0, int lambda);

} // namespace iwk
