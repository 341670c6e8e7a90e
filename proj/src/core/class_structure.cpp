#include "core/class_structure.hpp"

#include <algorithm>

#include "core/iwasawa.hpp"

namespace iwk {

mpz_class AbelianGroupDescriptor::order() const {
    int sum = 0;
    for (int e : exponents)
        sum += e;
    return p_power(p, sum);
}

AbelianGroupDescriptor sni_structure(long p, long i, int n, int precision, int dim_cap) {
    if (n < 0)
        throw usage_error("sni_structure: level must be >= 0");
    auto a = approximant(p, i, n, precision);
    size_t pn = a->coeffs.size();
    if (pn > static_cast<size_t>(dim_cap))
        throw resource_error("sni_structure: matrix dimension p^n exceeds cap " +
                             std::to_string(dim_cap));
    // Multiplication by g on the group basis: column c holds g * gamma^c,
    // whose gamma^r coefficient is g_(r-c).
    std::vector<std::vector<mpz_class>> m(pn, std::vector<mpz_class>(pn));
    for (size_t r = 0; r < pn; ++r)
        for (size_t c = 0; c < pn; ++c)
            m[r][c] = a->coeffs[(r + pn - c) % pn];
    DivisorSequence d = smith_normal_form(std::move(m), p, precision);
    AbelianGroupDescriptor out;
    out.p = p;
    out.provenance = "computed-snf";
    for (size_t k = 0; k < d.exponents.size(); ++k) {
        if (d.saturated[k])
            throw precision_error("sni_structure: elementary divisor saturated p^" +
                                  std::to_string(precision) + "; retry with higher precision");
        if (d.exponents[k] > 0)
            out.exponents.push_back(d.exponents[k]);
    }
    std::sort(out.exponents.rbegin(), out.exponents.rend());
    return out;
}

AbelianGroupDescriptor sni_formula(long p, int n, int s_i, int lambda_i) {
    if (n < 0 || s_i < 1 || lambda_i < 1)
        throw usage_error("sni_formula: need n >= 0, s_i >= 1, lambda_i >= 1");
    AbelianGroupDescriptor out;
    out.p = p;
    out.provenance = "formula-structure";
    out.exponents.push_back(n + s_i);
    for (int k = 1; k < lambda_i; ++k)
        if (n > 0)
            out.exponents.push_back(n);
    std::sort(out.exponents.rbegin(), out.exponents.rend());
    return out;
}

AbelianGroupDescriptor v_plus_ullom(long p, int n, int r0, int lambda) {
    if (n < 1)
        throw usage_error("v_plus_ullom: level must be >= 1");
    if (r0 < 0 || lambda < r0)
        throw usage_error("v_plus_ullom: need 0 <= r0 <= lambda");
    AbelianGroupDescriptor out;
    out.p = p;
    out.provenance = "formula-unit-ullom";
    for (int k = 0; k < r0; ++k)
        out.exponents.push_back(n);
    for (int k = 0; k < lambda - r0; ++k)
        if (n - 1 > 0)
            out.exponents.push_back(n - 1);
    return out;
}

AbelianGroupDescriptor v_plus_shifted(long p, int n, int r0, int lambda) {
    if (n < 0)
        throw usage_error("v_plus_shifted: level must be >= 0");
    if (r0 < 0 || lambda < r0)
        throw usage_error("v_plus_shifted: need 0 <= r0 <= lambda");
    AbelianGroupDescriptor out;
    out.p = p;
    out.provenance = "formula-unit-shifted";
    for (int k = 0; k < r0; ++k)
        out.exponents.push_back(n + 1);
    for (int k = 0; k < lambda - r0; ++k)
        if (n > 0)
            out.exponents.push_back(n);
    return out;
}

} // namespace iwk
