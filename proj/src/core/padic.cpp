#include "core/padic.hpp"

#include <algorithm>
#include <utility>

namespace iwk {

mpz_class p_power(long p, int n) {
    if (p < 2)
        throw usage_error("p_power: p must be >= 2");
    if (n < 0)
        throw usage_error("p_power: negative exponent");
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    return m;
}

int valuation_capped(const mpz_class& r, long p, int cap) {
    if (r == 0)
        return cap;
    mpz_class t = r;
    int v = 0;
    while (v < cap && mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p));
        ++v;
    }
    return v;
}

PadicElement::PadicElement(long p, int precision, mpz_class residue)
    : p_(p), prec_(precision), res_(std::move(residue)) {
    if (p_ < 3 || p_ % 2 == 0)
        throw usage_error("PadicElement: p must be an odd prime");
    if (prec_ < 1)
        throw usage_error("PadicElement: precision must be >= 1");
    mpz_class m = modulus();
    mpz_mod(res_.get_mpz_t(), res_.get_mpz_t(), m.get_mpz_t());
}

int PadicElement::valuation() const { return valuation_capped(res_, p_, prec_); }

bool PadicElement::is_unit() const { return mpz_divisible_ui_p(res_.get_mpz_t(), static_cast<unsigned long>(p_)) == 0; }

PadicElement PadicElement::with_precision(int n) const {
    if (n < 1 || n > prec_)
        throw usage_error("with_precision: target outside [1, precision]");
    return PadicElement(p_, n, res_);
}

PadicElement PadicElement::unit_part() const {
    if (res_ == 0)
        throw domain_error("unit_part: element is zero at this precision");
    int v = valuation();
    mpz_class t = res_;
    for (int k = 0; k < v; ++k)
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(p_));
    return PadicElement(p_, prec_ - v, t);
}

namespace {

void require_same_p(const PadicElement& a, const PadicElement& b) {
    if (a.prime() != b.prime())
        throw usage_error("p-adic arithmetic across different primes");
}

} // namespace

PadicElement PadicElement::operator+(const PadicElement& o) const {
    require_same_p(*this, o);
    return PadicElement(p_, std::min(prec_, o.prec_), res_ + o.res_);
}

PadicElement PadicElement::operator-(const PadicElement& o) const {
    require_same_p(*this, o);
    return PadicElement(p_, std::min(prec_, o.prec_), res_ - o.res_);
}

PadicElement PadicElement::operator*(const PadicElement& o) const {
    require_same_p(*this, o);
    return PadicElement(p_, std::min(prec_, o.prec_), res_ * o.res_);
}

PadicElement PadicElement::operator-() const { return PadicElement(p_, prec_, -res_); }

PadicElement PadicElement::invert() const {
    if (!is_unit())
        throw domain_error("invert: element is not a unit");
    mpz_class m = modulus();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), res_.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("invert: no inverse modulo p^N");
    return PadicElement(p_, prec_, inv);
}

PadicElement PadicElement::div_exact(const PadicElement& y) const {
    require_same_p(*this, y);
    if (y.res_ == 0)
        throw domain_error("div_exact: divisor is zero at its precision");
    int k = y.valuation();
    if (valuation() < k)
        throw domain_error("div_exact: dividend valuation below divisor valuation");
    int n = std::min(prec_, y.prec_) - k;
    if (n < 1)
        throw precision_error("div_exact: no digits remain after dividing by p^k");
    mpz_class num = res_;
    mpz_class den = y.res_;
    for (int j = 0; j < k; ++j) {
        mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p_));
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p_));
    }
    mpz_class m = p_power(p_, n);
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("div_exact: divisor unit part not invertible");
    return PadicElement(p_, n, num * inv);
}

bool PadicElement::operator==(const PadicElement& o) const {
    return p_ == o.p_ && prec_ == o.prec_ && res_ == o.res_;
}

PadicElement teichmuller(const mpz_class& a, long p, int precision) {
    mpz_class m = p_power(p, precision);
    mpz_class x = a % m;
    if (x < 0)
        x += m;
    if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)))
        throw domain_error("teichmuller: argument not a unit mod p");
    // x -> x^p gains at least one digit of the fixed point per step.
    for (int k = 0; k < precision; ++k) {
        mpz_class y;
        mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
        if (y == x)
            break;
        x = y;
    }
    mpz_class chk;
    mpz_powm_ui(chk.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), m.get_mpz_t());
    if (chk != x)
        throw construction_error("teichmuller: no fixed point reached");
    return PadicElement(p, precision, x);
}

PadicElement pow_one_plus_p(const PadicElement& s, int precision) {
    long p = s.prime();
    // (1+p)^s is determined by s mod p^(precision-1); cap the claim.
    int n = std::min(precision, s.precision() + 1);
    mpz_class m = p_power(p, n);
    // term_k = s(s-1)...(s-k+1) / k! * p^k. Track the numerator product and
    // k! = p^vk * (unit) separately; the net power k - vk never goes
    // negative, so no working digits are lost.
    mpz_class acc = 1;
    mpz_class num = 1;      // falling factorial mod p^n
    mpz_class fact_unit = 1; // unit part of k! mod p^n
    long vk = 0;
    // k - v_p(k!) >= k(p-2)/(p-1), so terms vanish mod p^n from
    // k >= n(p-1)/(p-2) on.
    long k_stop = (static_cast<long>(n) * (p - 1)) / (p - 2) + 2;
    for (long k = 1; k <= k_stop; ++k) {
        mpz_class f = s.residue() - (k - 1);
        num = (num * f) % m;
        long kk = k;
        while (kk % p == 0) {
            kk /= p;
            ++vk;
        }
        fact_unit = (fact_unit * kk) % m;
        long net = k - vk;
        if (net >= n)
            continue;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), fact_unit.get_mpz_t(), m.get_mpz_t());
        mpz_class term = (num * inv) % m;
        term = (term * p_power(p, static_cast<int>(net))) % m;
        acc = (acc + term) % m;
    }
    return PadicElement(p, n, acc);
}

TruncatedSeries::TruncatedSeries(long p, int precision, std::vector<mpz_class> coeffs)
    : p_(p), prec_(precision), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw usage_error("TruncatedSeries: no coefficients");
    if (prec_ < 1)
        throw usage_error("TruncatedSeries: precision must be >= 1");
    mpz_class m = p_power(p_, prec_);
    for (auto& c : coeffs_) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
}

PadicElement TruncatedSeries::evaluate(const PadicElement& t) const {
    if (t.prime() != p_)
        throw usage_error("TruncatedSeries::evaluate: prime mismatch");
    if (t.valuation() < 1)
        throw domain_error("TruncatedSeries::evaluate: point must have valuation >= 1");
    int n = std::min({prec_, t.precision(), length()});
    mpz_class m = p_power(p_, n);
    mpz_class tv = t.residue() % m;
    mpz_class acc = 0;
    for (int k = length() - 1; k >= 0; --k) {
        acc = (acc * tv + coeffs_[static_cast<size_t>(k)]) % m;
    }
    return PadicElement(p_, n, acc);
}

TruncatedSeries TruncatedSeries::derivative() const {
    std::vector<mpz_class> d;
    for (int k = 1; k < length(); ++k)
        d.push_back(coeffs_[static_cast<size_t>(k)] * k);
    if (d.empty())
        d.emplace_back(0);
    return TruncatedSeries(p_, prec_, std::move(d));
}

DivisorSequence smith_normal_form(std::vector<std::vector<mpz_class>> m, long p, int precision) {
    if (m.empty() || m[0].empty())
        throw usage_error("smith_normal_form: empty matrix");
    size_t rows = m.size();
    size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols)
            throw usage_error("smith_normal_form: ragged matrix");
    mpz_class mod = p_power(p, precision);
    for (auto& r : m)
        for (auto& x : r)
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());

    size_t steps = std::min(rows, cols);
    DivisorSequence out;
    out.p = p;
    out.precision = precision;
    for (size_t t = 0; t < steps; ++t) {
        int best_v = precision;
        size_t bi = t, bj = t;
        for (size_t i = t; i < rows; ++i) {
            for (size_t j = t; j < cols; ++j) {
                int v = valuation_capped(m[i][j], p, best_v);
                if (v < best_v) {
                    best_v = v;
                    bi = i;
                    bj = j;
                }
            }
        }
        if (best_v >= precision) {
            // Remaining block vanishes mod p^N: divisors are only bounded below.
            for (size_t k = t; k < steps; ++k) {
                out.exponents.push_back(precision);
                out.saturated.push_back(true);
            }
            return out;
        }
        std::swap(m[t], m[bi]);
        if (bj != t)
            for (size_t i = 0; i < rows; ++i)
                std::swap(m[i][t], m[i][bj]);

        // Scale the pivot row so the pivot becomes exactly p^v.
        mpz_class unit = m[t][t];
        for (int k = 0; k < best_v; ++k)
            mpz_divexact_ui(unit.get_mpz_t(), unit.get_mpz_t(), static_cast<unsigned long>(p));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), mod.get_mpz_t());
        for (size_t j = t; j < cols; ++j)
            m[t][j] = (m[t][j] * inv) % mod;

        mpz_class pv = p_power(p, best_v);
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0)
                continue;
            // Pivot minimality guarantees exact divisibility.
            mpz_class f = m[i][t] / pv;
            for (size_t j = t; j < cols; ++j) {
                m[i][j] = (m[i][j] - f * m[t][j]) % mod;
                if (m[i][j] < 0)
                    m[i][j] += mod;
            }
        }
        // Column operations below row t are no-ops now; clearing the pivot row
        // is a plain column subtraction.
        for (size_t j = t + 1; j < cols; ++j)
            m[t][j] = 0;
        out.exponents.push_back(best_v);
        out.saturated.push_back(false);
    }
    for (size_t k = 1; k < out.exponents.size(); ++k)
        if (out.exponents[k] < out.exponents[k - 1])
            throw construction_error("smith_normal_form: divisors not nondecreasing");
    return out;
}

PadicElement hensel_zero(const PadicFunction& f, const PadicElement& seed, int target_valuation,
                         int working_precision, int diff_step) {
    if (!f.eval)
        throw usage_error("hensel_zero: missing eval");
    long p = seed.prime();
    int w = working_precision;
    int target = target_valuation;
    if (target < 1 || w < target)
        throw usage_error("hensel_zero: need working_precision >= target_valuation >= 1");
    // The difference step must leave at least one claimed digit in the
    // quotient: valuation h costs h digits of the w available.
    int h = diff_step > 0 ? diff_step : std::min(target / 2 + target % 2 + 1, w - 1);
    if (h < 1)
        h = 1;
    if (!f.deriv && w - h < 1)
        throw usage_error("hensel_zero: working precision too small for a numeric derivative");

    mpz_class mod_w = p_power(p, w);
    mpz_class s_res = seed.residue() % mod_w;

    auto eval_at = [&](const mpz_class& r) { return f.eval(PadicElement(p, w, r), w); };
    auto deriv_at = [&](const mpz_class& r, const PadicElement& g0) {
        if (f.deriv)
            return f.deriv(PadicElement(p, w, r), w);
        PadicElement g1 = eval_at(r + p_power(p, h));
        PadicElement diff = g1 - g0;
        if (diff.valuation() < h)
            throw construction_error("hensel_zero: difference quotient not divisible by step");
        // diff / p^h, claimed to w - h digits beyond the step's truncation.
        mpz_class d = diff.residue();
        for (int k = 0; k < h; ++k)
            mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
        return PadicElement(p, std::min(diff.precision() - h, h), d);
    };

    PadicElement g0 = eval_at(s_res);
    int vg = g0.valuation();
    if (vg >= target)
        return PadicElement(p, w, s_res);
    PadicElement d0 = deriv_at(s_res, g0);
    int vd = d0.valuation();
    if (vd >= d0.precision())
        throw precision_error("hensel_zero: derivative vanishes at working precision");
    if (vg <= 2 * vd)
        throw domain_error("hensel_zero: no certified zero in the seed disc (valuation(F) <= 2*valuation(F'))");

    for (int iter = 0; iter < w + 4; ++iter) {
        if (vg >= target)
            return PadicElement(p, w, s_res);
        int unit_digits = std::min(g0.precision() - vg, d0.precision() - vd);
        if (unit_digits <= 0)
            throw precision_error("hensel_zero: working precision exhausted");
        mpz_class mu = p_power(p, unit_digits);
        mpz_class gu = g0.residue();
        for (int k = 0; k < vg; ++k)
            mpz_divexact_ui(gu.get_mpz_t(), gu.get_mpz_t(), static_cast<unsigned long>(p));
        mpz_class du = d0.residue();
        for (int k = 0; k < vd; ++k)
            mpz_divexact_ui(du.get_mpz_t(), du.get_mpz_t(), static_cast<unsigned long>(p));
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), du.get_mpz_t(), mu.get_mpz_t());
        // Correction p^(vg-vd) * unit keeps every certain digit: the unknown
        // tail sits above valuation vg - vd + unit_digits.
        mpz_class corr = ((gu % mu) * inv) % mu;
        corr *= p_power(p, vg - vd);
        s_res = (s_res - corr) % mod_w;
        if (s_res < 0)
            s_res += mod_w;

        int prev_vg = vg;
        g0 = eval_at(s_res);
        d0 = deriv_at(s_res, g0);
        vg = g0.valuation();
        vd = d0.valuation();
        if (vg <= prev_vg)
            throw precision_error("hensel_zero: no digit gained, working precision exhausted");
    }
    throw precision_error("hensel_zero: iteration limit reached before target valuation");
}

} // namespace iwk
