#pragma once

#include <optional>
#include <shared_mutex>
#include <vector>

#include <gmpxx.h>

#include "core/padic.hpp"

namespace iwk {

// Memoized exact Bernoulli numbers (rational, reduced). Thread safe: lookups
// take a shared lock, extensions an exclusive one. The exponent cap bounds
// the exact-numerator route; callers needing larger indices must use the
// series route instead.
class BernoulliTable {
  public:
    static BernoulliTable& instance();

    // Exact B_m (B_1 = -1/2). resource_error above the cap.
    mpq_class bernoulli(long m);

    long cap() const { return cap_; }
    void set_cap(long cap) { cap_ = cap; }

  private:
    BernoulliTable() = default;
    void extend_locked(long m);

    mutable std::shared_mutex mu_;
    std::vector<mpq_class> table_;
    long cap_ = 4000;
};

// One irregular index pair for p: an even k in [2, p-3] with p dividing the
// numerator of B_k, paired with the odd index i = p - k. The s and lambda
// slots are filled by later pipeline stages.
struct IrregularDatum {
    long p = 0;
    long k = 0;
    long i = 0;
    std::optional<int> s;
    std::optional<int> lambda;
};

// All irregular pairs of p in ascending k order, by the exact-numerator
// divisibility test. Requires p an odd prime >= 5.
std::vector<IrregularDatum> irregular_scan(long p);

// First generalized Bernoulli number B_{1,chi} for chi = omega^{-i}, as the
// exact level-p^N average (1/p^N) sum_{a<p^N, p∤a} chi(a)*a, claimed to N
// digits. chi has conductor p, so the inner progressions collapse to a
// closed form; the average is checked to be divisible by p^N before the
// division. i must not be divisible by p-1 (chi nontrivial).
PadicElement b1_chi(long p, long i, int precision);

// s_i = valuation of B_{1,omega^{-i}}, found by raising the precision until
// a digit resolves. Requires (p, p-i) irregular; raises domain_error on a
// regular index, resource_error if s_i >= probe_cap.
int s_invariant(long p, long i, int probe_cap = 24);

// True when p divides the numerator of B_k (k even, 2 <= k <= p-3).
bool divides_bernoulli_numerator(long p, long k);

} // namespace iwk
