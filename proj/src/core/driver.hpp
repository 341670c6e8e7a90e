#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/bernoulli.hpp"
#include "core/class_structure.hpp"
#include "core/congruence.hpp"
#include "core/iwasawa.hpp"

namespace iwk {

// Structure data at one level n.
struct StructureRow {
    int n = 0;
    std::vector<AbelianGroupDescriptor> s_components; // one per irregular index
    std::vector<int> s_aggregate;                     // merged exponents, descending
    std::string s_provenance;                         // computed-snf | formula-structure | mixed | none
    AbelianGroupDescriptor v_ullom;
    AbelianGroupDescriptor v_shifted;
    bool snf_matches_formula = true;
    bool counts_consistent = true; // ullom order == p^(r0 + (n-1)*lambda) for n >= 1
    bool shifted_discrepancy = false; // the two unit-quotient readings differ in order
};

// Everything the tool can say about one prime.
struct SpectrumReport {
    long p = 0;
    int n_max = 0;
    int r0 = 0;
    std::vector<IrregularDatum> pairs;
    long lambda_total = 0;
    long nu = 0;
    bool km_verdict = true;
    std::vector<StructureRow> rows;
    bool semiregular_assumed = true;
    bool rn_equals_lambda_assumed = true;
    bool consistency_ok = true; // all row checks and r0 <= lambda_total
    std::map<std::string, std::string> field_errors;
};

struct AnalyzeOptions {
    int n_max = 1;
    int dim_cap = 512;
    int s_probe_cap = 24;
};

// Full pipeline for one prime: scan, s and lambda per irregular index,
// per-level structures with both unit-quotient readings, consistency flags.
// Field-level failures are annotated in field_errors instead of aborting the
// whole report.
SpectrumReport analyze_prime(long p, const AnalyzeOptions& opt = {});

// analyze_prime over every prime in [pmin, pmax], optionally on a small
// worker pool. Results come back in ascending prime order regardless of
// jobs.
std::vector<SpectrumReport> scan_range(long pmin, long pmax, const AnalyzeOptions& opt = {},
                                       int jobs = 1);

bool is_prime(long v);

// Fast invariant sweep: fixed-value spot checks and property checks across
// the arithmetic kernel. Runs in well under a minute.
struct SelftestResult {
    std::vector<std::pair<std::string, bool>> checks;
    bool ok = true;
};
SelftestResult selftest();

// Compare detected irregular pairs against a reference file of "p k" lines.
// Only primes present in both the reports and the file are compared;
// any difference is reported, never adopted.
struct PairsCrossCheck {
    bool ok = true;
    std::vector<std::string> mismatches;
};
PairsCrossCheck cross_check_pairs(const std::vector<SpectrumReport>& reports,
                                  const std::string& path);

} // namespace iwk
