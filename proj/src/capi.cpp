// Shared-library boundary. Everything crossing it is plain C data; all
// exceptions are converted to status codes here and never escape.

#include "iwakit.h"

#include <cstring>
#include <string>

#include "core/cache.hpp"
#include "core/congruence.hpp"
#include "core/driver.hpp"
#include "core/errors.hpp"
#include "core/report.hpp"

struct iwk_context {
    std::string last_error;
    std::string pairs_file;
    int32_t n_max = 1;
    int32_t jobs = 1;
    bool cache_enabled = false;
};

struct iwk_result {
    std::string json;
    std::string csv;
    int32_t verdict = 0;
};

namespace {

iwk_status classify(const std::exception& e, iwk_context* ctx) {
    if (ctx)
        ctx->last_error = e.what();
    if (dynamic_cast<const iwk::usage_error*>(&e))
        return IWK_ERR_USAGE;
    if (dynamic_cast<const iwk::domain_error*>(&e))
        return IWK_ERR_DOMAIN;
    if (dynamic_cast<const iwk::resource_error*>(&e))
        return IWK_ERR_RESOURCE;
    if (dynamic_cast<const iwk::precision_error*>(&e))
        return IWK_ERR_PRECISION;
    if (dynamic_cast<const iwk::construction_error*>(&e))
        return IWK_ERR_CONSTRUCTION;
    if (dynamic_cast<const iwk::theorem_violation*>(&e))
        return IWK_ERR_THEOREM;
    return IWK_ERR_INTERNAL;
}

template <typename Fn>
iwk_status guarded(iwk_context* ctx, iwk_result** out, Fn&& body) {
    if (!ctx)
        return IWK_ERR_USAGE;
    if (!out) {
        ctx->last_error = "output pointer is null";
        return IWK_ERR_USAGE;
    }
    *out = nullptr;
    ctx->last_error.clear();
    try {
        *out = body();
        return IWK_OK;
    } catch (const std::exception& e) {
        return classify(e, ctx);
    } catch (...) {
        ctx->last_error = "unknown failure";
        return IWK_ERR_INTERNAL;
    }
}

// field_errors entries that matter clear one of the two flags; the rest are
// informational (closed-form fallback past the SNF dimension cap).
bool spectrum_verdict(const iwk::SpectrumReport& rep) {
    return rep.km_verdict && rep.consistency_ok;
}

} // namespace

extern "C" {

iwk_context* iwk_context_new(void) {
    try {
        return new iwk_context();
    } catch (...) {
        return nullptr;
    }
}

void iwk_context_free(iwk_context* ctx) { delete ctx; }

const char* iwk_last_error(const iwk_context* ctx) {
    return ctx ? ctx->last_error.c_str() : "null context";
}

iwk_status iwk_set_cache_dir(iwk_context* ctx, const char* dir) {
    if (!ctx)
        return IWK_ERR_USAGE;
    ctx->last_error.clear();
    try {
        std::string d = dir ? dir : "";
        iwk::CacheStore::instance().set_directory(d);
        ctx->cache_enabled = !d.empty();
        return IWK_OK;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return IWK_ERR_IO;
    }
}

iwk_status iwk_set_levels(iwk_context* ctx, int32_t n_max) {
    if (!ctx)
        return IWK_ERR_USAGE;
    if (n_max < 0 || n_max > 8) {
        ctx->last_error = "n_max must be in [0, 8]";
        return IWK_ERR_USAGE;
    }
    ctx->n_max = n_max;
    return IWK_OK;
}

iwk_status iwk_set_jobs(iwk_context* ctx, int32_t jobs) {
    if (!ctx)
        return IWK_ERR_USAGE;
    if (jobs < 1 || jobs > 256) {
        ctx->last_error = "jobs must be in [1, 256]";
        return IWK_ERR_USAGE;
    }
    ctx->jobs = jobs;
    return IWK_OK;
}

iwk_status iwk_set_pairs_file(iwk_context* ctx, const char* path) {
    if (!ctx)
        return IWK_ERR_USAGE;
    ctx->pairs_file = path ? path : "";
    return IWK_OK;
}

iwk_status iwk_analyze(iwk_context* ctx, int64_t p, iwk_result** out) {
    return guarded(ctx, out, [&] {
        iwk::AnalyzeOptions opt;
        opt.n_max = ctx->n_max;
        iwk::SpectrumReport rep = iwk::analyze_prime(static_cast<long>(p), opt);
        auto* res = new iwk_result();
        res->json = iwk::render_document(iwk::spectrum_to_json(rep), ctx->cache_enabled);
        res->csv = iwk::scan_csv_header() + iwk::spectrum_to_csv_row(rep);
        res->verdict = spectrum_verdict(rep) ? 1 : 0;
        return res;
    });
}

iwk_status iwk_scan(iwk_context* ctx, int64_t pmin, int64_t pmax, iwk_result** out) {
    return guarded(ctx, out, [&] {
        iwk::AnalyzeOptions opt;
        opt.n_max = ctx->n_max;
        auto reps = iwk::scan_range(static_cast<long>(pmin), static_cast<long>(pmax), opt,
                                    ctx->jobs);
        bool all_ok = true;
        iwk::ordered_json arr = iwk::ordered_json::array();
        std::string csv = iwk::scan_csv_header();
        for (const auto& rep : reps) {
            arr.push_back(iwk::spectrum_to_json(rep));
            csv += iwk::spectrum_to_csv_row(rep);
            if (!spectrum_verdict(rep))
                all_ok = false;
        }
        iwk::ordered_json body;
        body["reports"] = std::move(arr);
        if (!ctx->pairs_file.empty()) {
            iwk::PairsCrossCheck cc = iwk::cross_check_pairs(reps, ctx->pairs_file);
            iwk::ordered_json jc;
            jc["ok"] = cc.ok;
            jc["mismatches"] = cc.mismatches;
            body["pairs_cross_check"] = std::move(jc);
            if (!cc.ok)
                all_ok = false;
        }
        auto* res = new iwk_result();
        res->json = iwk::render_document(body, ctx->cache_enabled);
        res->csv = std::move(csv);
        res->verdict = all_ok ? 1 : 0;
        return res;
    });
}

iwk_status iwk_zero(iwk_context* ctx, int64_t p, int64_t i, int64_t step, int32_t digits,
                    iwk_result** out) {
    return guarded(ctx, out, [&] {
        mpz_class u = step != 0 ? mpz_class(static_cast<long>(step))
                                : mpz_class(static_cast<long>(p) - 1);
        int target = digits > 0 ? digits : 4;
        iwk::ZeroCertificate cert =
            iwk::find_s0(static_cast<long>(p), static_cast<long>(i), u, target);
        auto* res = new iwk_result();
        iwk::ordered_json body = iwk::zero_to_json(cert);
        res->json = iwk::render_document(body, ctx->cache_enabled);
        res->csv = iwk::json_to_kv_csv(body);
        res->verdict = 1;
        return res;
    });
}

iwk_status iwk_congruence(iwk_context* ctx, int64_t p, int64_t i, int32_t n, int32_t digits,
                          iwk_result** out) {
    return guarded(ctx, out, [&] {
        iwk::CongruenceCertificate cert = iwk::verify_congruence(
            static_cast<long>(p), static_cast<long>(i), n, digits > 0 ? digits : -1);
        auto* res = new iwk_result();
        iwk::ordered_json body = iwk::congruence_to_json(cert);
        res->json = iwk::render_document(body, ctx->cache_enabled);
        res->csv = iwk::json_to_kv_csv(body);
        res->verdict = cert.verdict ? 1 : 0;
        return res;
    });
}

iwk_status iwk_selftest(iwk_context* ctx, iwk_result** out) {
    return guarded(ctx, out, [&] {
        iwk::SelftestResult st = iwk::selftest();
        auto* res = new iwk_result();
        iwk::ordered_json body = iwk::selftest_to_json(st);
        res->json = iwk::render_document(body, ctx->cache_enabled);
        res->csv = iwk::json_to_kv_csv(body);
        res->verdict = st.ok ? 1 : 0;
        return res;
    });
}

const char* iwk_result_json(const iwk_result* res) { return res ? res->json.c_str() : ""; }

const char* iwk_result_csv(const iwk_result* res) { return res ? res->csv.c_str() : ""; }

int32_t iwk_result_verdict(const iwk_result* res) { return res ? res->verdict : 0; }

void iwk_result_free(iwk_result* res) { delete res; }

const char* iwk_version(void) { return iwk::library_version(); }

} // extern "C"
