// Command-line front end. Talks to the library exclusively through the
// public C interface, like any external consumer would.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iwakit.h"

namespace {

// 0 = verdicts hold, 1 = a mathematical verdict failed, 2 = operational
// failure (usage, resources, precision, I/O).
int exit_code_for(iwk_status st, int32_t verdict) {
    if (st == IWK_OK)
        return verdict == 1 ? 0 : 1;
    if (st == IWK_ERR_THEOREM)
        return 1;
    return 2;
}

int emit(iwk_result* res, const std::string& out_path, const std::string& format) {
    const char* text = format == "csv" ? iwk_result_csv(res) : iwk_result_json(res);
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

struct Common {
    std::string cache_dir;
    std::string out_path;
    std::string format = "structured-text";
    int32_t n_max = 1;
    int32_t jobs = 1;
    std::string pairs_file;
};

int run(const Common& c, iwk_context* ctx,
        iwk_status (*call)(iwk_context*, iwk_result**, const void*), const void* args) {
    if (!c.cache_dir.empty() && iwk_set_cache_dir(ctx, c.cache_dir.c_str()) != IWK_OK) {
        std::cerr << "error: " << iwk_last_error(ctx) << "\n";
        return 2;
    }
    if (iwk_set_levels(ctx, c.n_max) != IWK_OK || iwk_set_jobs(ctx, c.jobs) != IWK_OK) {
        std::cerr << "error: " << iwk_last_error(ctx) << "\n";
        return 2;
    }
    if (!c.pairs_file.empty())
        iwk_set_pairs_file(ctx, c.pairs_file.c_str());

    iwk_result* res = nullptr;
    iwk_status st = call(ctx, &res, args);
    int code;
    if (st != IWK_OK) {
        std::cerr << "error: " << iwk_last_error(ctx) << "\n";
        code = exit_code_for(st, 0);
    } else {
        int io = emit(res, c.out_path, c.format);
        code = io != 0 ? io : exit_code_for(st, iwk_result_verdict(res));
    }
    iwk_result_free(res);
    return code;
}

struct AnalyzeArgs {
    int64_t p;
};
struct ScanArgs {
    int64_t pmin, pmax;
};
struct ZeroArgs {
    int64_t p, i, step;
    int32_t digits;
};
struct CongruenceArgs {
    int64_t p, i;
    int32_t n, digits;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"iwakit: cyclotomic invariants, unit-quotient structures and "
                 "certified interpolation zeros"};
    app.require_subcommand(1);

    Common common;
    if (const char* env = std::getenv("IWAKIT_CACHE"))
        common.cache_dir = env;
    app.add_option("--cache", common.cache_dir,
                   "cache directory (default: IWAKIT_CACHE env var; empty disables)");
    app.add_option("--out", common.out_path, "write output to this file instead of stdout");
    app.add_option("--format", common.format, "structured-text or csv")
        ->check(CLI::IsMember({"structured-text", "csv"}));

    auto* scan = app.add_subcommand("scan", "analyze every prime in a range");
    ScanArgs sa{5, 5};
    scan->add_option("--pmin", sa.pmin, "lower bound")->required();
    scan->add_option("--pmax", sa.pmax, "upper bound")->required();
    scan->add_option("-n,--levels,--nmax", common.n_max, "structure levels 0..n (default 1)");
    scan->add_option("--jobs", common.jobs, "worker threads (default 1)");
    scan->add_option("--pairs", common.pairs_file, "reference file of \"p k\" lines");

    auto* analyze = app.add_subcommand("analyze", "full report for one prime");
    AnalyzeArgs aa{0};
    analyze->add_option("-p,--prime", aa.p, "prime to analyze")->required();
    analyze->add_option("-n,--levels,--nmax", common.n_max, "structure levels 0..n (default 1)");

    auto* zero = app.add_subcommand("zero", "certified zero of the difference ladder");
    ZeroArgs za{0, 0, 0, 4};
    zero->add_option("-p,--prime", za.p, "prime")->required();
    zero->add_option("-i,--index", za.i, "odd irregular index")->required();
    zero->add_option("--step", za.step, "difference step (default p-1)");
    zero->add_option("--digits,--precision", za.digits, "certified digits (default 4)");

    auto* cong = app.add_subcommand("congruence", "divisibility certificate at level n");
    CongruenceArgs ca{0, 0, 0, 0};
    cong->add_option("-p,--prime", ca.p, "prime")->required();
    cong->add_option("-i,--index", ca.i, "odd irregular index")->required();
    cong->add_option("-n,--level", ca.n, "congruence level (default 0)");
    cong->add_option("--digits,--precision", ca.digits, "working modulus digits (default n+lambda+1)");

    auto* self = app.add_subcommand("selftest", "fast arithmetic-kernel checks");

    // global options may appear after the subcommand name
    for (CLI::App* sc : {scan, analyze, zero, cong, self})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    iwk_context* ctx = iwk_context_new();
    if (!ctx) {
        std::cerr << "error: cannot create context\n";
        return 2;
    }

    int code = 2;
    if (scan->parsed()) {
        code = run(common, ctx,
                   [](iwk_context* c, iwk_result** r, const void* a) {
                       const auto* s = static_cast<const ScanArgs*>(a);
                       return iwk_scan(c, s->pmin, s->pmax, r);
                   },
                   &sa);
    } else if (analyze->parsed()) {
        code = run(common, ctx,
                   [](iwk_context* c, iwk_result** r, const void* a) {
                       const auto* s = static_cast<const AnalyzeArgs*>(a);
                       return iwk_analyze(c, s->p, r);
                   },
                   &aa);
    } else if (zero->parsed()) {
        code = run(common, ctx,
                   [](iwk_context* c, iwk_result** r, const void* a) {
                       const auto* s = static_cast<const ZeroArgs*>(a);
                       return iwk_zero(c, s->p, s->i, s->step, s->digits, r);
                   },
                   &za);
    } else if (cong->parsed()) {
        code = run(common, ctx,
                   [](iwk_context* c, iwk_result** r, const void* a) {
                       const auto* s = static_cast<const CongruenceArgs*>(a);
                       return iwk_congruence(c, s->p, s->i, s->n, s->digits, r);
                   },
                   &ca);
    } else if (self->parsed()) {
        code = run(common, ctx,
                   [](iwk_context* c, iwk_result** r, const void*) {
                       return iwk_selftest(c, r);
                   },
                   nullptr);
    }

    iwk_context_free(ctx);
    return code;
}
