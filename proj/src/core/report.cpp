#include "core/report.hpp"

#include <sstream>

namespace iwk {

const char* library_version() { return "1.0.0"; }

namespace {

std::string dec(const mpz_class& v) { return v.get_str(); }

ordered_json group_json(const AbelianGroupDescriptor& g) {
    ordered_json j;
    j["exponents"] = g.exponents;
    j["provenance"] = g.provenance;
    return j;
}

} // namespace

ordered_json spectrum_to_json(const SpectrumReport& rep) {
    ordered_json j;
    j["prime"] = rep.p;
    j["r0"] = rep.r0;

    ordered_json pairs = ordered_json::array();
    for (const auto& d : rep.pairs) {
        ordered_json e;
        e["k"] = d.k;
        e["i"] = d.i;
        if (d.s)
            e["s"] = *d.s;
        else
            e["s"] = nullptr;
        if (d.lambda)
            e["lambda"] = *d.lambda;
        else
            e["lambda"] = nullptr;
        pairs.push_back(std::move(e));
    }
    j["irregular"] = std::move(pairs);
    j["lambda_total"] = rep.lambda_total;
    j["nu"] = rep.nu;
    j["km_verdict"] = rep.km_verdict;

    ordered_json structures = ordered_json::object();
    bool any_shift = false;
    for (const auto& row : rep.rows) {
        ordered_json r;
        r["S_ni"] = row.s_aggregate;
        ordered_json comps = ordered_json::array();
        for (size_t idx = 0; idx < row.s_components.size(); ++idx) {
            ordered_json c = group_json(row.s_components[idx]);
            if (idx < rep.pairs.size())
                c["i"] = rep.pairs[idx].i;
            comps.push_back(std::move(c));
        }
        r["S_components"] = std::move(comps);
        r["S_provenance"] = row.s_provenance;
        r["V_ullom"] = row.v_ullom.exponents;
        r["V_sec6"] = row.v_shifted.exponents;
        r["snf_matches_formula"] = row.snf_matches_formula;
        r["counts_consistent"] = row.counts_consistent;
        r["shifted_discrepancy"] = row.shifted_discrepancy;
        structures[std::to_string(row.n)] = std::move(r);
        if (row.n >= 1 && row.shifted_discrepancy)
            any_shift = true;
    }
    j["structures"] = std::move(structures);

    ordered_json flags;
    flags["semiregular_assumed"] = rep.semiregular_assumed;
    flags["rn_equals_lambda_assumed"] = rep.rn_equals_lambda_assumed;
    flags["index_shift"] = any_shift;
    flags["consistency_ok"] = rep.consistency_ok;
    j["flags"] = std::move(flags);

    ordered_json errs = ordered_json::object();
    for (const auto& [k, v] : rep.field_errors)
        errs[k] = v;
    j["errors"] = std::move(errs);
    return j;
}

ordered_json zero_to_json(const ZeroCertificate& cert) {
    ordered_json j;
    j["prime"] = cert.p;
    j["index"] = cert.i;
    j["step"] = dec(cert.u);
    j["lambda"] = cert.lambda;
    j["seed"] = cert.seed;
    j["s0"] = dec(cert.s0);
    j["digits"] = cert.digits;
    j["target_digits"] = cert.target_digits;
    j["residual_valuation"] = cert.residual_valuation;
    j["witness_valuation"] = cert.witness_valuation;
    ordered_json b;
    b["value"] = dec(cert.beta.beta);
    b["digits"] = cert.beta.digits;
    b["t_exponents"] = cert.beta.t_exponents;
    j["beta"] = std::move(b);
    j["certified"] = true; // construction throws instead of returning bad data
    return j;
}

ordered_json congruence_to_json(const CongruenceCertificate& cert) {
    ordered_json j;
    j["prime"] = cert.p;
    j["index"] = cert.i;
    j["n"] = cert.n;
    j["lambda"] = cert.lambda;
    j["t_exponent"] = cert.t_exponent;
    j["modulus_digits"] = cert.modulus_digits;
    j["required_valuation"] = cert.required;
    ordered_json terms = ordered_json::array();
    for (size_t k = 0; k < cert.term_residues.size(); ++k) {
        ordered_json t;
        t["residue"] = dec(cert.term_residues[k]);
        t["route"] = k < cert.term_routes.size() ? cert.term_routes[k] : "";
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["sum"] = dec(cert.sum_residue);
    j["valuation"] = cert.valuation;
    j["verdict"] = cert.verdict;
    if (cert.n > 0) {
        j["s0"] = dec(cert.s0_used);
        j["s0_digits"] = cert.s0_digits;
    } else {
        j["s0"] = nullptr;
        j["s0_digits"] = 0;
    }
    return j;
}

ordered_json selftest_to_json(const SelftestResult& res) {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const auto& [name, ok] : res.checks) {
        ordered_json c;
        c["name"] = name;
        c["ok"] = ok;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["ok"] = res.ok;
    return j;
}

std::string scan_csv_header() {
    return "prime,r0,lambda,nu,km_verdict,consistency_ok,errors\n";
}

std::string spectrum_to_csv_row(const SpectrumReport& rep) {
    std::ostringstream out;
    out << rep.p << ',' << rep.r0 << ',' << rep.lambda_total << ',' << rep.nu << ','
        << (rep.km_verdict ? 1 : 0) << ',' << (rep.consistency_ok ? 1 : 0) << ','
        << rep.field_errors.size() << '\n';
    return out.str();
}

std::string json_to_kv_csv(const ordered_json& body) {
    std::ostringstream out;
    out << "key,value\n";
    for (const auto& [k, v] : body.items()) {
        out << k << ',';
        if (v.is_string())
            out << v.get<std::string>();
        else
            out << v.dump();
        out << '\n';
    }
    return out.str();
}

std::string render_document(const ordered_json& body, bool cache_enabled) {
    ordered_json doc;
    ordered_json meta;
    meta["tool"] = "iwakit";
    meta["version"] = library_version();
    meta["schema_version"] = 1;
    meta["cache"] = cache_enabled ? "on" : "off";
    doc["meta"] = std::move(meta);
    for (const auto& [k, v] : body.items())
        doc[k] = v;
    return doc.dump(2) + "\n";
}

} // namespace iwk
