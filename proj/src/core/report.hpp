#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core/congruence.hpp"
#include "core/driver.hpp"
#include "core/iwasawa.hpp"

namespace iwk {

using ordered_json = nlohmann::ordered_json;

// JSON bodies. Key order is fixed; large integers are decimal strings so
// the documents round-trip without precision loss.
ordered_json spectrum_to_json(const SpectrumReport& rep);
ordered_json zero_to_json(const ZeroCertificate& cert);
ordered_json congruence_to_json(const CongruenceCertificate& cert);
ordered_json selftest_to_json(const SelftestResult& res);

// One-line-per-prime table for scans.
std::string scan_csv_header();
std::string spectrum_to_csv_row(const SpectrumReport& rep);

// Flat key,value table for single-object documents.
std::string json_to_kv_csv(const ordered_json& body);

// Final document: meta block (tool, version, cache switch) followed by the
// body keys. Stable byte-for-byte for a fixed version and configuration.
std::string render_document(const ordered_json& body, bool cache_enabled);

const char* library_version();

} // namespace iwk
