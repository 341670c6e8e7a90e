#include <doctest.h>

#include <cstring>
#include <string>

#include "iwakit.h"

TEST_CASE("context lifecycle and version") {
    CHECK(std::strcmp(iwk_version(), "1.0.0") == 0);
    iwk_context* ctx = iwk_context_new();
    REQUIRE(ctx != nullptr);
    CHECK(std::string(iwk_last_error(ctx)).empty());
    iwk_context_free(ctx);
    iwk_context_free(nullptr); // harmless
}

TEST_CASE("analyze round-trip through the boundary") {
    iwk_context* ctx = iwk_context_new();
    iwk_result* res = nullptr;
    iwk_status st = iwk_analyze(ctx, 37, &res);
    REQUIRE(st == IWK_OK);
    REQUIRE(res != nullptr);
    CHECK(iwk_result_verdict(res) == 1);
    std::string json = iwk_result_json(res);
    CHECK(json.find("\"prime\": 37") != std::string::npos);
    CHECK(json.find("\"km_verdict\": true") != std::string::npos);
    std::string csv = iwk_result_csv(res);
    CHECK(csv.find("prime,r0,lambda") == 0);
    iwk_result_free(res);
    iwk_context_free(ctx);
}

TEST_CASE("errors surface as codes and messages, never exceptions") {
    iwk_context* ctx = iwk_context_new();
    iwk_result* res = nullptr;

    CHECK(iwk_analyze(ctx, 4, &res) == IWK_ERR_USAGE);
    CHECK(res == nullptr);
    CHECK(std::string(iwk_last_error(ctx)).size() > 0);

    CHECK(iwk_zero(ctx, 5, 3, 0, 3, &res) == IWK_ERR_DOMAIN);
    CHECK(res == nullptr);

    CHECK(iwk_congruence(ctx, 5, 3, 0, 0, &res) == IWK_ERR_DOMAIN);

    CHECK(iwk_set_levels(ctx, -1) == IWK_ERR_USAGE);
    CHECK(iwk_set_jobs(ctx, 0) == IWK_ERR_USAGE);
    CHECK(iwk_analyze(nullptr, 37, &res) == IWK_ERR_USAGE);
    CHECK(iwk_analyze(ctx, 37, nullptr) == IWK_ERR_USAGE);

    iwk_context_free(ctx);
}

TEST_CASE("scan and selftest verdicts") {
    iwk_context* ctx = iwk_context_new();
    iwk_result* res = nullptr;

    REQUIRE(iwk_set_levels(ctx, 0) == IWK_OK);
    REQUIRE(iwk_scan(ctx, 5, 20, &res) == IWK_OK);
    CHECK(iwk_result_verdict(res) == 1);
    std::string json = iwk_result_json(res);
    CHECK(json.find("\"reports\"") != std::string::npos);
    iwk_result_free(res);

    REQUIRE(iwk_selftest(ctx, &res) == IWK_OK);
    CHECK(iwk_result_verdict(res) == 1);
    iwk_result_free(res);
    iwk_context_free(ctx);
}

TEST_CASE("certificates round-trip through the boundary") {
    iwk_context* ctx = iwk_context_new();
    iwk_result* res = nullptr;

    REQUIRE(iwk_congruence(ctx, 37, 5, 0, 0, &res) == IWK_OK);
    CHECK(iwk_result_verdict(res) == 1);
    std::string json = iwk_result_json(res);
    CHECK(json.find("\"t_exponent\": 32") != std::string::npos);
    iwk_result_free(res);

    REQUIRE(iwk_zero(ctx, 37, 5, 0, 4, &res) == IWK_OK);
    CHECK(iwk_result_verdict(res) == 1);
    json = iwk_result_json(res);
    CHECK(json.find("\"s0\": \"447047\"") != std::string::npos);
    iwk_result_free(res);

    iwk_context_free(ctx);
}
