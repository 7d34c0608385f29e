#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "expsum/expsum.h"

namespace {

struct Field {
    expsum_field* h = nullptr;
    ~Field() { expsum_field_free(h); }
};
struct Poly {
    expsum_poly* h = nullptr;
    ~Poly() { expsum_poly_free(h); }
};
struct Report {
    expsum_report* h = nullptr;
    ~Report() { expsum_report_free(h); }
};

}  // namespace

TEST_CASE("field and poly lifecycle") {
    Field f;
    REQUIRE(expsum_field_create(3, 1, nullptr, &f.h) == EXPSUM_OK);
    CHECK(expsum_field_p(f.h) == 3);
    CHECK(expsum_field_a(f.h) == 1);

    Poly p;
    REQUIRE(expsum_poly_parse(f.h, 2, "x1*x2 + x1 + x2", &p.h) == EXPSUM_OK);
    CHECK(expsum_poly_degree(p.h) == 2);
    CHECK(std::string(expsum_poly_str(p.h)) == "x1*x2 + x1 + x2");

    // supplied modulus
    Field f9;
    REQUIRE(expsum_field_create(3, 2, "1,0,1", &f9.h) == EXPSUM_OK);
    CHECK(expsum_field_a(f9.h) == 2);
}

TEST_CASE("error codes") {
    Field f;
    CHECK(expsum_field_create(4, 1, nullptr, &f.h) == EXPSUM_ERR_ARGUMENT);
    CHECK(std::string(expsum_last_error()).find("prime") != std::string::npos);

    CHECK(expsum_field_create(2, 2, "1,0,1", &f.h) == EXPSUM_ERR_ARGUMENT);  // reducible

    REQUIRE(expsum_field_create(3, 1, nullptr, &f.h) == EXPSUM_OK);
    Poly p;
    CHECK(expsum_poly_parse(f.h, 2, "x3 + 1", &p.h) == EXPSUM_ERR_PARSE);
    CHECK(expsum_poly_parse(f.h, 1, "x1 ++", &p.h) == EXPSUM_ERR_PARSE);

    REQUIRE(expsum_poly_parse(f.h, 1, "x1", &p.h) == EXPSUM_OK);
    Report r;
    CHECK(expsum_sum(p.h, 30, 1000, 1, &r.h) == EXPSUM_ERR_BUDGET);

    // Newton mismatch propagates from check-1-18 factor validation
    Poly q;
    REQUIRE(expsum_poly_parse(f.h, 2, "x1*x2 + x1", &q.h) == EXPSUM_OK);
    const char* texts[] = {"x1"};
    int mults[] = {2};
    Report r2;
    CHECK(expsum_check_1_18(q.h, texts, mults, 1, &r2.h) == EXPSUM_ERR_MISMATCH);
}

TEST_CASE("sum reports") {
    Field f;
    Poly p;
    REQUIRE(expsum_field_create(3, 1, nullptr, &f.h) == EXPSUM_OK);
    REQUIRE(expsum_poly_parse(f.h, 1, "x1^2", &p.h) == EXPSUM_OK);
    Report r;
    REQUIRE(expsum_sum(p.h, 2, 0, 1, &r.h) == EXPSUM_OK);
    auto j = nlohmann::json::parse(expsum_report_json(r.h));
    CHECK(j["sums"][0]["coords"] == nlohmann::json({"1", "2"}));
    CHECK(expsum_report_passed(r.h) == 1);
    CHECK(std::string(expsum_report_text(r.h)).find("sums") != std::string::npos);
}

TEST_CASE("spectral and b-range reports") {
    Field f;
    Poly p;
    REQUIRE(expsum_field_create(3, 1, nullptr, &f.h) == EXPSUM_OK);
    REQUIRE(expsum_poly_parse(f.h, 2, "x1*x2 + x1 + x2", &p.h) == EXPSUM_OK);
    Report r;
    REQUIRE(expsum_spectral(p.h, 2, 3, -1, &r.h) == EXPSUM_OK);
    auto j = nlohmann::json::parse(expsum_report_json(r.h));
    CHECK(j["vanishing"]["verdict"] == "verified-to-bound");
    CHECK(j["page"]["cells"].contains("0,2"));
    CHECK(expsum_report_passed(r.h) == 1);

    Report rb;
    REQUIRE(expsum_b_range(2, 3, 2, &rb.h) == EXPSUM_OK);
    auto jb = nlohmann::json::parse(expsum_report_json(rb.h));
    CHECK(jb["empty"] == true);
    CHECK(jb["routes_agree"] == true);
}

TEST_CASE("check-1-18 through the C surface") {
    Field f;
    Poly p;
    REQUIRE(expsum_field_create(3, 1, nullptr, &f.h) == EXPSUM_OK);
    REQUIRE(expsum_poly_parse(f.h, 2, "x1*x2 + x1 + x2", &p.h) == EXPSUM_OK);
    const char* texts[] = {"x1", "x2"};
    int mults[] = {1, 1};
    Report r;
    REQUIRE(expsum_check_1_18(p.h, texts, mults, 2, &r.h) == EXPSUM_OK);
    auto j = nlohmann::json::parse(expsum_report_json(r.h));
    CHECK(j["check_1_18"]["pass"] == true);
    CHECK(j["predicted_e"] == 2);
}

TEST_CASE("dwork verify through the C surface") {
    Field f;
    Poly p;
    REQUIRE(expsum_field_create(3, 1, nullptr, &f.h) == EXPSUM_OK);
    REQUIRE(expsum_poly_parse(f.h, 1, "x1^2", &p.h) == EXPSUM_OK);
    Report r;
    REQUIRE(expsum_dwork_verify(p.h, 2, 9, 4, 0, &r.h) == EXPSUM_OK);
    CHECK(expsum_report_passed(r.h) == 1);

    // a > 1 is unsupported for the operator path
    Field f4;
    Poly p4;
    REQUIRE(expsum_field_create(2, 2, nullptr, &f4.h) == EXPSUM_OK);
    REQUIRE(expsum_poly_parse(f4.h, 1, "x1", &p4.h) == EXPSUM_OK);
    Report r4;
    CHECK(expsum_dwork_verify(p4.h, 1, 0, 0, 0, &r4.h) == EXPSUM_ERR_UNSUPPORTED);
}

TEST_CASE("analyze: options, determinism, empty selection") {
    Field f;
    Poly p;
    REQUIRE(expsum_field_create(3, 1, nullptr, &f.h) == EXPSUM_OK);
    REQUIRE(expsum_poly_parse(f.h, 2, "x1*x2 + x1 + x2", &p.h) == EXPSUM_OK);

    Report r1, r2;
    const char* opts = "{\"i_max\":2,\"threads\":2}";
    REQUIRE(expsum_analyze(p.h, opts, &r1.h) == EXPSUM_OK);
    REQUIRE(expsum_analyze(p.h, opts, &r2.h) == EXPSUM_OK);
    // identical config -> byte-identical JSON
    CHECK(std::string(expsum_report_json(r1.h)) == std::string(expsum_report_json(r2.h)));
    CHECK(expsum_report_passed(r1.h) == 1);

    auto j = nlohmann::json::parse(expsum_report_json(r1.h));
    CHECK(j["milnor"]["value"] == "1");
    CHECK(j["cross_checks"]["deg_lambda_equals_milnor"] == true);
    CHECK(j["lfunction"]["weil"]["pass"] == true);

    Report r3;
    CHECK(expsum_analyze(p.h, "{\"analyses\":[]}", &r3.h) == EXPSUM_ERR_ARGUMENT);
    Report r4;
    CHECK(expsum_analyze(p.h, "{bad json", &r4.h) == EXPSUM_ERR_PARSE);
}
