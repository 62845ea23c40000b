// Exercises the shared library strictly through its C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "symcube.h"

namespace {

std::string render(sc_report* rep, const char* format) {
    char* text = nullptr;
    REQUIRE(sc_report_render(rep, format, 0, &text) == SC_OK);
    std::string out(text);
    sc_string_free(text);
    return out;
}

const std::string kCertDir = SYMCUBE_CERT_DIR;

} // namespace

TEST_CASE("decompose through the c api") {
    sc_report* rep = nullptr;
    REQUIRE(sc_decompose("gl", 2, 4, &rep) == SC_OK);
    CHECK(sc_report_passed(rep) == 1);
    std::string json = render(rep, "json");
    CHECK(json.find("\"total_dim\": \"136\"") != std::string::npos);
    CHECK(json.find("elapsed_us") == std::string::npos);
    std::string md = render(rep, "markdown");
    CHECK(md.find("| weight |") != std::string::npos);
    std::string csv = render(rep, "csv");
    CHECK(csv.find("weight,gl_multiplicity") == 0);
    sc_report_free(rep);
}

TEST_CASE("timing flag changes only the timing field") {
    sc_report* rep = nullptr;
    REQUIRE(sc_decompose("sl", 1, 3, &rep) == SC_OK);
    char* with = nullptr;
    REQUIRE(sc_report_render(rep, "json", 1, &with) == SC_OK);
    CHECK(std::string(with).find("elapsed_us") != std::string::npos);
    sc_string_free(with);
    sc_report_free(rep);
}

TEST_CASE("invalid arguments come back as einval") {
    sc_report* rep = nullptr;
    CHECK(sc_decompose("so", 3, 4, &rep) == SC_EINVAL);
    CHECK(std::string(sc_last_error()).size() > 0);
    CHECK(sc_decompose(nullptr, 3, 4, &rep) == SC_EINVAL);
    CHECK(sc_decompose("gl", 3, 4, nullptr) == SC_EINVAL);
    CHECK(sc_decompose("gl", 0, 4, &rep) == SC_EINVAL);
    CHECK(sc_verify_hwv(6, nullptr, 3, &rep) == SC_EINVAL);
}

TEST_CASE("render failures leave an error message") {
    sc_report* rep = nullptr;
    REQUIRE(sc_verify_hwv(6, nullptr, 0, &rep) == SC_OK);
    CHECK(sc_report_passed(rep) == 1);
    char* text = nullptr;
    CHECK(sc_report_render(rep, "csv", 0, &text) == SC_EINVAL);
    CHECK(std::string(sc_last_error()).find("csv") != std::string::npos);
    CHECK(sc_report_render(rep, "json", 0, nullptr) == SC_EINVAL);
    sc_report_free(rep);
}

TEST_CASE("hwv verification and row guards") {
    int rows[] = {14, 16};
    sc_report* rep = nullptr;
    REQUIRE(sc_verify_hwv(7, rows, 2, &rep) == SC_OK);
    CHECK(sc_report_passed(rep) == 1);
    std::string json = render(rep, "json");
    CHECK(json.find("\"is_hwv\": true") != std::string::npos);
    sc_report_free(rep);

    int too_small[] = {16};
    rep = nullptr;
    CHECK(sc_verify_hwv(4, too_small, 1, &rep) == SC_EINVAL);
    CHECK(std::string(sc_last_error()) == "row 16 requires n >= 6");
}

TEST_CASE("multiplicity through the c api") {
    sc_report* rep = nullptr;
    REQUIRE(sc_multiplicity(6, "[0*]", &rep) == SC_OK);
    CHECK(sc_report_passed(rep) == 1);
    std::string json = render(rep, "json");
    CHECK(json.find("\"hwv_space_dim\": 3") != std::string::npos);
    sc_report_free(rep);
    CHECK(sc_multiplicity(4, "[1,0,0,0]", &rep) == SC_EINVAL);
}

TEST_CASE("certificate verification and failure reporting") {
    sc_report* rep = nullptr;
    REQUIRE(sc_verify_certificate_file((kCertDir + "/f2_rank.json").c_str(),
                                       &rep) == SC_OK);
    CHECK(sc_report_passed(rep) == 1);
    sc_report_free(rep);

    rep = nullptr;
    REQUIRE(sc_verify_certificate_file(
                (kCertDir + "/tampered_x2y_rank.json").c_str(), &rep) == SC_OK);
    CHECK(sc_report_passed(rep) == 0);  // report exists, check failed
    std::string md = render(rep, "markdown");
    CHECK(md.find("FAILED") != std::string::npos);
    sc_report_free(rep);

    CHECK(sc_verify_certificate_file("/no/such.json", &rep) == SC_EPARSE);
    CHECK(sc_verify_certificate_json("not json at all", &rep) == SC_EPARSE);
}

TEST_CASE("lr expansion through the c api") {
    sc_report* rep = nullptr;
    REQUIRE(sc_lr_expand("[2,1]", "[2,1]", 6, 1, &rep) == SC_OK);
    CHECK(sc_report_passed(rep) == 1);
    std::string csv = render(rep, "csv");
    CHECK(csv.find("\"[3,2,1]\",2") != std::string::npos);
    sc_report_free(rep);
    CHECK(sc_lr_expand("[2,1", "[1]", 4, 0, &rep) == SC_EINVAL);
}

TEST_CASE("exact helpers") {
    long adjoint[] = {1, 0, 0, 0, 0, -1};
    char* dim = nullptr;
    REQUIRE(sc_weyl_dim(6, adjoint, 6, &dim) == SC_OK);
    CHECK(std::string(dim) == "35");
    sc_string_free(dim);

    long vd = -1;
    REQUIRE(sc_variety_dim(6, adjoint, 6, &vd) == SC_OK);
    CHECK(vd == 9);

    long nondom[] = {-1, 1};
    CHECK(sc_weyl_dim(2, nondom, 2, &dim) == SC_EINVAL);
    CHECK(sc_weyl_dim(3, adjoint, 6, &dim) == SC_EINVAL);  // length mismatch

    long c = -1;
    REQUIRE(sc_lr_coefficient("[2,1]", "[2,1]", "[3,2,1]", &c) == SC_OK);
    CHECK(c == 2);
    REQUIRE(sc_lr_coefficient("[2]", "[1]", "[2]", &c) == SC_OK);
    CHECK(c == 0);
}

TEST_CASE("null handles are tolerated by the free functions") {
    sc_report_free(nullptr);
    sc_string_free(nullptr);
    CHECK(sc_report_passed(nullptr) == 0);
}
