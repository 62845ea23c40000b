#include <doctest.h>

#include <cstdlib>

#include "symcube/reports.hpp"

using namespace symcube;

namespace {
const std::string kCertDir = SYMCUBE_CERT_DIR;
} // namespace

TEST_CASE("decompose report carries both multiplicity columns") {
    Report r = run_decompose(3, 6, Algebra::sl);
    CHECK(r.pass);
    CHECK(r.body["command"] == "decompose");
    CHECK(r.body["algebra"] == "sl");
    CHECK(r.body["components"].size() == 9);
    CHECK(r.markdown.find("[2,1,0*,-1,-2]") != std::string::npos);
    CHECK(r.markdown.find("| 4 | 2 |") != std::string::npos);  // adjoint row
    // csv: header + 9 rows
    int lines = 0;
    for (char c : r.csv)
        if (c == '\n') ++lines;
    CHECK(lines == 10);
    CHECK_THROWS_AS((void)run_decompose(0, 6, Algebra::gl), invalid_input);
    CHECK_THROWS_AS((void)run_decompose(3, 1, Algebra::gl), invalid_input);
}

TEST_CASE("render formats") {
    Report r = run_decompose(2, 3, Algebra::gl);
    std::string j1 = r.render("json", false);
    std::string j2 = run_decompose(2, 3, Algebra::gl).render("json", false);
    CHECK(j1 == j2);  // deterministic without timing
    CHECK(j1.find("elapsed_us") == std::string::npos);
    std::string jt = r.render("json", true);
    CHECK(jt.find("elapsed_us") != std::string::npos);
    CHECK(r.render("markdown", false).find("| weight |") != std::string::npos);
    CHECK_THROWS_AS((void)r.render("yaml", false), invalid_input);
}

TEST_CASE("verify-hwv report") {
    Report r = run_verify_hwv(6, {});
    CHECK(r.pass);
    REQUIRE(r.body["rows"].size() == 16);
    const Json& row = r.body["rows"][15];
    CHECK(row["row"] == 16);
    CHECK(row["is_hwv"] == true);
    CHECK(row["n"] == 6);
    CHECK(row["weight"] == Json::array({1, 1, 1, -1, -1, -1}));

    Report sub = run_verify_hwv(7, {16});
    REQUIRE(sub.body["rows"].size() == 1);
    CHECK(sub.body["rows"][0]["weight"] ==
          Json::array({1, 1, 1, 0, -1, -1, -1}));
    CHECK(sub.pass);

    CHECK_THROWS_WITH_AS((void)run_verify_hwv(4, {16}),
                         "row 16 requires n >= 6", invalid_input);
    CHECK_THROWS_AS((void)run_verify_hwv(6, {0}), invalid_input);
    CHECK_THROWS_AS((void)run_verify_hwv(6, {17}), invalid_input);

    // csv is not defined for this command
    CHECK_THROWS_AS((void)r.render("csv", false), invalid_input);
}

TEST_CASE("verify-hwv respects the worker override") {
    setenv("SYMCUBE_WORKERS", "2", 1);
    Report a = run_verify_hwv(6, {});
    setenv("SYMCUBE_WORKERS", "1", 1);
    Report b = run_verify_hwv(6, {});
    unsetenv("SYMCUBE_WORKERS");
    CHECK(a.body["rows"] == b.body["rows"]);
    CHECK(a.pass);
    CHECK(b.pass);
    setenv("SYMCUBE_WORKERS", "0", 1);
    CHECK_THROWS_AS((void)worker_count(), invalid_input);
    setenv("SYMCUBE_WORKERS", "many", 1);
    CHECK_THROWS_AS((void)worker_count(), invalid_input);
    unsetenv("SYMCUBE_WORKERS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("multiplicity report") {
    Report r = run_multiplicity(7, "[1,0*,-1]");
    CHECK(r.pass);
    CHECK(r.body["hwv_space_dim"] == 4);
    CHECK(r.body["plethysm_multiplicity"] == 4);
    CHECK(r.body["match"] == true);
    CHECK(r.body["template"]["prefix"] == Json::array({1}));

    Report t = run_multiplicity(6, "[0*]");
    CHECK(t.body["hwv_space_dim"] == 3);
    CHECK(t.pass);

    Report u = run_multiplicity(7, "[2,1,0*,-1,-2]");
    CHECK(u.body["hwv_space_dim"] == 1);
    CHECK(u.pass);

    // a concrete weight without template notation
    Report w = run_multiplicity(4, "[1,1,-1,-1]");
    CHECK(w.body["plethysm_multiplicity"] == 1);
    CHECK(w.body["template"].is_null());
    CHECK(w.pass);

    CHECK_THROWS_AS((void)run_multiplicity(4, "[-1,0,0,1]"), invalid_input);
    CHECK_THROWS_AS((void)run_multiplicity(4, "[1,0,0,0]"), invalid_input);
    CHECK_THROWS_AS((void)run_multiplicity(3, "[1,1,1,0*,-1,-1,-1]"), invalid_input);
}

TEST_CASE("certificate reports") {
    Report ok = run_verify_certificate(kCertDir + "/xyz_rank.json");
    CHECK(ok.pass);
    CHECK(ok.body["kind"] == "rank");
    CHECK(ok.body["terms"] == 4);
    CHECK(ok.body["catalecticant_lower_bound"] == 3);
    CHECK(ok.body["certified_bound"] == "rank <= 4");
    CHECK(ok.body["mismatch"].is_null());

    Report f1r = run_verify_certificate(kCertDir + "/f1_rank.json");
    CHECK(f1r.pass);
    CHECK(f1r.body["terms"] == 8);
    CHECK(f1r.body["catalecticant_lower_bound"] == 5);
    CHECK(f1r.body.contains("note"));

    Report border = run_verify_certificate(kCertDir + "/f2_border.json");
    CHECK(border.pass);
    CHECK(border.body["certified_bound"] == "border rank <= 4");
    CHECK(border.body["catalecticant_lower_bound"] == 4);
    CHECK_FALSE(border.body.contains("note"));

    Report bad = run_verify_certificate(kCertDir + "/tampered_x2y_rank.json");
    CHECK_FALSE(bad.pass);
    CHECK(bad.body["certified_bound"].is_null());
    CHECK_FALSE(bad.body["mismatch"].is_null());
    CHECK(bad.body["mismatch"]["where"] == "x0^3");

    CHECK_THROWS_AS((void)run_verify_certificate("/no/such/file.json"), parse_error);
    CHECK_THROWS_AS((void)run_verify_certificate_text("not json"), parse_error);

    Report mem = run_verify_certificate_text(R"({
        "kind": "rank",
        "target": {"m": 1, "terms": [{"monomial": [0,0,0], "coeff": {"re": "1", "im": "0"}}]},
        "terms": [{"coeff": {"re": "1", "im": "0"}, "form": [{"re": "1", "im": "0"}]}]
    })");
    CHECK(mem.pass);
    CHECK(mem.body["file"] == "<memory>");
}

TEST_CASE("lr report with oracle cross-check") {
    Report r = run_lr("[2,1]", "[2,1]", 6, true);
    CHECK(r.pass);
    CHECK(r.body["oracle_checked"] == true);
    CHECK(r.body["oracle_agrees"] == true);
    CHECK(r.body["terms"].size() == 7);
    bool found = false;
    for (const auto& t : r.body["terms"])
        if (t["nu"] == Json::array({3, 2, 1})) {
            CHECK(t["multiplicity"] == 2);
            found = true;
        }
    CHECK(found);
    CHECK(r.csv.find("\"[3,2,1]\",2") != std::string::npos);

    Report no = run_lr("[1]", "[1]", 2, false);
    CHECK(no.body["oracle_agrees"].is_null());
    CHECK(no.pass);

    CHECK_THROWS_AS((void)run_lr("[2,1]", "[2,1]", 9, true), invalid_input);
    CHECK_THROWS_AS((void)run_lr("[2,1]", "[2,1]", 0, false), invalid_input);
    CHECK_THROWS_AS((void)run_lr("2,1", "[1]", 4, false), invalid_input);
}

TEST_CASE("partition text parsing") {
    CHECK(parse_partition_text("[3,1]") == Partition({3, 1}));
    CHECK(parse_partition_text("[]") == Partition{});
    CHECK(parse_partition_text(" [ 2 , 2 ] ") == Partition({2, 2}));
    CHECK_THROWS_AS((void)parse_partition_text("[1,2]"), invalid_input);
    CHECK_THROWS_AS((void)parse_partition_text("[x]"), invalid_input);
    CHECK_THROWS_AS((void)parse_partition_text("3,1"), invalid_input);
}
