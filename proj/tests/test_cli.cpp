#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unitring/analysis.hpp"
#include "unitring/cli.hpp"
#include "unitring/format.hpp"
#include "unitring/group.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace unitring;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

json parse_report(const RunResult& r) {
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("report schema, key order, and determinism") {
    const std::vector<std::string> args{"classify-hypercentral", "--group", "K8", "--no-timings"};
    const auto r1 = run(args);
    const auto r2 = run(args);
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out); // byte-identical without timings
    CHECK(r1.out.rfind("{\n  \"schema_version\": 1,\n  \"question\": \"classify-hypercentral\"", 0) ==
          0);
    const json j = parse_report(r1);
    CHECK(j["schema_version"] == 1);
    CHECK(j["question"] == "classify-hypercentral");
    CHECK(j["inputs"]["group"] == "K8");
    CHECK(j["answer"] == "Yes(c)");
    CHECK(j["rule"] == "case-c");
    CHECK(j["evidence"]["decomposition"]["quaternion"].size() == 8);
    CHECK_FALSE(j.contains("timings"));
    CHECK(r1.err.rfind("classify-hypercentral: Yes(c)", 0) == 0);

    // Timings appear by default.
    const auto rt = run({"classify-hypercentral", "--group", "K8"});
    const json jt = parse_report(rt);
    REQUIRE(jt.contains("timings"));
    CHECK(jt["timings"]["total_ms"].is_number());
    CHECK(jt["timings"]["total_ms"].get<double>() >= 0.0);
}

TEST_CASE("hypercentral verdicts through the CLI") {
    CHECK(parse_report(run({"classify-hypercentral", "--group", "C12"}))["answer"] == "Yes(a)");
    CHECK(parse_report(run({"classify-hypercentral", "--group", "K8xE2^2"}))["answer"] == "Yes(c)");
    CHECK(parse_report(run({"classify-hypercentral", "--group", "D4"}))["answer"] == "No");

    const json j = parse_report(run({"classify-hypercentral", "--group", "K8xC3"}));
    CHECK(j["answer"] == "No");
    CHECK(j["rule"] == "no-case");
    const std::string reason = j["evidence"]["reason"].get<std::string>();
    CHECK(reason.find("conjugat") != std::string::npos);
}

TEST_CASE("group files: plain tables and structured descriptions") {
    const auto table = write_temp("unitring_test_c2_table.json",
                                  R"({"table": [[0, 1], [1, 0]], "names": ["1", "g"]})");
    const json jt = parse_report(run({"classify-hypercentral", "--group", "@" + table.string()}));
    CHECK(jt["answer"] == "Yes(a)");

    const auto c4inv = write_temp("unitring_test_c4_inv.json",
                                  R"({"torsion": "C4", "free_rank": 1, "actions": [[0, 3, 2, 1]]})");
    const json js = parse_report(run({"classify-hypercentral", "--group", "@" + c4inv.string()}));
    CHECK(js["answer"] == "Yes(b)");
    CHECK(js["rule"] == "case-b");
    CHECK(js["evidence"]["chain_orders"] == json::array({2, 1}));

    // Torsion given as a nested table, identity action: case (a).
    const auto nested = write_temp(
        "unitring_test_nested.json",
        R"({"torsion": {"table": [[0, 1], [1, 0]], "names": ["1", "s"]}, "free_rank": 1, "actions": [[0, 1]]})");
    CHECK(parse_report(run({"classify-hypercentral", "--group", "@" + nested.string()}))["answer"] ==
          "Yes(a)");

    CHECK(run({"classify-hypercentral", "--group", "@/nonexistent/nowhere.json"}).code == 1);
    const auto broken = write_temp("unitring_test_broken.json", "{ not json");
    CHECK(run({"classify-hypercentral", "--group", "@" + broken.string()}).code == 1);
}

TEST_CASE("hyperbolicity through the CLI, with and without witness") {
    const json j = parse_report(run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group", "C3",
                                     "--about", "V", "--witness", "--no-timings"}));
    CHECK(j["answer"] == "NotHyperbolic");
    CHECK(j["rule"] == "R1-infinite-field");
    CHECK(j["inputs"]["field"] == "GF(2)(t)");
    CHECK(j["inputs"]["about"] == "V");
    CHECK(j["evidence"]["field"]["finite"] == false);
    CHECK(j["evidence"]["field"]["transcendence_degree"] == 1);
    CHECK(j["evidence"]["field"]["characteristic"] == 2);
    REQUIRE(j.contains("witness"));
    CHECK(j["witness"]["g0"] == "g");
    CHECK(j["witness"]["u1"] == "1 + (t+1)*g + (t+1)*g^2");
    CHECK(j["witness"]["u2"] == "1 + t*g + t*g^2");
    CHECK(j["witness"]["verified"] == true);
    CHECK(j["witness"]["independence_bound"] == 5);

    // The printed unit texts parse back into a verifiable witness.
    RFRing ring(2);
    const GroupPtr c3 = cyclic_group(3);
    Z2Witness w{ring, c3, parse_element(c3, ring, j["witness"]["u1"].get<std::string>()),
                parse_element(c3, ring, j["witness"]["u2"].get<std::string>()), 1, 0};
    CHECK(verify_z2_witness(w, 4));

    // Without --witness no witness key appears.
    const json jn = parse_report(
        run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group", "C3", "--about", "V"}));
    CHECK_FALSE(jn.contains("witness"));

    // Q8 over GF(2)(t): not hyperbolic, but no coprime torsion to witness.
    const json jq = parse_report(run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group",
                                      "K8", "--about", "V", "--witness"}));
    CHECK(jq["answer"] == "NotHyperbolic");
    CHECK_FALSE(jq.contains("witness"));

    CHECK(parse_report(run({"classify-hyperbolic", "--field", "GF(2^2)", "--group", "K8", "--about",
                            "V"}))["answer"] == "Hyperbolic");
    // Composite orders must be written as explicit prime powers.
    CHECK(run({"classify-hyperbolic", "--field", "GF(4)", "--group", "K8", "--about", "V"}).code ==
          1);
}

TEST_CASE("hyperbolicity over infinite-group descriptors") {
    CHECK(parse_report(run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group",
                            "infinite:pprime-torsion", "--about", "V"}))["rule"] ==
          "R2-coprime-torsion");
    CHECK(parse_report(run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group",
                            "infinite:torsion", "--about", "V"}))["rule"] == "R3-not-algebraic");
    const json ju = parse_report(run(
        {"classify-hyperbolic", "--field", "algcl(2)", "--group", "infinite:torsion", "--about", "V"}));
    CHECK(ju["answer"] == "Undetermined");
    CHECK(ju["rule"] == "none");
    CHECK(parse_report(run({"classify-hyperbolic", "--field", "algcl(2)", "--group", "Q16",
                            "--about", "U"}))["rule"] == "R4-infinite-field");

    // A structured file with free rank >= 1 is an infinite group whose
    // torsion flags are computed from the table: C4 has only 2-power
    // torsion, so over GF(3)(t) it counts as coprime torsion (R2) while
    // over GF(2)(t) only R3 applies.
    const auto c4inv = write_temp("unitring_test_c4_inv2.json",
                                  R"({"torsion": "C4", "free_rank": 1, "actions": [[0, 3, 2, 1]]})");
    CHECK(parse_report(run({"classify-hyperbolic", "--field", "GF(3)(t)", "--group",
                            "@" + c4inv.string(), "--about", "V"}))["rule"] == "R2-coprime-torsion");
    CHECK(parse_report(run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group",
                            "@" + c4inv.string(), "--about", "V"}))["rule"] == "R3-not-algebraic");

    CHECK(run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group", "C3", "--about", "X"}).code ==
          1);
    CHECK(run({"classify-hyperbolic", "--field", "GF(2)(t)", "--group", "infinite:maybe", "--about",
               "V"}).code == 1);
}

TEST_CASE("enumeration and search through the CLI") {
    const json j = parse_report(run({"enumerate-units", "--field", "GF(2)", "--group", "C3"}));
    CHECK(j["answer"] == "|V(KG)| = 3");
    CHECK(j["rule"] == "exhaustive-enumeration");
    CHECK(j["evidence"]["order"] == 3);
    CHECK(j["evidence"]["center_order"] == 3);
    CHECK(j["evidence"]["nilpotency_class"] == 1);
    CHECK(j["evidence"]["series_orders"] == json::array({1, 3}));
    REQUIRE(j["evidence"].contains("elements"));
    CHECK(j["evidence"]["elements"].size() == 3);

    const json jq = parse_report(run({"enumerate-units", "--field", "GF(2)", "--group", "K8"}));
    CHECK(jq["evidence"]["order"] == 128);
    CHECK_FALSE(jq["evidence"].contains("elements")); // over the listing cap

    const auto rb = run({"enumerate-units", "--field", "GF(7)", "--group", "K8", "--budget", "1000"});
    CHECK(rb.code == 2);
    CHECK(rb.err.find("over the budget") != std::string::npos);
    CHECK(run({"enumerate-units", "--field", "GF(2)(t)", "--group", "C2"}).code == 1);

    const json js = parse_report(run({"unit-search", "--group", "C5", "--bound", "1"}));
    CHECK(js["answer"] == "15 units");
    CHECK(js["evidence"]["count"] == 15);
    CHECK(js["evidence"]["trivial_units_only"] == false);
    CHECK(js["evidence"]["truncated"] == false);
    bool found = false;
    for (const auto& u : js["evidence"]["units"])
        if (u == "-1 + g + g^4") found = true;
    CHECK(found);

    const json jt = parse_report(run({"unit-search", "--group", "K8", "--bound", "1"}));
    CHECK(jt["evidence"]["count"] == 8);
    CHECK(jt["evidence"]["trivial_units_only"] == true);

    CHECK(run({"unit-search", "--group", "Q16", "--bound", "1", "--budget", "1000"}).code == 2);
}

TEST_CASE("witness, central series, and the necessary conditions") {
    const json j = parse_report(run({"witness-z2", "--field", "GF(2)(t)", "--group", "C3"}));
    CHECK(j["answer"] == "verified");
    CHECK(j["rule"] == "direct-construction");
    CHECK(j["evidence"]["g0"] == "g");
    CHECK(j["evidence"]["g0_order"] == 3);
    CHECK(j["witness"]["verified"] == true);
    CHECK(j["witness"]["independence_bound"] == 5);

    CHECK(parse_report(run({"witness-z2", "--field", "GF(2)(t)", "--group", "C3", "--element",
                            "g^2"}))["evidence"]["g0"] == "g^2");
    CHECK(parse_report(run({"witness-z2", "--field", "GF(3)(t)", "--group", "K8", "--element",
                            "i"}))["evidence"]["g0_order"] == 4);

    CHECK(run({"witness-z2", "--field", "GF(2)(t)", "--group", "C3", "--element", "bogus"}).code == 1);
    CHECK(run({"witness-z2", "--field", "GF(2)(t)", "--group", "K8", "--element", "u"}).code == 3);
    CHECK(run({"witness-z2", "--field", "GF(2)(t)", "--group", "K8"}).code == 3); // no coprime torsion
    CHECK(run({"witness-z2", "--field", "GF(2)", "--group", "C3"}).code == 1);

    const json jc = parse_report(run({"central-series", "--group", "Q16"}));
    CHECK(jc["answer"] == "nilpotent, class 3");
    CHECK(jc["rule"] == "upper-central-series");
    CHECK(jc["evidence"]["orders"] == json::array({1, 2, 4, 16}));
    REQUIRE(jc["evidence"].contains("levels"));
    CHECK(jc["evidence"]["levels"][0] == json::array({"1"}));
    CHECK(jc["evidence"]["levels"].size() == 4);

    const json jns = parse_report(run({"central-series", "--group", "S3"}));
    CHECK(jns["answer"] == "not nilpotent");
    CHECK(jns["evidence"]["nilpotency_class"].is_null());

    const json jd = parse_report(run({"verify-dedekind", "--group", "S3"}));
    CHECK(jd["answer"] == "violated");
    CHECK(jd["rule"] == "necessary-conditions");
    CHECK(jd["evidence"]["subgroups_normal"]["holds"] == false);
    CHECK(jd["evidence"]["subgroups_normal"]["counterexample"].is_string());

    const json jk = parse_report(run({"verify-dedekind", "--group", "K8"}));
    CHECK(jk["answer"] == "satisfied");
    CHECK(jk["evidence"]["conjugates_are_powers"]["holds"] == true);
    CHECK(jk["evidence"]["mixed_condition_vacuous"] == true);
    CHECK_FALSE(jk["evidence"]["subgroups_normal"].contains("counterexample"));
}

TEST_CASE("grammar errors and exit codes") {
    CHECK(run({}).code == 1);                                        // no subcommand
    CHECK(run({"frobnicate"}).code == 1);                            // unknown subcommand
    CHECK(run({"classify-hypercentral", "--bogus"}).code == 1);      // unknown flag
    CHECK(run({"classify-hypercentral"}).code == 1);                 // missing group
    CHECK(run({"classify-hypercentral", "--group", "C0"}).code == 1);
    CHECK(run({"classify-hypercentral", "--group", "K9"}).code == 1);
    CHECK(run({"classify-hypercentral", "--group", "C999"}).code == 1); // order cap
    CHECK(run({"enumerate-units", "--field", "GF(1)", "--group", "C2"}).code == 1);
    CHECK(run({"enumerate-units", "--field", "GF(6)", "--group", "C2"}).code == 1);
    const auto r = run({"witness-z2", "--field", "GF(4)(t)", "--group", "C3"});
    CHECK(r.code == 1);
    CHECK(r.err.find("prime field") != std::string::npos);
    CHECK(run({"classify-hyperbolic", "--field", "algcl(4)", "--group", "C3", "--about", "V"}).code ==
          1);

    // Error text goes to the error stream, prefixed for greppability.
    const auto re = run({"classify-hypercentral", "--group", "C0"});
    CHECK(re.out.empty());
    CHECK(re.err.rfind("error: ", 0) == 0);

    // Help is not an error and lists the subcommands.
    const auto rh = run({"--help"});
    CHECK(rh.code == 0);
    CHECK(rh.out.find("classify-hypercentral") != std::string::npos);
    CHECK(rh.out.find("witness-z2") != std::string::npos);
}

TEST_CASE("--output writes the report to a file") {
    const auto path = std::filesystem::temp_directory_path() / "unitring_test_report.json";
    std::filesystem::remove(path);
    const auto r = run({"central-series", "--group", "K8", "--output", path.string(),
                        "--no-timings"});
    CHECK(r.code == 0);
    CHECK(r.out.empty()); // the report went to the file instead
    std::ifstream f(path);
    REQUIRE(f.good());
    const json j = json::parse(f);
    CHECK(j["answer"] == "nilpotent, class 2");
    CHECK(j["evidence"]["orders"] == json::array({1, 2, 8}));
    std::filesystem::remove(path);

    CHECK(run({"central-series", "--group", "K8", "--output", "/nonexistent/dir/x.json"}).code == 1);
}
