#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "support/subprocess.hpp"

using nlohmann::json;
using testsupport::cli_path;
using testsupport::run_command;

namespace {

json parse_record(const std::string& output) {
    return json::parse(output);
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/abvar_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("les-solve emits the forced elliptic chain as a record") {
    const auto r = run_command(cli_path() +
                               " --format record les-solve --dims 1,2,1,1,1");
    REQUIRE(r.exit_code == 0);
    const json rec = parse_record(r.output);
    CHECK(rec["schema_version"] == 1);
    CHECK(rec["command"] == "les-solve");
    REQUIRE(rec["results"].size() == 1);
    const auto& res = rec["results"][0];
    CHECK(res["feasible"] == true);
    REQUIRE(res["profiles"].size() == 1);
    CHECK(res["profiles"][0] == json::array({1, 1, 0, 1}));
    const auto& maps = res["maps"];
    CHECK(maps[1]["label"] == "alpha");
    CHECK(maps[1]["surjective"] == "always");
    CHECK(maps[2]["label"] == "beta");
    CHECK(maps[2]["zero"] == "always");
    CHECK(maps[3]["label"] == "gamma");
    CHECK(maps[3]["injective"] == "always");
    CHECK(res["notes"].empty());
}

TEST_CASE("les-solve surfaces the general-g chase note for both variants") {
    for (const std::string extra : {"", " --paper-display"}) {
        const auto r = run_command(cli_path() +
                                   " --format record les-solve --g 3" + extra);
        REQUIRE(r.exit_code == 0);
        const json rec = parse_record(r.output);
        const auto& res = rec["results"][0];
        REQUIRE_FALSE(res["notes"].empty());
        CHECK(res["maps"][3]["injective"] == "always");
    }
}

TEST_CASE("les-solve reports infeasible dims with exit 3") {
    const auto r = run_command(cli_path() +
                               " --format record les-solve --dims 0,5,0 "
                               "--right-closed");
    CHECK(r.exit_code == 3);
    const json rec = parse_record(r.output);
    CHECK(rec["results"][0]["feasible"] == false);
    CHECK_FALSE(rec["results"][0]["notes"].empty());
}

TEST_CASE("les-solve batch input with comments") {
    const auto path = write_temp("batch.les",
                                 "# two specs\n"
                                 "closed open 1 2 1 1 1\n"
                                 "\n"
                                 "closed closed 2 2   # iso\n");
    const auto r = run_command(cli_path() + " --format record les-solve --input " +
                               path);
    REQUIRE(r.exit_code == 0);
    const json rec = parse_record(r.output);
    REQUIRE(rec["results"].size() == 2);
    CHECK(rec["results"][0]["profiles"][0] == json::array({1, 1, 0, 1}));
    CHECK(rec["results"][1]["profiles"][0] == json::array({2}));
    std::remove(path.c_str());
}

TEST_CASE("dims report carries the paper-level values at g = 2") {
    const auto r = run_command(cli_path() + " --format record dims --g 2");
    REQUIRE(r.exit_code == 0);
    const json rec = parse_record(r.output);
    const auto& res = rec["results"][0];
    CHECK(res["hochschild"][1] == 4);
    CHECK(res["hochschild"][2] == 6);
    CHECK(res["polarized_def_dim"] == 3);
    CHECK(res["formal_def_dim"] == 4);
    CHECK(res["hkr_valid"].is_null());
}

TEST_CASE("dims with a small characteristic warns in notes") {
    const auto r = run_command(cli_path() +
                               " --format record dims --g 3 --char 2");
    REQUIRE(r.exit_code == 0);
    const json rec = parse_record(r.output);
    const auto& res = rec["results"][0];
    CHECK(res["hkr_valid"] == false);
    REQUIRE_FALSE(res["notes"].empty());
    // data fields unchanged, warning only in notes
    CHECK(res["hochschild"][1] == 6);
}

TEST_CASE("ec-analyze single curve record") {
    const auto r = run_command(cli_path() +
                               " --format record ec-analyze --curve 5,1,0");
    REQUIRE(r.exit_code == 0);
    const json rec = parse_record(r.output);
    const auto& res = rec["results"][0];
    CHECK(res["point_count"] == 4);
    CHECK(res["trace"] == 2);
    CHECK(res["p_rank"] == 1);
    CHECK(res["j_is_1728"] == true);
    CHECK(res["aut_order_geometric"] == 4);
}

TEST_CASE("ec-derived-eq documents the geometric convention in notes") {
    const auto r = run_command(
        cli_path() + " --format record ec-derived-eq --curve 5,1,0 --curve2 5,4,0");
    REQUIRE(r.exit_code == 0);
    const json rec = parse_record(r.output);
    const auto& res = rec["results"][0];
    CHECK(res["derived_equivalent"] == true);
    REQUIRE_FALSE(res["notes"].empty());

    const auto r2 = run_command(
        cli_path() + " --format record ec-derived-eq --curve 5,1,0 --curve2 5,0,1");
    CHECK(parse_record(r2.output)["results"][0]["derived_equivalent"] == false);
}

TEST_CASE("isom subcommands") {
    const auto check = run_command(
        cli_path() + " --format record isom-check --ring Z --matrix 1,1,0,1");
    REQUIRE(check.exit_code == 0);
    CHECK(parse_record(check.output)["results"][0]["isometric"] == true);

    const auto gauss = run_command(
        cli_path() +
        " --format record isom-check --ring quad:0:1 --matrix 0,1,0,0,0,0,0,1");
    REQUIRE(gauss.exit_code == 0);
    CHECK(parse_record(gauss.output)["results"][0]["isometric"] == true);

    const auto enumd = run_command(
        cli_path() + " --format record isom-enumerate --ring Z --height 1");
    REQUIRE(enumd.exit_code == 0);
    CHECK(parse_record(enumd.output)["results"][0]["count"] == 20);
}

TEST_CASE("kernel-report record") {
    const auto r = run_command(cli_path() +
                               " --format record kernel-report --curve 5,1,0");
    REQUIRE(r.exit_code == 0);
    const json rec = parse_record(r.output);
    const auto& res = rec["results"][0];
    CHECK(res["free_rank"] == 1);
    CHECK(res["finite_order"] == 16);
}

TEST_CASE("record output is byte-identical across runs") {
    const std::string cmd = cli_path() + " --format record dims --g 4 --char 7";
    const auto first = run_command(cmd);
    const auto second = run_command(cmd);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);

    const std::string cmd2 =
        cli_path() + " --format record les-solve --dims 2,4,2,4,6";
    CHECK(run_command(cmd2).output == run_command(cmd2).output);
}

TEST_CASE("errors surface with the documented exit codes and name the field") {
    // bad input: negative dimension
    const auto neg = run_command(cli_path() + " les-solve --dims 1,-2,1");
    CHECK(neg.exit_code == 2);
    CHECK(neg.output.find("dims[1]") != std::string::npos);

    // bad input: singular curve
    const auto sing = run_command(cli_path() + " ec-analyze --curve 5,0,0");
    CHECK(sing.exit_code == 2);
    CHECK(sing.output.find("singular") != std::string::npos);

    // bad input in a batch line names the line
    const auto path = write_temp("bad.ec", "5 1 0\n7 x 1\n");
    const auto batch = run_command(cli_path() + " ec-analyze --input " + path);
    CHECK(batch.exit_code == 2);
    CHECK(batch.output.find("line 2") != std::string::npos);
    std::remove(path.c_str());

    // resource caps
    const auto big_g = run_command(cli_path() + " dims --g 61");
    CHECK(big_g.exit_code == 4);
    const auto big_h = run_command(
        cli_path() + " isom-enumerate --ring quad:0:1 --height 50");
    CHECK(big_h.exit_code == 4);
    const auto big_p = run_command(cli_path() +
                                   " ec-analyze --curve 1000003,1,0");
    CHECK(big_p.exit_code == 4);

    // unknown subcommand
    CHECK(run_command(cli_path() + " frobnicate").exit_code == 2);
    // missing required subcommand
    CHECK(run_command(cli_path()).exit_code == 2);
}

TEST_CASE("table output renders the headline fields") {
    const auto les = run_command(cli_path() + " les-solve --dims 1,2,1,1,1");
    REQUIRE(les.exit_code == 0);
    CHECK(les.output.find("alpha") != std::string::npos);
    CHECK(les.output.find("forced: surjective") != std::string::npos);

    const auto dims = run_command(cli_path() + " dims --g 2");
    REQUIRE(dims.exit_code == 0);
    CHECK(dims.output.find("polarized deformation dim:  3") != std::string::npos);

    const auto ec = run_command(cli_path() + " ec-analyze --curve 5,1,0");
    REQUIRE(ec.exit_code == 0);
    CHECK(ec.output.find("ordinary") != std::string::npos);
}
