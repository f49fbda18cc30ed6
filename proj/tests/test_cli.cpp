#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fjl/cli.hpp"

using namespace fjl;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verify: small sweep passes and writes the report schema") {
    std::string report = "cli_test_report.json";
    CliResult r = run({"verify", "--jmax", "4", "--lattice", "3", "--report", report});
    CHECK(r.code == 0);
    CHECK(r.out.find("summary:") != std::string::npos);
    CHECK(r.out.find(" 0 fail") != std::string::npos);

    nlohmann::json doc = nlohmann::json::parse(slurp(report));
    CHECK(doc["version"] == 1);
    CHECK(doc["checks"].is_array());
    CHECK(doc["summary"]["fail"] == 0);
    CHECK(doc["summary"]["pass"] == doc["checks"].size());
    std::remove(report.c_str());
}

TEST_CASE("verify runs are byte-identical") {
    std::string a = "cli_det_a.json", b = "cli_det_b.json";
    CHECK(run({"verify", "--jmax", "3", "--lattice", "2", "--report", a}).code == 0);
    CHECK(run({"verify", "--jmax", "3", "--lattice", "2", "--report", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("measure complement prints the exact series data") {
    CliResult r = run({"measure", "complement", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(r.out.find("299/9") != std::string::npos);
    CHECK(r.out.find("partial_sum") != std::string::npos);
    CHECK(r.out.find("tail_bound") != std::string::npos);
}

TEST_CASE("tree emits one JSON line per level") {
    CliResult r = run({"tree", "--depth", "4"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j["depth"] == ++lines);
        CHECK(j.contains("lower_bound_so_far"));
    }
    CHECK(lines == 4);
}

TEST_CASE("orbit prints JSON lines for the traced points") {
    CliResult r = run({"orbit", "--x", "29/32", "--y", "3/32", "--steps", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"tag\":\"R2(1,1)+R1\"") != std::string::npos);
    CHECK(r.out.find("left_model_domain") != std::string::npos);
}

TEST_CASE("render subcommands write figures") {
    CHECK(run({"render", "zoom", "--j", "1", "--out", "cli_fig2.svg", "--exaggerate",
               "8"}).code == 0);
    std::string svg = slurp("cli_fig2.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("\"exaggerate_requested\":\"8\"") != std::string::npos);
    std::remove("cli_fig2.svg");

    CHECK(run({"render", "overview", "--out", "cli_fig1.ppm", "--format", "ppm",
               "--width", "96"}).code == 0);
    CHECK(slurp("cli_fig1.ppm").rfind("P6\n", 0) == 0);
    std::remove("cli_fig1.ppm");

    CHECK(run({"render", "tree", "--depth", "2", "--out", "cli_tree.svg"}).code == 0);
    CHECK(slurp("cli_tree.svg").find("tree-fill") != std::string::npos);
    std::remove("cli_tree.svg");
}

TEST_CASE("refusals exit 1, usage errors exit 2") {
    CliResult refusal = run({"render", "tree", "--depth", "8", "--out", "never.svg"});
    CHECK(refusal.code == 1);
    CHECK(refusal.err.find("raise cap") != std::string::npos);

    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"verify", "--definitely-not-a-flag"}).code == 2);
    CHECK(run({}).code == 2);
    CliResult badflag = run({"verify", "--definitely-not-a-flag"});
    CHECK(badflag.err.find("Usage") != std::string::npos);

    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("verify") != std::string::npos);

    CliResult badvp = run({"render", "overview", "--out", "x.svg", "--viewport", "junk"});
    CHECK(badvp.code == 2);
}

TEST_CASE("FJL_REPORT_PRECISION trims decimal output") {
    setenv("FJL_REPORT_PRECISION", "4", 1);
    CliResult r = run({"measure", "complement", "--n", "2"});
    unsetenv("FJL_REPORT_PRECISION");
    CHECK(r.code == 0);
    CHECK(r.out.find("33.22\n") != std::string::npos);

    CliResult wide = run({"measure", "complement", "--n", "2"});
    CHECK(wide.out.find("33.2222222222") != std::string::npos);
}
