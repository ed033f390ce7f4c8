#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "stackypi1/json_io.hpp"

using namespace stackypi1;
using json_io::Json;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const std::string& name) { return std::string(STACKYPI1_DATA) + "/" + name; }

Run run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / ("stackypi1_cli_out_" + std::to_string(++counter));
  const auto err = dir / ("stackypi1_cli_err_" + std::to_string(counter));
  const std::string cmd = env + " " + STACKYPI1_CLI + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

Json load(const std::string& name) { return json_io::parse_text(slurp(data(name))); }

}  // namespace

TEST_CASE("pi1 of the pyramid") {
  const auto r = run("pi1 --space " + data("pyramid.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("abelianization: Z\n") != std::string::npos);
}

TEST_CASE("framed torsors over the triangle boundary") {
  const auto r = run("torsors --space " + data("triangle_boundary.json") + " --group " + data("s3.json") + " --framed");
  CHECK(r.code == 0);
  CHECK(r.out.find("framed torsors: 6") != std::string::npos);
}

TEST_CASE("malformed JSON exits 2 with a location") {
  const auto r = run("pi1 --space " + data("malformed.json"));
  CHECK(r.code == 2);
  CHECK(r.err.find("SchemaError") != std::string::npos);
  CHECK(r.err.find("(at \"") != std::string::npos);

  const auto bad = write_temp("stackypi1_bad_group.json", R"({"format": "stackypi1/1", "named": 5})");
  const auto g = run("--json torsors --space " + data("circle.json") + " --group " + bad.string());
  CHECK(g.code == 2);
  const auto report = json_io::parse_text(g.out);
  CHECK(report["results"]["error"]["kind"] == "SchemaError");
  CHECK(report["results"]["error"]["where"] == "/named");

  const auto noformat = write_temp("stackypi1_noformat.json", R"({"named": "cyclic", "n": 2})");
  CHECK(run("root-lift --phi " + noformat.string() + " --elements 1 --roots 2").code == 2);
  CHECK(run("pi1 --space /nonexistent/space.json").code == 2);
}

TEST_CASE("unknown commands and bad options exit 2") {
  const auto r = run("frobnicate");
  CHECK(r.code == 2);
  CHECK(r.err.find("UnknownCommand") != std::string::npos);
  CHECK(run("pi1").code == 2);
  CHECK(run("ss sideways --input " + data("d2_witness.json")).code == 2);
  CHECK(run("root-lift --phi " + data("z2.json") + " --elements x --roots 2").code == 2);
}

TEST_CASE("domain errors and failed checks exit 1") {
  CHECK(run("parabolic translate --input " + data("par_bad.json")).code == 1);
  CHECK(run("parabolic translate --input " + data("par.json")).code == 0);
  CHECK(run("ss classify --input " + data("d2_witness.json")).code == 1);
  const auto w = run("ss degeneration --from-page 2 --input " + data("d2_witness.json"));
  CHECK(w.code == 1);
  CHECK(w.out.find("FAILS") != std::string::npos);
  const auto s3 = run("--json root-lift --phi " + data("s3.json") + " --elements 1,2 --roots 1,1");
  CHECK(s3.code == 1);
  CHECK(json_io::parse_text(s3.out)["results"]["error"]["kind"] == "NonCommuting");
}

TEST_CASE("budget overruns are structured errors") {
  const std::string args = "--json torsors --space " + data("pyramid.json") + " --group " + data("s3.json");
  const auto r = run("--budget 5 " + args);
  CHECK(r.code == 1);
  CHECK(json_io::parse_text(r.out)["results"]["error"]["kind"] == "BudgetExceeded");
  CHECK(run(args, "STACKYPI1_BUDGET=5").code == 1);
  CHECK(run(args, "STACKYPI1_BUDGET=100000").code == 0);
  CHECK(run("--budget 100000,0 ss pages --input " + data("d2_witness.json")).code == 1);
}

TEST_CASE("results are byte-identical to library calls") {
  {
    const auto r = run("--json pi1 --space " + data("pyramid.json"));
    REQUIRE(r.code == 0);
    const auto s = build_space(json_io::read_space(load("pyramid.json")).raw);
    const auto p = pi1_presentation(s, "P1");
    const Json expected{{"basepoint", "P1"}, {"presentation", json_io::to_json(p)}, {"abelianization", json_io::to_json(abelianization(p))}};
    CHECK(json_io::parse_text(r.out)["results"].dump() == expected.dump());
  }
  {
    const auto r = run("--json torsors --space " + data("planes.json") + " --group " + data("s3.json"));
    REQUIRE(r.code == 0);
    const auto s = build_space(json_io::read_space(load("planes.json")).raw);
    const auto c = torsor_classes(s, json_io::read_group(load("s3.json")));
    CHECK(json_io::parse_text(r.out)["results"]["classes"].dump() == json_io::to_json(c).dump());
  }
  {
    const auto r = run("--json ss pages --input " + data("d2_witness.json"));
    REQUIRE(r.code == 0);
    const auto fc = build_filtered_complex(json_io::read_filtered_complex(load("d2_witness.json")));
    Json list = Json::array();
    for (const auto& p : pages(fc)) list.push_back(json_io::to_json(p));
    CHECK(json_io::parse_text(r.out)["results"]["pages"].dump() == list.dump());
  }
  {
    const auto r = run("--json parabolic translate --input " + data("par.json"));
    REQUIRE(r.code == 0);
    const auto t = parabolic_translate(json_io::read_parabolic(load("par.json")));
    CHECK(json_io::parse_text(r.out)["results"].dump() == json_io::to_json(t).dump());
  }
}

TEST_CASE("reports are deterministic and round-trip") {
  const std::string args = " torsors --space " + data("pyramid.json") + " --group " + data("s3.json") + " --weight-classes";
  const auto a = run("--json" + args);
  const auto b = run("--json --threads 4 --seed 99" + args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto report = json_io::read_run_report(json_io::parse_text(a.out));
  CHECK(report.command == "torsors");
  REQUIRE(report.inputs.size() == 2);
  CHECK(report.inputs[0].sha256.size() == 64);
  CHECK(json_io::to_json(report).dump(2) + "\n" == a.out);
  CHECK(json_io::read_run_report(json_io::to_json(report)) == report);

  const auto timed = json_io::parse_text(run("--json --timing" + args).out);
  CHECK(timed.contains("timing"));
  CHECK(json_io::read_run_report(timed).timing.has_value());
}

TEST_CASE("every subcommand runs on the sample data") {
  const auto plan = std::filesystem::temp_directory_path() / "stackypi1_plan.json";
  const auto dec = std::filesystem::temp_directory_path() / "stackypi1_dec.json";
  CHECK(run("space --space " + data("planes.json")).code == 0);
  CHECK(run("cohomology --space " + data("circle.json") + " --system " + data("circle_system.json")).code == 0);
  CHECK(run("cohomology --space " + data("pyramid.json") + " --weight 0").code == 0);
  CHECK(run("cohomology --space " + data("circle.json") + " --system " + data("circle_s3_system.json")).code == 0);
  CHECK(run("realize --presentation " + data("trefoil.json") + " --emit-plan " + plan.string()).code == 0);
  CHECK(json_io::parse_text(slurp(plan))["format"] == json_io::kFormat);
  CHECK(run("ss dec --input " + data("d2_witness.json") + " --output " + dec.string()).code == 0);
  CHECK_NOTHROW(build_filtered_complex(json_io::read_filtered_complex(json_io::parse_text(slurp(dec)))));
  CHECK(run("ss degeneration --input " + data("d_mixed.json")).code == 0);
  CHECK(run("ss classify --input " + data("b_mixed.json")).code == 0);
  CHECK(run("root-lift --phi " + data("z2.json") + " --elements 1 --roots 2").out.find("etale") != std::string::npos);
  CHECK(run("parabolic degree --input " + data("par.json")).out.find("parabolic degree: -1/3") != std::string::npos);
  const auto w = run("wreath --g " + data("z3.json") + " --phi " + data("z2.json") + " --action " +
                     data("action_z2_on_z3.json") + " --validate --changeaction-check --gamma " + data("z4.json") +
                     " --omega 0,1,0,1");
  CHECK(w.code == 0);
  CHECK(w.out.find("|H| = 36") != std::string::npos);
  std::filesystem::remove(plan);
  std::filesystem::remove(dec);
}
