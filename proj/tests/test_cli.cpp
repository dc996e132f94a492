#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fuglede/cli.hpp"
#include "fuglede/error.hpp"
#include "fuglede/report.hpp"
#include "fuglede/repro.hpp"
#include "fuglede/scene.hpp"

using namespace fuglede;

namespace {
Rational q(const char* s) { return parse_rational(s); }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + " = ", 0) == 0) return line.substr(key.size() + 3);
  }
  return {};
}

const char* const kScene = R"(# golden example and friends
set E = [0,1/2) u [1,3/2)
lattice L = {0,1/2} + 2 Z
set I = [0,1)
set F = [0,1/2] u [3/4,5/4]   # zero at 2/3
param rho = 2.5
comb M = periodic {0} + 1 Z minus {0}
)";

std::string scene_file() {
  const auto path = std::filesystem::temp_directory_path() / "fuglede_test.scene";
  std::ofstream(path) << kScene;
  return path.string();
}
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("scene parsing") {
    const auto s = parse_scene(kScene);
    REQUIRE(s.sets.count("E"));
    CHECK(s.sets.at("E").size() == 2);
    const auto& l = s.lattices.at("L");
    CHECK(l.representatives() == std::vector<Rational>{0, q("1/2")});
    CHECK(l.period() == Rational(2));
    CHECK(s.params.at("rho").value == 2.5);
    CHECK(s.combs.count("M"));
    CHECK(s.order == std::vector<std::string>{"E", "L", "I", "F", "rho", "M"});
    CHECK(parse_scene(s.print()) == s);
  }

  TEST_CASE("scene diagnostics") {
    try {
      parse_scene("set A = [0,1)\nset X = [1,1)\n");
      FAIL("expected an error");
    } catch (const Error& err) {
      CHECK(err.code() == ErrorCode::empty_interval);
      CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
    try {
      parse_scene("set A = [0,1)\n\nset A = [0,2)\n");
      FAIL("expected an error");
    } catch (const Error& err) {
      CHECK(std::string(err.what()).find("duplicate name 'A'") !=
            std::string::npos);
      CHECK(std::string(err.what()).find("line 1") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_scene("sett A = [0,1)\n"), Error);
    CHECK_THROWS_AS(parse_scene("lattice L = {0} + 0 Z\n"), Error);
    const auto warn = parse_scene("set A = [0,2/4)\n");
    CHECK(warn.sets.at("A") == parse_step_set("[0,1/2)"));
    CHECK_FALSE(warn.warnings.empty());
  }

  TEST_CASE("scene round trip on varied content") {
    const char* text = R"(set A = [-3/2,-1) u [0,1/7)
finite P = {0, 1/3, -2}
lattice Q = {1/4} + 3/2 Z
comb C = atoms {1:2, -1/2:1/3}
comb D = periodic {0, 1/2} + 2 Z weight 1/2 minus {0} atoms {7:1}
param t = 2/3
param x = 0.125
)";
    const auto s = parse_scene(text);
    CHECK(parse_scene(s.print()) == s);
  }

  TEST_CASE("report format") {
    Report r("demo");
    r.input("set", "[0, 1)");
    r.set("value", q("1/3"));
    r.set("x", 0.5);
    r.check("first", Status::pass);
    r.check("second", Status::inconclusive, "why");
    r.set_elapsed(1.25);
    std::ostringstream with, without;
    r.write(with);
    r.write(without, false);
    CHECK(without.str().find("elapsed_s") == std::string::npos);
    CHECK(with.str().find("elapsed_s") != std::string::npos);
    CHECK(value_of(without.str(), "value") == "1/3");
    CHECK(value_of(without.str(), "status") == "inconclusive");
    CHECK(value_of(without.str(), "checks") == "2");
    CHECK(exit_code(r.status()) == 2);
    CHECK(exit_code(Status::fail) == 1);
    CHECK(worst(Status::fail, Status::inconclusive) == Status::fail);
  }

  TEST_CASE("commands and exit codes") {
    const auto path = scene_file();
    auto r = run({"tile-check", "E", "L", "--scene", path, "--no-timing"});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "classification") == "tiling");

    r = run({"tile-check", "E", "Z", "--scene", path});
    CHECK(r.code == 1);
    CHECK(value_of(r.out, "classification") == "neither");

    r = run({"jensen", "I", "--rho", "rho", "--scene", path});
    CHECK(r.code == 0);
    const double lhs = std::stod(value_of(r.out, "lhs"));
    const double rhs = std::stod(value_of(r.out, "rhs"));
    CHECK(std::abs(lhs - 2.2788) < 1e-4);
    CHECK(std::abs(lhs - rhs) < 1e-6);

    r = run({"zeros", "F", "--window", "0", "1", "--scene", path, "--tol", "1e-9"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2/3") != std::string::npos);

    r = run({"zeros", "[0,1/2] u [3/4,5/4]", "--window", "0", "1"});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "zero.0.exact") == "2/3");

    r = run({"weak-tile", "I", "M", "--scene", path});
    CHECK(r.code == 0);

    r = run({"lemma21", "E", "--scene", path});
    CHECK(r.code == 1);
    CHECK(r.out.find("optimal") != std::string::npos);

    r = run({"zero-free", "[0,1)", "--window", "1/2", "1"});
    CHECK(r.code == 2);
    CHECK(value_of(r.out, "certificate") == "inconclusive");

    r = run({"zero-free", "I", "--scene", path});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "certificate") == "zero-free");

    r = run({"growth", "8"});
    CHECK(r.code == 0);
    CHECK(value_of(r.out, "violated") == "true");

    CHECK(run({"zero-free", "[0,1)", "1/2", "1"}).code == 64);

    CHECK(run({"tile-check", "Q", "L", "--scene", path}).code == 64);
    CHECK(run({"no-such-command"}).code == 64);
    CHECK(run({"jensen", "[0,1)", "--rho", "abc"}).code == 64);
    CHECK(run({"tile-check", "[0,1)", "Z", "--scene", "/nonexistent"}).code ==
          64);
    std::filesystem::remove(path);
  }

  TEST_CASE("csv output") {
    const auto path =
        (std::filesystem::temp_directory_path() / "fuglede_zeros.csv").string();
    const auto r = run({"zeros", "[0,1)", "--window", "1/2", "5/2", "--csv", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("# fuglede-csv v1", 0) == 0);
    std::filesystem::remove(path);
  }

  TEST_CASE("paper reproduction is deterministic") {
    const auto a = run({"paper-repro", "--no-timing"});
    const auto b = run({"paper-repro", "--no-timing"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(value_of(a.out, "status") == "pass");
    for (int k = 1; k <= 8; ++k) {
      CHECK(value_of(a.out, "stage." + std::to_string(k) + ".status") ==
            "pass");
    }
    CHECK(value_of(a.out, "stage.8.smallest_violating_N") == "8");
  }
}
