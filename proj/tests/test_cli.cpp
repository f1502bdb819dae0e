#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "jonq/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = jonq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("jonq_cli_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

const char* kTranslation = R"({"n":2,"variant":"J","entries":[{"mu":"1","f":"x2"},{"mu":"1","f":"0"}]})";
const char* kSigns = R"({"n":2,"variant":"J","entries":[{"mu":"-1","f":"0"},{"mu":"-1","f":"0"}]})";
const char* kHeisenberg = R"({"dim":3,"structure":[[1,2,3,1]]})";

}  // namespace

TEST_CASE("element subcommands") {
  TempDir dir;
  const auto t = dir.write("t.json", kTranslation), s = dir.write("s.json", kSigns);

  const Run order = run({"order", t});
  CHECK(order.code == 0);
  CHECK(order.out == "infinite\n");
  CHECK(run({"order", s}).out == "finite(2)\n");

  const Run comp = run({"compose", t, s});
  CHECK(comp.code == 0);
  CHECK(comp.out.find("x1 -> -x1 - x2") != std::string::npos);

  const Run inv = run({"invert", t});
  CHECK(inv.out.find("x1 -> x1 - x2") != std::string::npos);

  const Run app = run({"apply", t, "--expr", "x1/x2"});
  CHECK(app.code == 0);
  CHECK(app.out == "(x1 + x2)/x2\n");
}

TEST_CASE("invariants and closure") {
  TempDir dir;
  const auto s = dir.write("s.json", kSigns), t = dir.write("t.json", kTranslation);

  const Run ok = run({"invariants", s});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("level 2: certified x2^2") != std::string::npos);
  CHECK(ok.out.find("level 1: certified x1*x2") != std::string::npos);
  CHECK(ok.out.find("pure_certified: true") != std::string::npos);

  const Run unresolved = run({"invariants", t, "--deg", "2", "--coeff-deg", "2"});
  CHECK(unresolved.code == 2);
  CHECK(unresolved.out.find("unresolved") != std::string::npos);

  const Run closure = run({"closure", s});
  CHECK(closure.code == 0);
  CHECK(closure.out.find("size: 2") != std::string::npos);

  const Run overflow = run({"closure", t, "--cap", "10"});
  CHECK(overflow.code == 2);
  CHECK(overflow.out == "overflow: more than 10 elements\n");
}

TEST_CASE("Jhat orders beyond the cap are unresolved") {
  TempDir dir;
  const auto g = dir.write("g.json", R"({"n":2,"variant":"Jhat","entries":[{"mu":"x2","f":"0"},{"mu":"1","f":"0"}]})");
  const Run r = run({"order", g, "--cap", "12"});
  CHECK(r.code == 2);
  CHECK(r.out == "unknown(cap 12)\n");
}

TEST_CASE("torus, slice and line-check reports") {
  TempDir dir;
  const Run torus = run({"torus-invariants", "--weights", "5,3"});
  CHECK(torus.code == 0);
  CHECK(torus.out == "faithful: true\ntrdeg: 1\ninvariants: x1^3/x2^5\n");

  const auto alg = dir.write("h.json", kHeisenberg);
  const Run coadj = run({"coadjoint-slice", alg});
  CHECK(coadj.code == 0);
  CHECK(coadj.out.find("subspace: x1 = 0, x2 = 0") != std::string::npos);
  CHECK(coadj.out.find("invariants: x3") != std::string::npos);
  CHECK(coadj.out.find("verified: true") != std::string::npos);

  const auto flows = dir.write("f.json", R"([{"n":2,"variant":"flow","entries":[{"f":"0"},{"f":"u"}]},
                                             {"n":2,"variant":"flow","entries":[{"f":"u/x2"},{"f":"0"}]}])");
  CHECK(run({"slice", flows}).code == 0);
  const Run exhausted = run({"slice", flows, "--constants", "0"});
  CHECK(exhausted.code == 2);
  CHECK(exhausted.err.find("candidates exhausted") != std::string::npos);

  const Run line = run({"line-check", "--d1", "5", "--d2", "3"});
  CHECK(line.code == 0);
  CHECK(line.out.find("  mu1*mu2 != 0, nu = 0: 2\n") != std::string::npos);
  CHECK(line.out.find("no affine line is a rational cross-section") != std::string::npos);
  CHECK(run({"line-check", "--d1", "2", "--d2", "1"}).out.find("candidate line: x2 = -1") != std::string::npos);
}

TEST_CASE("invalid input exits with 1") {
  TempDir dir;
  const auto bad = dir.write("bad.json", R"({"n":2,"variant":"J","entries":[{"mu":"1","f":"x1"},{"mu":"1","f":"0"}]})");
  const Run r = run({"order", bad});
  CHECK(r.code == 1);
  CHECK(r.err == "error: f_1 not in K_1\n");
  CHECK(run({"order", dir.write("x.json", "not json")}).code == 1);
  CHECK(run({"order", "/nonexistent/file.json"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"torus-invariants", "--weights", "1,a"}).code == 1);
}

TEST_CASE("json output parses and runs are deterministic") {
  TempDir dir;
  const auto s = dir.write("s.json", kSigns), alg = dir.write("h.json", kHeisenberg);
  const std::vector<std::vector<std::string>> commands{{"order", s, "--json"},
                                                       {"invariants", s, "--json"},
                                                       {"--json", "compose", s, s},
                                                       {"coadjoint-slice", alg, "--json"},
                                                       {"line-check", "--d1", "5", "--d2", "3", "--json"},
                                                       {"torus-invariants", "--weights", "5,3;1,1", "--json"}};
  for (const auto& args : commands) {
    const Run a = run(args), b = run(args);
    CAPTURE(args.front());
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
  const auto j = nlohmann::json::parse(run({"line-check", "--d1", "5", "--d2", "3", "--json"}).out);
  CHECK(j["conclusion"] == "no_line");
  CHECK(j["cases"].size() == 6);
}
