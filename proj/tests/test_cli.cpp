#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "binom/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "binom");
  std::ostringstream out, err;
  const int code = binom::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<double> real_parts(const json& amps) {
  std::vector<double> re;
  for (const auto& a : amps) re.push_back(a.at("re").get<double>());
  return re;
}

class TempDir {
 public:
  TempDir()
      : path_(fs::temp_directory_path() /
              ("binom_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("state command") {
  auto r = run({"state", "-N", "2", "-p", "1", "--phi", "0"});
  REQUIRE(r.code == 0);
  CHECK(real_parts(json::parse(r.out).at("amplitudes")) == std::vector<double>{0.0, 0.0, 1.0});

  r = run({"state", "-N", "0", "-p", "0.3"});
  CHECK(real_parts(json::parse(r.out).at("amplitudes")) == std::vector<double>{1.0});

  r = run({"state", "-N", "2", "-p", "0.5", "--phi", "0"});
  const auto re = real_parts(json::parse(r.out).at("amplitudes"));
  CHECK(re[0] == 0.5);
  CHECK(re[1] == 0.7071067811865476);
  CHECK(re[2] == 0.5);

  r = run({"state", "-N", "1", "-p", "0.5", "--format", "csv"});
  CHECK(r.out.rfind("n,re,im\n", 0) == 0);
}

TEST_CASE("degrees flag") {
  const auto rad = json::parse(run({"state", "-N", "3", "-p", "0.4", "--phi", "1.5707963267948966"}).out);
  const auto deg = json::parse(run({"--degrees", "state", "-N", "3", "-p", "0.4", "--phi", "90"}).out);
  CHECK(rad.at("phi").get<double>() == doctest::Approx(deg.at("phi").get<double>()).epsilon(1e-15));
}

TEST_CASE("invalid parameters and usage errors exit with 2") {
  auto r = run({"state", "-N", "2", "-p", "1.5"});
  CHECK(r.code == binom::cli::kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(r.out.empty());
  CHECK(run({"state", "-N", "-1", "-p", "0.5"}).code == 2);
  CHECK(run({"state", "-p", "0.5"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"squeeze-scan", "-N", "2", "--p-steps", "1"}).code == 2);
  CHECK(run({"state", "-N", "2", "-p", "0.5", "--format", "xml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("overlap and partner") {
  auto r = run({"overlap", "-N", "4", "--p1", "0.3", "--phi1", "0.2", "--p2", "0.7", "--phi2", "3.3415926535897931"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out).at("modulus").get<double>() <= 1e-12);

  r = run({"partner", "-N", "3", "-p", "0.3", "--phi", "0.2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("partner").at("p").get<double>() == doctest::Approx(0.7));
  CHECK(std::abs(j.at("overlap").at("re").get<double>()) <= 1e-12);
  CHECK(run({"overlap", "-N", "4", "--p1", "0.3", "--p2", "2"}).code == 2);
}

TEST_CASE("basis includes the two-photon middle state") {
  const auto r = run({"basis", "-N", "2", "-p", "0.5", "--phi", "0"});
  REQUIRE(r.code == 0);
  const auto mid = json::parse(r.out).at("states")[1].at("amplitudes");
  CHECK(mid[0].at("re").get<double>() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(mid[1].at("re").get<double>()) <= 1e-15);
  CHECK(mid[2].at("re").get<double>() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(run({"basis", "-N", "2", "-p", "0.5", "--format", "csv"}).out.rfind("m,n,re,im\n", 0) == 0);
}

TEST_CASE("expand round-trips a written state") {
  TempDir dir;
  const auto file = dir / "state.json";
  REQUIRE(run({"state", "-N", "6", "-p", "0.35", "--phi", "2.0", "-o", file.string()}).code == 0);
  const auto original = binom::io::parse_state(slurp(file)).state;
  const auto r = run({"expand", file.string()});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("max_abs_error").get<double>() <= 1e-10);
  CHECK_FALSE(j.at("under_resolved").get<bool>());
  const auto back = binom::io::parse_state(json{{"amplitudes", j.at("amplitudes")}}.dump()).state;
  CHECK(max_abs_diff(back, original) <= 1e-10);

  const auto csv = dir / "state.csv";
  REQUIRE(run({"state", "-N", "3", "-p", "0.5", "--format", "csv", "-o", csv.string()}).code == 0);
  CHECK(run({"expand", csv.string()}).code == 0);
  // a coarse grid is allowed and flagged
  const auto coarse = json::parse(run({"expand", file.string(), "--theta-nodes", "1", "--phi-nodes", "2"}).out);
  CHECK(coarse.at("under_resolved").get<bool>());
}

TEST_CASE("expand reports malformed input with line and field") {
  TempDir dir;
  const auto bad = dir / "bad.csv";
  std::ofstream(bad) << "n,re,im\n0,1,0\n1,oops,0\n";
  const auto r = run({"expand", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(r.err.find("'re'") != std::string::npos);
  CHECK(run({"expand", (dir / "missing.json").string()}).code == 2);
}

TEST_CASE("squeeze scan output") {
  TempDir dir;
  const auto file = dir / "scan.csv";
  REQUIRE(run({"squeeze-scan", "-N", "2", "--p-steps", "21", "--phi-steps", "21", "-o", file.string()}).code == 0);
  std::istringstream in(slurp(file));
  std::string line;
  std::getline(in, line);
  CHECK(line == "N,p,phi,S_X,S_P");
  int rows = 0;
  bool squeezed = false;
  double prev_p = -1.0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    REQUIRE(f.size() == 5);
    const double p = std::stod(f[1]);
    const double sx = std::stod(f[3]);
    const double sp = std::stod(f[4]);
    CHECK(p >= prev_p);
    prev_p = p;
    squeezed = squeezed || sx > 0.0;
    CHECK_FALSE((sx > 0.0 && sp > 0.0));
    if (p == 1.0) {
      CHECK(std::abs(sx + 4.0) <= 1e-12);
      CHECK(std::abs(sp + 4.0) <= 1e-12);
    }
  }
  CHECK(rows == 441);
  CHECK(squeezed);
  CHECK(run({"squeeze-scan", "-N", "2", "-o", (dir / "no" / "such" / "dir.csv").string()}).code == 2);
  // both sources agree at the printed precision
  const auto a = run({"squeeze-scan", "-N", "5", "--p-steps", "5", "--phi-steps", "4"}).out;
  const auto b = run({"squeeze-scan", "-N", "5", "--p-steps", "5", "--phi-steps", "4", "--source", "direct"}).out;
  CHECK(a.size() > 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == std::count(b.begin(), b.end(), '\n'));
}

TEST_CASE("verify command") {
  auto r = run({"verify", "--group", "completeness", "-N", "5"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  REQUIRE(j.at("groups").size() == 1);
  CHECK(j.at("groups")[0].at("name") == "completeness");

  r = run({"verify", "--tolerance", "1e-16"});
  CHECK(r.code == binom::cli::kExitVerifyFailed);
  CHECK(json::parse(r.out).at("passed") == false);

  CHECK(run({"verify", "--group", "bogus"}).code == 2);
  CHECK(run({"verify", "--group", "overlap", "--format", "csv"}).out.rfind("group,check,", 0) == 0);
}

TEST_CASE("tolerance from the environment") {
  ::setenv(binom::cli::kToleranceEnv, "1e-16", 1);
  CHECK(run({"verify", "--group", "completeness"}).code == 1);
  // an explicit option wins over the environment
  CHECK(run({"verify", "--group", "completeness", "--tolerance", "1e-10"}).code == 0);
  ::setenv(binom::cli::kToleranceEnv, "garbage", 1);
  CHECK(run({"verify", "--group", "completeness"}).code == 2);
  ::unsetenv(binom::cli::kToleranceEnv);
  CHECK(run({"verify", "--group", "completeness"}).code == 0);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"verify", "--group", "overlap", "--group", "delta", "--seed", "99"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> scan{"squeeze-scan", "-N", "7"};
  CHECK(run(scan).out == run(scan).out);
}
