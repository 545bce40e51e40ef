#include <charnum/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace charnum::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CHARNUM_TEST_DATA_DIR) + "/" + name; }

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("charnum_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

TEST(Cli, CharNumberOfReferenceCubic) {
  const auto r = run_cli({"char-number", "--curve", data("cubic.json"), "--lines", data("abc.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-1\n");
}

TEST(Cli, CharNumberJson) {
  const auto r =
      run_cli({"--format", "json", "char-number", "--curve", data("cubic.json"), "--lines", data("abc.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["value"], "-1");
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, CharNumberRandomTrials) {
  const auto r = run_cli({"--seed", "3", "--trials", "25", "char-number", "--degree", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "degree=4 trials=25 verified=25\n");
}

TEST(Cli, SplineDimSingular) {
  const auto r = run_cli({"spline-dim", "--mu", "1", "--config", data("ms.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dim=7 singular=true");
}

TEST(Cli, SplineDimGenericExitsOne) {
  const auto r = run_cli({"spline-dim", "--config", data("ms_generic.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dim=6 singular=false");
}

TEST(Cli, SplineDimFromVertices) {
  const auto r = run_cli({"spline-dim", "--config", data("ms_vertices.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dim=7 singular=true");
}

TEST(Cli, SplineDimMuMismatchIsInputError) {
  EXPECT_EQ(run_cli({"spline-dim", "--mu", "2", "--config", data("ms.json")}).code, 2);
}

TEST(Cli, SplineDimRandomTrials) {
  const auto r = run_cli({"--trials", "10", "spline-dim", "--mu", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("agree=10"), std::string::npos) << r.out;
}

TEST(Cli, VerifyExample) {
  const auto r = run_cli({"verify-example"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[4 39 -65 -126 312 -174]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("chi1 (-1,5/3,1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("q3 (-6,1,1)"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.rfind("verified=")), "verified=true\n");
}

TEST(Cli, VerifyExampleIsByteStable) {
  const auto a = run_cli({"verify-example"});
  const auto b = run_cli({"verify-example"});
  EXPECT_EQ(a.out, b.out);
  const auto ja = run_cli({"--format", "json", "verify-example"});
  const auto jb = run_cli({"--format", "json", "verify-example"});
  EXPECT_EQ(ja.out, jb.out);
}

TEST(Cli, PascalCheck) {
  auto r = run_cli({"pascal-check", "--config", data("hexagon.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("collinear=true"), std::string::npos);
  r = run_cli({"pascal-check", "--config", data("hexagon_generic.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("collinear=false"), std::string::npos);
  r = run_cli({"--trials", "12", "pascal-check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "trials=12 collinear=12\n");
}

TEST(Cli, PascalMap) {
  const auto r = run_cli({"pascal-map", "--config", data("hexagon.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  for (const char* key : {"u ", "v ", "w ", "q1 ", "q2 ", "q3 ", "chi1 ", "chi2 ", "chi3 "})
    EXPECT_NE(("\n" + r.out).find(std::string("\n") + key), std::string::npos) << key;
}

TEST(Cli, PascalCubicReference) {
  const auto r = run_cli({"pascal-cubic", "--config", data("example.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("point (-1,5/3,1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("point (6,1,1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("curve 4*x^2 + 39*xy - 65*xz - 126*y^2 + 312*yz - 174*z^2"), std::string::npos) << r.out;
}

TEST(Cli, PascalCubicPerturbedIsFalse) {
  const auto r = run_cli({"pascal-cubic", "--config", data("example_perturbed.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("criterion=false"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("curve none"), std::string::npos) << r.out;
}

TEST(Cli, PascalCubicRandomDegrees) {
  for (const char* n : {"2", "3", "4"}) {
    const auto r = run_cli({"--trials", "5", "pascal-cubic", "--degree", n});
    EXPECT_EQ(r.code, 0) << n << " " << r.err;
    EXPECT_EQ(r.out, "trials=5 verified=5\n");
  }
}

TEST(Cli, FitCurveAndConicThrough) {
  auto r = run_cli({"fit-curve", "--config", data("nine.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "dimension=2");
  r = run_cli({"fit-curve", "--config", data("nine.json"), "--degree", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "dimension=0\n");
  r = run_cli({"conic-through", "--config", data("six.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "on-conic=true\nconic 4*x^2 + 39*xy - 65*xz - 126*y^2 + 312*yz - 174*z^2\n");
}

TEST(Cli, Render) {
  TempDir dir;
  auto r = run_cli({"render", "--config", data("scene.json"), "-o", dir.file("scene.svg")});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string svg = slurp(dir.file("scene.svg"));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("at infinity"), std::string::npos);

  r = run_cli({"render", "--example"});
  EXPECT_EQ(r.code, 0) << r.err;
  for (int i = 1; i <= 9; ++i) EXPECT_NE(r.out.find(">p" + std::to_string(i) + "<"), std::string::npos) << i;
  std::size_t lines = 0;
  for (std::size_t k = r.out.find("<line class"); k != std::string::npos; k = r.out.find("<line class", k + 1)) ++lines;
  EXPECT_EQ(lines, 3u);
  EXPECT_NE(r.out.find(">cubic</tspan>"), std::string::npos);
  EXPECT_NE(r.out.find(">conic</tspan>"), std::string::npos);
  EXPECT_EQ(run_cli({"render"}).code, 2);
}

TEST(Cli, InputErrorsExitTwoWithPosition) {
  auto r = run_cli({"char-number", "--curve", data("bad_float.json"), "--lines", data("abc.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad_float.json:3:23: floating-point literal"), std::string::npos) << r.err;
  r = run_cli({"char-number", "--curve", data("does_not_exist.json"), "--lines", data("abc.json")});
  EXPECT_EQ(r.code, 2);
  r = run_cli({"no-such-command"});
  EXPECT_EQ(r.code, 2);
  r = run_cli({"--format", "yaml", "verify-example"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, CurveThroughVertexIsInputError) {
  TempDir dir;
  {
    std::ofstream f(dir.file("c.json"));
    f << R"({"degree": 1, "coefficients": [1, 0, 0]})";
  }
  // x = 0 passes through the vertex (0, 1, 0) of the reference lines.
  const auto r = run_cli({"char-number", "--curve", dir.file("c.json"), "--lines", data("abc.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("vertex on curve"), std::string::npos) << r.err;
}

// Files written by --emit-config reparse to the same values and reproduce the run.
TEST(Cli, EmitConfigRoundTrips) {
  TempDir dir;
  const std::string cfg = dir.file("char.json");
  auto r = run_cli({"--seed", "11", "--trials", "1", "--emit-config", cfg, "char-number", "--degree", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json emitted = json::parse(slurp(cfg));
  const HomCurve c = io::curve_from_json(emitted["curve"]);
  const TriFrame f = io::frame_from_json(emitted);
  EXPECT_EQ(io::to_json(c), emitted["curve"]);
  EXPECT_EQ(io::frame_to_json(f)["lines"], emitted["lines"]);
  r = run_cli({"char-number", "--config", cfg});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "-1\n");

  const std::string cubic_cfg = dir.file("cubic.json");
  const auto first = run_cli({"--seed", "5", "--trials", "1", "--emit-config", cubic_cfg, "pascal-cubic", "--degree", "3"});
  ASSERT_EQ(first.code, 0) << first.err;
  const std::string again = dir.file("again.json");
  const auto second = run_cli({"--emit-config", again, "pascal-cubic", "--config", cubic_cfg});
  EXPECT_EQ(second.code, 0) << second.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(slurp(cubic_cfg), slurp(again));

  const std::string ms_cfg = dir.file("ms.json");
  ASSERT_EQ(run_cli({"--emit-config", ms_cfg, "spline-dim", "--config", data("ms.json")}).code, 0);
  EXPECT_EQ(io::ms_config_from_json(json::parse(slurp(ms_cfg))),
            io::ms_config_from_json(json::parse(slurp(data("ms.json")))));
}

}  // namespace
}  // namespace charnum::cli
