#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

// Runs the binary with stderr folded into stdout.
Run run(const std::string& args) {
  std::string cmd = std::string(APOLAR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 512> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, AntipodalOfThirdFixture) {
  auto r = run("antipodal --vars 2 --k 10 --p 'y^6+x^3*y^3+x^5*y'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "220*t1^9*t2^3 + 924*t1^6*t2^6 + 495*t1^4*t2^8\n");
}

TEST(Cli, DecomposeJson) {
  auto r = run("decompose --vars 2 --format json '(x^2, x*y)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"schema\": 1"), std::string::npos);
  EXPECT_NE(r.out.find("\"J\": \"(x1)\""), std::string::npos);
  EXPECT_NE(r.out.find("\"H\": \"(x1^2, x2)\""), std::string::npos);
}

TEST(Cli, DocleInLexOrder) {
  auto r = run("docle --vars 2 '(x^3, x*y, y^2)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{x1^2, x2}\n");
  // The hidden brute-force scan agrees.
  auto o = run("oracle docle --vars 2 '(x^3, x*y, y^2)'");
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, r.out);
}

TEST(Cli, HilbertAndDimension) {
  auto r = run("hilbert --vars 2 '(x^3, y^2 - x*y)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[1, 2, 2, 1]\ndim = 6\n");
}

TEST(Cli, ColonPowerMatchesAnn) {
  auto a = run("colon-power --vars 2 --k 4 --p 'x*y^2+x^2*y+x^3'");
  auto b = run("ann --vars 2 --q '3*t1^2*t2+3*t1*t2^2+t2^3'");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, "(-x1*x2 + x2^2, x1^3)\n");
}

TEST(Cli, GorensteinSubcommands) {
  auto g = run("gorenstein-check --k 10 --p 'y^6+x^3*y^3+x^5*y'");
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "equal = true\n");
  auto m = run("--format json monomial-iff --k 3 --p y");
  EXPECT_NE(m.out.find("\"is_monomial_ideal\": true"), std::string::npos);
  auto s = run("series-check --k 4 --p 'x*y^2+x^2*y+x^3' --coeffs 1,1,1,1,1");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.rfind("ok = true", 0), 0u);
}

TEST(Cli, ClosureWholePoset) {
  EXPECT_EQ(run("closure --vars 2 '(x*y)'").out, "whole poset\n");
  EXPECT_EQ(run("closure --vars 2 '(x, y)'").out, "(x1, x2)\n");
}

TEST(Cli, InverseIdealAndIntersect) {
  EXPECT_EQ(run("inverse-ideal --vars 2 '{x^2*y}'").out, "(x1^3, x2^2)\n");
  EXPECT_EQ(run("intersect --vars 2 '(x)' '(x^2, y)'").out, "(x1^2, x1*x2)\n");
}

TEST(Cli, StaircaseAscii) {
  auto r = run("staircase --vars 2 '(x^3, x*y, y^2)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" 0 ..o##"), std::string::npos);
  auto svg = run("staircase --svg --vars 2 '(x^3, y^2)'");
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
}

TEST(Cli, ExitCodes) {
  auto parse = run("docle '(x^3,'");
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.out.find("offset 5"), std::string::npos);
  EXPECT_EQ(run("docle --vars 2 '(x^2 - x*y)'").code, 1);
  EXPECT_EQ(run("antipodal --k 2 --p 'x^2'").code, 1);
  EXPECT_EQ(run("no-such-command").code, 2);
}

TEST(Cli, OutFile) {
  auto path = std::filesystem::temp_directory_path() / "apolar_cli_out.txt";
  auto r = run("--out " + path.string() + " saturate --vars 2 '(x^2, x*y)'");
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "(x1)");
  std::filesystem::remove(path);
}

}  // namespace
