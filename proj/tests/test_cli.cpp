#include <gtest/gtest.h>

#include <sstream>

#include "lieps/cli.hpp"
#include "support.hpp"

using namespace lieps;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(const std::vector<std::string> &args, const std::string &input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string &name, const std::string &n = "1", const std::string &of = "heisenberg") {
  const CliResult r = run({"example", name, "--n", n, "--of", of});
  EXPECT_EQ(r.code, 0) << r.err;
  return r.out;
}

} // namespace

TEST(Cli, ExampleEmitsParsableDocument) {
  const std::string text = example("heisenberg", "2");
  EXPECT_EQ(parse_document(text), builtin_heisenberg(2));
}

TEST(Cli, Validate) {
  const CliResult r = run({"validate", "-"}, example("so4_grassmann"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("valid: dim 6, h dim 2, quotient dim 4"), std::string::npos) << r.out;

  const std::string broken = R"({"basis": ["a", "b", "c"], "brackets": [
    {"i": 0, "j": 1, "coeffs": {"1": 1}}, {"i": 0, "j": 2, "coeffs": {"0": 1}}, {"i": 1, "j": 2, "coeffs": {"0": 1}}]})";
  const CliResult bad = run({"validate", "-"}, broken);
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("jacobi violated"), std::string::npos) << bad.out;
}

TEST(Cli, Invariants) {
  const CliResult r = run({"invariants", "-"}, example("heisenberg"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dim 2\n  u1^w\n  v1^w\n");
  const CliResult g = run({"invariants", "-"}, example("gl_sym", "3"));
  EXPECT_EQ(g.out, "dim 0\n");
}

TEST(Cli, YbeReportsNonzeroEntries) {
  const std::string doc = example("iso11");
  const CliResult s = run({"ybe", "-", "--r", "(e1-e2)^e3"}, doc);
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("not an r-matrix"), std::string::npos);
  EXPECT_NE(s.out.find("[[r,r]](e1*, e2*, e3*) = 2"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("zero on fixed covectors: yes"), std::string::npos);
  const CliResult t = run({"ybe", "-", "--r", "e1^e2"}, doc);
  EXPECT_NE(t.out.find("r-matrix\n"), std::string::npos);
}

TEST(Cli, LeafAndConnection) {
  const std::string doc = example("so4_grassmann");
  const CliResult leaf = run({"leaf", "-", "--r", "(e1-e4)^(e2+e3)"}, doc);
  EXPECT_EQ(leaf.code, 0) << leaf.err;
  EXPECT_NE(leaf.out.find("a_r dim 4 (h dim 2)"), std::string::npos) << leaf.out;
  EXPECT_NE(leaf.out.find("e1 - e4"), std::string::npos);
  const CliResult conn = run({"connection", "-", "--r", "(e1-e4)^(e2+e3)"}, doc);
  EXPECT_EQ(conn.code, 0) << conn.err;
  EXPECT_NE(conn.out.find("torsion-free: yes"), std::string::npos) << conn.out;
  EXPECT_NE(conn.out.find("poisson-compatible: yes"), std::string::npos);
}

TEST(Cli, ScanWithExtraPoint) {
  const CliResult r = run({"scan", "-", "--point", "(e1-e2)^e3"}, example("iso11"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("invariant dim 2"), std::string::npos) << r.out;
}

TEST(Cli, JsonOutputIsDeterministic) {
  const std::string doc = example("so4_grassmann");
  const CliResult a = run({"--format", "json", "leaf", "-", "--r", "(e1-e4)^(e2+e3)"}, doc);
  const CliResult b = run({"leaf", "-", "--r", "(e1-e4)^(e2+e3)", "--format", "json"}, doc);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(json::parse(a.out).is_object());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"validate", "-"}, "{\"basis\": [").code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"ybe", "-"}, example("iso11")).code, 2);
  EXPECT_EQ(run({"ybe", "-", "--r", "e1^e9"}, example("iso11")).code, 2);
  // domain errors
  const CliResult leaf = run({"leaf", "-", "--r", "(e1-e2)^e3"}, example("iso11"));
  EXPECT_EQ(leaf.code, 1);
  EXPECT_NE(leaf.err.find("r-matrix"), std::string::npos) << leaf.err;
  EXPECT_EQ(run({"example", "sl3"}).code, 1);
  EXPECT_EQ(run({"validate", "/nonexistent/file.json"}).code, 2);
}
