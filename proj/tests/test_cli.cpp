#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("egal-cli-" + std::to_string(::getpid()) + "-" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }

  Outcome run(const std::string& args) {
    const fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = std::string("\"") + EGAL_ORIENT_PATH + "\" " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

const char* kTriangle = "3 3\n0 1\n1 2\n2 0\n";
const char* kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const char* kPath3 = "3 2\n0 1\n1 2\n";

}  // namespace

TEST_F(Cli, MinLexTriangle) {
  const Outcome r = run("minlex " + file("g.txt", kTriangle));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sequence: 1 1 1\n"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST_F(Cli, MinLexTraceLines) {
  const Outcome r = run("minlex --trace " + file("g.txt", kK4));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sequence: 2 2 1 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("reversal "), std::string::npos);
  const Outcome plain = run("minlex " + file("g.txt", kK4));
  EXPECT_EQ(plain.out.find("reversal "), std::string::npos);
}

TEST_F(Cli, StrongOnBridgeFails) {
  const Outcome r = run("sc-minmax " + file("g.txt", kPath3));
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("bridge 0-1"), std::string::npos);
}

TEST_F(Cli, StrongWithCertificate) {
  const Outcome r = run("sc-minmax --certificate " + file("g.txt", kK4));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("max-indegree: 2\n"), std::string::npos);
  EXPECT_NE(r.out.find("certificate: ok\n"), std::string::npos);
}

TEST_F(Cli, Bound) {
  const Outcome r = run("bound sc " + file("g.txt", kK4));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sc-lower-bound: 2\n");
}

TEST_F(Cli, RouteTablesAndSimulation) {
  const std::string g = file("g.txt", kTriangle);
  const Outcome t = run("route-tables " + g);
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out.rfind("numbering: ", 0), 0U);
  const Outcome s = run("route-sim " + g);
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("route 0 1: "), std::string::npos);
  EXPECT_NE(s.out.find("max-hops: 2\n"), std::string::npos);
  EXPECT_NE(s.out.find("max-table-size: 1\n"), std::string::npos);
  const Outcome q = run("--quiet route-sim " + g);
  EXPECT_EQ(q.out.find("route "), std::string::npos);
  const Outcome one = run("route-sim --pairs 2,0 " + g);
  EXPECT_EQ(one.code, 0);
  EXPECT_NE(one.out.find("route 2 0: "), std::string::npos);
}

TEST_F(Cli, Strip) {
  const Outcome r = run("strip " + file("g.txt", kK4));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("peak: 3\n"), std::string::npos);
}

TEST_F(Cli, Oracle) {
  const std::string k4 = file("k4.txt", kK4);
  const Outcome lex = run("oracle " + k4 + " --constraint none --objective minlex");
  EXPECT_EQ(lex.code, 0);
  EXPECT_NE(lex.out.find("sequence: 2 2 1 1\n"), std::string::npos);
  const Outcome convex = run("oracle " + k4 + " --objective convex:pow2");
  EXPECT_EQ(convex.code, 0);
  EXPECT_NE(convex.out.find("cost: 12\n"), std::string::npos);
  const Outcome infeasible = run("oracle " + file("p.txt", kPath3) + " --constraint sc --objective minmax");
  EXPECT_EQ(infeasible.code, 1);
  EXPECT_NE(infeasible.err.find("infeasible"), std::string::npos);
}

TEST_F(Cli, GadgetPipeline) {
  const Outcome built = run("gadget build 5 2");
  EXPECT_EQ(built.code, 0);
  EXPECT_EQ(built.out.rfind("# gadget k=5 l=2 ", 0), 0U);

  const std::string sc = file("sc.txt", "5 3\n0 1 3 4\n0 2 4\n1 2 4\n");
  const std::string sidecar = (dir_ / "side.json").string();
  const Outcome reduced = run("gadget reduce " + sc + " --sidecar " + sidecar);
  ASSERT_EQ(reduced.code, 0);
  EXPECT_NE(slurp(sidecar).find("\"k\""), std::string::npos);

  const Outcome verified = run("gadget verify " + sc + " 0,2");
  EXPECT_EQ(verified.code, 0);
  EXPECT_NE(verified.out.find("k: 5\n"), std::string::npos);
  EXPECT_NE(verified.out.find("acyclic: yes\n"), std::string::npos);

  const Outcome bad = run("gadget verify " + sc + " 1,2");
  EXPECT_NE(bad.code, 0);
  EXPECT_FALSE(bad.err.empty());
}

TEST_F(Cli, UsageErrors) {
  const std::string g = file("g.txt", kTriangle);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate " + g).code, 2);
  EXPECT_EQ(run("minlex " + (dir_ / "missing.txt").string()).code, 2);
  EXPECT_EQ(run("oracle " + g + " --objective bogus").code, 2);
  const Outcome bad = run("minlex " + file("bad.txt", "3 2\n0 1\n"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("line"), std::string::npos);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  const std::string g = file("g.txt", "6 9\n0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n0 4\n1 5\n");
  for (const char* cmd : {"minlex", "sc-minmax --trace", "route-tables", "route-sim", "strip"}) {
    const Outcome a = run(std::string(cmd) + " " + g);
    const Outcome b = run(std::string(cmd) + " " + g);
    EXPECT_EQ(a.code, 0) << cmd << a.err;
    EXPECT_EQ(a.out, b.out) << cmd;
  }
}
