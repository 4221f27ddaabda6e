#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "braidtool_app.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = braidtool::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("braidtool_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST(Cli, EqBraidRelation) {
  auto r = run({"eq", "B3: s0 s1 s0", "B3: s1 s0 s1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equivalent\n");
  auto n = run({"eq", "B2: s0", "B2: s0^-1"});
  EXPECT_EQ(n.code, 1);
  EXPECT_EQ(n.out, "not equivalent\n");
}

TEST(Cli, Perm) {
  auto r = run({"perm", "B2: s0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(0 1)\n");
  EXPECT_EQ(run({"perm", "B3: s0 s1"}).out, "(0 2 1)\n");
}

TEST(Cli, WordQueries) {
  EXPECT_EQ(run({"nf", "B3: s0 s1 s0"}).out, "inf=1 factors=-\n");
  EXPECT_EQ(run({"expsum", "B3: s0 s1 s0^-1"}).out, "1\n");
  EXPECT_EQ(run({"delete", "B3: s0 s1", "2"}).out, "0,2 | B2: s0\n");
  EXPECT_EQ(run({"delete", "0,2,5 | B3: s1", "0"}).out, "2,5 | B2: s0\n");
  EXPECT_EQ(run({"act", "B2: s0", "d0"}).out, "d0 d1 d0^-1\n");
  EXPECT_EQ(run({"push", "B3: s0 s1 s1 s0^-1"}).out, "B3: s1 s1\n");
}

TEST(Cli, TowerEqOnIdenticalFiles) {
  auto f = temp_file("finsupp.tower", "TOWER kind=finsupp horizon=8\nB3: s0 s1^-1\n");
  auto r = run({"tower-eq", f, f, "--horizon", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "equivalent up to level 8\n");
}

TEST(Cli, TowerEqDifferentTowers) {
  auto r = run({"tower-eq", "TOWER kind=finsupp horizon=4\nB2: s0", "TOWER kind=finsupp horizon=4\nB2: s0^-1",
                "--horizon", "4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not equivalent (levels differ at 2)\n");
}

TEST(Cli, TowerCheck) {
  auto r = run({"tower-check", "TOWER kind=rule:winding horizon=8", "--horizon", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "endpoints up to level 5: 0,1,2,3,4\ncoherent up to level 5\n");
  auto bad = run({"tower-check", "TOWER kind=explicit horizon=3\n1 | 0 | B1:\n2 | 0,1 | B2:\n3 | 0,1,2 | B3: s0\n",
                  "--horizon", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("level 2: deletion mismatch"), std::string::npos);
  EXPECT_NE(bad.out.find("incoherent up to level 3"), std::string::npos);
}

TEST(Cli, DaggerCheck) {
  auto ok = run({"dagger-check", "DAGGER m=2 E=0,1\n0 -> d0 d1 d0^-1\n1 -> d0\n"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("isomorphism verified by braid reconstruction (B2: s0)"), std::string::npos);
  auto swap = run({"dagger-check", "DAGGER m=2 E=0,1\n0 -> d1\n1 -> d0\n"});
  EXPECT_EQ(swap.code, 1);
  EXPECT_NE(swap.out.find("product condition: no"), std::string::npos);
  auto unverified = run({"dagger-check", "DAGGER m=2 E=0,1\n0 -> d0 d1 d0 d1^-1 d0^-1\n1 -> d0 d1 d0^-1\n",
                         "--max-length", "1"});
  EXPECT_EQ(unverified.code, 1);
  EXPECT_NE(unverified.out.find("unverified isomorphism (no braid of length <= 1)"), std::string::npos);
  auto witnessed = run({"dagger-check", "DAGGER m=2 E=0,1\n0 -> d0 d1 d0^-1\n1 -> d0\n", "--witness",
                        "DAGGER m=2 E=0,1\n0 -> d1\n1 -> d1^-1 d0 d1\n"});
  EXPECT_EQ(witnessed.code, 0);
  EXPECT_NE(witnessed.out.find("isomorphism verified by inverse witness"), std::string::npos);
}

TEST(Cli, DiagramCheck) {
  auto r = run({"diagram-check", "DAGGER m=3 E=0,1,2\n0 -> d0 d1 d0 d1^-1 d0^-1\n1 -> d0 d1 d0^-1\n2 -> d2\n",
                "DAGGER m=2 E=0,1\n0 -> d0\n1 -> d1\n"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "does not commute\n");
  auto t = run({"diagram-check", "TOWER kind=rule:winding horizon=6", "--horizon", "6"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(t.out, "commutes up to level 6\n");
}

TEST(Cli, Reconstruct) {
  auto r = run({"reconstruct", "DAGGER m=2 E=0,1\n0 -> d0 d1 d0^-1\n1 -> d0\n"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "B2: s0\n");
  auto none = run({"reconstruct", "DAGGER m=2 E=0,1\n0 -> d0 d1 d0 d1^-1 d0^-1\n1 -> d0 d1 d0^-1\n",
                   "--max-length", "1"});
  EXPECT_EQ(none.code, 1);
  EXPECT_EQ(none.out, "no braid of length <= 1\n");
}

TEST(Cli, Roundtrip) {
  auto r = run({"roundtrip", "B3: s0 s1^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "B3: s0 s1^-1\nequivalent\n");
  auto rnd = run({"roundtrip", "--random", "25", "--seed", "7"});
  EXPECT_EQ(rnd.code, 0);
  EXPECT_EQ(rnd.out, "25/25 round trips equivalent (seed 7)\n");
  auto pl = temp_file("swap.pl",
                      "PL strands=2\nx=0/1+0/1i : (0/1,0/1+0/1i);(1/2,1/2+-1/2i);(1/1,1/1+0/1i)\n"
                      "x=1/1+0/1i : (0/1,1/1+0/1i);(1/2,1/2+1/2i);(1/1,0/1+0/1i)\n");
  auto p = run({"roundtrip", "--pl", pl});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "B2: s0\npermutation matches endpoints\n");
}

TEST(Cli, Render) {
  auto r = run({"render", "B2: s0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "|   |\n \\ /\n  \\\n / \\\n|   |\n");
  auto svg = run({"render", "B2:", "--format", "svg"});
  EXPECT_EQ(svg.code, 0);
  EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
  EXPECT_EQ(run({"render", "B2: s0", "--format", "png"}).code, 2);
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"render", "B4: s0 s2^-1 s1", "--format", "svg"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  auto none = run({});
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.err.find("usage: braidtool VERB"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"eq", "B3: s0"}).code, 2);
  EXPECT_EQ(run({"eq", "B3: s9", "B3:"}).code, 2);
  EXPECT_EQ(run({"eq", "B3: s0", "B2: s0"}).code, 2);
  EXPECT_EQ(run({"perm", "/nonexistent/file"}).code, 2);
  EXPECT_EQ(run({"delete", "B3: s0", "x"}).code, 2);
  EXPECT_EQ(run({"push", "B3: s0"}).code, 2);
  EXPECT_EQ(run({"tower-eq", "TOWER kind=finsupp horizon=2\nB2: s0", "TOWER kind=wat horizon=2"}).code, 2);
  EXPECT_EQ(run({"tower-check", "TOWER kind=rule:winding horizon=2", "--horizon", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
