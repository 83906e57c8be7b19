#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kirchhoff/cli.hpp"
#include "kirchhoff/graph_file.hpp"

using namespace kirchhoff;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("kirchhoff_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
    triangle_ = write("triangle.g", "# unit triangle\nedge a s t\nedge b t w\nedge c w s\n");
    k4_ = write("k4.g", "edge 1 a b\nedge 2 a c\nedge 3 a d\nedge 4 b c\nedge 5 b d\nedge 6 c d\n");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::filesystem::path dir_;
  std::string triangle_;
  std::string k4_;
};

}  // namespace

TEST(GraphFileFormat, ParsesDirectivesAndComments) {
  const GraphFile f = GraphFile::parse_text("vertex z\n# note\nedge e1 x y 3/2 # trailing\nedge e2 y z\n");
  EXPECT_EQ(f.graph().vertex_count(), 3u);
  EXPECT_EQ(f.graph().edge(f.edge("e1")).length, make_rational(3, 2));
  EXPECT_EQ(f.graph().edge(f.edge("e2")).length, 1);
  EXPECT_EQ(f.to_text(), "vertex z\nvertex x\nvertex y\nedge e1 x y 3/2\nedge e2 y z 1\n");
  EXPECT_THROW(f.vertex("q"), UnknownVertexError);
  EXPECT_THROW(f.edge("q"), UnknownEdgeError);
}

TEST(GraphFileFormat, RejectsMalformedInput) {
  auto line_of = [](const std::string& text) {
    try {
      GraphFile::parse_text(text);
    } catch (const GraphFileError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("edge a x y\nedge a y z\n"), 2u);
  EXPECT_EQ(line_of("edge a x y 0\n"), 1u);
  EXPECT_EQ(line_of("edge a x y -2\n"), 1u);
  EXPECT_EQ(line_of("edge a x y 1/0\n"), 1u);
  EXPECT_EQ(line_of("edge a x y z\n"), 1u);
  EXPECT_EQ(line_of("\nnode x\n"), 2u);
  EXPECT_EQ(line_of("edge a x\n"), 1u);
  EXPECT_THROW(GraphFile::load("/nonexistent/graph.g"), GraphFileError);
}

TEST_F(CliTest, Resistance) {
  const CliResult r = run({"resistance", triangle_, "s", "t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2/3\n0.666666666667\n");
  EXPECT_EQ(run({"resistance", triangle_, "s", "s"}).out, "0/1\n0\n");
  EXPECT_EQ(run({"resistance", k4_, "a", "c"}).out, "1/2\n0.5\n");
}

TEST_F(CliTest, Voltage) {
  EXPECT_EQ(run({"voltage", k4_, "a", "b", "c"}).out, "1/4\n0.25\n");
}

TEST_F(CliTest, SpanningTreesAllMethods) {
  const std::string k5 = write(
      "k5.g", "edge 1 a b\nedge 2 a c\nedge 3 a d\nedge 4 a e\nedge 5 b c\nedge 6 b d\nedge 7 b e\n"
              "edge 8 c d\nedge 9 c e\nedge 10 d e\n");
  for (const std::string method : {"matrix", "dc", "enum", "vertex-del"}) {
    const CliResult r = run({"spantree", k5, "--method", method});
    EXPECT_EQ(r.code, 0) << method;
    EXPECT_EQ(r.out, "125\n") << method;
  }
  EXPECT_EQ(run({"spantree", k5, "--method", "guess"}).code, 2);
}

TEST_F(CliTest, Identify) {
  const CliResult r = run({"identify", triangle_, "s,w"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "# spanning trees: 2\nvertex t\nvertex s+w\nedge a s+w t 1\nedge b t s+w 1\nedge c s+w s+w 1\n");
  EXPECT_EQ(run({"identify", triangle_, "s,t", "t,w"}).code, 5);
}

TEST_F(CliTest, EulerForms) {
  const CliResult first = run({"euler", triangle_, "s", "t", "--form", "I"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, "a non-bridge 4/9\nb non-bridge 1/9\nc non-bridge 1/9\ntotal 2/3\n");
  EXPECT_EQ(run({"euler", triangle_, "s", "t", "--form", "II"}).out, first.out);
}

TEST_F(CliTest, Derivative) {
  const CliResult r = run({"derivative", triangle_, "a", "s", "t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "4/9");
  EXPECT_NE(r.out.find("finite-difference 0.444444"), std::string::npos);
  EXPECT_EQ(run({"derivative", triangle_, "zz", "s", "t"}).code, 4);
}

TEST_F(CliTest, Reduce) {
  const CliResult r = run({"reduce", triangle_, "s", "t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "2/3\nseries consumed=b,c produced=e3(t,s,2/1) removed=w\n"
            "parallel consumed=a,e3 produced=e4(s,t,2/3)\n");
  EXPECT_EQ(run({"reduce", triangle_, "s", "s"}).code, 5);
}

TEST_F(CliTest, ClosedForm) {
  EXPECT_EQ(run({"closed-form", "fan", "5", "1"}).out, "55\n");
  EXPECT_EQ(run({"closed-form", "wheel", "5"}).out, "121\n");
  EXPECT_EQ(run({"closed-form", "complete", "5"}).out, "125\n");
  EXPECT_EQ(run({"closed-form", "petersen", "5"}).code, 2);
  EXPECT_EQ(run({"closed-form", "cycle", "0"}).code, 5);
}

TEST_F(CliTest, Verify) {
  const CliResult ok = run({"verify", "--seed", "3", "--count", "4", "--tags", "shorting,magic"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("shorting\t"), std::string::npos);
  EXPECT_NE(ok.err.find("0 failed"), std::string::npos);
  EXPECT_EQ(ok.out, run({"verify", "--seed", "3", "--count", "4", "--tags", "shorting,magic"}).out);
  EXPECT_EQ(run({"verify", "--tags", "nonsense"}).code, 2);
}

TEST_F(CliTest, ExitCodes) {
  const std::string bad = write("bad.g", "edge a x y\nedge a y z\n");
  const std::string split = write("split.g", "edge a x y\nedge b u v\n");
  EXPECT_EQ(run({"resistance", bad, "x", "y"}).code, 2);
  EXPECT_EQ(run({"resistance", split, "x", "u"}).code, 3);
  EXPECT_EQ(run({"resistance", triangle_, "s", "nowhere"}).code, 4);
  EXPECT_EQ(run({"resistance", triangle_}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const CliResult missing = run({"resistance", (dir_ / "missing.g").string(), "a", "b"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
}
