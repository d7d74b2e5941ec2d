#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "tda/io.hpp"
#include "tda/version.hpp"

namespace tda {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("tda_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "tda");
    out_.str({});
    err_.str({});
    return cli::run(args, out_, err_);
  }

  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  std::string write_points(const std::string& name, const PointCloud& p) const {
    std::ofstream f(dir_ / name);
    io::write_points(f, p);
    return path(name);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, VersionAndHelp) {
  EXPECT_EQ(run({"--version"}), 0);
  EXPECT_EQ(out_.str(), std::string("tda ") + kVersion + " (diagram/landscape format 1)\n");
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_NE(out_.str().find("rips-persistence"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}), cli::kExitInput);
  EXPECT_EQ(run({"no-such-command"}), cli::kExitInput);
  EXPECT_EQ(run({"rips-persistence"}), cli::kExitInput);
  EXPECT_EQ(err_.str().rfind("error: usage:", 0), 0u);
}

TEST_F(Cli, InputErrorsExitOneWithSingleLine) {
  write("bad.csv", "1,2\n3\n");
  EXPECT_EQ(run({"rips-persistence", path("bad.csv")}), cli::kExitInput);
  EXPECT_EQ(err_.str().rfind("error: input:", 0), 0u);
  const std::string message = err_.str();
  EXPECT_EQ(std::count(message.begin(), message.end(), '\n'), 1);
  EXPECT_EQ(run({"rips-persistence", path("absent.csv")}), cli::kExitInput);
  write("sq.csv", "0,0\n1,0\n");
  EXPECT_EQ(run({"mapper", path("sq.csv"), "--gain", "1.5"}), cli::kExitInput);
  EXPECT_EQ(run({"band-bootstrap", path("sq.csv"), "--seed", "1", "--replicates", "5"}), cli::kExitInput);
}

TEST_F(Cli, RipsPersistenceUnitSquare) {
  write("sq.csv", "x,y\n0,0\n1,0\n1,1\n0,1\n");
  ASSERT_EQ(run({"rips-persistence", path("sq.csv"), "--max-edge", "1.5", "--max-dim", "2", "-o", path("dgm.csv"),
                 "--raw-pairs", path("raw.csv")}),
            0)
      << err_.str();
  const auto d = io::read_diagram(fs::path(path("dgm.csv")));
  const auto h1 = d.in_dim(1);
  ASSERT_EQ(h1.size(), 1u);
  EXPECT_EQ(h1[0].birth, 1.0);
  EXPECT_EQ(h1[0].death, std::sqrt(2.0));
  EXPECT_TRUE(fs::exists(path("raw.csv")));
}

TEST_F(Cli, RipsOnMatrixAndStdout) {
  write("m.txt", "0 1 1\n1 0 1\n1 1 0\n");
  ASSERT_EQ(run({"rips-persistence", path("m.txt"), "--matrix", "--max-edge", "2"}), 0) << err_.str();
  EXPECT_EQ(out_.str(), "dim,birth,death\n0,0,1\n0,0,1\n0,0,inf\n");
}

TEST_F(Cli, ClampedDimensionIsAWarning) {
  write("two.csv", "0\n1\n");
  ASSERT_EQ(run({"rips-persistence", path("two.csv"), "--max-edge", "2", "--max-dim", "3"}), 0);
  EXPECT_EQ(err_.str().rfind("warning: ", 0), 0u);
}

TEST_F(Cli, CechPersistence) {
  write("tri.csv", "0,0\n1,0\n0.5,0.8660254037844386\n");
  ASSERT_EQ(run({"cech-persistence", path("tri.csv"), "--max-radius", "1", "--max-dim", "2"}), 0) << err_.str();
  std::istringstream s(out_.str());
  const auto d = io::read_diagram(s);
  const auto h1 = d.in_dim(1);
  ASSERT_EQ(h1.size(), 1u);
  EXPECT_NEAR(h1[0].birth, 0.5, 1e-12);
  EXPECT_NEAR(h1[0].death, 1 / std::sqrt(3.0), 1e-9);
}

TEST_F(Cli, FunctionPersistenceOnPathAndComplex) {
  write("f.txt", "1.1\n3.2\n0.3\n2.6\n1.7\n3.6\n4.0\n");
  ASSERT_EQ(run({"function-persistence", path("f.txt")}), 0) << err_.str();
  EXPECT_EQ(out_.str(), "dim,birth,death\n0,0.3,inf\n0,1.1,3.2\n0,1.7,2.6\n");
  write("g.txt", "0\n0\n0\n1\n");
  write("cx.txt", "0 1 2\n0 3\n");
  ASSERT_EQ(run({"function-persistence", path("g.txt"), "--complex", path("cx.txt")}), 0) << err_.str();
  EXPECT_EQ(out_.str(), "dim,birth,death\n0,0,inf\n");  // vertex 3 and edge 03 enter together
  write("filt.txt", "0 0\n0 1\n0 2\n1 0 1\n1 1 2\n1 0 2\n2 0 1 2\n");
  ASSERT_EQ(run({"function-persistence", "--filtered", path("filt.txt"), "--max-hom-dim", "1"}), 0) << err_.str();
  EXPECT_EQ(out_.str(), "dim,birth,death\n0,0,1\n0,0,1\n0,0,inf\n1,1,2\n");
}

TEST_F(Cli, Dtm) {
  write("s.csv", "0\n2\n");
  write("q.csv", "1\n0\n");
  ASSERT_EQ(run({"dtm", path("s.csv"), "--mass", "1", "--queries", path("q.csv")}), 0) << err_.str();
  EXPECT_EQ(out_.str(), "1\n1.4142135623730951\n");
  EXPECT_EQ(run({"dtm", path("s.csv"), "--mass", "0"}), cli::kExitInput);
}

TEST_F(Cli, DiagramDistances) {
  write("a.csv", "dim,birth,death\n0,0,2\n1,0,1\n");
  write("b.csv", "dim,birth,death\n0,0,3\n");
  ASSERT_EQ(run({"bottleneck", path("a.csv"), path("b.csv"), "--dim", "0"}), 0);
  EXPECT_EQ(out_.str(), "1\n");
  ASSERT_EQ(run({"bottleneck", path("a.csv"), path("b.csv")}), 0);
  EXPECT_EQ(out_.str(), "1\n");
  ASSERT_EQ(run({"wasserstein", path("a.csv"), path("b.csv"), "-p", "1"}), 0);
  EXPECT_EQ(out_.str(), "1.5\n");
}

TEST_F(Cli, DistanceMatrixIsSymmetric) {
  fs::create_directories(dir_ / "dgms");
  Rng rng(5);
  for (int i = 0; i < 14; ++i) {
    std::ostringstream name;
    name << "dgms/mbp" << (i < 10 ? "0" : "") << i << ".csv";
    std::ostringstream text;
    text << "dim,birth,death\n";
    for (int k = 0; k < 4; ++k) {
      const double b = rng.uniform01();
      text << "1," << b << ',' << b + rng.uniform01() << '\n';
    }
    write(name.str(), text.str());
  }
  ASSERT_EQ(run({"distance-matrix", path("dgms"), "--metric", "bottleneck", "--dim", "1", "-o", path("M.csv"),
                 "--names", path("names.txt")}),
            0)
      << err_.str();
  const auto m = io::read_matrix(fs::path(path("M.csv")));
  ASSERT_EQ(m.size(), 14u);
  for (std::size_t i = 0; i < 14; ++i) {
    EXPECT_EQ(m(i, i), 0.0);
    for (std::size_t j = 0; j < 14; ++j) EXPECT_EQ(m(i, j), m(j, i));
  }
  std::ifstream names(path("names.txt"));
  std::string first;
  std::getline(names, first);
  EXPECT_EQ(first, "mbp00.csv");
}

TEST_F(Cli, LandscapeAndPlot) {
  write("d.csv", "dim,birth,death\n1,0,4\n1,2,6\n");
  ASSERT_EQ(run({"landscape", path("d.csv"), "--dim", "1", "--t-max", "6", "--grid", "61", "--levels", "2", "-o",
                 path("l.csv")}),
            0)
      << err_.str();
  const auto l = io::read_landscape(fs::path(path("l.csv")));
  EXPECT_EQ(l.levels(), 2u);
  EXPECT_DOUBLE_EQ(l(1, 30), 1.0);
  EXPECT_DOUBLE_EQ(l(2, 30), 1.0);
  for (const char* kind : {"diagram", "barcode"}) {
    ASSERT_EQ(run({"plot", path("d.csv"), "--kind", kind, "-o", path("p.svg")}), 0) << err_.str();
    EXPECT_EQ(io::read_text(path("p.svg")).rfind("<svg", 0), 0u);
  }
  ASSERT_EQ(run({"plot", path("l.csv"), "--kind", "landscape"}), 0) << err_.str();
  EXPECT_EQ(out_.str().rfind("<svg", 0), 0u);
  EXPECT_EQ(run({"plot", path("d.csv"), "--kind", "pie"}), cli::kExitInput);
}

TEST_F(Cli, LandscapeFeaturesHave6000Columns) {
  write("d1.csv", "dim,birth,death\n0,0,inf\n0,0,0.3\n1,0.2,0.6\n");
  write("d2.csv", "dim,birth,death\n0,0,inf\n1,0.1,0.9\n");
  ASSERT_EQ(run({"landscape-features", path("d1.csv"), path("d2.csv"), "--dims", "0,1", "--levels", "3", "--grid",
                 "1000", "--t-max", "1", "-o", path("f.csv")}),
            0)
      << err_.str();
  std::ifstream f(path("f.csv"));
  std::string line;
  std::vector<std::size_t> widths;
  while (std::getline(f, line)) widths.push_back(static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1);
  EXPECT_EQ(widths, (std::vector<std::size_t>{6000, 6000, 6000}));
}

TEST_F(Cli, AverageLandscapeIsDeterministic) {
  const auto pts = write_points("c.csv", testing::uniform_circle(80, 3));
  const std::vector<std::string> args{"average-landscape", pts, "-m", "20", "--count", "10", "--scale", "2",
                                      "--seed", "7", "--grid", "101", "--t-max", "2"};
  auto with_out = [&](const std::string& o) {
    auto a = args;
    a.push_back("-o");
    a.push_back(path(o));
    return a;
  };
  ASSERT_EQ(run(with_out("a.csv")), 0) << err_.str();
  ASSERT_EQ(run(with_out("b.csv")), 0);
  EXPECT_EQ(io::read_text(path("a.csv")), io::read_text(path("b.csv")));
  EXPECT_EQ(run({"average-landscape", pts, "-m", "20"}), cli::kExitInput);  // seed is required
}

TEST_F(Cli, MapperJsonAndDot) {
  const auto pts = write_points("c.csv", testing::even_circle(100));
  ASSERT_EQ(run({"mapper", pts, "--filter", "height", "--intervals", "4", "--gain", "0.3", "--clustering",
                 "epsilon:0.4"}),
            0)
      << err_.str();
  const std::string json = out_.str();
  EXPECT_NE(json.find("\"nodes\""), std::string::npos);
  ASSERT_EQ(run({"mapper", pts}), 0);
  EXPECT_EQ(out_.str(), json);  // those are the defaults
  ASSERT_EQ(run({"mapper", pts, "--format", "dot"}), 0);
  EXPECT_EQ(out_.str().rfind("graph mapper {", 0), 0u);
  ASSERT_EQ(run({"mapper", pts, "--gain", "0.9"}), 0);
  EXPECT_NE(err_.str().find("warning: nerve may contain higher simplices"), std::string::npos);
  EXPECT_EQ(run({"mapper", pts, "--filter", "banana"}), cli::kExitInput);
}

TEST_F(Cli, BandsAreByteIdenticalAcrossRuns) {
  const auto pts = write_points("c.csv", testing::uniform_circle(60, 3, 0.02));
  write("d.csv", "dim,birth,death\n1,0,10\n1,0.2,0.25\n");
  const std::vector<std::vector<std::string>> commands{
      {"band-subsample", pts, "-b", "15", "--replicates", "50", "--seed", "3", "--diagram", path("d.csv")},
      {"band-bootstrap", pts, "--scale", "2", "--replicates", "20", "--seed", "3"},
  };
  for (const auto& c : commands) {
    ASSERT_EQ(run(c), 0) << err_.str();
    const std::string first = out_.str();
    ASSERT_EQ(run(c), 0);
    EXPECT_EQ(out_.str(), first);
    EXPECT_NE(first.find("\"eta\""), std::string::npos);
  }
  ASSERT_EQ(run(commands[0]), 0);
  EXPECT_NE(out_.str().find("significant dim-1 points: 1"), std::string::npos) << out_.str();
}

TEST_F(Cli, BandLandscapeAndOverlay) {
  write("l1.csv", "0,0.5,1\n0,0.5,0\n");
  write("l2.csv", "0,0.5,1\n0,0.25,0\n");
  write("l3.csv", "0,0.5,1\n0,0.4,0\n");
  ASSERT_EQ(run({"band-landscape", path("l1.csv"), path("l2.csv"), path("l3.csv"), "--seed", "1", "-o",
                 path("band.json")}),
            0)
      << err_.str();
  EXPECT_NE(io::read_text(path("band.json")).find("landscape-band"), std::string::npos);
  write("d.csv", "dim,birth,death\n1,0.1,1.7\n");
  ASSERT_EQ(run({"band-subsample", write_points("c.csv", testing::even_circle(30)), "-b", "10", "--seed", "1", "-o",
                 path("dband.json")}),
            0);
  ASSERT_EQ(run({"plot", path("d.csv"), "--band", path("dband.json")}), 0) << err_.str();
  EXPECT_NE(out_.str().find("polygon"), std::string::npos);
}

TEST_F(Cli, ConfigFileSuppliesFlagsAndCommandLineWins) {
  write("sq.csv", "0,0\n1,0\n1,1\n0,1\n");
  write("cfg.toml", "[rips-persistence]\nmax-edge = 1.2\nmax-dim = 2\n");
  ASSERT_EQ(run({"--config", path("cfg.toml"), "rips-persistence", path("sq.csv")}), 0) << err_.str();
  EXPECT_NE(out_.str().find("1,1,inf"), std::string::npos);  // 1.2 < sqrt(2): the loop never dies
  ASSERT_EQ(run({"--config", path("cfg.toml"), "rips-persistence", path("sq.csv"), "--max-edge", "2"}), 0);
  EXPECT_NE(out_.str().find("1,1,1.4142135623730951"), std::string::npos) << out_.str();
}

}  // namespace
}  // namespace tda
