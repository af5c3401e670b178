#include <sys/wait.h>
#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "qwalk/config_io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qwalk_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string read(const std::string& name) const { return qwalk::io::read_file((dir_ / name).string()); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  RunResult run(const std::string& args) const {
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string(QWALK_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = qwalk::io::read_file(out.string());
    r.err = qwalk::io::read_file(err.string());
    return r;
  }

  fs::path dir_;
};

std::string hadamard_cycle_graph(int n) {
  std::ostringstream s;
  s << R"({"edges": [)";
  for (int j = 0; j < n; ++j) s << (j ? ", " : "") << "[" << j << ", " << (j + 1) % n << "]";
  s << R"(], "ports": {)";
  for (int j = 0; j < n; ++j) s << (j ? ", " : "") << "\"" << j << "\": [" << (j + n - 1) % n << ", " << (j + 1) % n << "]";
  s << R"(}, "mu": {)";
  for (int j = 0; j < n; ++j) s << (j ? ", " : "") << "\"" << j << R"(": {"1": 1, "2": 2})";
  s << "}}";
  return s.str();
}

const char* kTriangle = R"({"edges": [[0, 1], [1, 2], [2, 0]]})";
const char* kGroverCoin = R"({"coin": {"default": "grover"}})";
const char* kGroverGamma = R"({"gamma": {"default": "grover"}})";

/// step -> label -> probability, from CSV output.
std::map<int, std::map<std::string, double>> parse_csv(const std::string& text) {
  std::map<int, std::map<std::string, double>> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "step,label,probability");
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a + 1);
    double p = 0.0;
    std::from_chars(line.data() + b + 1, line.data() + line.size(), p);
    rows[std::stoi(line.substr(0, a))][line.substr(a + 1, b - a - 1)] = p;
  }
  return rows;
}

double json_number(const std::string& text, const std::string& key) {
  const auto at = text.find("\"" + key + "\":");
  EXPECT_NE(at, std::string::npos) << key;
  return std::stod(text.substr(at + key.size() + 3));
}

TEST_F(CliTest, HadamardCycleThreeSteps) {
  const auto graph = write("c64.json", hadamard_cycle_graph(64));
  const auto coin = write("coin.json", R"({"coin": {"default": "hadamard"}})");
  const auto init = write("init.json", R"([{"node": 0, "port": 2, "amp": [1, 0]}])");
  const auto r = run("simulate --graph " + graph + " --model coin --unitary " + coin + " --init " + init +
                     " --steps 3 --format csv");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(rows.at(3).at("n61"), 0.125, 1e-12);
  EXPECT_NEAR(rows.at(3).at("n63"), 0.125, 1e-12);
  EXPECT_NEAR(rows.at(3).at("n1"), 0.625, 1e-12);
  EXPECT_NEAR(rows.at(3).at("n3"), 0.125, 1e-12);
  double total = 0.0;
  for (const auto& [label, p] : rows.at(3)) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST_F(CliTest, ZeroStepsIsTheInitialState) {
  const auto graph = write("c64.json", hadamard_cycle_graph(64));
  const auto coin = write("coin.json", R"({"coin": {"default": "hadamard"}})");
  const auto init = write("init.json", R"([{"node": 0, "port": 2, "amp": [1, 0]}])");
  const auto r = run("simulate --graph " + graph + " --unitary " + coin + " --init " + init + " --steps 0");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows.at(0).at("n0"), 1.0);
  for (const auto& [label, p] : rows.at(0))
    if (label != "n0") EXPECT_EQ(p, 0.0);
}

TEST_F(CliTest, OutputIsDeterministic) {
  const auto graph = write("c64.json", hadamard_cycle_graph(64));
  const auto coin = write("coin.json", R"({"coin": {"default": "hadamard"}})");
  const auto init = write("init.json", R"([{"node": 0, "port": 2, "amp": [1, 0]}])");
  for (const char* format : {"csv", "json"}) {
    const std::string args = "simulate --graph " + graph + " --unitary " + coin + " --init " + init +
                             " --steps 40 --format " + format + " --out ";
    ASSERT_EQ(run(args + path("a.out")).status, 0);
    ASSERT_EQ(run(args + path("b.out")).status, 0);
    EXPECT_EQ(read("a.out"), read("b.out"));
    EXPECT_FALSE(read("a.out").empty());
  }
}

TEST_F(CliTest, NonUnitaryCoinExitsThree) {
  const auto graph = write("tri.json", kTriangle);
  const auto coin = write("coin.json",
                          R"({"coin": {"default": "grover", "overrides": {"1": [[[1, 0], [0, 0]], [[0, 0], [1.01, 0]]]}}})");
  const auto init = write("init.json", R"([{"node": 0, "port": 1, "amp": [1, 0]}])");
  const auto r = run("simulate --graph " + graph + " --unitary " + coin + " --init " + init + " --steps 2");
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.err.find("UnitarityViolation"), std::string::npos) << r.err;
}

TEST_F(CliTest, WrongSizeCoinExitsFour) {
  const auto graph = write("tri.json", kTriangle);
  const auto coin = write("coin.json", R"({"coin": {"default": "grover", "overrides": {"1": [[[1, 0]]]}}})");
  const auto init = write("init.json", R"([{"node": 0, "port": 1, "amp": [1, 0]}])");
  EXPECT_EQ(run("simulate --graph " + graph + " --unitary " + coin + " --init " + init + " --steps 2").status, 4);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  const auto graph = write("tri.json", kTriangle);
  const auto coin = write("coin.json", kGroverCoin);
  const auto init = write("init.json", R"([{"node": 0, "port": 1, "amp": [1, 0]}])");
  EXPECT_EQ(run("simulate --graph " + path("missing.json") + " --unitary " + coin + " --init " + init +
                " --steps 1")
                .status,
            2);
  const auto broken = write("broken.json", "{\"edges\": [[0, 1]");
  EXPECT_EQ(run("simulate --graph " + broken + " --unitary " + coin + " --init " + init + " --steps 1").status, 2);
  const auto loop = write("loop.json", R"({"edges": [[0, 1], [1, 1]]})");
  const auto r = run("simulate --graph " + loop + " --unitary " + coin + " --init " + init + " --steps 1");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("SelfLoop"), std::string::npos) << r.err;
  const auto mu = write("mu.json", R"({"mu": {"1": {"1": 2}}})");
  EXPECT_EQ(run("simulate --graph " + graph + " --mu " + mu + " --unitary " + coin + " --init " + init +
                " --steps 1")
                .status,
            2);
  const auto gamma = write("gamma.json", kGroverGamma);
  EXPECT_EQ(run("simulate --graph " + graph + " --unitary " + gamma + " --init " + init + " --steps 1").status, 2);
  const auto unnormalized = write("init2.json", R"([{"node": 0, "port": 1, "amp": [2, 0]}])");
  EXPECT_EQ(run("simulate --graph " + graph + " --unitary " + coin + " --init " + unnormalized + " --steps 1").status,
            3);
}

TEST_F(CliTest, EquivCheckTriangle) {
  const auto graph = write("tri.json", kTriangle);
  // a different generic unitary at every node
  const auto coin = write("coin.json", R"({"coin": {"default": "dft", "overrides": {
      "0": [[[0.6, 0], [0, 0.8]], [[0, 0.8], [0.6, 0]]],
      "1": [[[0, 0.28], [0.96, 0]], [[-0.96, 0], [0, -0.28]]]}}})");
  const auto mu = write("mu.json", R"({"mu": {"1": {"1": 2}, "2": {"1": 1}}})");
  for (const std::string& extra : std::vector<std::string>{"", " --mu " + mu}) {
    const auto r = run("equiv-check --graph " + graph + extra + " --coin " + coin + " --report " + path("r.json"));
    EXPECT_EQ(r.status, 0) << r.err;
    const auto report = read("r.json");
    EXPECT_NE(report.find("\"passed\": true"), std::string::npos) << report;
    EXPECT_LE(json_number(report, "dense_deviation"), 1e-12);
    EXPECT_LE(json_number(report, "sparse_deviation"), 1e-12);
  }
}

TEST_F(CliTest, EquivCheckSingleEdgeIsExact) {
  const auto graph = write("edge.json", R"({"edges": [[0, 1]]})");
  const auto coin = write("coin.json", R"({"coin": {"default": "dft"}})");
  ASSERT_EQ(run("equiv-check --graph " + graph + " --coin " + coin + " --report " + path("r.json")).status, 0);
  EXPECT_EQ(json_number(read("r.json"), "dense_deviation"), 0.0);
}

TEST_F(CliTest, EquivCheckWithMatchingGamma) {
  // flip-flop shift on shared labels: Γ = C
  const auto graph = write("tri.json", kTriangle);
  const auto coin = write("coin.json", kGroverCoin);
  const auto gamma = write("gamma.json", kGroverGamma);
  const auto r = run("equiv-check --graph " + graph + " --coin " + coin + " --gamma " + gamma + " --report " +
                     path("r.json"));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_LT(json_number(read("r.json"), "gamma_unitarity_deviation"), 1e-12);
}

TEST_F(CliTest, EquivCheckFlagsCorruptedGamma) {
  const auto graph = write("tri.json", kTriangle);
  const auto coin = write("coin.json", kGroverCoin);
  // Grover on two ports is the swap; one entry nudged by 1e-3
  const auto gamma = write("gamma.json",
                           R"({"gamma": {"default": "grover", "overrides": {"0": [[[0.001, 0], [1, 0]], [[1, 0], [0, 0]]]}}})");
  const auto r = run("equiv-check --graph " + graph + " --coin " + coin + " --gamma " + gamma + " --report " +
                     path("r.json"));
  EXPECT_NE(r.status, 0);
  const auto report = read("r.json");
  EXPECT_NE(report.find("\"passed\": false"), std::string::npos) << report;
  const double dev = json_number(report, "dense_deviation");
  EXPECT_GT(dev, 5e-4);
  EXPECT_LT(dev, 2e-3);
}

TEST_F(CliTest, CrossProbMatchesOtherModel) {
  const auto graph = write("k4.json", R"({"edges": [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]})");
  const auto coin = write("coin.json", R"({"coin": {"default": "dft"}})");
  const auto gamma = write("gamma.json", R"({"gamma": {"default": "dft"}})");
  const auto init = write("init.json", R"([{"node": 0, "port": 1, "amp": [0.6, 0]}, {"node": 2, "port": 3, "amp": [0, 0.8]}])");
  const std::string common = " --graph " + graph + " --init " + init + " --steps 25";

  ASSERT_EQ(run("cross-prob" + common + " --model coin --unitary " + coin + " --native " + path("nodes.csv") +
                " --cross " + path("edges_from_coin.csv"))
                .status,
            0);
  ASSERT_EQ(run("simulate" + common + " --model scattering --unitary " + gamma + " --out " + path("edges.csv")).status,
            0);
  ASSERT_EQ(run("cross-prob" + common + " --model scattering --unitary " + gamma + " --native " +
                path("edges_native.csv") + " --cross " + path("nodes_from_scattering.csv"))
                .status,
            0);

  const auto compare = [](const auto& a, const auto& b) {
    ASSERT_EQ(a.size(), b.size());
    for (const auto& [step, row] : a) {
      ASSERT_EQ(row.size(), b.at(step).size());
      for (const auto& [label, p] : row) EXPECT_NEAR(b.at(step).at(label), p, 1e-12) << step << " " << label;
    }
  };
  compare(parse_csv(read("edges_from_coin.csv")), parse_csv(read("edges.csv")));
  compare(parse_csv(read("nodes_from_scattering.csv")), parse_csv(read("nodes.csv")));
  EXPECT_EQ(read("edges_native.csv"), read("edges.csv"));
}

TEST_F(CliTest, PhiDefinesTheScatteringLabeling) {
  const auto graph = write("tri.json", kTriangle);
  const auto coin = write("coin.json", R"({"coin": {"default": "dft"}})");
  const auto phi = write("phi.json", R"({"phi": {"0": {"1": 2, "2": 1}, "2": {"1": 2, "2": 1}}})");
  const auto r = run("equiv-check --graph " + graph + " --phi " + phi + " --coin " + coin + " --report " +
                     path("r.json"));
  EXPECT_EQ(r.status, 0) << r.err;
  const auto v = run("validate-graph --graph " + graph + " --phi " + phi);
  EXPECT_EQ(v.status, 0) << v.err;
  EXPECT_NE(v.out.find("\"same_labelings\": false"), std::string::npos) << v.out;
}

TEST_F(CliTest, ValidateGraph) {
  const auto graph = write("c8.json", hadamard_cycle_graph(8));
  const auto r = run("validate-graph --graph " + graph);
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("\"regular_degree\": 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"violations\": []"), std::string::npos) << r.out;
}

TEST_F(CliTest, HumanFormatAndJson) {
  const auto graph = write("tri.json", kTriangle);
  const auto coin = write("coin.json", kGroverCoin);
  const auto init = write("init.json", R"({"initial": [{"node": 0, "port": 1, "amp": [1, 0]}]})");
  const auto human = run("simulate --graph " + graph + " --unitary " + coin + " --init " + init +
                         " --steps 1 --format human");
  ASSERT_EQ(human.status, 0) << human.err;
  EXPECT_NE(human.out.find("n0"), std::string::npos);
  const auto json = run("simulate --graph " + graph + " --unitary " + coin + " --init " + init +
                        " --steps 1 --format json");
  ASSERT_EQ(json.status, 0);
  EXPECT_EQ(json.out.front(), '[');
}

}  // namespace
