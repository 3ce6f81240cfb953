#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lpdist/bench.hpp"
#include "lpdist/generate.hpp"
#include "lpdist/io.hpp"

namespace fs = std::filesystem;
using namespace lpdist;

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(LPDIST_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<double> read_csv_values(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> values;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  return values;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lpdist_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("int string files round trip") {
  TempDir dir;
  testutil::Rng rng(1);
  auto s = testutil::random_string(rng, 50, 64);
  write_int_string(dir.file("s.txt"), s);
  auto back = read_int_string(dir.file("s.txt"));
  CHECK(back.value_bound == 64);
  CHECK((back.symbols == s.symbols).all());
}

TEST_CASE("gen is deterministic and respects the range contract") {
  TempDir dir;
  REQUIRE(run_cli("gen --n 8 --m 2 --U 4 --seed 1 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  auto text = read_int_string(dir.file("t.txt"));
  auto pattern = read_int_string(dir.file("p.txt"));
  CHECK(text.size() == 8);
  CHECK(pattern.size() == 2);
  CHECK(text.value_bound == 4);
  CHECK(text.symbols.maxCoeff() < 4);

  REQUIRE(run_cli("gen --n 8 --m 2 --U 4 --seed 1 --out-text " + dir.file("t2.txt") +
                  " --out-pattern " + dir.file("p2.txt")) == 0);
  CHECK(slurp(dir.file("t.txt")) == slurp(dir.file("t2.txt")));
  CHECK(slurp(dir.file("p.txt")) == slurp(dir.file("p2.txt")));
}

TEST_CASE("adversarial generator places symbols near rounding boundaries") {
  const std::uint64_t bound = 1024;
  const int u = 10;
  auto s = generate_string(4000, bound, InputDistribution::AdversarialNearBoundary, 3);
  int near = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    bool hit = false;
    for (int b = u / 2; b < u && !hit; ++b) {
      const std::uint64_t step = 1ull << b;
      const std::uint64_t rem = s.symbols[i] % step;
      hit = rem <= 1 || rem >= step - 1;
    }
    near += hit;
  }
  CHECK(near >= 2000);  // >= 50% of symbols
}

TEST_CASE("dist matches the hand-computed example through the file interface") {
  TempDir dir;
  {
    SymbolArray t(3);
    t << 5, 0, 2;
    SymbolArray p(2);
    p << 1, 2;
    write_int_string(dir.file("t.txt"), IntString(t, 8));
    write_int_string(dir.file("p.txt"), IntString(p, 8));
  }
  REQUIRE(run_cli("dist --text " + dir.file("t.txt") + " --pattern " + dir.file("p.txt") +
                  " --algo exact-brute --p 2 --format csv --out " + dir.file("d.csv")) == 0);
  auto values = read_csv_values(dir.file("d.csv"));
  REQUIRE(values.size() == 2);
  CHECK(values[0] == doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));
  CHECK(values[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dist with p=0 routes to the hamming estimator") {
  TempDir dir;
  REQUIRE(run_cli("gen --n 64 --m 4 --U 16 --seed 5 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  REQUIRE(run_cli("dist --text " + dir.file("t.txt") + " --pattern " + dir.file("p.txt") +
                  " --algo approx-det --p 0 --eps 0.25 --seed 3 --format csv --out " +
                  dir.file("d.csv")) == 0);
  for (double v : read_csv_values(dir.file("d.csv"))) {
    CHECK(v >= 0.0);
    CHECK(v <= 4.0);
    CHECK(v == std::floor(v));
  }
}

TEST_CASE("verify exit codes") {
  TempDir dir;
  REQUIRE(run_cli("gen --n 128 --m 8 --U 256 --seed 9 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  const std::string base = "verify --text " + dir.file("t.txt") + " --pattern " +
                           dir.file("p.txt") + " --algo approx-det --p 1 --eps 0.25";
  CHECK(run_cli(base + " --out " + dir.file("report.json")) == 0);
  CHECK(slurp(dir.file("report.json")).find("\"pass\": true") != std::string::npos);
  // corrupted output must flip the exit code to 3
  CHECK(run_cli(base + " --inject-error 1e9") == 3);
  // identical strings: max error 0
  CHECK(run_cli("verify --text " + dir.file("t.txt") + " --pattern " + dir.file("t.txt") +
                " --algo approx-det --p 1 --eps 0.25") == 0);
}

TEST_CASE("usage and io error classes") {
  TempDir dir;
  CHECK(run_cli("dist --algo exact-brute") == 1);  // missing required flags
  CHECK(run_cli("dist --text missing.txt --pattern missing.txt --algo exact-brute --p 1") == 2);
  REQUIRE(run_cli("gen --n 16 --m 4 --U 16 --seed 2 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  // approx-det needs p >= 1
  CHECK(run_cli("dist --text " + dir.file("t.txt") + " --pattern " + dir.file("p.txt") +
                " --algo approx-det --p 0.5 --eps 0.25") == 1);
  // oversized verify instance is refused
  CHECK(run_cli("gen --n 200000 --m 1000 --U 16 --seed 2 --out-text " + dir.file("big_t.txt") +
                " --out-pattern " + dir.file("big_p.txt")) == 0);
  CHECK(run_cli("verify --text " + dir.file("big_t.txt") + " --pattern " + dir.file("big_p.txt") +
                " --algo approx-det --p 1 --eps 0.5") == 1);
}

TEST_CASE("dist runs are deterministic given the config") {
  TempDir dir;
  REQUIRE(run_cli("gen --n 200 --m 16 --U 1024 --seed 17 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  const std::string base = "dist --text " + dir.file("t.txt") + " --pattern " +
                           dir.file("p.txt") +
                           " --algo approx-rand --p 0.5 --eps 0.25 --seed 42 --reps 5"
                           " --format csv --out ";
  REQUIRE(run_cli(base + dir.file("a.csv")) == 0);
  REQUIRE(run_cli(base + dir.file("b.csv")) == 0);
  CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("b.csv")));

  // thread-count override must not change the values
  const std::string threaded =
      "env LPDIST_THREADS=4 " + std::string(LPDIST_CLI_PATH) + " " + base + dir.file("c.csv") +
      " >/dev/null 2>&1";
  REQUIRE(WEXITSTATUS(std::system(threaded.c_str())) == 0);
  CHECK(slurp(dir.file("a.csv")) == slurp(dir.file("c.csv")));
}

TEST_CASE("exact engines agree through the CLI") {
  TempDir dir;
  REQUIRE(run_cli("gen --n 128 --m 8 --U 16 --seed 33 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  const std::string tail = " --p 2 --format csv --out ";
  for (std::string algo : {"exact-brute", "exact-alphabet", "exact-even-p"})
    REQUIRE(run_cli("dist --text " + dir.file("t.txt") + " --pattern " + dir.file("p.txt") +
                    " --algo " + algo + tail + dir.file(algo + ".csv")) == 0);
  auto brute = read_csv_values(dir.file("exact-brute.csv"));
  auto alpha = read_csv_values(dir.file("exact-alphabet.csv"));
  auto even = read_csv_values(dir.file("exact-even-p.csv"));
  REQUIRE(brute.size() == alpha.size());
  REQUIRE(brute.size() == even.size());
  for (std::size_t i = 0; i < brute.size(); ++i) {
    CHECK(alpha[i] == doctest::Approx(brute[i]).epsilon(1e-9));
    CHECK(even[i] == doctest::Approx(brute[i]).epsilon(1e-9));
  }
}

TEST_CASE("verify replays a seeded randomized run") {
  TempDir dir;
  REQUIRE(run_cli("gen --n 128 --m 8 --U 256 --seed 77 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  REQUIRE(run_cli("verify --text " + dir.file("t.txt") + " --pattern " + dir.file("p.txt") +
                  " --algo approx-rand --p 0.5 --eps 0.25 --seed 7 --reps 9 --out " +
                  dir.file("report.json")) == 0);
  const std::string report = slurp(dir.file("report.json"));
  CHECK(report.find("\"seed\": 7") != std::string::npos);
  CHECK(report.find("\"rel_error\"") != std::string::npos);
}

TEST_CASE("bench reports the operation counts") {
  TempDir dir;
  REQUIRE(run_cli("bench --algo approx-det --p 1 --eps 0.5 --n-list 4096,8192 --m 64 --U 256"
                  " --route fft --eta 0.0625 --min-time 0.01 --out " +
                  dir.file("bench.csv")) == 0);
  std::ifstream in(dir.file("bench.csv"));
  std::string header, row1, row2;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row1));
  REQUIRE(std::getline(in, row2));
  CHECK(header.find("correlations,predicted_correlations") != std::string::npos);
  auto field = [](const std::string& row, int idx) {
    std::stringstream ss(row);
    std::string item;
    for (int i = 0; i <= idx; ++i) std::getline(ss, item, ',');
    return item;
  };
  // doubling n doubles the measured correlation count, and it matches the model
  CHECK(field(row1, 10) == field(row1, 11));
  CHECK(field(row2, 10) == field(row2, 11));
  CHECK(std::stoull(field(row2, 10)) == 2 * std::stoull(field(row1, 10)));
}

TEST_CASE("asymptotic sanity: brute force superlinear, approx-det near-linear") {
  // scale n and m together; brute-force work quadruples, the blocked
  // convolution pipeline roughly doubles
  AlgorithmConfig brute;
  brute.algorithm = "exact-brute";
  brute.p = 1.5;
  const auto b1 = bench_point(brute, 2048, 128, 256, 1, 0.1);
  const auto b2 = bench_point(brute, 4096, 256, 256, 1, 0.1);
  CHECK(b2.seconds / b1.seconds >= 2.0);

  AlgorithmConfig det;
  det.algorithm = "approx-det";
  det.p = 1.5;
  det.eps = 0.5;
  det.options.route = Route::Fft;
  det.options.eta_override = 1.0 / 16.0;
  const auto d1 = bench_point(det, 2048, 128, 256, 1, 0.1);
  const auto d2 = bench_point(det, 4096, 256, 256, 1, 0.1);
  CHECK(d2.seconds / d1.seconds <= 3.2);
}

TEST_CASE("json and csv outputs carry the same values") {
  TempDir dir;
  REQUIRE(run_cli("gen --n 64 --m 8 --U 64 --seed 21 --out-text " + dir.file("t.txt") +
                  " --out-pattern " + dir.file("p.txt")) == 0);
  const std::string base = "dist --text " + dir.file("t.txt") + " --pattern " + dir.file("p.txt") +
                           " --algo exact-brute --p 1.5";
  REQUIRE(run_cli(base + " --format csv --out " + dir.file("d.csv")) == 0);
  REQUIRE(run_cli(base + " --format json --out " + dir.file("d.json")) == 0);
  auto csv = read_csv_values(dir.file("d.csv"));

  auto text = read_int_string(dir.file("t.txt"));
  auto pattern = read_int_string(dir.file("p.txt"));
  auto oracle = brute_force_lp(text, pattern, 1.5);
  REQUIRE(csv.size() == static_cast<std::size_t>(oracle.values.size()));
  for (std::size_t i = 0; i < csv.size(); ++i)
    CHECK(csv[i] == doctest::Approx(std::pow(oracle.values[static_cast<Eigen::Index>(i)],
                                             1.0 / 1.5))
                        .epsilon(1e-12));

  const std::string json_text = slurp(dir.file("d.json"));
  CHECK(json_text.find("\"values\"") != std::string::npos);
  CHECK(json_text.find("\"correlations\"") != std::string::npos);
}

TEST_SUITE_END();
