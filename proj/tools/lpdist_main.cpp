#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lpdist/bench.hpp"
#include "lpdist/convolution.hpp"
#include "lpdist/generate.hpp"
#include "lpdist/io.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerifyFailed = 3;

struct CommonArgs {
  std::string text_path, pattern_path;
  lpdist::AlgorithmConfig config;
  std::string route = "auto";
  std::string format = "json";
  std::string out_path;
};

void add_algorithm_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--text", args.text_path, "text input file")->required();
  cmd->add_option("--pattern", args.pattern_path, "pattern input file")->required();
  cmd->add_option("--algo", args.config.algorithm,
                  "exact-brute|exact-alphabet|exact-even-p|approx-det|approx-rand|approx-hamming")
      ->required();
  cmd->add_option("--p", args.config.p, "lp exponent, 0 = Hamming");
  cmd->add_option("--eps", args.config.eps, "approximation parameter");
  cmd->add_option("--seed", args.config.seed, "seed for the randomized algorithms");
  cmd->add_option("--reps", args.config.repetitions, "median amplification count (odd)");
  cmd->add_option("--eta", args.config.options.eta_override,
                  "override the level-kernel precision eta (benchmarking aid)");
  cmd->add_option("--block", args.config.options.block_length,
                  "FFT block length override (rounded up to a power of two >= 2m)");
  cmd->add_option("--threads", args.config.options.threads,
                  "level-parallelism (default: LPDIST_THREADS env var or 1)");
  cmd->add_option("--route", args.route, "kernel-sum evaluation route: auto|fft|direct");
}

lpdist::Route parse_route(const std::string& name) {
  if (name == "auto") return lpdist::Route::Auto;
  if (name == "fft") return lpdist::Route::Fft;
  if (name == "direct") return lpdist::Route::Direct;
  throw std::invalid_argument("unknown route: " + name);
}

json params_json(const CommonArgs& args, const lpdist::IntString& text,
                 const lpdist::IntString& pattern) {
  return json{{"algorithm", args.config.algorithm},
              {"n", text.size()},
              {"m", pattern.size()},
              {"U", text.value_bound},
              {"p", args.config.p},
              {"eps", args.config.eps},
              {"seed", args.config.seed},
              {"reps", args.config.repetitions},
              {"eta_override", args.config.options.eta_override},
              {"block", args.config.options.block_length},
              {"route", args.route}};
}

const char* scale_name(lpdist::Scale scale) {
  switch (scale) {
    case lpdist::Scale::LpValues: return "lp";
    case lpdist::Scale::Counts: return "counts";
    default: return "power-sums";
  }
}

int cmd_gen(Eigen::Index n, Eigen::Index m, std::uint64_t bound, const std::string& dist,
            std::uint64_t seed, const std::string& text_path, const std::string& pattern_path) {
  const auto kind = dist == "adversarial-near-boundary"
                        ? lpdist::InputDistribution::AdversarialNearBoundary
                        : lpdist::InputDistribution::Uniform;
  if (dist != "uniform" && dist != "adversarial-near-boundary")
    throw std::invalid_argument("unknown distribution: " + dist);
  if (m > n) throw std::invalid_argument("pattern length must not exceed text length");
  lpdist::write_int_string(text_path, lpdist::generate_string(n, bound, kind, seed));
  lpdist::write_int_string(pattern_path, lpdist::generate_string(m, bound, kind, seed + 1));
  std::cout << "wrote n=" << n << " m=" << m << " U=" << bound << " dist=" << dist
            << " seed=" << seed << "\n";
  return kExitOk;
}

int cmd_dist(const CommonArgs& args) {
  const lpdist::IntString text = lpdist::read_int_string(args.text_path);
  const lpdist::IntString pattern = lpdist::read_int_string(args.pattern_path);
  auto config = args.config;
  config.options.route = parse_route(args.route);

  lpdist::reset_conv_counters();
  const auto t0 = std::chrono::steady_clock::now();
  const lpdist::DistanceArray dist = lpdist::run_algorithm(text, pattern, config);
  const auto t1 = std::chrono::steady_clock::now();
  const double wall = std::chrono::duration<double>(t1 - t0).count();
  const std::uint64_t correlations = lpdist::conv_counters().block_correlations.load();

  if (!args.out_path.empty()) {
    if (args.format == "csv") {
      lpdist::write_distance_csv(args.out_path, dist);
    } else {
      json doc;
      doc["params"] = params_json(args, text, pattern);
      doc["values"] = std::vector<double>(dist.values.data(), dist.values.data() + dist.values.size());
      doc["summary"] = json{{"scale", scale_name(dist.scale)},
                            {"wall_time_s", wall},
                            {"correlations", correlations}};
      std::ofstream out(args.out_path);
      if (!out) throw std::runtime_error("cannot write " + args.out_path);
      out << doc.dump(2) << "\n";
      if (!out) throw std::runtime_error("write failed for " + args.out_path);
    }
  }
  std::cout << "n=" << text.size() << " m=" << pattern.size() << " p=" << config.p
            << " eps=" << config.eps << " algo=" << config.algorithm << " wall=" << wall
            << "s correlations=" << correlations << "\n";
  return kExitOk;
}

int cmd_verify(const CommonArgs& args, double inject_error, const std::string& report_path) {
  const lpdist::IntString text = lpdist::read_int_string(args.text_path);
  const lpdist::IntString pattern = lpdist::read_int_string(args.pattern_path);
  if (static_cast<double>(text.size()) * static_cast<double>(pattern.size()) > 1e8)
    throw std::invalid_argument("verify: instance too large for the brute-force oracle "
                                "(n*m must stay within 1e8)");
  auto config = args.config;
  config.options.route = parse_route(args.route);

  lpdist::DistanceArray approx = lpdist::run_algorithm(text, pattern, config);
  if (inject_error != 0.0 && approx.values.size() > 0)
    approx.values[approx.values.size() / 2] += inject_error;

  lpdist::AlgorithmConfig oracle_config;
  oracle_config.algorithm = "exact-brute";
  oracle_config.p = config.algorithm == "approx-hamming" ? 0.0 : config.p;
  const lpdist::DistanceArray exact = lpdist::run_algorithm(text, pattern, oracle_config);

  const bool is_exact_algo = config.algorithm.rfind("exact", 0) == 0;
  const double tolerance = is_exact_algo ? 1e-9 : config.eps;

  json positions = json::array();
  double max_rel = 0.0, sum_rel = 0.0;
  for (Eigen::Index i = 0; i < exact.values.size(); ++i) {
    const double e = exact.values[i], a = approx.values[i];
    const double rel = e > 0.0 ? std::abs(a - e) / e : (std::abs(a) <= 1e-9 ? 0.0 : HUGE_VAL);
    max_rel = std::max(max_rel, rel);
    sum_rel += rel;
    positions.push_back(json{{"exact", e}, {"approx", a}, {"rel_error", rel}});
  }
  const bool pass = max_rel <= tolerance;

  json doc;
  doc["params"] = params_json(args, text, pattern);
  doc["positions"] = std::move(positions);
  doc["max_rel_error"] = max_rel;
  doc["mean_rel_error"] = exact.values.size() ? sum_rel / exact.values.size() : 0.0;
  doc["tolerance"] = tolerance;
  doc["pass"] = pass;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed for " + report_path);
  }
  std::cout << (pass ? "PASS" : "FAIL") << " max_rel_error=" << max_rel
            << " tolerance=" << tolerance << " seed=" << config.seed << "\n";
  return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const CommonArgs& args, const std::vector<Eigen::Index>& n_list, Eigen::Index m,
              std::uint64_t bound, double min_seconds, const std::string& out_path) {
  auto config = args.config;
  config.options.route = parse_route(args.route);
  std::ofstream out;
  if (!out_path.empty()) {
    out.open(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
  }
  std::ostream& sink = out_path.empty() ? std::cout : out;
  sink << lpdist::bench_csv_header() << "\n";
  for (const Eigen::Index n : n_list) {
    const lpdist::BenchPoint point =
        lpdist::bench_point(config, n, m, bound, config.seed + static_cast<std::uint64_t>(n),
                            min_seconds);
    sink << lpdist::bench_csv_row(point) << "\n";
    if (!out_path.empty())
      std::cout << "bench " << config.algorithm << " n=" << n << " time=" << point.seconds
                << "s correlations=" << point.correlations << "\n";
  }
  if (!out_path.empty() && !out) throw std::runtime_error("write failed for " + out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lp text-to-pattern distance: exact engines and (1+eps) approximations"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded text/pattern instance");
  Eigen::Index gen_n = 0, gen_m = 0;
  std::uint64_t gen_bound = 256, gen_seed = 0;
  std::string gen_dist = "uniform", gen_text, gen_pattern;
  gen->add_option("--n", gen_n, "text length")->required();
  gen->add_option("--m", gen_m, "pattern length")->required();
  gen->add_option("--U", gen_bound, "value bound (power of two)");
  gen->add_option("--dist", gen_dist, "uniform|adversarial-near-boundary");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out-text", gen_text, "text output path")->required();
  gen->add_option("--out-pattern", gen_pattern, "pattern output path")->required();

  // dist
  CommonArgs dist_args;
  auto* dist = app.add_subcommand("dist", "compute a distance array");
  add_algorithm_flags(dist, dist_args);
  dist->add_option("--format", dist_args.format, "output format: json|csv");
  dist->add_option("--out", dist_args.out_path, "output file (omit for summary only)");

  // verify
  CommonArgs verify_args;
  double inject_error = 0.0;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "run an algorithm against the brute-force oracle");
  add_algorithm_flags(verify, verify_args);
  verify->add_option("--out", report_path, "report output file");
  verify->add_option("--inject-error", inject_error, "test hook: perturb one output position")
      ->group("");  // hidden

  // bench
  CommonArgs bench_args;
  std::vector<Eigen::Index> bench_n;
  Eigen::Index bench_m = 64;
  std::uint64_t bench_bound = 256;
  double bench_min_seconds = 0.05;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "timing/operation-count grid over text lengths");
  bench->add_option("--algo", bench_args.config.algorithm, "algorithm to benchmark")->required();
  bench->add_option("--p", bench_args.config.p, "lp exponent");
  bench->add_option("--eps", bench_args.config.eps, "approximation parameter");
  bench->add_option("--n-list", bench_n, "text lengths")->required()->delimiter(',');
  bench->add_option("--m", bench_m, "pattern length");
  bench->add_option("--U", bench_bound, "value bound (power of two)");
  bench->add_option("--seed", bench_args.config.seed, "instance seed");
  bench->add_option("--reps", bench_args.config.repetitions, "amplification count");
  bench->add_option("--eta", bench_args.config.options.eta_override, "eta override");
  bench->add_option("--block", bench_args.config.options.block_length, "FFT block length");
  bench->add_option("--route", bench_args.route, "auto|fft|direct");
  bench->add_option("--threads", bench_args.config.options.threads, "level-parallelism");
  bench->add_option("--min-time", bench_min_seconds, "minimum cumulative seconds per point");
  bench->add_option("--out", bench_out, "CSV output file (omit for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_bound, gen_dist, gen_seed, gen_text, gen_pattern);
    if (dist->parsed()) return cmd_dist(dist_args);
    if (verify->parsed()) return cmd_verify(verify_args, inject_error, report_path);
    if (bench->parsed())
      return cmd_bench(bench_args, bench_n, bench_m, bench_bound, bench_min_seconds, bench_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::range_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
