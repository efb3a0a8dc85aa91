#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gridabe/bench.hpp"
#include "gridabe/scenario.hpp"

namespace {

using namespace gridabe;

std::vector<std::uint64_t> parse_values(const std::string& list) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw CLI::ValidationError("--values", "expected a comma-separated list");
  return out;
}

int cmd_run(const std::string& scheme, const std::string& sweep, const std::string& values,
            std::size_t n, std::size_t k, std::size_t msg_size, std::size_t attrs, int reps,
            std::uint64_t seed, const std::string& out_path, bool parallel) {
  BenchConfig cfg;
  if (scheme == "all") {
    cfg.schemes = {SchemeKind::kScheme1, SchemeKind::kScheme2, SchemeKind::kProposed};
  } else {
    auto s = scheme_from_name(scheme);
    if (!s) {
      std::cerr << "unknown scheme: " << scheme << "\n";
      return 2;
    }
    cfg.schemes = {*s};
  }
  auto sv = sweep_from_name(sweep);
  if (!sv) {
    std::cerr << "unknown sweep: " << sweep << "\n";
    return 2;
  }
  cfg.sweep = *sv;
  cfg.values = parse_values(values);
  cfg.n = n;
  cfg.k = k;
  cfg.msg_bytes = msg_size;
  cfg.attrs = attrs;
  cfg.reps = reps;
  cfg.seed = seed;
  cfg.parallel = parallel;

  auto rows = run_grid(cfg);

  std::ofstream csv(out_path);
  if (!csv) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  write_csv(rows, csv);

  std::string dat_path = out_path + ".dat";
  if (out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".csv")
    dat_path = out_path.substr(0, out_path.size() - 4) + ".dat";
  std::ofstream dat(dat_path);
  write_gnuplot(rows, dat);

  std::cout << rows.size() << " rows -> " << out_path << " (medians: " << dat_path << ")\n";
  return 0;
}

int cmd_fit(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) {
    std::cerr << "cannot read " << in_path << "\n";
    return 2;
  }
  auto rows = parse_csv(in);
  TrendReport report = fit_trends(rows);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  out << report.text;
  std::cout << report.text;
  return report.pass ? 0 : 1;
}

int cmd_scenario(const std::string& file, const std::string& out_path) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot read " << file << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  ScenarioConfig cfg = parse_scenario(buf.str());

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write " << out_path << "\n";
    return 2;
  }
  ScenarioSummary s = run_scenario(cfg, out);
  std::cout << "batch_finalized=" << (s.batch_finalized ? "yes" : "no")
            << " finished=" << s.finished << " rejected=" << s.rejected
            << " recovered=" << s.recovered << " -> " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"threshold-assisted attribute encryption benchmark harness"};
  app.require_subcommand(1);

  std::string scheme = "all", sweep = "rus", values;
  std::size_t n = 20, k = 0, msg_size = 102400, attrs = 16;
  int reps = 3;
  std::uint64_t seed = 1;
  std::string out_path, in_path, scenario_file;
  bool parallel = false;

  auto* run = app.add_subcommand("run", "measure a sweep and write CSV");
  run->add_option("--scheme", scheme, "1|2|proposed|all")->capture_default_str();
  run->add_option("--sweep", sweep, "rus|size|attrs")->capture_default_str();
  run->add_option("--values", values, "comma-separated sweep values")->required();
  run->add_option("--n", n, "participating units when not swept")->capture_default_str();
  run->add_option("--k", k, "batch threshold, 0 = ceil(t/2)")->capture_default_str();
  run->add_option("--msg-size", msg_size, "payload bytes when not swept")->capture_default_str();
  run->add_option("--attrs", attrs, "attribute count when not swept")->capture_default_str();
  run->add_option("--reps", reps, "timed repetitions per cell")->capture_default_str();
  run->add_option("--seed", seed, "deterministic seed")->capture_default_str();
  run->add_option("--out", out_path, "CSV output path")->required();
  run->add_flag("--parallel", parallel, "run sweep values concurrently");

  auto* fit = app.add_subcommand("fit", "fit trends over a CSV and check assertions");
  fit->add_option("--in", in_path, "CSV from `bench run`")->required();
  fit->add_option("--out", out_path, "report output path")->required();

  auto* scen = app.add_subcommand("scenario", "replay a protocol round from JSON");
  scen->add_option("--file", scenario_file, "scenario JSON")->required();
  scen->add_option("--out", out_path, "transcript JSONL output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return cmd_run(scheme, sweep, values, n, k, msg_size, attrs, reps, seed, out_path, parallel);
    if (fit->parsed()) return cmd_fit(in_path, out_path);
    if (scen->parsed()) return cmd_scenario(scenario_file, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
