// gingap: gap probabilities, correlations and Monte Carlo checks for the
// bulk real-Ginibre / annihilation / coalescence point processes.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gingap/constants.hpp"
#include "gingap/correlations.hpp"
#include "gingap/gap.hpp"
#include "gingap/kernels.hpp"
#include "gingap/quadrature.hpp"
#include "gingap/specialfun.hpp"
#include "gingap/stochastic.hpp"
#include "gingap/version.hpp"

namespace {

namespace sf = gingap::specialfun;
namespace gp = gingap::gap;
namespace st = gingap::stochastic;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // insertion order
  std::optional<std::uint64_t> seed;

  void add(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
  void add(const std::string& key, double value) { params.emplace_back(key, fmt(value)); }
  void add(const std::string& key, long long value) {
    params.emplace_back(key, std::to_string(value));
  }

  static std::string fmt(double v) {
    char buf[40];
    // shortest representation that round-trips
    for (int prec = 15; prec <= 17; ++prec) {
      std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
      if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
  }

  static std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
  }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> summary;  // trailing comment lines
};

std::string csv_render(const Manifest& m, const Table& t) {
  std::ostringstream os;
  os << "# command=" << m.command << "\n";
  os << "# tool_version=" << gingap::kVersion << "\n";
  for (const auto& [k, v] : m.params) os << "# " << k << "=" << v << "\n";
  if (m.seed) os << "# seed=" << *m.seed << "\n";
  os << "# timestamp=" << Manifest::timestamp() << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    os << (c ? "," : "") << t.columns[c];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << "\n";
  }
  for (const auto& line : t.summary) os << "# " << line << "\n";
  return os.str();
}

std::string json_render(const Manifest& m, const Table& t) {
  json j;
  j["manifest"]["command"] = m.command;
  j["manifest"]["tool_version"] = gingap::kVersion;
  json params = json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  j["manifest"]["params"] = params;
  if (m.seed) j["manifest"]["seed"] = *m.seed;
  j["manifest"]["timestamp"] = Manifest::timestamp();
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  if (!t.summary.empty()) j["summary"] = t.summary;
  return j.dump(2) + "\n";
}

// single atomic write: temp file in the target directory, then rename
void write_output(const std::string& output, const std::string& content) {
  if (output.empty() || output == "-") {
    std::cout << content;
    return;
  }
  std::filesystem::path path(output);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("GINGAP_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open output file: " + tmp.string());
    os << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string fmtv(double v) { return Manifest::fmt(v); }

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::vector<double> make_grid(double s_min, double s_max, double s_step) {
  if (!(s_step > 0.0) || s_max < s_min) throw CLI::ValidationError("invalid s grid");
  std::vector<double> grid;
  for (double s = s_min; s <= s_max + 1e-12; s += s_step) grid.push_back(s);
  return grid;
}

struct GapOptions {
  std::string method;
  double s_min = 0.0, s_max = 2.0, s_step = 0.05;
  int n_matrix = 120;
  double xi = 1.0;
  int order = 4;
  std::uint64_t seed = 0;
  bool seed_set = false;
  long long replicas = 200;
  long long lattice = 100000;
  double fill = 0.3;
  double t_end = 0.0;  // 0 = per-process default
  bool force = false;
};

void add_gap_flags(CLI::App* cmd, GapOptions& o) {
  cmd->add_option("--s-min", o.s_min, "grid start");
  cmd->add_option("--s-max", o.s_max, "grid end");
  cmd->add_option("--s-step", o.s_step, "grid step");
  cmd->add_option("--n-matrix", o.n_matrix, "matrix size N for finite-n (even)");
  cmd->add_option("--xi", o.xi, "generating-function parameter (truncated-gf)");
  cmd->add_option("--order", o.order, "truncation order (truncated-gf, <= 4)");
  cmd->add_option("--replicas", o.replicas, "Monte Carlo replicas");
  cmd->add_option("--lattice", o.lattice, "lattice sites (mc methods)");
  cmd->add_option("--fill", o.fill, "initial fill probability (mc methods)");
  cmd->add_option("--t-end", o.t_end, "simulation end time (0 = method default)");
  cmd->add_flag("--force", o.force, "evaluate outside the validated window");
  auto* s = cmd->add_option("--seed", o.seed, "RNG seed (default: from entropy)");
  s->each([&o](const std::string&) { o.seed_set = true; });
}

st::SimConfig sim_config_from(const GapOptions& o, st::SimProcess process) {
  st::SimConfig cfg;
  cfg.lattice_size = static_cast<std::size_t>(o.lattice);
  cfg.initial_fill = o.fill;
  cfg.t_end = o.t_end > 0.0 ? o.t_end
                            : (process == st::SimProcess::Annihilation ? 1200.0 : 4000.0);
  cfg.seed = o.seed;
  cfg.replicas = static_cast<std::size_t>(o.replicas);
  return cfg;
}

struct MethodCurve {
  std::vector<double> values;
  std::vector<double> stderrs;  // empty for deterministic methods
};

MethodCurve eval_method(const std::string& method, const std::vector<double>& grid,
                        const GapOptions& o, Manifest& manifest) {
  MethodCurve out;
  out.values.reserve(grid.size());
  if (method == "finite-n") {
    manifest.add("n_matrix", static_cast<long long>(o.n_matrix));
    for (double s : grid) out.values.push_back(gp::gap_finite_n(s / 2.0, o.n_matrix));
  } else if (method == "series") {
    if (!o.force && grid.back() > 2.2)
      throw CLI::ValidationError("series: s-max beyond validated window 2.2 (use --force)");
    for (double s : grid)
      out.values.push_back(o.force ? gp::rg_gap_series().eval_unchecked(s)
                                   : gp::series_small_s(s));
  } else if (method == "asymptotic") {
    if (grid.front() <= 0.0)
      throw CLI::ValidationError("asymptotic: requires s-min > 0");
    for (double s : grid) out.values.push_back(gp::asymptote_large_s(s));
  } else if (method == "truncated-gf") {
    manifest.add("xi", o.xi);
    manifest.add("order", static_cast<long long>(o.order));
    for (double s : grid) out.values.push_back(gp::gap_truncated_gf(s, o.xi, o.order));
  } else if (method == "mc-annihilation" || method == "mc-coalescence") {
    const auto process = method == "mc-annihilation" ? st::SimProcess::Annihilation
                                                     : st::SimProcess::Coalescence;
    const st::SimConfig cfg = sim_config_from(o, process);
    manifest.add("lattice", static_cast<long long>(cfg.lattice_size));
    manifest.add("fill", cfg.initial_fill);
    manifest.add("t_end", cfg.t_end);
    manifest.add("replicas", static_cast<long long>(cfg.replicas));
    const st::EmpiricalGap est = st::estimate_gap(cfg, process, grid);
    out.values = est.e_hat;
    out.stderrs = est.stderrs;
  } else {
    throw CLI::ValidationError("unknown method: " + method);
  }
  return out;
}

bool is_mc(const std::string& method) { return method.rfind("mc-", 0) == 0; }

int run_gap(const GapOptions& opts, const std::string& format, const std::string& output) {
  Manifest manifest;
  manifest.command = "gap";
  manifest.add("method", opts.method);
  manifest.add("s_min", opts.s_min);
  manifest.add("s_max", opts.s_max);
  manifest.add("s_step", opts.s_step);
  if (is_mc(opts.method)) manifest.seed = opts.seed;

  const std::vector<double> grid = make_grid(opts.s_min, opts.s_max, opts.s_step);
  const MethodCurve curve = eval_method(opts.method, grid, opts, manifest);

  Table t;
  t.columns = {"s", "value"};
  const bool with_stderr = !curve.stderrs.empty();
  if (with_stderr) t.columns.push_back("stderr");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row = {fmtv(grid[i]), fmtv(curve.values[i])};
    if (with_stderr) row.push_back(fmtv(curve.stderrs[i]));
    t.rows.push_back(std::move(row));
  }
  write_output(output, format == "json" ? json_render(manifest, t) : csv_render(manifest, t));
  return 0;
}

int run_compare(const std::vector<std::string>& methods, const GapOptions& opts, double mc_sigma,
                const std::string& format, const std::string& output) {
  if (methods.size() < 2) throw CLI::ValidationError("compare: need at least 2 methods");
  Manifest manifest;
  manifest.command = "compare";
  {
    std::string joined;
    for (const auto& m : methods) joined += (joined.empty() ? "" : ",") + m;
    manifest.add("methods", joined);
  }
  manifest.add("s_min", opts.s_min);
  manifest.add("s_max", opts.s_max);
  manifest.add("s_step", opts.s_step);
  for (const auto& m : methods)
    if (is_mc(m)) { manifest.seed = opts.seed; break; }

  const std::vector<double> grid = make_grid(opts.s_min, opts.s_max, opts.s_step);
  std::vector<MethodCurve> curves;
  for (const auto& m : methods) curves.push_back(eval_method(m, grid, opts, manifest));

  Table t;
  t.columns = {"s"};
  for (std::size_t i = 0; i < methods.size(); ++i) {
    t.columns.push_back(methods[i]);
    if (!curves[i].stderrs.empty()) t.columns.push_back(methods[i] + "_stderr");
  }
  for (std::size_t i = 0; i < methods.size(); ++i)
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      t.columns.push_back("abs_diff_" + methods[i] + "_vs_" + methods[j]);
      t.columns.push_back("rel_diff_" + methods[i] + "_vs_" + methods[j]);
      if (curves[i].stderrs.empty() != curves[j].stderrs.empty())
        t.columns.push_back("check_" + methods[i] + "_vs_" + methods[j]);
    }

  std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> max_diff;  // (diff, s)
  bool all_pass = true;
  bool any_check = false;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::vector<std::string> row = {fmtv(grid[r])};
    for (std::size_t i = 0; i < methods.size(); ++i) {
      row.push_back(fmtv(curves[i].values[r]));
      if (!curves[i].stderrs.empty()) row.push_back(fmtv(curves[i].stderrs[r]));
    }
    for (std::size_t i = 0; i < methods.size(); ++i)
      for (std::size_t j = i + 1; j < methods.size(); ++j) {
        const double a = curves[i].values[r], b = curves[j].values[r];
        const double ad = std::abs(a - b);
        const double rd = ad / std::max({std::abs(a), std::abs(b), 1e-300});
        row.push_back(fmtv(ad));
        row.push_back(fmtv(rd));
        auto& md = max_diff[{i, j}];
        if (ad >= md.first) md = {ad, grid[r]};
        if (curves[i].stderrs.empty() != curves[j].stderrs.empty()) {
          any_check = true;
          const double se = curves[i].stderrs.empty() ? curves[j].stderrs[r] : curves[i].stderrs[r];
          const bool pass = ad <= mc_sigma * se;
          all_pass = all_pass && pass;
          row.push_back(pass ? "PASS" : "FAIL");
        }
      }
    t.rows.push_back(std::move(row));
  }

  for (const auto& [pair, md] : max_diff) {
    std::ostringstream line;
    line << "max_abs_diff " << methods[pair.first] << " vs " << methods[pair.second] << " = "
         << fmtv(md.first) << " at s=" << fmtv(md.second);
    t.summary.push_back(line.str());
  }
  if (any_check)
    t.summary.push_back(std::string("mc_check=") + (all_pass ? "PASS" : "FAIL") + " (" +
                        fmtv(mc_sigma) + " stderr)");

  // slope diagnostics when an asymptotic fit makes sense
  auto fit_against_asymptote = [&](std::size_t idx) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t r = 0; r < grid.size(); ++r) {
      if (curves[idx].values[r] <= 0.0) continue;
      const double x = grid[r], y = -std::log(curves[idx].values[r]);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
      ++cnt;
    }
    if (cnt < 2) return;
    const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / cnt;
    const double target = sf::zeta_three_halves() / (2.0 * gingap::kSqrt2Pi);
    std::ostringstream line;
    line << "fit " << methods[idx] << ": slope=" << fmtv(slope) << " target=" << fmtv(target)
         << " rel_dev=" << fmtv(std::abs(slope - target) / target)
         << " intercept=" << fmtv(-intercept) << " c2=" << fmtv(gp::c2_constant());
    t.summary.push_back(line.str());
  };
  for (std::size_t i = 0; i < methods.size(); ++i)
    if (methods[i] == "asymptotic") {
      for (std::size_t j = 0; j < methods.size(); ++j)
        if (j != i && !is_mc(methods[j])) fit_against_asymptote(j);
      break;
    }

  write_output(output, format == "json" ? json_render(manifest, t) : csv_render(manifest, t));
  return 0;
}

int run_constants(const std::string& format, const std::string& output) {
  Manifest manifest;
  manifest.command = "constants";
  const double z32 = sf::zeta_three_halves();
  const double c1 = 0.5 * z32;
  const double c1_tilde = z32 / (2.0 * gingap::kSqrt2Pi);
  const double c2 = gp::c2_constant();
  const double compressibility = [] {
    const auto p = gingap::kernels::KernelParams::real_ginibre_bulk();
    const auto f = [&p](double x) { return gingap::correlations::truncated_pair_correlation(x, p); };
    const double integral =
        2.0 * gingap::quadrature::integrate_adaptive(f, 1e-12, 20.0, 1e-12, 1e-12).value;
    return 1.0 + integral / gingap::kInvSqrt2Pi;
  }();

  json j;
  j["manifest"]["command"] = "constants";
  j["manifest"]["tool_version"] = gingap::kVersion;
  j["manifest"]["timestamp"] = Manifest::timestamp();
  auto entry = [](double computed, double expected, double tolerance) {
    json e;
    e["computed"] = computed;
    e["expected"] = expected;
    e["tolerance"] = tolerance;
    return e;
  };
  j["zeta32"] = entry(z32, 2.6124, 2e-4);
  j["c1"] = entry(c1, 1.3062, 1e-4);
  j["c1_tilde"] = entry(c1_tilde, 0.5211, 1e-4);
  j["c2"] = entry(c2, 0.0627, 5e-4);
  j["compressibility"] = entry(compressibility, 0.58579, 1e-5);
  (void)format;  // constants are emitted as JSON regardless
  write_output(output, j.dump(2) + "\n");
  return 0;
}

int run_correlations(const std::string& process, const std::vector<double>& points, double rho,
                     const std::string& format, const std::string& output) {
  gingap::kernels::KernelParams p = [&] {
    if (process == "rg") return gingap::kernels::KernelParams::real_ginibre_bulk();
    if (process == "coalescence") return gingap::kernels::KernelParams::coalescence(rho);
    if (process == "annihilation") return gingap::kernels::KernelParams::annihilation(rho);
    throw CLI::ValidationError("unknown process: " + process);
  }();
  Manifest manifest;
  manifest.command = "correlations";
  manifest.add("process", process);
  if (process != "rg") manifest.add("rho", rho);
  {
    std::string pts;
    for (double x : points) pts += (pts.empty() ? "" : " ") + fmtv(x);
    manifest.add("points", pts);
  }
  const double value = gingap::correlations::rho_n(points, p);
  Table t;
  t.columns = {"n", "value"};
  t.rows.push_back({std::to_string(points.size()), fmtv(value)});
  write_output(output, format == "json" ? json_render(manifest, t) : csv_render(manifest, t));
  return 0;
}

int run_simulate(const std::string& process, long long lattice, double fill, double t_end,
                 std::uint64_t seed, bool dump_positions, const std::string& format,
                 const std::string& output) {
  const auto proc = [&] {
    if (process == "annihilation") return st::SimProcess::Annihilation;
    if (process == "coalescence") return st::SimProcess::Coalescence;
    throw CLI::ValidationError("unknown process: " + process);
  }();
  st::SimConfig cfg;
  cfg.lattice_size = static_cast<std::size_t>(lattice);
  cfg.initial_fill = fill;
  cfg.t_end = t_end;
  cfg.seed = seed;
  cfg.replicas = 1;
  Manifest manifest;
  manifest.command = "simulate";
  manifest.add("process", process);
  manifest.add("lattice", lattice);
  manifest.add("fill", fill);
  manifest.add("t_end", t_end);
  manifest.seed = seed;
  const st::ParticleSystem ps = st::simulate(cfg, proc);
  Table t;
  if (dump_positions) {
    t.columns = {"site"};
    for (auto x : ps.positions) t.rows.push_back({std::to_string(x)});
  } else {
    t.columns = {"count", "density", "time"};
    t.rows.push_back({std::to_string(ps.positions.size()), fmtv(ps.density()), fmtv(ps.time)});
  }
  write_output(output, format == "json" ? json_render(manifest, t) : csv_render(manifest, t));
  return 0;
}

int run_sample_ginibre(int n, long long replicas, std::uint64_t seed, const std::string& format,
                       const std::string& output) {
  Manifest manifest;
  manifest.command = "sample-ginibre";
  manifest.add("n", static_cast<long long>(n));
  manifest.add("replicas", replicas);
  manifest.seed = seed;
  Table t;
  if (replicas <= 1) {
    const st::GinibreSample sample = st::sample_ginibre_real_eigs(n, seed);
    t.columns = {"eigenvalue"};
    for (double ev : sample.real_eigenvalues) t.rows.push_back({fmtv(ev)});
    t.summary.push_back("real_count=" + std::to_string(sample.real_eigenvalues.size()));
  } else {
    const st::GinibreEnsembleStats stats =
        st::ginibre_real_counts(n, static_cast<std::size_t>(replicas), seed);
    t.columns = {"replica", "real_count"};
    for (std::size_t r = 0; r < stats.real_counts.size(); ++r)
      t.rows.push_back({std::to_string(r), std::to_string(stats.real_counts[r])});
    t.summary.push_back("mean_count=" + fmtv(stats.mean_count) +
                        " stderr=" + fmtv(stats.stderr_count) +
                        " skipped=" + std::to_string(stats.skipped));
  }
  write_output(output, format == "json" ? json_render(manifest, t) : csv_render(manifest, t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gap probabilities and correlations for the bulk real-Ginibre and "
               "annihilation/coalescence point processes"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string output = "-";
  int threads = 0;
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "output file ('-' = stdout; relative paths honor "
                                     "GINGAP_OUTPUT_DIR)");
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  GapOptions gap_opts;
  auto* gap_cmd = app.add_subcommand("gap", "gap-probability curve by one method");
  gap_cmd->add_option("--method", gap_opts.method,
                      "finite-n|series|asymptotic|truncated-gf|mc-annihilation|mc-coalescence")
      ->required();
  add_gap_flags(gap_cmd, gap_opts);

  GapOptions cmp_opts;
  std::vector<std::string> cmp_methods;
  double mc_sigma = 3.0;
  auto* cmp_cmd = app.add_subcommand("compare", "side-by-side methods with differences");
  cmp_cmd->add_option("--methods", cmp_methods, "comma-separated methods")->delimiter(',')
      ->required();
  cmp_cmd->add_option("--mc-sigma", mc_sigma, "PASS/FAIL band in stderr units (default 3)");
  add_gap_flags(cmp_cmd, cmp_opts);

  auto* const_cmd = app.add_subcommand("constants", "computed constants vs expected values");

  std::string corr_process = "rg";
  std::vector<double> corr_points;
  double corr_rho = gingap::kInvSqrt2Pi;
  auto* corr_cmd = app.add_subcommand("correlations", "n-point correlation at given points");
  corr_cmd->add_option("--process", corr_process, "rg|coalescence|annihilation");
  corr_cmd->add_option("--points", corr_points, "comma-separated positions")->delimiter(',')
      ->required();
  corr_cmd->add_option("--rho", corr_rho, "density (coalescence/annihilation)");

  std::string sim_process = "annihilation";
  long long sim_lattice = 100000;
  double sim_fill = 0.3;
  double sim_t_end = 1000.0;
  std::uint64_t sim_seed = 0;
  bool sim_seed_set = false;
  bool sim_dump = false;
  auto* sim_cmd = app.add_subcommand("simulate", "one lattice trajectory");
  sim_cmd->add_option("--process", sim_process, "annihilation|coalescence");
  sim_cmd->add_option("--lattice", sim_lattice, "lattice sites");
  sim_cmd->add_option("--fill", sim_fill, "initial fill probability");
  sim_cmd->add_option("--t-end", sim_t_end, "end time");
  sim_cmd->add_option("--seed", sim_seed, "RNG seed")->each([&](const std::string&) {
    sim_seed_set = true;
  });
  sim_cmd->add_flag("--dump-positions", sim_dump, "emit particle positions");

  int gin_n = 120;
  long long gin_replicas = 1;
  std::uint64_t gin_seed = 0;
  bool gin_seed_set = false;
  auto* gin_cmd = app.add_subcommand("sample-ginibre", "real eigenvalues of Gaussian matrices");
  gin_cmd->add_option("--n", gin_n, "matrix size (2..400)");
  gin_cmd->add_option("--replicas", gin_replicas, "number of samples");
  gin_cmd->add_option("--seed", gin_seed, "RNG seed")->each([&](const std::string&) {
    gin_seed_set = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (gap_cmd->parsed()) {
      if (!gap_opts.seed_set) gap_opts.seed = entropy_seed();
      return run_gap(gap_opts, format, output);
    }
    if (cmp_cmd->parsed()) {
      if (!cmp_opts.seed_set) cmp_opts.seed = entropy_seed();
      return run_compare(cmp_methods, cmp_opts, mc_sigma, format, output);
    }
    if (const_cmd->parsed()) return run_constants(format, output);
    if (corr_cmd->parsed())
      return run_correlations(corr_process, corr_points, corr_rho, format, output);
    if (sim_cmd->parsed()) {
      if (!sim_seed_set) sim_seed = entropy_seed();
      return run_simulate(sim_process, sim_lattice, sim_fill, sim_t_end, sim_seed, sim_dump,
                          format, output);
    }
    if (gin_cmd->parsed()) {
      if (!gin_seed_set) gin_seed = entropy_seed();
      return run_sample_ginibre(gin_n, gin_replicas, gin_seed, format, output);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const st::EquilibrationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const st::EigensolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
