// apsumma command-line driver: runs the library operations as subcommands and
// emits CSV/JSON reports.  Exit codes: 0 success, 2 validation error, 3 when
// --strict is set and numerical non-convergence flags were raised.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apsumma/fixtures.hpp"
#include "apsumma/harness.hpp"
#include "apsumma/serialization.hpp"

namespace fs = std::filesystem;
using namespace apsumma;

namespace {

struct GlobalOpts {
  std::string config_path;
  std::string out_dir;
  unsigned long long seed = 1;
  double tol = 1e-6;
  bool strict = false;
  int threads = 1;
  double tail_cutoff = 0.0;
  int panels_per_osc = 4;
};

void add_global_flags(CLI::App* cmd, GlobalOpts& g) {
  cmd->add_option("--config", g.config_path, "JSON experiment config");
  cmd->add_option("--out", g.out_dir, "Output directory (default: stdout)");
  cmd->add_option("--seed", g.seed, "Fixture corpus seed");
  cmd->add_option("--tol", g.tol, "Quadrature absolute tolerance");
  cmd->add_flag("--strict", g.strict,
                "Exit 3 when non-convergence flags are present");
  cmd->add_option("--threads", g.threads, "Worker threads")
      ->envname("APSUMMA_THREADS");
  cmd->add_option("--tail-cutoff", g.tail_cutoff,
                  "Kernel integral cutoff T (<=0: per-k default)");
  cmd->add_option("--panels-per-osc", g.panels_per_osc,
                  "Quadrature panels per oscillation");
}

QuadratureConfig quad_from(const GlobalOpts& g) {
  QuadratureConfig q;
  q.tail_cutoff = g.tail_cutoff;
  q.panels_per_oscillation = g.panels_per_osc;
  q.abs_tolerance = g.tol;
  return q;
}

std::string header_line(const GlobalOpts& g, const std::string& extra = "") {
  std::ostringstream h;
  h << "seed=" << g.seed << " tol=" << g.tol << " threads=" << g.threads
    << " tail_cutoff=" << g.tail_cutoff
    << " panels_per_osc=" << g.panels_per_osc;
  if (!extra.empty()) h << ' ' << extra;
  return h.str();
}

void emit(const GlobalOpts& g, const std::string& name,
          const std::string& content) {
  if (g.out_dir.empty()) {
    std::cout << content;
    return;
  }
  fs::create_directories(g.out_dir);
  std::ofstream out(fs::path(g.out_dir) / name, std::ios::binary);
  out << content;
}

std::vector<std::pair<std::string, APFunction>> load_functions(
    const GlobalOpts& g) {
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path);
    if (!in) throw std::invalid_argument("unreadable config: " + g.config_path);
    Json j = Json::parse(in);
    if (j.contains("functions")) return sweep_config_from_json(j).functions;
  }
  std::vector<std::pair<std::string, APFunction>> out;
  for (const Fixture& fx : fixture_corpus(g.seed))
    out.emplace_back(fx.id, fx.f);
  return out;
}

SweepConfig load_sweep_config(const GlobalOpts& g) {
  SweepConfig cfg;
  if (!g.config_path.empty()) {
    std::ifstream in(g.config_path);
    if (!in) throw std::invalid_argument("unreadable config: " + g.config_path);
    cfg = sweep_config_from_json(Json::parse(in));
  } else {
    cfg.functions = load_functions(g);
    cfg.rows = {{"cesaro", 2, 32}, {"riesz", 2, 32}, {"abel", 2, 32}};
    cfg.n_lo = 2;
    cfg.n_hi = 32;
  }
  cfg.quad.abs_tolerance = g.tol;
  if (g.tail_cutoff > 0.0) cfg.quad.tail_cutoff = g.tail_cutoff;
  if (g.threads > 1) cfg.threads = g.threads;
  return cfg;
}

Json summary_json(const GlobalOpts& g, const SweepResult& res) {
  Json stats = Json::array();
  for (const NonDivergenceStat& st : res.stats)
    stats.push_back({{"inequality_id", st.inequality_id},
                     {"f_id", st.f_id},
                     {"lower_half_max", st.lower_half_max},
                     {"upper_half_max", st.upper_half_max}});
  return {{"seed", g.seed},
          {"tol", g.tol},
          {"max_ratio", res.max_ratio},
          {"non_divergence", stats},
          {"flags", res.flags}};
}

int run_eval(const GlobalOpts& g) {
  std::ostringstream csv;
  csv << "# " << header_line(g) << "\nf_id,x,re,im\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };
  for (const auto& [id, f] : load_functions(g))
    for (double x : default_x_grid(f)) {
      const Complex v = f.evaluate(x);
      csv << id << ',' << num(x) << ',' << num(v.real()) << ','
          << num(v.imag()) << '\n';
    }
  emit(g, "eval.csv", csv.str());
  return 0;
}

int run_kernel_check(const GlobalOpts& g, int k_max) {
  const QuadratureConfig quad = quad_from(g);
  std::ostringstream csv;
  csv << "# " << header_line(g) << "\nf_id,x,k,deviation,bound,converged\n";
  double worst = 0.0;
  bool all_converged = true;
  char buf[160];
  for (const auto& [id, f] : load_functions(g)) {
    KernelSumEvaluator eval(f, quad);
    for (double x : default_x_grid(f))
      for (int k = 0; k <= k_max; ++k) {
        const KernelSum ks = eval.threshold_estimate(x, k);
        const Complex exact =
            threshold_partial_sum(f, x, 0.5 * f.alpha() * k);
        const double dev = std::abs(ks.value - exact);
        const double bound = quad.abs_tolerance + ks.tail_bound;
        worst = std::max(worst, dev - bound);
        all_converged = all_converged && ks.converged;
        std::snprintf(buf, sizeof(buf), "%s,%.12g,%d,%.12g,%.12g,%d\n",
                      id.c_str(), x, k, dev, bound, ks.converged ? 1 : 0);
        csv << buf;
      }
  }
  emit(g, "kernel_check.csv", csv.str());
  std::cerr << (worst <= 0.0 ? "PASS" : "FAIL")
            << " kernel-check: max (deviation - bound) = " << worst << "\n";
  if (worst > 0.0) return 2;
  if (g.strict && !all_converged) return 3;
  return 0;
}

int run_identity_check(const GlobalOpts& g, double r_max) {
  double worst = 0.0;
  constexpr int kN = 700;
  for (double r = 0.0; r <= r_max + 1e-12; r += 0.1) {
    const double budget = 1e-10 + std::pow(r, kN) / (1.0 - r);
    for (int i = 0; i < 25; ++i)
      for (int j = 0; j < 25; ++j) {
        const double y = 0.05 + (M_PI - 0.1) * i / 24.0;
        const double z = 0.05 + (M_PI - 0.1) * j / 24.0;
        const double dev = std::abs(geometric_sine_sum_closed(r, y, z) -
                                    geometric_sine_sum_direct(r, y, z, kN)) -
                           budget;
        worst = std::max(worst, dev);
      }
  }
  std::cout << (worst <= 0.0 ? "PASS" : "FAIL")
            << " identity-check: max deviation beyond budget = " << worst
            << "\n";
  return worst <= 0.0 ? 0 : 2;
}

int run_classify(const GlobalOpts& g, const std::string& family, long n_lo,
                 long n_hi, double c) {
  std::vector<std::pair<long, ClassReport>> rows;
  for (long n = n_lo; n <= n_hi; ++n) {
    MatrixRow row = family == "cesaro"  ? MatrixRow::cesaro(n)
                    : family == "riesz" ? MatrixRow::riesz(n)
                    : family == "abel"  ? MatrixRow::abel(n)
                    : throw std::invalid_argument("unknown family: " + family);
    for (ClassReport& rep : hierarchy_check(row, c))
      rows.emplace_back(n, std::move(rep));
  }
  emit(g, "classify_" + family + ".csv",
       "# " + header_line(g, "family=" + family) + "\n" +
           class_reports_to_csv(rows));
  return 0;
}

int run_moduli(const GlobalOpts& g) {
  std::ostringstream csv;
  csv << "# " << header_line(g) << "\nf_id,x,kind,gamma,delta,lhs,w,ratio\n";
  char buf[160];
  const std::vector<double> dgrid = default_delta_grid();
  const std::vector<double> ggrid = {M_PI / 64, M_PI / 16, M_PI / 4, M_PI / 2};
  double worst = 0.0;
  for (const auto& [id, f] : load_functions(g)) {
    const std::vector<double> xs = default_x_grid(f);
    for (std::size_t i = 0; i < xs.size(); i += 4) {
      const double x = xs[i];
      const ModulusFunction w = fit_modulus(f, x, dgrid);
      for (const MembershipRow& row :
           omega_alpha_membership_report(f, x, w, ggrid, dgrid)) {
        std::snprintf(buf, sizeof(buf),
                      "%s,%.12g,%s,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                      id.c_str(), x, row.kind.c_str(), row.gamma, row.delta,
                      row.lhs, row.w_value, row.ratio);
        csv << buf;
        if (std::isfinite(row.ratio)) worst = std::max(worst, row.ratio);
      }
    }
  }
  emit(g, "moduli.csv", csv.str());
  std::cerr << "moduli: max lhs/w ratio = " << worst << "\n";
  return 0;
}

int run_sweep(const GlobalOpts& g,
              const std::vector<std::string>& inequalities) {
  SweepConfig cfg = load_sweep_config(g);
  if (!inequalities.empty()) cfg.inequalities = inequalities;
  const SweepResult res = sweep(cfg);
  emit(g, "sweep.csv", reports_to_csv(res.reports, header_line(g)));
  emit(g, "summary.json", summary_json(g, res).dump(2) + "\n");
  if (g.strict)
    for (const RatioReport& r : res.reports)
      if (!r.flags.empty()) return 3;
  return 0;
}

int run_generate_fixtures(const GlobalOpts& g, int count) {
  const std::string dir = g.out_dir.empty() ? "fixtures" : g.out_dir;
  fs::create_directories(dir);
  for (const Fixture& fx : fixture_corpus(g.seed, count)) {
    Json j = apfunction_to_json(fx.f);
    j["id"] = fx.id;
    j["seed"] = g.seed;
    std::ofstream out(fs::path(dir) / (fx.id + ".json"), std::ios::binary);
    out << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-periodic trigonometric sums: partial sums, strong "
               "means, moduli, and inequality sweeps"};
  app.require_subcommand(1);

  GlobalOpts g;
  int k_max = 32;
  double r_max = 0.9;
  std::string family = "cesaro";
  long n_lo = 0, n_hi = 64;
  double c = 2.0;
  int count = 8;
  std::string verify_ineq;

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate functions on a grid");
  CLI::App* kernel_cmd = app.add_subcommand(
      "kernel-check", "Kernel integral vs threshold partial sums");
  kernel_cmd->add_option("--k-max", k_max, "Largest kernel index");
  CLI::App* ident_cmd = app.add_subcommand(
      "identity-check", "Geometric sine-product sum: closed form vs direct");
  ident_cmd->add_option("--r-max", r_max, "Largest ratio in the scan");
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Matrix-row class hierarchy scan");
  classify_cmd->add_option("--family", family, "cesaro|riesz|abel");
  classify_cmd->add_option("--n-lo", n_lo, "First row index");
  classify_cmd->add_option("--n-hi", n_hi, "Last row index");
  classify_cmd->add_option("--c", c, "GM(2beta) window parameter");
  CLI::App* moduli_cmd =
      app.add_subcommand("moduli", "Fitted moduli and membership reports");
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Sweep one inequality family");
  verify_cmd->add_option("inequality", verify_ineq,
                         "prop4|thm2|thm3|thm5|thm6|remark7")
      ->required();
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "Full inequality ratio sweep");
  CLI::App* gen_cmd =
      app.add_subcommand("generate-fixtures", "Write the fixture corpus");
  gen_cmd->add_option("--count", count, "Number of fixtures");

  for (CLI::App* cmd : {eval_cmd, kernel_cmd, ident_cmd, classify_cmd,
                        moduli_cmd, verify_cmd, sweep_cmd, gen_cmd})
    add_global_flags(cmd, g);

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(g);
    if (kernel_cmd->parsed()) return run_kernel_check(g, k_max);
    if (ident_cmd->parsed()) return run_identity_check(g, r_max);
    if (classify_cmd->parsed())
      return run_classify(g, family, n_lo, n_hi, c);
    if (moduli_cmd->parsed()) return run_moduli(g);
    if (verify_cmd->parsed()) return run_sweep(g, {verify_ineq});
    if (sweep_cmd->parsed()) return run_sweep(g, {});
    if (gen_cmd->parsed()) return run_generate_fixtures(g, count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
