#include "apsumma/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

namespace apsumma {

namespace {

constexpr double kRhsTruncationTol = 1e-12;
constexpr long kRhsTruncationCap = 4'000'000;

void finish_ratio(RatioReport& r) {
  if (r.rhs_lower > 0.0) {
    r.ratio = r.lhs / r.rhs_lower;
    r.ratio_defined = true;
  } else if (r.lhs == 0.0) {
    r.ratio = 0.0;
    r.ratio_defined = false;  // 0/0: excluded from summaries
  } else {
    r.ratio = std::numeric_limits<double>::infinity();
    r.ratio_defined = true;
  }
}

void add_flag(std::string& flags, const std::string& flag) {
  if (!flags.empty()) flags += ';';
  flags += flag;
}

struct RhsPair {
  double lower = 0.0;
  double upper = 0.0;
  bool truncated_ok = true;
};

// sum_k a_{n,k} [w(pi/(k+1)) + E_{alpha k / e_denom}(f)]^q at both bracket
// ends.  Infinite rows are truncated once the E term vanishes and the
// remaining mass times the monotone w bound drops below tolerance.
RhsPair matrix_rhs(const MatrixRow& row, const ModulusFunction& w,
                   const APFunction& f, double q, double e_denom) {
  RhsPair out;
  const double alpha = f.alpha();
  const long k_e =
      static_cast<long>(std::ceil(e_denom * f.lambda_max() / alpha)) + 1;
  double lo = 0.0, up = 0.0;
  bool done = false;
  for (long k = 0; k <= kRhsTruncationCap; ++k) {
    if (!row.infinite_support() && k > row.support_end()) {
      done = true;
      break;
    }
    const double a = row.entry(k);
    const double wv = w(M_PI / static_cast<double>(k + 1));
    const ApproxBracket b = best_approx_bracket(f, alpha * k / e_denom);
    if (a > 0.0) {
      lo += a * std::pow(wv + b.lower, q);
      up += a * std::pow(wv + b.upper, q);
    }
    if (row.infinite_support() && k >= k_e) {
      const double tail = row.tail_mass(k + 1) * std::pow(wv, q);
      if (tail < kRhsTruncationTol) {
        done = true;
        break;
      }
    }
  }
  out.lower = std::pow(lo, 1.0 / q);
  out.upper = std::pow(up, 1.0 / q);
  out.truncated_ok = done;
  return out;
}

}  // namespace

double OmegaCache::omega(double delta, double p) {
  const auto key = std::make_pair(delta, p);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const double v = omega_modulus(*f_, delta, p);
  cache_.emplace(key, v);
  return v;
}

RatioReport prop4_ratio(const APFunction& f, const std::string& f_id, double x,
                        long n, double q, const ModulusFunction& w) {
  if (!(q > 0.0) || q > 2.0)
    throw std::invalid_argument("prop4 requires 0 < q <= 2");
  RatioReport r;
  r.inequality_id = "prop4";
  r.f_id = f_id;
  r.x = x;
  r.n = n;
  r.q = q;
  r.lhs = block_strong_mean(f, x, n, q);
  const double wv = w(M_PI / static_cast<double>(n + 1));
  const ApproxBracket b = best_approx_bracket(f, 0.5 * f.alpha() * n);
  r.rhs_lower = wv + b.lower;
  r.rhs_upper = wv + b.upper;
  finish_ratio(r);
  return r;
}

RatioReport thm5_ratio(const APFunction& f, const std::string& f_id, double x,
                       long n, double q, const MatrixRow& row, double c,
                       const ModulusFunction& w, const bool* gm2beta_member) {
  if (!(q > 0.0) || q > 2.0)
    throw std::invalid_argument("thm5 requires 0 < q <= 2");
  if (!(c > 1.0)) throw std::invalid_argument("thm5 requires c > 1");
  RatioReport r;
  r.inequality_id = "thm5";
  r.f_id = f_id;
  r.x = x;
  r.n = n;
  r.q = q;
  r.c = c;
  r.row_family = row.family_name();
  const bool member =
      gm2beta_member ? *gm2beta_member : gm2beta_constant(row, c).member;
  if (!member) add_flag(r.flags, "gm2beta-check-failed");
  r.lhs = strong_mean(f, x, row, q);
  const double e_denom = std::pow(2.0, 1.0 + std::floor(c));
  const RhsPair rhs = matrix_rhs(row, w, f, q, e_denom);
  if (!rhs.truncated_ok) add_flag(r.flags, "rhs-truncation-cap");
  r.rhs_lower = rhs.lower;
  r.rhs_upper = rhs.upper;
  finish_ratio(r);
  return r;
}

RatioReport thm6_ratio(const APFunction& f, const std::string& f_id, double x,
                       long n, double q, const MatrixRow& row,
                       const ModulusFunction& w) {
  if (!(q > 0.0) || q > 2.0)
    throw std::invalid_argument("thm6 requires 0 < q <= 2");
  if (!ms_check(row).member)
    throw std::invalid_argument("thm6 requires an MS row");
  RatioReport r;
  r.inequality_id = "thm6";
  r.f_id = f_id;
  r.x = x;
  r.n = n;
  r.q = q;
  r.row_family = row.family_name();
  r.lhs = strong_mean(f, x, row, q);
  const RhsPair rhs = matrix_rhs(row, w, f, q, 2.0);
  if (!rhs.truncated_ok) add_flag(r.flags, "rhs-truncation-cap");
  r.rhs_lower = rhs.lower;
  r.rhs_upper = rhs.upper;
  finish_ratio(r);
  return r;
}

RatioReport thm3_comparison(const APFunction& f, const std::string& f_id,
                            long n, double q, std::span<const double> x_grid,
                            OmegaCache& omega_cache) {
  if (!(q >= 2.0)) throw std::invalid_argument("thm3 requires q >= 2");
  RatioReport r;
  r.inequality_id = "thm3";
  r.f_id = f_id;
  r.n = n;
  r.q = q;
  r.row_family = "cesaro";
  const MatrixRow row = MatrixRow::cesaro(n);
  for (double x : x_grid) r.lhs = std::max(r.lhs, strong_mean(f, x, row, q));
  double sum = 0.0;
  for (long k = 0; k <= n; ++k)
    sum += std::pow(
        omega_cache.omega(M_PI / static_cast<double>(k + 1), kInfinityP), q);
  const double inv = 1.0 / static_cast<double>(n + 1);
  const double rhs =
      std::pow(sum * inv, 1.0 / q) +
      stepanov_norm(f, kInfinityP) * std::pow(inv, 1.0 / q);
  r.rhs_lower = rhs;
  r.rhs_upper = rhs;
  finish_ratio(r);
  return r;
}

RatioReport thm2_norm_ratio(const APFunction& f, const std::string& f_id,
                            long n, double q, const MatrixRow& row, double c,
                            OmegaCache& omega_cache) {
  constexpr double p = 2.0;
  if (!(p >= q)) throw std::invalid_argument("thm2 requires p >= q");
  RatioReport r;
  r.inequality_id = "thm2";
  r.f_id = f_id;
  r.n = n;
  r.q = q;
  r.c = c;
  r.row_family = row.family_name();
  if (!gm2beta_constant(row, c).member)
    add_flag(r.flags, "gm2beta-check-failed");

  // S^2 norm proxy of x -> H^q f(x) from a dense sample over [0, 4 pi].
  constexpr int kSamples = 257;
  const double span = 4.0 * M_PI;
  std::vector<double> h2(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    const double x = span * i / (kSamples - 1);
    const double v = strong_mean(f, x, row, q);
    h2[i] = v * v;
  }
  const double dx = span / (kSamples - 1);
  std::vector<double> prefix(kSamples, 0.0);
  for (int i = 1; i < kSamples; ++i)
    prefix[i] = prefix[i - 1] + 0.5 * (h2[i] + h2[i - 1]) * dx;
  const int window = static_cast<int>(std::round(M_PI / dx));
  double best = 0.0;
  for (int i = 0; i + window < kSamples; ++i)
    best = std::max(best, (prefix[i + window] - prefix[i]) / M_PI);
  r.lhs = std::sqrt(best);

  // RHS: {sum_k a_{n,k} omega^q f(pi/(k+1))_{S^2}}^{1/q}, truncated via the
  // monotone omega bound for infinite rows.
  double sum = 0.0;
  bool done = false;
  constexpr long kOmegaCap = 512;
  for (long k = 0; k <= kOmegaCap; ++k) {
    if (!row.infinite_support() && k > row.support_end()) {
      done = true;
      break;
    }
    const double a = row.entry(k);
    const double om = omega_cache.omega(M_PI / static_cast<double>(k + 1), p);
    if (a > 0.0) sum += a * std::pow(om, q);
    if (row.infinite_support() &&
        row.tail_mass(k + 1) * std::pow(om, q) < kRhsTruncationTol) {
      done = true;
      break;
    }
  }
  if (!done) add_flag(r.flags, "rhs-truncation-cap");
  const double rhs = std::pow(sum, 1.0 / q);
  r.rhs_lower = rhs;
  r.rhs_upper = rhs;
  finish_ratio(r);
  return r;
}

std::vector<double> default_x_grid(const APFunction& f) {
  const std::optional<double> period = f.common_period();
  const double span =
      (period && *period <= 40.0 * M_PI) ? *period : 8.0 * M_PI;
  std::vector<double> grid(17);
  for (int i = 0; i < 17; ++i) grid[i] = span * i / 17.0;
  return grid;
}

namespace {

MatrixRow make_row(const std::string& family, long n) {
  if (family == "cesaro") return MatrixRow::cesaro(n);
  if (family == "riesz") return MatrixRow::riesz(n);
  if (family == "abel") return MatrixRow::abel(n);
  throw std::invalid_argument("unknown row family: " + family);
}

bool wants(const SweepConfig& cfg, const std::string& id) {
  return std::find(cfg.inequalities.begin(), cfg.inequalities.end(), id) !=
         cfg.inequalities.end();
}

}  // namespace

SweepResult sweep(const SweepConfig& config) {
  if (config.functions.empty())
    throw std::invalid_argument("config.functions must be nonempty");
  if (config.q_list.empty())
    throw std::invalid_argument("config.q_list must be nonempty");
  if (config.n_hi < config.n_lo)
    throw std::invalid_argument("config n-range is empty");
  config.quad.validate();

  SweepResult result;

  for (const auto& [f_id, f] : config.functions) {
    const std::vector<double> x_grid =
        config.x_grid.empty() ? default_x_grid(f) : config.x_grid;
    const std::vector<double> dgrid = default_delta_grid();

    // Fitted moduli per x; cells are independent, emission order is fixed.
    std::vector<ModulusFunction> fitted(x_grid.size());
    if (config.threads > 1) {
      std::vector<std::future<ModulusFunction>> futs;
      futs.reserve(x_grid.size());
      for (double x : x_grid)
        futs.push_back(std::async(std::launch::async, [&, x] {
          return fit_modulus(f, x, dgrid);
        }));
      for (std::size_t i = 0; i < futs.size(); ++i) fitted[i] = futs[i].get();
    } else {
      for (std::size_t i = 0; i < x_grid.size(); ++i)
        fitted[i] = fit_modulus(f, x_grid[i], dgrid);
    }

    OmegaCache omega_cache(f);

    if (wants(config, "prop4")) {
      for (std::size_t xi = 0; xi < x_grid.size(); ++xi)
        for (double q : config.q_list) {
          if (q > 2.0) continue;
          for (long n = config.n_lo; n <= config.n_hi; ++n)
            result.reports.push_back(
                prop4_ratio(f, f_id, x_grid[xi], n, q, fitted[xi]));
        }
    }
    for (const SweepRowSpec& spec : config.rows) {
      for (long n = spec.n_lo; n <= spec.n_hi; ++n) {
        const MatrixRow row = make_row(spec.family, n);
        const bool is_ms = ms_check(row).member;
        const bool gm2beta_ok = gm2beta_constant(row, config.c).member;
        for (std::size_t xi = 0; xi < x_grid.size(); ++xi)
          for (double q : config.q_list) {
            if (q > 2.0) continue;
            if (wants(config, "thm5"))
              result.reports.push_back(thm5_ratio(f, f_id, x_grid[xi], n, q,
                                                  row, config.c, fitted[xi],
                                                  &gm2beta_ok));
            if (wants(config, "thm6") && is_ms)
              result.reports.push_back(
                  thm6_ratio(f, f_id, x_grid[xi], n, q, row, fitted[xi]));
          }
        if (wants(config, "thm2"))
          for (double q : config.q_list)
            if (q <= 2.0)
              result.reports.push_back(
                  thm2_norm_ratio(f, f_id, n, q, row, config.c, omega_cache));
      }
    }
    if (wants(config, "thm3")) {
      for (double q : config.q_list) {
        if (q < 2.0) continue;
        for (long n = config.n_lo; n <= config.n_hi; ++n)
          result.reports.push_back(
              thm3_comparison(f, f_id, n, q, x_grid, omega_cache));
      }
    }
    if (wants(config, "remark7")) {
      // rhs(thm6) vs rhs(thm3-style) for Cesaro rows at q = 2; thm6's
      // pointwise RHS enters through its max over the x grid.
      for (long n = config.n_lo; n <= config.n_hi; ++n) {
        const MatrixRow row = MatrixRow::cesaro(n);
        RatioReport r;
        r.inequality_id = "remark7";
        r.f_id = f_id;
        r.n = n;
        r.q = 2.0;
        r.row_family = "cesaro";
        for (std::size_t xi = 0; xi < x_grid.size(); ++xi)
          r.lhs = std::max(
              r.lhs,
              thm6_ratio(f, f_id, x_grid[xi], n, 2.0, row, fitted[xi])
                  .rhs_lower);
        const RatioReport t3 =
            thm3_comparison(f, f_id, n, 2.0, x_grid, omega_cache);
        r.rhs_lower = t3.rhs_lower;
        r.rhs_upper = t3.rhs_upper;
        finish_ratio(r);
        result.reports.push_back(std::move(r));
      }
    }
  }

  // Per-(inequality, f) non-divergence statistic and per-inequality maxima.
  const long mid = (config.n_lo + config.n_hi) / 2;
  std::map<std::pair<std::string, std::string>, NonDivergenceStat> stats;
  for (const RatioReport& r : result.reports) {
    if (!r.ratio_defined || std::isinf(r.ratio)) continue;
    auto& mx = result.max_ratio[r.inequality_id];
    mx = std::max(mx, r.ratio);
    auto& st = stats[{r.inequality_id, r.f_id}];
    st.inequality_id = r.inequality_id;
    st.f_id = r.f_id;
    if (r.n <= mid)
      st.lower_half_max = std::max(st.lower_half_max, r.ratio);
    else
      st.upper_half_max = std::max(st.upper_half_max, r.ratio);
  }
  for (auto& [key, st] : stats) result.stats.push_back(st);
  return result;
}

std::string reports_to_csv(const std::vector<RatioReport>& reports,
                           const std::string& header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  out << "inequality_id,f_id,x,n,q,c,row_family,lhs,rhs_lower,rhs_upper,"
         "ratio,flags\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
  };
  for (const RatioReport& r : reports) {
    out << r.inequality_id << ',' << r.f_id << ',' << num(r.x) << ',' << r.n
        << ',' << num(r.q) << ',' << num(r.c) << ',' << r.row_family << ','
        << num(r.lhs) << ',' << num(r.rhs_lower) << ',' << num(r.rhs_upper)
        << ',' << (r.ratio_defined ? num(r.ratio) : std::string("undefined"))
        << ',' << r.flags << '\n';
  }
  return out.str();
}

}  // namespace apsumma
