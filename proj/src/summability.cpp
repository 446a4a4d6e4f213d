#include "apsumma/summability.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace apsumma {

namespace {
constexpr double kZeroEps = 1e-15;
constexpr long kGeneratorScanDefault = 1L << 14;
}  // namespace

MatrixRow MatrixRow::explicit_row(std::vector<double> entries, long n) {
  for (double v : entries)
    if (!(v >= 0.0)) throw std::invalid_argument("row entries must be >= 0");
  if (entries.empty()) throw std::invalid_argument("empty explicit row");
  MatrixRow row;
  row.family_ = RowFamily::Explicit;
  row.n_ = n;
  row.support_end_ = static_cast<long>(entries.size()) - 1;
  while (row.support_end_ > 0 && entries[row.support_end_] == 0.0)
    --row.support_end_;
  row.entries_ = std::move(entries);
  return row;
}

MatrixRow MatrixRow::cesaro(long n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  MatrixRow row;
  row.family_ = RowFamily::Cesaro;
  row.n_ = n;
  row.support_end_ = n;
  return row;
}

MatrixRow MatrixRow::riesz(long n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  MatrixRow row;
  row.family_ = RowFamily::Riesz;
  row.n_ = n;
  row.support_end_ = n;
  return row;
}

MatrixRow MatrixRow::abel(long n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  return abel_ratio(1.0 - 1.0 / static_cast<double>(n + 1), n);
}

MatrixRow MatrixRow::abel_ratio(double r, long n) {
  if (!(r >= 0.0) || !(r < 1.0))
    throw std::invalid_argument("abel ratio must lie in [0, 1)");
  MatrixRow row;
  row.family_ = RowFamily::Abel;
  row.n_ = n;
  row.r_ = r;
  row.support_end_ = -1;
  return row;
}

double MatrixRow::entry(long k) const {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  switch (family_) {
    case RowFamily::Explicit:
      return k < static_cast<long>(entries_.size()) ? entries_[k] : 0.0;
    case RowFamily::Cesaro:
      return k <= n_ ? 1.0 / static_cast<double>(n_ + 1) : 0.0;
    case RowFamily::Riesz: {
      if (k > n_) return 0.0;
      const double total = 0.5 * static_cast<double>(n_ + 1) *
                           static_cast<double>(n_ + 2);
      return static_cast<double>(k + 1) / total;
    }
    case RowFamily::Abel:
      return (1.0 - r_) * std::pow(r_, static_cast<double>(k));
  }
  return 0.0;
}

std::string MatrixRow::family_name() const {
  switch (family_) {
    case RowFamily::Explicit:
      return "explicit";
    case RowFamily::Cesaro:
      return "cesaro";
    case RowFamily::Riesz:
      return "riesz";
    case RowFamily::Abel:
      return "abel";
  }
  return "?";
}

double MatrixRow::total_mass() const {
  switch (family_) {
    case RowFamily::Explicit: {
      double s = 0.0;
      for (double v : entries_) s += v;
      return s;
    }
    case RowFamily::Cesaro:
    case RowFamily::Riesz:
    case RowFamily::Abel:
      return 1.0;
  }
  return 0.0;
}

double MatrixRow::tail_mass(long k) const {
  if (family_ == RowFamily::Abel) return std::pow(r_, static_cast<double>(k));
  double s = 0.0;
  for (long j = k; j <= support_end_; ++j) s += entry(j);
  return s;
}

double MatrixRow::tail_variation(long m) const {
  if (family_ == RowFamily::Abel) return entry(m);  // monotone telescoping
  double s = 0.0;
  for (long k = m; k <= support_end_; ++k)
    s += std::abs(entry(k) - entry(k + 1));
  return s;
}

long MatrixRow::default_m_max() const {
  if (infinite_support()) return kGeneratorScanDefault;
  return std::max(2L * support_end_, 4L);
}

bool check_row_stochastic(const MatrixRow& row) {
  return std::abs(row.total_mass() - 1.0) <= 1e-12;
}

ClassReport ms_check(const MatrixRow& row) {
  ClassReport rep;
  rep.class_name = "MS";
  rep.member = true;
  if (row.family() == RowFamily::Abel) return rep;  // geometric decay
  for (long k = 0; k <= row.support_end(); ++k) {
    if (row.entry(k) < row.entry(k + 1) - kZeroEps) {
      rep.member = false;
      rep.witness_m = k;
      break;
    }
  }
  return rep;
}

namespace {

// Shared scan skeleton: maximize num(m)/den(m) over 1 <= m <= m_max with the
// zero-denominator rule (nonzero numerator over a zero entry fails the class,
// 0/0 blocks are skipped).
ClassReport ratio_scan(const std::string& name, long m_lo, long m_max,
                       const std::function<double(long)>& num,
                       const std::function<double(long)>& den) {
  ClassReport rep;
  rep.class_name = name;
  rep.member = true;
  rep.has_K = true;
  rep.K = 0.0;
  rep.witness_m = m_lo;
  for (long m = m_lo; m <= m_max; ++m) {
    const double n = num(m);
    const double d = den(m);
    if (d <= kZeroEps) {
      if (n > kZeroEps) {
        rep.member = false;
        rep.has_K = false;
        rep.K = 0.0;
        rep.witness_m = m;
        return rep;
      }
      continue;
    }
    const double ratio = n / d;
    if (ratio > rep.K) {
      rep.K = ratio;
      rep.witness_m = m;
    }
  }
  return rep;
}

}  // namespace

ClassReport rbvs_constant(const MatrixRow& row, long m_max) {
  if (m_max <= 0) m_max = row.default_m_max();
  // Suffix sums of |a_k - a_{k+1}| for finite rows; closed form for abel.
  if (row.infinite_support()) {
    return ratio_scan(
        "RBVS", 0, m_max, [&](long m) { return row.tail_variation(m); },
        [&](long m) { return row.entry(m); });
  }
  const long end = row.support_end();
  std::vector<double> suffix(static_cast<std::size_t>(end) + 3, 0.0);
  for (long k = end; k >= 0; --k)
    suffix[k] = suffix[k + 1] + std::abs(row.entry(k) - row.entry(k + 1));
  return ratio_scan(
      "RBVS", 0, m_max,
      [&](long m) { return m <= end ? suffix[m] : 0.0; },
      [&](long m) { return row.entry(m); });
}

ClassReport gm_constant(const MatrixRow& row, long m_max) {
  if (m_max <= 0) m_max = row.default_m_max();
  const long len = 2 * m_max + 2;
  std::vector<double> var_prefix(static_cast<std::size_t>(len) + 1, 0.0);
  for (long k = 0; k < len; ++k)
    var_prefix[k + 1] =
        var_prefix[k] + std::abs(row.entry(k) - row.entry(k + 1));
  return ratio_scan(
      "GM", 1, m_max,
      [&](long m) { return var_prefix[2 * m] - var_prefix[m]; },
      [&](long m) { return row.entry(m); });
}

ClassReport gm2beta_constant(const MatrixRow& row, double c, long m_max) {
  if (!(c > 1.0)) throw std::invalid_argument("c must be > 1");
  if (m_max <= 0) m_max = row.default_m_max();
  const long len = std::max(2 * m_max + 2,
                            static_cast<long>(std::floor(c * m_max)) + 2);
  std::vector<double> var_prefix(static_cast<std::size_t>(len) + 1, 0.0);
  std::vector<double> harm_prefix(static_cast<std::size_t>(len) + 1, 0.0);
  for (long k = 0; k < len; ++k) {
    var_prefix[k + 1] =
        var_prefix[k] + std::abs(row.entry(k) - row.entry(k + 1));
    harm_prefix[k + 1] =
        harm_prefix[k] + (k >= 1 ? row.entry(k) / static_cast<double>(k) : 0.0);
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "GM2BETA(c=%g)", c);
  return ratio_scan(
      buf, 1, m_max,
      [&](long m) { return var_prefix[2 * m] - var_prefix[m]; },
      [&](long m) {
        const long lo = std::max(1L, static_cast<long>(std::floor(m / c)));
        const long hi = static_cast<long>(std::floor(c * m));
        return harm_prefix[hi + 1] - harm_prefix[lo];
      });
}

std::vector<ClassReport> hierarchy_check(const MatrixRow& row, double c,
                                         long m_max) {
  return {ms_check(row), rbvs_constant(row, m_max), gm_constant(row, m_max),
          gm2beta_constant(row, c, m_max)};
}

}  // namespace apsumma
