#pragma once

#include <string>
#include <vector>

namespace apsumma {

enum class RowFamily { Explicit, Cesaro, Riesz, Abel };

// One row (a_{n,k})_k of a summability matrix: finite-support explicit list
// or a named generator with a closed-form tail.
class MatrixRow {
 public:
  static MatrixRow explicit_row(std::vector<double> entries, long n = 0);
  static MatrixRow cesaro(long n);
  // Riesz row with weights p_k = k+1: a_{n,k} = (k+1) / sum_{j<=n} (j+1).
  static MatrixRow riesz(long n);
  // Abel row with the paper's substitution r = 1 - 1/(n+1).
  static MatrixRow abel(long n);
  static MatrixRow abel_ratio(double r, long n);

  double entry(long k) const;
  bool infinite_support() const { return family_ == RowFamily::Abel; }
  long support_end() const { return support_end_; }  // finite rows only
  long n() const { return n_; }
  RowFamily family() const { return family_; }
  std::string family_name() const;
  double abel_r() const { return r_; }

  double total_mass() const;           // closed form for generators
  double tail_mass(long k) const;      // sum_{j >= k} a_j
  // sum_{k >= m} |a_k - a_{k+1}|, exact tail included.
  double tail_variation(long m) const;
  long default_m_max() const;

 private:
  MatrixRow() = default;
  RowFamily family_ = RowFamily::Explicit;
  long n_ = 0;
  long support_end_ = 0;
  double r_ = 0.0;
  std::vector<double> entries_;  // explicit rows only
};

struct ClassReport {
  std::string class_name;
  bool member = false;
  bool has_K = false;
  double K = 0.0;
  long witness_m = 0;
};

bool check_row_stochastic(const MatrixRow& row);
ClassReport ms_check(const MatrixRow& row);
ClassReport rbvs_constant(const MatrixRow& row, long m_max = 0);
ClassReport gm_constant(const MatrixRow& row, long m_max = 0);
ClassReport gm2beta_constant(const MatrixRow& row, double c, long m_max = 0);
// Runs all four checks in hierarchy order MS, RBVS, GM, GM(2beta).
std::vector<ClassReport> hierarchy_check(const MatrixRow& row, double c,
                                         long m_max = 0);

}  // namespace apsumma
