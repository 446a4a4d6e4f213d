#include "apsumma/serialization.hpp"

#include <sstream>

#include "apsumma/fixtures.hpp"

namespace apsumma {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("complex value must be a [re, im] pair");
  return Complex{j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json apfunction_to_json(const APFunction& f) {
  Json terms = Json::array();
  for (const Term& t : f.terms()) {
    terms.push_back({{"lambda", t.lambda},
                     {"a_plus", complex_to_json(t.a_plus)},
                     {"a_minus", complex_to_json(t.a_minus)}});
  }
  return {{"alpha", f.alpha()}, {"terms", terms}};
}

APFunction apfunction_from_json(const Json& j) {
  if (!j.contains("alpha")) throw std::invalid_argument("missing field: alpha");
  if (!j.contains("terms")) throw std::invalid_argument("missing field: terms");
  std::vector<Term> terms;
  for (const Json& tj : j.at("terms")) {
    Term t;
    t.lambda = tj.at("lambda").get<double>();
    if (tj.contains("a_plus")) t.a_plus = complex_from_json(tj.at("a_plus"));
    if (tj.contains("a_minus")) t.a_minus = complex_from_json(tj.at("a_minus"));
    terms.push_back(t);
  }
  return APFunction(std::move(terms), j.at("alpha").get<double>());
}

Json matrix_row_to_json(const MatrixRow& row) {
  if (row.family() == RowFamily::Explicit) {
    std::vector<double> entries;
    for (long k = 0; k <= row.support_end(); ++k)
      entries.push_back(row.entry(k));
    return {{"explicit", entries}, {"n", row.n()}};
  }
  Json j = {{"family", row.family_name()}, {"n", row.n()}};
  if (row.family() == RowFamily::Abel) j["params"] = {{"r", row.abel_r()}};
  return j;
}

MatrixRow matrix_row_from_json(const Json& j) {
  const long n = j.value("n", 0L);
  if (j.contains("explicit"))
    return MatrixRow::explicit_row(j.at("explicit").get<std::vector<double>>(),
                                   n);
  const std::string family = j.at("family").get<std::string>();
  if (family == "cesaro") return MatrixRow::cesaro(n);
  if (family == "riesz") return MatrixRow::riesz(n);
  if (family == "abel") {
    if (j.contains("params") && j.at("params").contains("r"))
      return MatrixRow::abel_ratio(j.at("params").at("r").get<double>(), n);
    return MatrixRow::abel(n);
  }
  throw std::invalid_argument("unknown row family: " + family);
}

Json modulus_to_json(const ModulusFunction& w) {
  return {{"grid", w.grid()}, {"values", w.values()}};
}

ModulusFunction modulus_from_json(const Json& j) {
  return ModulusFunction(j.at("grid").get<std::vector<double>>(),
                         j.at("values").get<std::vector<double>>());
}

Json sweep_config_to_json(const SweepConfig& cfg) {
  Json functions = Json::array();
  for (const auto& [id, f] : cfg.functions) {
    Json fj = apfunction_to_json(f);
    fj["id"] = id;
    functions.push_back(fj);
  }
  Json rows = Json::array();
  for (const SweepRowSpec& r : cfg.rows)
    rows.push_back({{"family", r.family}, {"n_lo", r.n_lo}, {"n_hi", r.n_hi}});
  return {{"functions", functions},
          {"rows", rows},
          {"q_list", cfg.q_list},
          {"c", cfg.c},
          {"x_grid", cfg.x_grid},
          {"n_lo", cfg.n_lo},
          {"n_hi", cfg.n_hi},
          {"inequalities", cfg.inequalities},
          {"threads", cfg.threads},
          {"quadrature",
           {{"tail_cutoff", cfg.quad.tail_cutoff},
            {"panels_per_oscillation", cfg.quad.panels_per_oscillation},
            {"abs_tolerance", cfg.quad.abs_tolerance}}}};
}

SweepConfig sweep_config_from_json(const Json& j) {
  SweepConfig cfg;
  cfg.functions.clear();
  if (!j.contains("functions"))
    throw std::invalid_argument("config: missing field functions");
  int idx = 0;
  for (const Json& fj : j.at("functions")) {
    std::string id = fj.value("id", "f" + std::to_string(idx));
    try {
      cfg.functions.emplace_back(id, apfunction_from_json(fj));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config: functions[" + std::to_string(idx) +
                                  "]: " + e.what());
    }
    ++idx;
  }
  cfg.rows.clear();
  for (const Json& rj : j.value("rows", Json::array())) {
    SweepRowSpec spec;
    spec.family = rj.at("family").get<std::string>();
    spec.n_lo = rj.value("n_lo", 2L);
    spec.n_hi = rj.value("n_hi", 64L);
    cfg.rows.push_back(spec);
  }
  if (j.contains("q_list")) cfg.q_list = j.at("q_list").get<std::vector<double>>();
  cfg.c = j.value("c", 2.0);
  if (j.contains("x_grid"))
    cfg.x_grid = j.at("x_grid").get<std::vector<double>>();
  cfg.n_lo = j.value("n_lo", 2L);
  cfg.n_hi = j.value("n_hi", 64L);
  if (j.contains("inequalities"))
    cfg.inequalities = j.at("inequalities").get<std::vector<std::string>>();
  cfg.threads = j.value("threads", 1);
  if (j.contains("quadrature")) {
    const Json& qj = j.at("quadrature");
    cfg.quad.tail_cutoff = qj.value("tail_cutoff", 0.0);
    cfg.quad.panels_per_oscillation = qj.value("panels_per_oscillation", 4);
    cfg.quad.abs_tolerance = qj.value("abs_tolerance", 1e-6);
  }
  return cfg;
}

std::string class_reports_to_csv(
    const std::vector<std::pair<long, ClassReport>>& rows) {
  std::ostringstream out;
  out << "n,class,member,K,witness_m\n";
  char buf[64];
  for (const auto& [n, rep] : rows) {
    out << n << ',' << rep.class_name << ',' << (rep.member ? "true" : "false")
        << ',';
    if (rep.has_K) {
      std::snprintf(buf, sizeof(buf), "%.12g", rep.K);
      out << buf;
    }
    out << ',' << rep.witness_m << '\n';
  }
  return out.str();
}

}  // namespace apsumma
