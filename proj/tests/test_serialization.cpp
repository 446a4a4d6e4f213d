#include <cmath>

#include <doctest.h>

#include "apsumma/fixtures.hpp"
#include "apsumma/serialization.hpp"

using namespace apsumma;

TEST_CASE("apfunction json round trip") {
  for (const Fixture& fx : fixture_corpus()) {
    const Json j = apfunction_to_json(fx.f);
    const APFunction g = apfunction_from_json(j);
    CHECK(g.alpha() == fx.f.alpha());
    REQUIRE(g.terms().size() == fx.f.terms().size());
    for (std::size_t i = 0; i < g.terms().size(); ++i) {
      CHECK(g.terms()[i].lambda == fx.f.terms()[i].lambda);
      CHECK(g.terms()[i].a_plus == fx.f.terms()[i].a_plus);
      CHECK(g.terms()[i].a_minus == fx.f.terms()[i].a_minus);
    }
    CHECK(apfunction_to_json(g) == j);
  }
}

TEST_CASE("apfunction json errors carry field context") {
  CHECK_THROWS_AS(apfunction_from_json(Json{{"terms", Json::array()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apfunction_from_json(Json{{"alpha", 1.0}}),
                  std::invalid_argument);
  const Json bad = {{"alpha", 1.0},
                    {"terms", {{{"lambda", 0.0}, {"a_plus", 5.0}}}}};
  CHECK_THROWS_WITH_AS(apfunction_from_json(bad),
                       doctest::Contains("[re, im]"), std::invalid_argument);
}

TEST_CASE("matrix row json round trip") {
  for (const MatrixRow& row :
       {MatrixRow::cesaro(5), MatrixRow::riesz(3), MatrixRow::abel(7),
        MatrixRow::explicit_row({0.5, 0.25, 0.25}, 2)}) {
    const MatrixRow back = matrix_row_from_json(matrix_row_to_json(row));
    CHECK(back.family() == row.family());
    CHECK(back.n() == row.n());
    for (long k = 0; k <= 10; ++k)
      CHECK(back.entry(k) == doctest::Approx(row.entry(k)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(matrix_row_from_json(Json{{"family", "nope"}, {"n", 1}}),
                  std::invalid_argument);
}

TEST_CASE("modulus json round trip") {
  const ModulusFunction w({0.5, 1.0}, {0.2, 0.3});
  const ModulusFunction back = modulus_from_json(modulus_to_json(w));
  CHECK(back.grid() == w.grid());
  CHECK(back.values() == w.values());
}

TEST_CASE("sweep config round trip is identity") {
  SweepConfig cfg;
  for (const Fixture& fx : fixture_corpus(1, 4))
    cfg.functions.emplace_back(fx.id, fx.f);
  cfg.rows = {{"cesaro", 2, 16}, {"abel", 4, 8}};
  cfg.q_list = {1.0, 2.0};
  cfg.c = 2.5;
  cfg.x_grid = {0.0, 1.5};
  cfg.n_lo = 3;
  cfg.n_hi = 20;
  cfg.inequalities = {"prop4", "thm6"};
  cfg.threads = 2;
  cfg.quad.tail_cutoff = 500.0;

  const Json j = sweep_config_to_json(cfg);
  const SweepConfig back = sweep_config_from_json(j);
  CHECK(sweep_config_to_json(back) == j);  // parse -> serialize -> parse

  CHECK_THROWS_WITH_AS(sweep_config_from_json(Json::object()),
                       doctest::Contains("functions"), std::invalid_argument);
  Json badf = j;
  badf["functions"][0]["alpha"] = -1.0;
  CHECK_THROWS_WITH_AS(sweep_config_from_json(badf),
                       doctest::Contains("functions[0]"),
                       std::invalid_argument);
}

TEST_CASE("class report csv") {
  std::vector<std::pair<long, ClassReport>> rows;
  rows.emplace_back(3, ClassReport{"MS", true, false, 0.0, 0});
  rows.emplace_back(3, ClassReport{"RBVS", true, true, 1.0, 2});
  const std::string csv = class_reports_to_csv(rows);
  CHECK(csv.find("n,class,member,K,witness_m") == 0);
  CHECK(csv.find("3,MS,true,,0") != std::string::npos);
  CHECK(csv.find("3,RBVS,true,1,2") != std::string::npos);
}
