#include <cmath>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "neqxx/entanglement.hpp"
#include "neqxx/steady.hpp"
#include "neqxx/sweep.hpp"

using namespace neqxx;

TEST_CASE("run_point at equal temperatures reproduces the Gibbs state") {
  SweepSpec spec;
  spec.epsilon = 1.0;
  spec.j1 = spec.j2 = 1.0;
  spec.tl = spec.tr = 0.2;
  const SweepRow row = run_point(spec);
  CHECK(std::abs(row.c12 - row.c23) <= 1e-8);
  CHECK(row.residual <= 1e-9);
  CHECK(row.null_gap > 1e-8);

  const ModelParams p = make_params(1.0, 1.0, 1.0);
  const Mat8 gibbs = gibbs_state(hamiltonian(p), 0.2);
  const auto gp = eigenstate_populations(gibbs, analytic_eigensystem(p));
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(row.populations[i] - gp[i]) <= 1e-8);
  }
}

TEST_CASE("run_point with both solvers cross-validates") {
  SweepSpec spec;
  spec.epsilon = 3.0;
  spec.j1 = 0.5;
  spec.j2 = 2.5;
  spec.tm = 0.4;
  spec.dt = 0.3;
  spec.solver = SolverChoice::Both;
  const SweepRow row = run_point(spec);
  CHECK(row.tl == doctest::Approx(0.55));
  CHECK(row.tr == doctest::Approx(0.25));
  CHECK_FALSE(row.singular);
}

TEST_CASE("tm/dt validation") {
  SweepSpec spec;
  spec.tm = 0.2;
  spec.dt = 0.5;  // tr would be negative
  CHECK_THROWS_AS(run_point(spec), ParameterDomainError);
}

TEST_CASE("rate-singular grid points are flagged, not fatal") {
  SweepSpec spec;
  spec.epsilon = 5.0;
  spec.tl = spec.tr = 0.5;
  spec.mode = SweepMode::CouplingGrid;
  // j1 axis passes through J = 5 at j1 = 3 (j2 = 4)
  spec.j2 = 4.0;
  spec.axes = {{"j1", 2.0, 4.0, 3}};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 3);
  CHECK_FALSE(rows[0].singular);
  CHECK(rows[1].singular);
  CHECK_FALSE(rows[2].singular);
  CHECK(rows[1].j1 == doctest::Approx(3.0));
}

TEST_CASE("sweep-level mirror invariance") {
  SweepSpec spec;
  spec.epsilon = 3.0;
  spec.j1 = 0.5;
  spec.j2 = 2.5;
  spec.tm = 0.5;
  spec.mode = SweepMode::TmDtGrid;
  spec.axes = {{"dt", -0.4, 0.4, 5}};
  const auto rows = run_sweep(spec);

  SweepSpec mirrored = spec;
  mirrored.j1 = 2.5;
  mirrored.j2 = 0.5;
  const auto mrows = run_sweep(mirrored);

  REQUIRE(rows.size() == mrows.size());
  const size_t n = rows.size();
  for (size_t i = 0; i < n; ++i) {
    // dt -> -dt is the reversed grid order
    const SweepRow& a = rows[i];
    const SweepRow& b = mrows[n - 1 - i];
    CHECK(std::abs(a.c12 - b.c23) <= 1e-8);
    CHECK(std::abs(a.c23 - b.c12) <= 1e-8);
    CHECK(std::abs(a.c13 - b.c13) <= 1e-8);
  }
}

TEST_CASE("symmetric couplings give equal nearest-neighbor concurrences") {
  SweepSpec spec;
  spec.epsilon = 1.0;
  spec.j1 = spec.j2 = 1.0;
  spec.mode = SweepMode::TempGrid;
  spec.axes = {{"tl", 0.1, 1.0, 4}, {"tr", 0.1, 1.0, 4}};
  for (const SweepRow& row : run_sweep(spec)) {
    CHECK(std::abs(row.c12 - row.c23) <= 1e-8);
  }
}

TEST_CASE("grid axes are validated") {
  SweepSpec spec;
  spec.mode = SweepMode::TempGrid;
  spec.axes = {{"tl", 0.1, 1.0, 1}};
  CHECK_THROWS_AS(run_sweep(spec), ParameterDomainError);
  spec.axes = {{"bogus", 0.1, 1.0, 3}};
  CHECK_THROWS_AS(run_sweep(spec), ParameterDomainError);
  spec.axes = {{"tl", 1.0, 0.1, 3}};
  CHECK_THROWS_AS(run_sweep(spec), ParameterDomainError);
}

TEST_CASE("CSV emission layout and determinism") {
  SweepSpec spec;
  spec.mode = SweepMode::TempGrid;
  spec.axes = {{"tl", 0.3, 0.6, 2}, {"tr", 0.3, 0.6, 2}};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 4);

  const std::string csv = emit(rows, OutputFormat::Csv);
  int lines = 0;
  for (char ch : csv) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 5);
  CHECK(csv.rfind("epsilon,j1,j2,tl,tr,gamma_l,gamma_r,c12,c13,c23,"
                  "p1,p2,p3,p4,p5,p6,p7,p8,residual,null_gap,singular\n",
                  0) == 0);

  // identical spec run twice -> byte-identical output
  const auto rows2 = run_sweep(spec);
  CHECK(emit(rows2, OutputFormat::Csv) == csv);
}

TEST_CASE("JSON round-trip preserves the fields") {
  SweepSpec spec;
  spec.tl = 0.7;
  spec.tr = 0.4;
  const SweepRow row = run_point(spec);
  const std::string text = emit({row}, OutputFormat::Json);
  const auto parsed = nlohmann::json::parse(text);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0]["tl"].get<double>() == row.tl);
  CHECK(parsed[0]["c12"].get<double>() == row.c12);
  CHECK(parsed[0]["p6"].get<double>() == row.populations[5]);
  CHECK(parsed[0]["null_gap"].get<double>() == row.null_gap);
  CHECK(parsed[0]["singular"].get<bool>() == row.singular);
}

TEST_CASE("presets pin the printed parameter sets") {
  const SweepSpec fig2 = preset_spec("fig2");
  CHECK(fig2.epsilon == 1.0);
  CHECK(fig2.j1 == 1.0);
  const SweepSpec fig4 = preset_spec("fig4");
  CHECK(fig4.epsilon == 3.0);
  CHECK(fig4.j1 == 0.5);
  CHECK(fig4.j2 == 2.5);
  const SweepSpec fig6 = preset_spec("fig6");
  CHECK(*fig6.tm == 0.5);
  CHECK(*fig6.dt == -0.4);
  CHECK_THROWS_AS(preset_spec("fig7"), ParameterDomainError);
}
