#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "neqxx/types.hpp"

namespace neqxx {

enum class SolverChoice { NullSpace, Rk4, Both };
enum class OutputFormat { Csv, Json };
enum class SweepMode { Point, TempGrid, TmDtGrid, CouplingGrid };

struct Axis {
  std::string name;  // tl | tr | tm | dt | j1 | j2
  double min;
  double max;
  int count;
};

struct SweepSpec {
  SweepMode mode = SweepMode::Point;
  double epsilon = 1.0;
  double j1 = 1.0;
  double j2 = 1.0;
  double tl = 0.5;
  double tr = 0.5;
  std::optional<double> tm;       // with dt, overrides tl/tr
  std::optional<double> dt;
  double gamma_l = 0.05;
  double gamma_r = 0.05;
  SolverChoice solver = SolverChoice::NullSpace;
  std::vector<Axis> axes;         // last axis varies fastest
  OutputFormat format = OutputFormat::Csv;
  std::string out_path;           // empty = stdout
};

struct SweepRow {
  double epsilon, j1, j2, tl, tr, gamma_l, gamma_r;
  double c12, c13, c23;
  std::array<double, 8> populations;
  double residual;
  double null_gap;
  bool singular;
};

// Applies any tm/dt setting, solves one point, reduces to concurrences
// and eigenstate populations. With SolverChoice::Both the null-space and
// RK4 states must agree within trace distance 1e-6.
SweepRow run_point(const SweepSpec& spec);

// Cartesian product over spec.axes in deterministic grid order.
// Rate-singular grid points are emitted as flagged rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Fills parameters, axes, and mode for presets "fig2".."fig6".
SweepSpec preset_spec(const std::string& name);

std::string emit(const std::vector<SweepRow>& rows, OutputFormat format);
void emit_file(const std::vector<SweepRow>& rows, OutputFormat format,
               const std::string& path);

}  // namespace neqxx
