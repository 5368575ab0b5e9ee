#include "neqxx/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "neqxx/entanglement.hpp"
#include "neqxx/lindblad.hpp"
#include "neqxx/model.hpp"
#include "neqxx/steady.hpp"

namespace neqxx {

namespace {

constexpr double kCrossMethodTol = 1e-6;

void resolve_temperatures(SweepSpec& spec) {
  if (spec.tm || spec.dt) {
    const double tm = spec.tm.value_or(0.5 * (spec.tl + spec.tr));
    const double dt = spec.dt.value_or(0.0);
    if (!(std::abs(dt) < 2.0 * tm)) {
      throw ParameterDomainError(
          "temperature grid: |dt| must be below 2*tm so both baths stay "
          "at positive temperature");
    }
    spec.tl = tm + 0.5 * dt;
    spec.tr = tm - 0.5 * dt;
  }
  if (!(spec.tl > 0.0) || !(spec.tr > 0.0)) {
    throw ParameterDomainError("bath temperatures must be positive");
  }
}

void set_axis_value(SweepSpec& spec, const std::string& name, double value) {
  if (name == "tl") {
    spec.tl = value;
  } else if (name == "tr") {
    spec.tr = value;
  } else if (name == "tm") {
    spec.tm = value;
  } else if (name == "dt") {
    spec.dt = value;
  } else if (name == "j1") {
    spec.j1 = value;
  } else if (name == "j2") {
    spec.j2 = value;
  } else if (name == "epsilon") {
    spec.epsilon = value;
  } else {
    throw ParameterDomainError("unknown sweep axis: " + name);
  }
}

SweepRow singular_row(const SweepSpec& spec) {
  SweepRow row{};
  row.epsilon = spec.epsilon;
  row.j1 = spec.j1;
  row.j2 = spec.j2;
  row.tl = spec.tl;
  row.tr = spec.tr;
  row.gamma_l = spec.gamma_l;
  row.gamma_r = spec.gamma_r;
  row.singular = true;
  return row;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

SweepRow run_point(const SweepSpec& spec_in) {
  SweepSpec spec = spec_in;
  resolve_temperatures(spec);
  const ModelParams params = make_params(spec.epsilon, spec.j1, spec.j2);
  const BathSpec baths{spec.tl, spec.tr, spec.gamma_l, spec.gamma_r};

  Mat8 rho;
  SolveDiagnostics diag;
  try {
    switch (spec.solver) {
      case SolverChoice::NullSpace:
        std::tie(rho, diag) = steady_state_null(params, baths);
        break;
      case SolverChoice::Rk4:
        std::tie(rho, diag) = steady_state_rk4(params, baths);
        break;
      case SolverChoice::Both: {
        std::tie(rho, diag) = steady_state_null(params, baths);
        const auto [rho_rk4, diag_rk4] = steady_state_rk4(params, baths);
        if (trace_distance(rho, rho_rk4) > kCrossMethodTol) {
          throw ConsistencyError(
              "run_point: null-space and RK4 steady states disagree");
        }
        break;
      }
    }
  } catch (const RateSingularityError&) {
    throw;
  } catch (const std::exception& e) {
    throw std::runtime_error(
        "run_point(eps=" + format_double(spec.epsilon) +
        ", j1=" + format_double(spec.j1) + ", j2=" + format_double(spec.j2) +
        ", tl=" + format_double(spec.tl) + ", tr=" + format_double(spec.tr) +
        "): " + e.what());
  }

  SweepRow row{};
  row.epsilon = spec.epsilon;
  row.j1 = spec.j1;
  row.j2 = spec.j2;
  row.tl = spec.tl;
  row.tr = spec.tr;
  row.gamma_l = spec.gamma_l;
  row.gamma_r = spec.gamma_r;
  const ConcurrenceTriple c = pairwise_concurrences(rho);
  row.c12 = c.c12;
  row.c13 = c.c13;
  row.c23 = c.c23;
  row.populations = eigenstate_populations(rho, analytic_eigensystem(params));
  row.residual = diag.residual;
  row.null_gap = diag.null_gap;
  row.singular = false;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.mode != SweepMode::Point) {
    if (spec.axes.empty()) {
      throw ParameterDomainError("grid sweep needs at least one axis");
    }
    for (const Axis& axis : spec.axes) {
      if (axis.count < 2) {
        throw ParameterDomainError("axis '" + axis.name +
                                   "' needs at least 2 points");
      }
      if (!(axis.min < axis.max)) {
        throw ParameterDomainError("axis '" + axis.name +
                                   "' needs min < max");
      }
    }
  }

  std::vector<SweepRow> rows;
  std::function<void(SweepSpec&, size_t)> recurse = [&](SweepSpec& point,
                                                        size_t depth) {
    if (depth == spec.axes.size()) {
      try {
        rows.push_back(run_point(point));
      } catch (const RateSingularityError&) {
        SweepSpec resolved = point;
        resolve_temperatures(resolved);
        rows.push_back(singular_row(resolved));
      }
      return;
    }
    const Axis& axis = spec.axes[depth];
    for (int k = 0; k < axis.count; ++k) {
      const double value =
          axis.min + (axis.max - axis.min) * k / (axis.count - 1);
      set_axis_value(point, axis.name, value);
      recurse(point, depth + 1);
    }
  };
  SweepSpec point = spec;
  if (spec.axes.empty()) {
    rows.push_back(run_point(point));
  } else {
    recurse(point, 0);
  }
  return rows;
}

SweepSpec preset_spec(const std::string& name) {
  SweepSpec spec;
  if (name == "fig2" || name == "fig3") {
    // C12/C13 over the two bath temperatures, symmetric couplings.
    spec.mode = SweepMode::TempGrid;
    spec.epsilon = (name == "fig2") ? 1.0 : 3.0;
    spec.j1 = spec.j2 = 1.0;
    spec.axes = {{"tl", 0.05, 2.0, 40}, {"tr", 0.05, 2.0, 40}};
  } else if (name == "fig4") {
    // Concurrences over (T_M, dT), nonsymmetric couplings.
    spec.mode = SweepMode::TmDtGrid;
    spec.epsilon = 3.0;
    spec.j1 = 0.5;
    spec.j2 = 2.5;
    spec.axes = {{"tm", 0.2, 1.0, 5}, {"dt", -0.35, 0.35, 41}};
  } else if (name == "fig5") {
    // Eigenstate populations vs dT at fixed T_M, nonsymmetric couplings.
    spec.mode = SweepMode::TmDtGrid;
    spec.epsilon = 3.0;
    spec.j1 = 0.5;
    spec.j2 = 2.5;
    spec.tm = 0.4;
    spec.axes = {{"dt", -0.75, 0.75, 41}};
  } else if (name == "fig6") {
    // Concurrences over the two couplings at fixed temperatures.
    spec.mode = SweepMode::CouplingGrid;
    spec.epsilon = 3.0;
    spec.tm = 0.5;
    spec.dt = -0.4;
    spec.axes = {{"j1", 0.1, 3.0, 21}, {"j2", 0.1, 3.0, 21}};
  } else {
    throw ParameterDomainError("unknown preset: " + name);
  }
  return spec;
}

std::string emit(const std::vector<SweepRow>& rows, OutputFormat format) {
  if (rows.empty()) {
    throw ParameterDomainError("emit: empty table");
  }
  if (format == OutputFormat::Csv) {
    std::string out =
        "epsilon,j1,j2,tl,tr,gamma_l,gamma_r,c12,c13,c23,"
        "p1,p2,p3,p4,p5,p6,p7,p8,residual,null_gap,singular\n";
    for (const SweepRow& r : rows) {
      const double fields[] = {r.epsilon, r.j1,  r.j2,  r.tl,  r.tr,
                               r.gamma_l, r.gamma_r, r.c12, r.c13, r.c23};
      for (double f : fields) {
        out += format_double(f);
        out += ',';
      }
      for (double p : r.populations) {
        out += format_double(p);
        out += ',';
      }
      out += format_double(r.residual);
      out += ',';
      out += format_double(r.null_gap);
      out += ',';
      out += r.singular ? '1' : '0';
      out += '\n';
    }
    return out;
  }

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    nlohmann::ordered_json obj;
    obj["epsilon"] = r.epsilon;
    obj["j1"] = r.j1;
    obj["j2"] = r.j2;
    obj["tl"] = r.tl;
    obj["tr"] = r.tr;
    obj["gamma_l"] = r.gamma_l;
    obj["gamma_r"] = r.gamma_r;
    obj["c12"] = r.c12;
    obj["c13"] = r.c13;
    obj["c23"] = r.c23;
    for (int i = 0; i < 8; ++i) {
      obj["p" + std::to_string(i + 1)] = r.populations[i];
    }
    obj["residual"] = r.residual;
    obj["null_gap"] = r.null_gap;
    obj["singular"] = r.singular;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void emit_file(const std::vector<SweepRow>& rows, OutputFormat format,
               const std::string& path) {
  const std::string text = emit(rows, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_file: cannot open " + path);
  }
  out << text;
  if (!out) {
    throw std::runtime_error("emit_file: write failed for " + path);
  }
}

}  // namespace neqxx
