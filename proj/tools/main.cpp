#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "neqxx/sweep.hpp"

namespace {

neqxx::Axis parse_axis(const std::string& text) {
  // AXIS:MIN:MAX:COUNT
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != 4) {
    throw CLI::ValidationError("--grid expects AXIS:MIN:MAX:COUNT, got '" +
                               text + "'");
  }
  neqxx::Axis axis;
  axis.name = parts[0];
  try {
    axis.min = std::stod(parts[1]);
    axis.max = std::stod(parts[2]);
    axis.count = std::stoi(parts[3]);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--grid: could not parse '" + text + "'");
  }
  return axis;
}

void add_common_options(CLI::App* cmd, neqxx::SweepSpec& spec,
                        double& tm, double& dt, std::string& solver,
                        std::string& format, std::string& out,
                        std::string& config) {
  cmd->add_option("--epsilon", spec.epsilon, "level splitting");
  cmd->add_option("--j1", spec.j1, "coupling between spins 1 and 2");
  cmd->add_option("--j2", spec.j2, "coupling between spins 2 and 3");
  cmd->add_option("--tl", spec.tl, "left bath temperature");
  cmd->add_option("--tr", spec.tr, "right bath temperature");
  cmd->add_option("--tm", tm, "mean bath temperature (with --delta-t)");
  cmd->add_option("--delta-t", dt, "bath temperature difference T_L - T_R");
  cmd->add_option("--gamma-l", spec.gamma_l, "left bath coupling rate");
  cmd->add_option("--gamma-r", spec.gamma_r, "right bath coupling rate");
  cmd->add_option("--solver", solver, "null-space | rk4 | both")
      ->check(CLI::IsMember({"null-space", "rk4", "both"}));
  cmd->add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", out, "output path (default stdout)");
  cmd->add_option("--config", config,
                  "config file of key = value lines (same keys as the "
                  "flags; flags win)");
}

// key = value lines, same keys as the long flags; '#' starts a comment.
// Command-line flags take precedence.
void apply_config(const std::string& path, const CLI::App* cmd,
                  neqxx::SweepSpec& spec, std::string& solver,
                  std::string& format, std::string& out,
                  std::vector<std::string>& grid_args, std::string& preset) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key != "grid" && cmd->count("--" + key) > 0) continue;  // flag wins
    try {
      if (key == "epsilon") {
        spec.epsilon = std::stod(value);
      } else if (key == "j1") {
        spec.j1 = std::stod(value);
      } else if (key == "j2") {
        spec.j2 = std::stod(value);
      } else if (key == "tl") {
        spec.tl = std::stod(value);
      } else if (key == "tr") {
        spec.tr = std::stod(value);
      } else if (key == "tm") {
        spec.tm = std::stod(value);
      } else if (key == "delta-t") {
        spec.dt = std::stod(value);
      } else if (key == "gamma-l") {
        spec.gamma_l = std::stod(value);
      } else if (key == "gamma-r") {
        spec.gamma_r = std::stod(value);
      } else if (key == "solver") {
        solver = value;
      } else if (key == "format") {
        format = value;
      } else if (key == "out") {
        out = value;
      } else if (key == "grid") {
        grid_args.push_back(value);
      } else if (key == "preset") {
        if (preset.empty()) preset = value;
      } else {
        throw std::runtime_error("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": bad value for '" + key + "'");
    }
  }
}

void finish_spec(neqxx::SweepSpec& spec, const CLI::App* cmd, double tm,
                 double dt, const std::string& solver,
                 const std::string& format, const std::string& out) {
  if (cmd->count("--tm")) spec.tm = tm;
  if (cmd->count("--delta-t")) spec.dt = dt;
  if (solver == "rk4") {
    spec.solver = neqxx::SolverChoice::Rk4;
  } else if (solver == "both") {
    spec.solver = neqxx::SolverChoice::Both;
  } else {
    spec.solver = neqxx::SolverChoice::NullSpace;
  }
  spec.format = (format == "json") ? neqxx::OutputFormat::Json
                                   : neqxx::OutputFormat::Csv;
  spec.out_path = out;
}

void write_rows(const std::vector<neqxx::SweepRow>& rows,
                const neqxx::SweepSpec& spec) {
  if (spec.out_path.empty()) {
    std::cout << neqxx::emit(rows, spec.format);
  } else {
    neqxx::emit_file(rows, spec.format, spec.out_path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonequilibrium steady-state entanglement of a three-qubit "
               "XX chain between two thermal baths"};
  app.require_subcommand(1);

  neqxx::SweepSpec point_spec;
  neqxx::SweepSpec sweep_spec;
  double p_tm = 0, p_dt = 0, s_tm = 0, s_dt = 0;
  std::string p_solver = "null-space", s_solver = "null-space";
  std::string p_format = "csv", s_format = "csv";
  std::string p_out, s_out;
  std::string p_config, s_config;
  std::string preset;
  std::vector<std::string> grid_args;

  CLI::App* point = app.add_subcommand("point", "solve a single parameter point");
  add_common_options(point, point_spec, p_tm, p_dt, p_solver, p_format, p_out,
                     p_config);

  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  add_common_options(sweep, sweep_spec, s_tm, s_dt, s_solver, s_format, s_out,
                     s_config);
  sweep->add_option("--grid", grid_args,
                    "axis as AXIS:MIN:MAX:COUNT (repeatable; axes: tl, tr, "
                    "tm, dt, j1, j2, epsilon)");
  sweep->add_option("--preset", preset,
                    "named sweep preset: fig2 | fig3 | fig4 | fig5 | fig6");

  CLI11_PARSE(app, argc, argv);

  try {
    if (point->parsed()) {
      if (!p_config.empty()) {
        std::vector<std::string> no_grid;
        std::string no_preset;
        apply_config(p_config, point, point_spec, p_solver, p_format, p_out,
                     no_grid, no_preset);
      }
      finish_spec(point_spec, point, p_tm, p_dt, p_solver, p_format, p_out);
      point_spec.mode = neqxx::SweepMode::Point;
      write_rows({neqxx::run_point(point_spec)}, point_spec);
    } else {
      std::vector<std::string> config_grids;
      if (!s_config.empty()) {
        apply_config(s_config, sweep, sweep_spec, s_solver, s_format, s_out,
                     config_grids, preset);
      }
      if (!preset.empty()) {
        const neqxx::SweepSpec base = neqxx::preset_spec(preset);
        // Precedence: explicit flags > config file > preset values.
        neqxx::SweepSpec merged = base;
        auto overlay = [&](const char* flag, double neqxx::SweepSpec::* field) {
          if (sweep->count(flag) || sweep_spec.*field !=
                                        neqxx::SweepSpec{}.*field) {
            merged.*field = sweep_spec.*field;
          }
        };
        overlay("--epsilon", &neqxx::SweepSpec::epsilon);
        overlay("--j1", &neqxx::SweepSpec::j1);
        overlay("--j2", &neqxx::SweepSpec::j2);
        overlay("--tl", &neqxx::SweepSpec::tl);
        overlay("--tr", &neqxx::SweepSpec::tr);
        overlay("--gamma-l", &neqxx::SweepSpec::gamma_l);
        overlay("--gamma-r", &neqxx::SweepSpec::gamma_r);
        if (sweep->count("--tm") || sweep_spec.tm) {
          merged.tm = sweep->count("--tm") ? s_tm : *sweep_spec.tm;
        }
        if (sweep->count("--delta-t") || sweep_spec.dt) {
          merged.dt = sweep->count("--delta-t") ? s_dt : *sweep_spec.dt;
        }
        sweep_spec = merged;
      } else {
        sweep_spec.mode = neqxx::SweepMode::TempGrid;
        if (sweep->count("--tm")) sweep_spec.tm = s_tm;
        if (sweep->count("--delta-t")) sweep_spec.dt = s_dt;
      }
      if (s_solver == "rk4") {
        sweep_spec.solver = neqxx::SolverChoice::Rk4;
      } else if (s_solver == "both") {
        sweep_spec.solver = neqxx::SolverChoice::Both;
      } else {
        sweep_spec.solver = neqxx::SolverChoice::NullSpace;
      }
      sweep_spec.format = (s_format == "json") ? neqxx::OutputFormat::Json
                                               : neqxx::OutputFormat::Csv;
      sweep_spec.out_path = s_out;

      std::vector<neqxx::Axis> explicit_axes;
      for (const std::string& g : config_grids) {
        explicit_axes.push_back(parse_axis(g));
      }
      for (const std::string& g : grid_args) {
        explicit_axes.push_back(parse_axis(g));
      }
      if (!explicit_axes.empty()) {
        sweep_spec.axes = explicit_axes;
      }
      if (sweep_spec.axes.empty()) {
        std::cerr << "error: sweep needs --preset or at least one --grid axis\n";
        return 2;
      }
      write_rows(neqxx::run_sweep(sweep_spec), sweep_spec);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
