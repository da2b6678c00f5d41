#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosserat/constitutive.hpp"
#include "cosserat/io.hpp"
#include "cosserat/params.hpp"
#include "cosserat/polyfield.hpp"
#include "cosserat/tables.hpp"
#include "cosserat/waves.hpp"

// Exit code contract: 0 success/pass, 1 semantic check failure,
// 2 usage/parse error, 3 invalid physical input.

namespace {

using nlohmann::json;
using namespace cosserat;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
      return kExitUsage;
    default:
      return kExitInvalidInput;
  }
}

struct GlobalOptions {
  std::string units_flag;
  std::optional<double> lc_flag;
  std::string format = "json";
  std::string output_path;
};

std::ostream& open_output(std::ofstream& file, const GlobalOptions& g) {
  if (g.output_path.empty()) return std::cout;
  file.open(g.output_path);
  if (!file) {
    throw Error(ErrorKind::ParseError, "cannot open output file: " + g.output_path);
  }
  return file;
}

UnitSystem default_units_from_env() {
  if (const char* env = std::getenv("COSSERAT_UNITS")) {
    if (const auto u = unit_system_from_string(env)) return *u;
  }
  return UnitSystem::MPa_mm;
}

MaterialFile load_material(const std::string& input, const GlobalOptions& g) {
  MaterialFile mf = input.size() && input[0] == '{' ? parse_material_text(input)
                                                    : load_material_file(input);
  // Unit resolution: --units flag > file > COSSERAT_UNITS > MPa_mm default.
  if (!g.units_flag.empty()) {
    const auto units = unit_system_from_string(g.units_flag);
    if (!units) throw Error(ErrorKind::ParseError, "unknown unit system: " + g.units_flag);
    mf.params.units = *units;
  } else if (!mf.units_explicit) {
    mf.params.units = default_units_from_env();
  }
  if (g.lc_flag) mf.L_c = *g.lc_flag;
  return mf;
}

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream ss;
  ss << std::setprecision(6) << v;
  return ss.str();
}

void print_table(const json& j, std::ostream& os, const std::string& indent = "") {
  const auto print_entry = [&](const std::string& key, const json& value) {
    if (value.is_object() || value.is_array()) {
      os << indent << key << ":\n";
      print_table(value, os, indent + "  ");
    } else if (value.is_number_float()) {
      os << indent << key << " = " << format_number(value.get<double>()) << "\n";
    } else {
      os << indent << key << " = " << value.dump() << "\n";
    }
  };
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_entry("[" + std::to_string(i) + "]", j[i]);
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) print_entry(it.key(), *it);
  }
}

void emit(const json& j, const GlobalOptions& g) {
  std::ofstream file;
  std::ostream& os = open_output(file, g);
  if (g.format == "table") {
    print_table(j, os);
  } else {
    os << j.dump(2) << "\n";
  }
}

json gauge_block(const DislocationParams& d) {
  const auto products = d.gauge_products();
  const auto a = d.a_weights();
  json j;
  j["mu_e_Lc2_alpha1"] = products[0];
  j["mu_e_Lc2_alpha2"] = products[1];
  j["mu_e_Lc2_alpha3"] = products[2];
  j["mu_e_Lc2_a3"] = d.mu_e * d.L_c * d.L_c * a[2];
  j["L_c_gauge"] = d.L_c;
  return j;
}

int run_convert(const std::string& input, const std::string& target_name,
                const GlobalOptions& g) {
  const auto target = notation_from_string(target_name);
  if (!target) throw Error(ErrorKind::ParseError, "unknown target notation: " + target_name);

  const MaterialFile mf = load_material(input, g);
  const double lc = mf.L_c.value_or(1.0);  // 1 mm default gauge

  const TaggedParams converted = convert(mf.params, *target, lc);

  // The technical-constant block and gauge products ride along with every
  // conversion; both come from the dislocation form of the same material.
  const DislocationParams d =
      *target == Notation::Dislocation
          ? std::get<DislocationParams>(converted.payload)
          : std::get<DislocationParams>(
                convert(mf.params, Notation::Dislocation, lc).payload);

  json out = material_to_json(converted);
  out["gauge_products"] = gauge_block(d);
  out["technical_constants"] = technical_constants_to_json(technical_constants(d));
  emit(out, g);
  return kExitOk;
}

int run_check(const std::string& input, const GlobalOptions& g) {
  const MaterialFile mf = load_material(input, g);
  const double lc = mf.L_c.value_or(1.0);
  const DislocationParams d =
      std::get<DislocationParams>(convert(mf.params, Notation::Dislocation, lc).payload);

  const ConditionReport report = check_conditions(d);
  emit(condition_report_to_json(report), g);
  return report.well_posed ? kExitOk : kExitCheckFailed;
}

Matrix3 matrix_from_json(const json& j, const std::string& key) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorKind::ParseError, "\"" + key + "\" must be a 3x3 array");
  }
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) {
      throw Error(ErrorKind::ParseError, "\"" + key + "\" must be a 3x3 array");
    }
    for (int c = 0; c < 3; ++c) m(i, c) = row[static_cast<std::size_t>(c)].get<double>();
  }
  return m;
}

int run_energy(const std::string& input, const std::string& strain_path,
               const GlobalOptions& g) {
  const MaterialFile mf = load_material(input, g);
  const double lc = mf.L_c.value_or(1.0);
  const DislocationParams d =
      std::get<DislocationParams>(convert(mf.params, Notation::Dislocation, lc).payload);

  std::ifstream in(strain_path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open strain file: " + strain_path);
  json js;
  try {
    in >> js;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed strain JSON: ") + e.what());
  }

  StrainState state;
  if (js.contains("alpha")) {
    state = StrainState::from_e_alpha(matrix_from_json(js.at("e"), "e"),
                                      matrix_from_json(js.at("alpha"), "alpha"));
  } else if (js.contains("K")) {
    state = StrainState::from_e_K(matrix_from_json(js.at("e"), "e"),
                                  matrix_from_json(js.at("K"), "K"));
  } else {
    throw Error(ErrorKind::ParseError, "strain JSON needs \"e\" plus \"alpha\" or \"K\"");
  }

  const EringenParams er = eringen_from_dislocation(d);
  const MindlinMicropolarParams mm = mindlin_from_dislocation(d);

  TaggedParams tp_d;
  tp_d.notation = Notation::Dislocation;
  tp_d.payload = d;

  json out;
  out["W_dislocation"] = energy_dislocation(state.e, state.alpha, d);
  out["W_split"] = energy_split(state.e, state.K, d);
  out["W_eringen"] = energy_eringen(state.e_star, state.K, er);
  out["W_mindlin"] = energy_mindlin(sym(state.e), SkewMatrix3(axl(skw(state.e))),
                                    Mindlin3Tensor::from_curvature(state.K), mm);
  const Matrix3 sigma = stress(state.e, tp_d);
  const Matrix3 moment = couple_stress(state.K, tp_d);
  out["euler_2W"] = inner(sigma, state.e) + inner(moment, state.K);
  json sig = json::array(), mom = json::array();
  for (int i = 0; i < 3; ++i) {
    json r1 = json::array(), r2 = json::array();
    for (int c = 0; c < 3; ++c) {
      r1.push_back(sigma(i, c));
      r2.push_back(moment(i, c));
    }
    sig.push_back(r1);
    mom.push_back(r2);
  }
  out["stress"] = sig;
  out["couple_stress"] = mom;
  emit(out, g);
  return kExitOk;
}

int run_dispersion(const std::string& input, double kmin, double kmax,
                   int samples, bool linear, const std::string& csv_path,
                   std::string sidecar_path, const GlobalOptions& g) {
  const MaterialFile mf = load_material(input, g);
  const double lc = mf.L_c.value_or(1.0);
  DislocationParams d =
      std::get<DislocationParams>(convert(mf.params, Notation::Dislocation, lc).payload);

  if (!d.rho || !d.rot_inertia) {
    throw Error(ErrorKind::Unavailable,
                "dynamic data required: dispersion needs rho and rot_inertia");
  }
  const double rho = *d.rho;
  const double iota = *d.rot_inertia;
  d = to_si(d, mf.params.units);

  const WaveMedium w = WaveMedium::create(d, rho, iota);

  if (!(kmin >= 0.0) || !(kmax > kmin) || samples < 1) {
    throw Error(ErrorKind::ParseError, "invalid wavenumber grid");
  }
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(samples));
  if (linear || kmin == 0.0) {
    for (int i = 0; i < samples; ++i) {
      grid.push_back(kmin + (kmax - kmin) * i / std::max(1, samples - 1));
    }
  } else {
    const double lmin = std::log(kmin), lmax = std::log(kmax);
    for (int i = 0; i < samples; ++i) {
      grid.push_back(std::exp(lmin + (lmax - lmin) * i / std::max(1, samples - 1)));
    }
  }

  const DispersionResult res = dispersion_sweep(w, grid);

  if (csv_path.empty()) {
    write_dispersion_csv(res, std::cout);
  } else {
    std::ofstream csv(csv_path);
    if (!csv) throw Error(ErrorKind::ParseError, "cannot open CSV file: " + csv_path);
    write_dispersion_csv(res, csv);
    if (sidecar_path.empty()) sidecar_path = csv_path + ".json";
  }

  json sidecar;
  sidecar["cutoff_frequency"] = res.cutoff_frequency;
  sidecar["c_p"] = res.asymptotic.c_p;
  sidecar["c_t"] = res.asymptotic.c_t;
  sidecar["c_s"] = res.asymptotic.c_s;
  sidecar["c_mp"] = res.asymptotic.c_mp;
  sidecar["c_ms"] = res.asymptotic.c_ms;
  sidecar["real_wave_conditions"] = res.asymptotic.real_wave_conditions;
  if (!sidecar_path.empty()) {
    std::ofstream side(sidecar_path);
    if (!side) throw Error(ErrorKind::ParseError, "cannot open sidecar file: " + sidecar_path);
    side << sidecar.dump(2) << "\n";
  } else {
    std::cerr << sidecar.dump(2) << "\n";
  }
  return kExitOk;
}

int run_nye_verify(int degree, unsigned seed, int n_points,
                   const std::string& field_kind, const GlobalOptions& g) {
  if (degree < 0 || degree > 4) {
    throw Error(ErrorKind::ParseError, "--degree must be in [0, 4]");
  }
  std::mt19937_64 rng(seed);
  // Dyadic coefficients keep small-integer products exact.
  std::uniform_int_distribution<long> dyadic(-(1L << 30), 1L << 30);
  auto coeff = [&]() { return static_cast<double>(dyadic(rng)) / static_cast<double>(1L << 30); };

  PolySkewField a;
  if (field_kind == "anti-x") {
    for (int i = 0; i < 3; ++i) a.axial[i] = PolyScalarField::coordinate(i);
  } else if (field_kind == "random") {
    for (int i = 0; i < 3; ++i) {
      PolyScalarField f;
      for (int dx = 0; dx <= degree; ++dx)
        for (int dy = 0; dy + dx <= degree; ++dy)
          for (int dz = 0; dz + dy + dx <= degree; ++dz)
            f = f + PolyScalarField::monomial({dx, dy, dz}, coeff());
      a.axial[i] = f;
    }
  } else {
    throw Error(ErrorKind::ParseError, "--field must be \"random\" or \"anti-x\"");
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Vector3> points;
  points.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    points.push_back({unit(rng), unit(rng), unit(rng)});
  }

  const double discrepancy = verify_nye(a, points);
  const bool pass = discrepancy <= 1e-12;

  json out;
  out["field"] = field_kind;
  out["degree"] = degree;
  out["seed"] = seed;
  out["points"] = n_points;
  out["max_discrepancy"] = discrepancy;
  out["pass"] = pass;
  emit(out, g);
  std::cerr << (pass ? "PASS" : "FAIL") << " nye-verify: max discrepancy "
            << discrepancy << "\n";
  return pass ? kExitOk : kExitCheckFailed;
}

int run_reproduce(const GlobalOptions& g) {
  const ReproduceReport report = reproduce_parameter_table();

  if (g.format == "table") {
    std::ofstream file;
    std::ostream& os = open_output(file, g);
    for (const ReproduceRow& row : report.rows) {
      os << row.material << "\n";
      for (const ReproduceCell& cell : row.cells) {
        os << "  " << cell.name << ": computed " << format_number(cell.computed)
           << ", printed " << format_number(cell.printed);
        switch (cell.status) {
          case CellStatus::Match:
            os << "  [ok, dev " << format_number(cell.deviation) << "]";
            break;
          case CellStatus::Mismatch:
            os << "  [MISMATCH, dev " << format_number(cell.deviation) << "]";
            break;
          case CellStatus::KnownDiscrepancy:
            os << "  [KNOWN-DISCREPANCY]";
            break;
        }
        os << "\n";
      }
    }
    os << (report.pass ? "PASS" : "FAIL") << ": max deviation "
       << format_number(report.max_deviation) << "\n";
  } else {
    json rows = json::array();
    for (const ReproduceRow& row : report.rows) {
      json cells = json::array();
      for (const ReproduceCell& cell : row.cells) {
        const char* status = cell.status == CellStatus::Match ? "ok"
                             : cell.status == CellStatus::Mismatch
                                 ? "MISMATCH"
                                 : "KNOWN-DISCREPANCY";
        cells.push_back({{"name", cell.name},
                         {"computed", extended_to_json(cell.computed)},
                         {"printed", extended_to_json(cell.printed)},
                         {"deviation", extended_to_json(cell.deviation)},
                         {"status", status}});
      }
      rows.push_back({{"material", row.material}, {"cells", cells}});
    }
    json out;
    out["rows"] = rows;
    out["pass"] = report.pass;
    out["max_deviation"] = report.max_deviation;
    emit(out, g);
    std::cerr << (report.pass ? "PASS" : "FAIL")
              << " reproduce: max deviation " << report.max_deviation << "\n";
  }
  return report.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear isotropic Cosserat elasticity toolkit"};
  app.require_subcommand(1);

  GlobalOptions g;

  std::string input, target, strain_path, field_kind = "random";
  std::string csv_path, sidecar_path;
  double kmin = 1e-3, kmax = 1e4;
  int samples = 50, degree = 4, n_points = 1000;
  unsigned seed = 20220314;
  bool linear_grid = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--units", g.units_flag, "unit system override (MPa_mm or SI)");
    cmd->add_option("--format", g.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", g.output_path, "output file (default stdout)");
  };

  CLI::App* convert_cmd = app.add_subcommand("convert", "convert a material record between notations");
  convert_cmd->add_option("input", input, "material JSON file or inline JSON")->required();
  convert_cmd->add_option("--to", target, "target notation")->required();
  convert_cmd->add_option("--lc", g.lc_flag, "characteristic length gauge [mm]");
  add_common(convert_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "evaluate the constitutive condition sets");
  check_cmd->add_option("input", input, "material JSON file or inline JSON")->required();
  check_cmd->add_option("--lc", g.lc_flag, "characteristic length gauge [mm]");
  add_common(check_cmd);

  CLI::App* energy_cmd = app.add_subcommand("energy", "evaluate the energy forms on a strain state");
  energy_cmd->add_option("input", input, "material JSON file or inline JSON")->required();
  energy_cmd->add_option("--strain", strain_path, "strain state JSON file")->required();
  energy_cmd->add_option("--lc", g.lc_flag, "characteristic length gauge [mm]");
  add_common(energy_cmd);

  CLI::App* disp_cmd = app.add_subcommand("dispersion", "plane-wave dispersion sweep");
  disp_cmd->add_option("input", input, "material JSON file or inline JSON")->required();
  disp_cmd->add_option("--kmin", kmin, "smallest wavenumber [1/m]");
  disp_cmd->add_option("--kmax", kmax, "largest wavenumber [1/m]");
  disp_cmd->add_option("--samples", samples, "grid size");
  disp_cmd->add_flag("--linear", linear_grid, "linear instead of log-spaced grid");
  disp_cmd->add_option("--csv", csv_path, "CSV output file (default stdout)");
  disp_cmd->add_option("--sidecar", sidecar_path, "JSON sidecar path");
  disp_cmd->add_option("--lc", g.lc_flag, "characteristic length gauge [mm]");
  add_common(disp_cmd);

  CLI::App* nye_cmd = app.add_subcommand("nye-verify", "verify the Curl/D-axl identity on a random skew field");
  nye_cmd->add_option("--degree", degree, "polynomial degree of the field");
  nye_cmd->add_option("--seed", seed, "RNG seed");
  nye_cmd->add_option("--points", n_points, "number of sample points");
  nye_cmd->add_option("--field", field_kind, "field kind: random or anti-x");
  add_common(nye_cmd);

  CLI::App* repro_cmd = app.add_subcommand("reproduce", "recompute the built-in parameter table");
  add_common(repro_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(convert_cmd)) return run_convert(input, target, g);
    if (app.got_subcommand(check_cmd)) return run_check(input, g);
    if (app.got_subcommand(energy_cmd)) return run_energy(input, strain_path, g);
    if (app.got_subcommand(disp_cmd)) {
      return run_dispersion(input, kmin, kmax, samples, linear_grid, csv_path,
                            sidecar_path, g);
    }
    if (app.got_subcommand(nye_cmd)) {
      return run_nye_verify(degree, seed, n_points, field_kind, g);
    }
    if (app.got_subcommand(repro_cmd)) return run_reproduce(g);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}
