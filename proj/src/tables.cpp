#include "cosserat/tables.hpp"

#include <cmath>
#include <limits>

namespace cosserat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const std::vector<LakesExperimentRow>& lakes_dataset() {
  static const std::vector<LakesExperimentRow> rows = {
      {"Human bone @0.2mm", 12000.0, 4000.0, 0.5, 0.5, 0.22, 0.45, 1.5,
       "Lakes 1995, Table 1"},
      {"Graphite @1.6mm (H237)", 4500.0, 2122.64, 0.06, 1.0, 1.6, 2.8, 1.5,
       "Lakes 1995, Table 1; mu_c -> inf, Psi = 3/2 by the trace-free moment"},
      {"Foam @1mm (0.6 PS)", 1.28, 0.6, 0.07, 0.09, 3.8, 5.0, 1.5,
       "Lakes 1983, pp. 2576-2577"},
      {"Foam @0.18mm (dense polyurethane)", 300.0, 104.0, 0.4, 0.04, 0.62,
       0.33, 1.5, "Lakes 1995, Table 1"},
      {"Foam @0.15mm (dense syntactic)", 2758.0, 1033.0, 0.34, 0.1, 0.065,
       0.0325, 1.5, "Lakes 1985, p. 60 (ell_b = ell_t / 2)"},
  };
  return rows;
}

const std::vector<DislocationReferenceRow>& dislocation_reference_table() {
  static const std::vector<DislocationReferenceRow> rows = {
      {"Human bone @0.2mm", 4000.0, kInf, 4000.0, 387.2, 6092.8, -258.133, 0.0,
       false},
      // The printed alpha3 product is inconsistent with Psi = 3/2 (which
      // fixes alpha3 = -(2/3) alpha1); kept verbatim and flagged.
      {"Graphite @1.6mm (H237)", 2122.64, 289.451, kInf, 10867.9, 122264.0,
       -16301.85, 0.0, true},
      {"Foam @1mm (0.6 PS)", 0.6, 0.0923077, 0.0593407, 17.328, 102.672,
       -11.552, 0.0, false},
      {"Foam @0.18mm (dense polyurethane)", 104.0, 797.333, 4.33333, 79.9552,
       10.6496, -53.3035, 0.0, false},
      {"Foam @0.15mm (dense syntactic)", 1033.0, 2096.29, 114.778, 8.72885,
       0.0, -5.81923, 0.0, false},
  };
  return rows;
}

namespace {

ReproduceCell compare_cell(const std::string& name, double computed,
                           double printed, bool known_discrepancy) {
  ReproduceCell cell;
  cell.name = name;
  cell.computed = computed;
  cell.printed = printed;
  if (std::isinf(printed)) {
    cell.deviation = std::isinf(computed) ? 0.0 : kInf;
  } else if (printed == 0.0) {
    cell.deviation = std::abs(computed);
  } else {
    cell.deviation = std::abs(computed - printed) / std::abs(printed);
  }
  if (known_discrepancy) {
    cell.status = CellStatus::KnownDiscrepancy;
  } else {
    cell.status = cell.deviation <= 1e-3 ? CellStatus::Match : CellStatus::Mismatch;
  }
  return cell;
}

}  // namespace

ReproduceReport reproduce_parameter_table() {
  const auto& inputs = lakes_dataset();
  const auto& expected = dislocation_reference_table();

  ReproduceReport report;
  report.pass = true;

  for (std::size_t r = 0; r < inputs.size(); ++r) {
    const LakesExperimentRow& in = inputs[r];
    const DislocationReferenceRow& ref = expected[r];

    LakesConstants lk;
    lk.E = in.E;
    lk.G = in.G;
    lk.nu = in.nu;
    lk.N = std::sqrt(in.N_sq);
    lk.ell_t = in.ell_t;
    lk.ell_b = in.ell_b;
    lk.Psi = in.Psi;

    const DislocationParams d = dislocation_from_lakes(lk, 1.0);  // 1 mm gauge
    const auto products = d.gauge_products();
    const double p_a3 = d.mu_e * d.L_c * d.L_c * d.a_weights()[2];

    ReproduceRow row;
    row.material = in.material;
    row.cells.push_back(compare_cell("mu_e", d.mu_e, ref.mu_e, false));
    row.cells.push_back(compare_cell("lambda_e", d.lambda_e, ref.lambda_e, false));
    row.cells.push_back(compare_cell("mu_c", d.mu_c, ref.mu_c, false));
    row.cells.push_back(compare_cell("mu_e Lc^2 alpha1", products[0], ref.p_alpha1, false));
    row.cells.push_back(compare_cell("mu_e Lc^2 alpha2", products[1], ref.p_alpha2, false));
    row.cells.push_back(compare_cell("mu_e Lc^2 alpha3", products[2], ref.p_alpha3,
                                     ref.alpha3_known_discrepancy));
    row.cells.push_back(compare_cell("mu_e Lc^2 a3", p_a3, ref.p_a3, false));

    for (const ReproduceCell& cell : row.cells) {
      if (cell.status == CellStatus::Mismatch) report.pass = false;
      if (cell.status == CellStatus::Match && std::isfinite(cell.deviation)) {
        report.max_deviation = std::max(report.max_deviation, cell.deviation);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace cosserat
