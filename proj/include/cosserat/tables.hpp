#pragma once

#include <string>
#include <vector>

#include "cosserat/params.hpp"

namespace cosserat {

// Built-in experimental dataset (Lakes' size-effect measurements) and the
// corresponding dislocation-format reference values, embedded so that the
// reproduction run needs no external files.

struct LakesExperimentRow {
  std::string material;
  double E = 0.0;      // MPa
  double G = 0.0;      // MPa
  double nu = 0.0;
  double N_sq = 0.0;   // coupling number squared
  double ell_t = 0.0;  // mm
  double ell_b = 0.0;  // mm
  double Psi = 0.0;
  std::string provenance;
};

struct DislocationReferenceRow {
  std::string material;
  double mu_e = 0.0;              // MPa
  double lambda_e = 0.0;          // +inf for the incompressible row
  double mu_c = 0.0;              // +inf for the couple-stress row
  double p_alpha1 = 0.0;          // mu_e Lc^2 alpha_1 [N]
  double p_alpha2 = 0.0;
  double p_alpha3 = 0.0;
  double p_a3 = 0.0;              // mu_e Lc^2 a_3 [N]
  bool alpha3_known_discrepancy = false;
};

const std::vector<LakesExperimentRow>& lakes_dataset();
const std::vector<DislocationReferenceRow>& dislocation_reference_table();

enum class CellStatus { Match, Mismatch, KnownDiscrepancy };

struct ReproduceCell {
  std::string name;
  double computed = 0.0;
  double printed = 0.0;
  double deviation = 0.0;  // relative, or absolute against a printed zero
  CellStatus status = CellStatus::Match;
};

struct ReproduceRow {
  std::string material;
  std::vector<ReproduceCell> cells;
};

struct ReproduceReport {
  std::vector<ReproduceRow> rows;
  bool pass = false;
  double max_deviation = 0.0;  // over matched cells
};

// Recomputes the dislocation-format table from the experimental rows and
// compares cell by cell at 1e-3 relative; the flagged Graphite alpha3 cell
// is reported as a known discrepancy instead of a failure.
ReproduceReport reproduce_parameter_table();

}  // namespace cosserat
