#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "cosserat/errors.hpp"

namespace cosserat {

// Material parameter records for the micropolar notations in circulation,
// plus the relaxed micromorphic set. Static tables use MPa/mm so that
// mu_e Lc^2 alpha_i lands in N; dynamic data is SI.
//
// lambda_e and mu_c may carry +infinity (incompressible limit, couple
// stress limit). Infinities are plain IEEE inf, checked explicitly by
// every consumer; formulas either take the documented finite limit or
// refuse with Unavailable.

enum class Notation {
  Dislocation,
  Eringen,
  Nowacki,
  MindlinMicropolar,
  Lakes,
  RelaxedMicromorphic,
};

enum class UnitSystem { MPa_mm, SI };

const char* to_string(Notation n);
const char* to_string(UnitSystem u);
std::optional<Notation> notation_from_string(const std::string& s);
std::optional<UnitSystem> unit_system_from_string(const std::string& s);

struct DislocationParams {
  double lambda_e = 0.0;  // MPa, may be +inf
  double mu_e = 0.0;      // MPa
  double mu_c = 0.0;      // MPa, may be +inf
  double L_c = 1.0;       // mm, free gauge; only mu_e Lc^2 alpha_i is physical
  double alpha1 = 0.0;    // dimensionless curvature weights
  double alpha2 = 0.0;
  double alpha3 = 0.0;
  std::optional<double> rho;          // kg/m^3
  std::optional<double> rot_inertia;  // iota = rho j mu_e tau_c^2, SI

  // Curvature weights in the a-convention.
  std::array<double, 3> a_weights() const;
  // Gauge-invariant products mu_e Lc^2 alpha_i (N in MPa/mm units).
  std::array<double, 3> gauge_products() const;
};

struct EringenParams {
  double lambda = 0.0;    // MPa
  double mu_star = 0.0;   // MPa
  double varkappa = 0.0;  // MPa
  double alpha = 0.0;     // N = MPa mm^2
  double beta = 0.0;
  double gamma = 0.0;
  std::optional<double> j;    // microinertia
  std::optional<double> rho;  // kg/m^3
};

struct NowackiParams {
  double lambda_N = 0.0;
  double mu_N = 0.0;
  double varkappa_N = 0.0;
  double alpha_N = 0.0;  // N
  double beta_N = 0.0;
  double gamma_N = 0.0;
};

struct MindlinMicropolarParams {
  double lambda_M = 0.0;
  double mu_M = 0.0;
  double mu_c_M = 0.0;
  double beta1_M = 0.0;  // N
  double beta2_M = 0.0;
  double beta3_M = 0.0;
};

struct LakesConstants {
  double E = 0.0;      // MPa
  double G = 0.0;      // MPa
  double nu = 0.0;     // dimensionless; 1/2 flags lambda_e = +inf
  double ell_t = 0.0;  // mm
  double ell_b = 0.0;  // mm
  double N = 0.0;      // coupling number in [0,1]; 1 flags mu_c = +inf
  double Psi = 0.0;    // polar ratio in (0, 3/2]
};

struct RelaxedMicromorphicParams {
  double mu_e = 0.0;
  double lambda_e = 0.0;
  double mu_c = 0.0;
  double mu_micro = 0.0;
  double lambda_micro = 0.0;
  double mu = 0.0;  // curvature prefactor
  double L_c = 1.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

struct TaggedParams {
  Notation notation = Notation::Dislocation;
  UnitSystem units = UnitSystem::MPa_mm;
  std::variant<DislocationParams, EringenParams, NowackiParams,
               MindlinMicropolarParams, LakesConstants,
               RelaxedMicromorphicParams>
      payload;

  const DislocationParams& dislocation() const;
  const EringenParams& eringen() const;
};

// a <-> alpha weight maps: a1 = alpha1, a2 = alpha2, a3 = (2 alpha1 + 3 alpha3)/8.
std::array<double, 3> a_from_alpha(double alpha1, double alpha2, double alpha3);
std::array<double, 3> alpha_from_a(double a1, double a2, double a3);

// Pairwise identifications. L_c fixes the gauge of the dimensionless
// weights whenever the source carries dimensional couple moduli.
DislocationParams dislocation_from_eringen(const EringenParams& er, double L_c);
EringenParams eringen_from_dislocation(const DislocationParams& d);
DislocationParams dislocation_from_nowacki(const NowackiParams& nw, double L_c);
NowackiParams nowacki_from_dislocation(const DislocationParams& d);
DislocationParams dislocation_from_mindlin(const MindlinMicropolarParams& mm, double L_c);
MindlinMicropolarParams mindlin_from_dislocation(const DislocationParams& d);
DislocationParams dislocation_from_lakes(const LakesConstants& lk, double L_c);
LakesConstants lakes_from_dislocation(const DislocationParams& d);

// Hub conversion between tagged records. L_c_choice is required when the
// target is the dislocation format and the source is not (the split of the
// dimensional products into mu_e Lc^2 alpha_i is a gauge choice).
TaggedParams convert(const TaggedParams& p, Notation target,
                     std::optional<double> L_c_choice = std::nullopt);

// The concluding-table technical constants derived from a dislocation
// record. Psi, xi and curly_E become nullopt at their printed poles.
struct TechnicalConstants {
  double E = 0.0;          // 3 mu_e in the lambda_e = +inf limit
  double G = 0.0;
  double nu = 0.0;         // 1/2 when lambda_e = +inf
  double kappa_bulk = 0.0; // +inf when lambda_e = +inf
  double N = 0.0;          // 1 when mu_c = +inf
  double ell_t = 0.0;
  double ell_b = 0.0;
  std::optional<double> Psi;
  std::optional<double> xi;
  std::optional<double> curly_E;  // torsional modulus, N
  double curly_B = 0.0;           // torsional bulk modulus, N
};

TechnicalConstants technical_constants(const DislocationParams& d);

// Relaxed micromorphic -> Mindlin-1964 linear coefficients; the unnamed
// a-coefficients a_{1,2,3,5,8,11,14,15} vanish identically.
struct MindlinLinearCoefficients {
  double mu_M = 0.0;
  double lambda_M = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double b3 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double a4 = 0.0;
  double a10 = 0.0;
  double a13 = 0.0;
};

MindlinLinearCoefficients micromorphic_to_mindlin(const RelaxedMicromorphicParams& rm);

// MPa/mm -> SI: moduli to Pa, lengths to m; weights and densities unchanged.
DislocationParams to_si(const DislocationParams& d, UnitSystem source_units);

}  // namespace cosserat
