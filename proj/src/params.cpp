#include "cosserat/params.hpp"

#include <cmath>
#include <limits>

namespace cosserat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive_mu_e(double mu_e, const char* who) {
  if (!(mu_e > 0.0) || std::isinf(mu_e)) {
    throw Error(ErrorKind::OutOfRange,
                std::string(who) + ": mu_e must be finite and > 0");
  }
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " must be finite");
  }
}

}  // namespace

const char* to_string(Notation n) {
  switch (n) {
    case Notation::Dislocation: return "dislocation";
    case Notation::Eringen: return "eringen";
    case Notation::Nowacki: return "nowacki";
    case Notation::MindlinMicropolar: return "mindlin";
    case Notation::Lakes: return "lakes";
    case Notation::RelaxedMicromorphic: return "relaxed";
  }
  return "?";
}

const char* to_string(UnitSystem u) {
  return u == UnitSystem::MPa_mm ? "MPa_mm" : "SI";
}

std::optional<Notation> notation_from_string(const std::string& s) {
  if (s == "dislocation") return Notation::Dislocation;
  if (s == "eringen") return Notation::Eringen;
  if (s == "nowacki") return Notation::Nowacki;
  if (s == "mindlin" || s == "mindlin-micropolar") return Notation::MindlinMicropolar;
  if (s == "lakes") return Notation::Lakes;
  if (s == "relaxed" || s == "relaxed-micromorphic") return Notation::RelaxedMicromorphic;
  return std::nullopt;
}

std::optional<UnitSystem> unit_system_from_string(const std::string& s) {
  if (s == "MPa_mm") return UnitSystem::MPa_mm;
  if (s == "SI") return UnitSystem::SI;
  return std::nullopt;
}

std::array<double, 3> DislocationParams::a_weights() const {
  return a_from_alpha(alpha1, alpha2, alpha3);
}

std::array<double, 3> DislocationParams::gauge_products() const {
  const double k = mu_e * L_c * L_c;
  return {k * alpha1, k * alpha2, k * alpha3};
}

const DislocationParams& TaggedParams::dislocation() const {
  if (notation != Notation::Dislocation) {
    throw Error(ErrorKind::UnsupportedNotation, "payload is not in dislocation format");
  }
  return std::get<DislocationParams>(payload);
}

const EringenParams& TaggedParams::eringen() const {
  if (notation != Notation::Eringen) {
    throw Error(ErrorKind::UnsupportedNotation, "payload is not in Eringen format");
  }
  return std::get<EringenParams>(payload);
}

std::array<double, 3> a_from_alpha(double alpha1, double alpha2, double alpha3) {
  return {alpha1, alpha2, (2.0 * alpha1 + 3.0 * alpha3) / 8.0};
}

std::array<double, 3> alpha_from_a(double a1, double a2, double a3) {
  return {a1, a2, (8.0 * a3 - 2.0 * a1) / 3.0};
}

DislocationParams dislocation_from_eringen(const EringenParams& er, double L_c) {
  const double mu_e = er.mu_star + 0.5 * er.varkappa;
  require_positive_mu_e(mu_e, "eringen->dislocation");
  if (!(L_c > 0.0)) {
    throw Error(ErrorKind::MissingLengthScale, "eringen->dislocation: L_c must be > 0");
  }
  DislocationParams d;
  d.lambda_e = er.lambda;
  d.mu_e = mu_e;
  d.mu_c = 0.5 * er.varkappa;
  d.L_c = L_c;
  const double s = L_c * L_c * mu_e;
  d.alpha1 = (er.gamma + er.beta) / s;
  d.alpha2 = (er.gamma - er.beta) / s;
  d.alpha3 = 2.0 * er.alpha / s;
  d.rho = er.rho;
  return d;
}

EringenParams eringen_from_dislocation(const DislocationParams& d) {
  if (std::isinf(d.mu_c)) {
    throw Error(ErrorKind::Unavailable,
                "dislocation->eringen: mu_c = +inf has no Eringen representation");
  }
  EringenParams er;
  er.lambda = d.lambda_e;
  er.mu_star = d.mu_e - d.mu_c;
  er.varkappa = 2.0 * d.mu_c;
  const double s = d.L_c * d.L_c * d.mu_e;
  er.gamma = 0.5 * (d.alpha1 + d.alpha2) * s;
  er.beta = 0.5 * (d.alpha1 - d.alpha2) * s;
  er.alpha = 0.5 * d.alpha3 * s;
  er.rho = d.rho;
  return er;
}

DislocationParams dislocation_from_nowacki(const NowackiParams& nw, double L_c) {
  require_positive_mu_e(nw.mu_N, "nowacki->dislocation");
  if (!(L_c > 0.0)) {
    throw Error(ErrorKind::MissingLengthScale, "nowacki->dislocation: L_c must be > 0");
  }
  DislocationParams d;
  d.lambda_e = nw.lambda_N;
  d.mu_e = nw.mu_N;
  d.mu_c = nw.varkappa_N;
  d.L_c = L_c;
  const double s = L_c * L_c * nw.mu_N;
  d.alpha1 = 2.0 * nw.gamma_N / s;
  d.alpha2 = 2.0 * nw.beta_N / s;
  d.alpha3 = 2.0 * nw.alpha_N / s;
  return d;
}

NowackiParams nowacki_from_dislocation(const DislocationParams& d) {
  if (std::isinf(d.mu_c)) {
    throw Error(ErrorKind::Unavailable,
                "dislocation->nowacki: mu_c = +inf has no Nowacki representation");
  }
  NowackiParams nw;
  nw.lambda_N = d.lambda_e;
  nw.mu_N = d.mu_e;
  nw.varkappa_N = d.mu_c;
  const double s = d.L_c * d.L_c * d.mu_e;
  nw.gamma_N = 0.5 * d.alpha1 * s;
  nw.beta_N = 0.5 * d.alpha2 * s;
  nw.alpha_N = 0.5 * d.alpha3 * s;
  return nw;
}

// Mindlin curvature moduli are matched through the three energy
// coefficients of the curvature quadratic form. The contraction kernels
// of kappa_{i[jk]} = eps_{kjl} K_{li} give
//   W_curv = (2 b2 + b3) ||dev sym K||^2 + (2 b1 + 2 b2 + b3) ||skw K||^2
//            + (2 b2 - 2 b3)/3 [tr K]^2,
// and coefficient matching against the split curvature energy is the
// unique inverse below; the energy-equality suite pins it.
DislocationParams dislocation_from_mindlin(const MindlinMicropolarParams& mm, double L_c) {
  require_positive_mu_e(mm.mu_M, "mindlin->dislocation");
  if (!(L_c > 0.0)) {
    throw Error(ErrorKind::MissingLengthScale, "mindlin->dislocation: L_c must be > 0");
  }
  DislocationParams d;
  d.lambda_e = mm.lambda_M;
  d.mu_e = mm.mu_M;
  d.mu_c = mm.mu_c_M;
  d.L_c = L_c;
  const double s = L_c * L_c * mm.mu_M;
  d.alpha1 = 2.0 * (2.0 * mm.beta2_M + mm.beta3_M) / s;
  d.alpha2 = 2.0 * (2.0 * mm.beta1_M + 2.0 * mm.beta2_M + mm.beta3_M) / s;
  d.alpha3 = -4.0 * mm.beta3_M / s;
  return d;
}

MindlinMicropolarParams mindlin_from_dislocation(const DislocationParams& d) {
  if (std::isinf(d.mu_c)) {
    throw Error(ErrorKind::Unavailable,
                "dislocation->mindlin: mu_c = +inf has no Mindlin representation");
  }
  MindlinMicropolarParams mm;
  mm.lambda_M = d.lambda_e;
  mm.mu_M = d.mu_e;
  mm.mu_c_M = d.mu_c;
  const double s = d.L_c * d.L_c * d.mu_e;
  mm.beta1_M = s * (d.alpha2 - d.alpha1) / 4.0;
  mm.beta2_M = s * (2.0 * d.alpha1 + d.alpha3) / 8.0;
  mm.beta3_M = -s * d.alpha3 / 4.0;
  return mm;
}

DislocationParams dislocation_from_lakes(const LakesConstants& lk, double L_c) {
  require_positive_mu_e(lk.G, "lakes->dislocation");
  if (!(L_c > 0.0)) {
    throw Error(ErrorKind::MissingLengthScale, "lakes->dislocation: L_c must be > 0");
  }
  if (!(lk.N >= 0.0) || !(lk.N <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "lakes->dislocation: coupling number N outside [0,1]");
  }
  if (!(lk.Psi > 0.0) || lk.Psi > 1.5) {
    throw Error(ErrorKind::OutOfRange, "lakes->dislocation: polar ratio Psi outside (0, 3/2]");
  }
  require_finite(lk.E, "lakes->dislocation: E");
  require_finite(lk.ell_t, "lakes->dislocation: ell_t");
  require_finite(lk.ell_b, "lakes->dislocation: ell_b");

  DislocationParams d;
  d.mu_e = lk.G;
  // lambda_e from the (E, G) pair; E = 3G is the incompressible pole.
  const double denom = lk.E - 3.0 * lk.G;
  d.lambda_e = (denom == 0.0) ? kInf : -lk.G * (lk.E - 2.0 * lk.G) / denom;
  d.mu_c = (lk.N == 1.0) ? kInf : lk.G * lk.N * lk.N / (1.0 - lk.N * lk.N);
  d.L_c = L_c;
  const double lc2 = L_c * L_c;
  d.alpha1 = 2.0 * lk.ell_t * lk.ell_t / lc2;
  d.alpha2 = (8.0 * lk.ell_b * lk.ell_b - 2.0 * lk.ell_t * lk.ell_t) / lc2;
  d.alpha3 = 4.0 * lk.ell_t * lk.ell_t * (1.0 - lk.Psi) / (lk.Psi * lc2);
  return d;
}

LakesConstants lakes_from_dislocation(const DislocationParams& d) {
  if (d.alpha1 < 0.0 || d.alpha1 + d.alpha2 < 0.0) {
    throw Error(ErrorKind::OutOfRange,
                "dislocation->lakes: alpha1 and alpha1 + alpha2 must be >= 0 "
                "for real characteristic lengths");
  }
  const TechnicalConstants tc = technical_constants(d);
  if (!tc.Psi) {
    throw Error(ErrorKind::Unavailable,
                "dislocation->lakes: Psi undefined (alpha3 + 2 alpha1 = 0)");
  }
  LakesConstants lk;
  lk.E = tc.E;
  lk.G = tc.G;
  lk.nu = tc.nu;
  lk.ell_t = tc.ell_t;
  lk.ell_b = tc.ell_b;
  lk.N = tc.N;
  lk.Psi = *tc.Psi;
  return lk;
}

namespace {

DislocationParams to_dislocation(const TaggedParams& p, double L_c) {
  switch (p.notation) {
    case Notation::Dislocation:
      return std::get<DislocationParams>(p.payload);
    case Notation::Eringen:
      return dislocation_from_eringen(std::get<EringenParams>(p.payload), L_c);
    case Notation::Nowacki:
      return dislocation_from_nowacki(std::get<NowackiParams>(p.payload), L_c);
    case Notation::MindlinMicropolar:
      return dislocation_from_mindlin(std::get<MindlinMicropolarParams>(p.payload), L_c);
    case Notation::Lakes:
      return dislocation_from_lakes(std::get<LakesConstants>(p.payload), L_c);
    case Notation::RelaxedMicromorphic:
      break;
  }
  throw Error(ErrorKind::UnsupportedNotation,
              "convert: the relaxed micromorphic record is a different model; "
              "only identity conversion is defined for it");
}

}  // namespace

TaggedParams convert(const TaggedParams& p, Notation target,
                     std::optional<double> L_c_choice) {
  if (p.notation == target) return p;

  if (p.notation == Notation::RelaxedMicromorphic ||
      target == Notation::RelaxedMicromorphic) {
    throw Error(ErrorKind::UnsupportedNotation,
                "convert: no conversion to/from the relaxed micromorphic model");
  }

  // Entering the dislocation format fixes the gauge and needs an explicit
  // length scale; as a mere hub the gauge cancels and Lc = 1 is used.
  double hub_lc = 1.0;
  if (target == Notation::Dislocation) {
    if (!L_c_choice) {
      throw Error(ErrorKind::MissingLengthScale,
                  "convert: L_c_choice required when the target is the dislocation format");
    }
    hub_lc = *L_c_choice;
  } else if (p.notation == Notation::Dislocation) {
    hub_lc = std::get<DislocationParams>(p.payload).L_c;
  } else if (L_c_choice) {
    hub_lc = *L_c_choice;
  }

  const DislocationParams d = to_dislocation(p, hub_lc);

  TaggedParams out;
  out.units = p.units;
  out.notation = target;
  switch (target) {
    case Notation::Dislocation:
      out.payload = d;
      break;
    case Notation::Eringen:
      out.payload = eringen_from_dislocation(d);
      break;
    case Notation::Nowacki:
      out.payload = nowacki_from_dislocation(d);
      break;
    case Notation::MindlinMicropolar:
      out.payload = mindlin_from_dislocation(d);
      break;
    case Notation::Lakes:
      out.payload = lakes_from_dislocation(d);
      break;
    case Notation::RelaxedMicromorphic:
      break;  // unreachable
  }
  return out;
}

TechnicalConstants technical_constants(const DislocationParams& d) {
  require_positive_mu_e(d.mu_e, "technical_constants");
  if (!(d.L_c > 0.0)) {
    throw Error(ErrorKind::OutOfRange, "technical_constants: L_c must be > 0");
  }

  TechnicalConstants tc;
  tc.G = d.mu_e;
  if (std::isinf(d.lambda_e)) {
    tc.E = 3.0 * d.mu_e;
    tc.nu = 0.5;
    tc.kappa_bulk = kInf;
  } else {
    tc.E = d.mu_e * (2.0 * d.mu_e + 3.0 * d.lambda_e) / (d.mu_e + d.lambda_e);
    tc.nu = d.lambda_e / (2.0 * (d.mu_e + d.lambda_e));
    tc.kappa_bulk = d.lambda_e + 2.0 * d.mu_e / 3.0;
  }
  tc.N = std::isinf(d.mu_c) ? 1.0 : std::sqrt(d.mu_c / (d.mu_e + d.mu_c));
  tc.ell_t = d.L_c * std::sqrt(d.alpha1 / 2.0);
  tc.ell_b = d.L_c * std::sqrt((d.alpha1 + d.alpha2) / 8.0);

  const double half_s = 0.5 * d.mu_e * d.L_c * d.L_c;
  const double two_a1_p_a3 = d.alpha3 + 2.0 * d.alpha1;
  if (two_a1_p_a3 != 0.0) tc.Psi = 2.0 * d.alpha1 / two_a1_p_a3;
  const double a1_p_a3 = d.alpha1 + d.alpha3;
  if (a1_p_a3 != 0.0) {
    tc.xi = d.alpha3 / (2.0 * a1_p_a3);
    tc.curly_E = half_s * d.alpha1 * (2.0 * d.alpha1 + 3.0 * d.alpha3) / a1_p_a3;
  }
  tc.curly_B = half_s * (2.0 * d.alpha1 + 3.0 * d.alpha3) / 3.0;
  return tc;
}

MindlinLinearCoefficients micromorphic_to_mindlin(const RelaxedMicromorphicParams& rm) {
  MindlinLinearCoefficients c;
  c.mu_M = rm.mu_micro;
  c.lambda_M = rm.lambda_micro;
  c.g1 = -rm.lambda_micro;
  c.g2 = -2.0 * rm.mu_micro;
  c.b1 = rm.lambda_e + rm.lambda_micro;
  c.b2 = rm.mu_e + rm.mu_micro + rm.mu_c;
  c.b3 = rm.mu_e + rm.mu_micro - rm.mu_c;
  const double s = rm.mu * rm.L_c * rm.L_c;
  c.a4 = s * (2.0 * rm.a3 - rm.a1) / 3.0;
  c.a10 = s * (rm.a1 + rm.a2) / 2.0;
  c.a13 = s * (rm.a1 - rm.a2) / 2.0;
  return c;
}

DislocationParams to_si(const DislocationParams& d, UnitSystem source_units) {
  if (source_units == UnitSystem::SI) return d;
  DislocationParams si = d;
  si.lambda_e = d.lambda_e * 1e6;  // MPa -> Pa (inf stays inf)
  si.mu_e = d.mu_e * 1e6;
  si.mu_c = d.mu_c * 1e6;
  si.L_c = d.L_c * 1e-3;  // mm -> m
  return si;
}

}  // namespace cosserat
