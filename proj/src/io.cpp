#include "cosserat/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace cosserat {

using nlohmann::json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void fail(const std::string& msg) {
  throw Error(ErrorKind::ParseError, msg);
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      fail("unknown key \"" + it.key() + "\" in " + where);
    }
  }
}

double number_at(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail("missing key \"" + key + "\"");
  return extended_from_json(*it, key);
}

std::optional<double> optional_number(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  return extended_from_json(*it, key);
}

}  // namespace

json extended_to_json(double v) {
  if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
  return json(v);
}

double extended_from_json(const json& j, const std::string& key) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
    fail("value of \"" + key + "\" must be a number or \"inf\"");
  }
  fail("value of \"" + key + "\" must be a number or \"inf\"");
}

MaterialFile material_from_json(const json& j) {
  if (!j.is_object()) fail("material document must be a JSON object");
  // gauge_products and technical_constants are derived annotations written
  // by the convert command; accepted and ignored so its output re-parses.
  reject_unknown_keys(
      j, {"notation", "units", "values", "L_c", "gauge_products", "technical_constants"},
      "material document");

  const auto notation_it = j.find("notation");
  if (notation_it == j.end() || !notation_it->is_string()) {
    fail("material document needs a string \"notation\"");
  }
  const auto notation = notation_from_string(notation_it->get<std::string>());
  if (!notation) fail("unknown notation \"" + notation_it->get<std::string>() + "\"");

  MaterialFile out;
  out.params.notation = *notation;
  out.params.units = UnitSystem::MPa_mm;
  if (const auto units_it = j.find("units"); units_it != j.end()) {
    if (!units_it->is_string()) fail("\"units\" must be a string");
    const auto units = unit_system_from_string(units_it->get<std::string>());
    if (!units) fail("unknown unit system \"" + units_it->get<std::string>() + "\"");
    out.params.units = *units;
    out.units_explicit = true;
  }
  if (const auto lc_it = j.find("L_c"); lc_it != j.end()) {
    out.L_c = extended_from_json(*lc_it, "L_c");
    if (!(*out.L_c > 0.0) || std::isinf(*out.L_c)) fail("\"L_c\" must be finite and > 0");
  }

  const auto values_it = j.find("values");
  if (values_it == j.end() || !values_it->is_object()) {
    fail("material document needs an object \"values\"");
  }
  const json& v = *values_it;

  switch (*notation) {
    case Notation::Dislocation: {
      reject_unknown_keys(v,
                          {"lambda_e", "mu_e", "mu_c", "alpha1", "alpha2",
                           "alpha3", "rho", "rot_inertia", "j", "tau_c"},
                          "dislocation values");
      DislocationParams d;
      d.lambda_e = number_at(v, "lambda_e");
      d.mu_e = number_at(v, "mu_e");
      d.mu_c = number_at(v, "mu_c");
      d.alpha1 = number_at(v, "alpha1");
      d.alpha2 = number_at(v, "alpha2");
      d.alpha3 = number_at(v, "alpha3");
      d.rho = optional_number(v, "rho");
      d.rot_inertia = optional_number(v, "rot_inertia");
      // The microinertia bookkeeping (j, tau_c) folds into the single mass
      // scalar iota = rho j mu_e tau_c^2 of the propagation pencils.
      const auto micro_j = optional_number(v, "j");
      const auto tau_c = optional_number(v, "tau_c");
      if (micro_j || tau_c) {
        if (d.rot_inertia) {
          fail("dislocation values: give either rot_inertia or the (j, tau_c) pair");
        }
        if (!micro_j || !tau_c || !d.rho) {
          fail("dislocation values: folding microinertia needs rho, j and tau_c");
        }
        d.rot_inertia = *d.rho * *micro_j * d.mu_e * *tau_c * *tau_c;
      }
      d.L_c = out.L_c.value_or(1.0);
      out.params.payload = d;
      break;
    }
    case Notation::Eringen: {
      reject_unknown_keys(
          v, {"lambda", "mu_star", "varkappa", "alpha", "beta", "gamma", "j", "rho"},
          "eringen values");
      EringenParams er;
      er.lambda = number_at(v, "lambda");
      er.mu_star = number_at(v, "mu_star");
      er.varkappa = number_at(v, "varkappa");
      er.alpha = number_at(v, "alpha");
      er.beta = number_at(v, "beta");
      er.gamma = number_at(v, "gamma");
      er.j = optional_number(v, "j");
      er.rho = optional_number(v, "rho");
      out.params.payload = er;
      break;
    }
    case Notation::Nowacki: {
      reject_unknown_keys(
          v, {"lambda_N", "mu_N", "varkappa_N", "alpha_N", "beta_N", "gamma_N"},
          "nowacki values");
      NowackiParams nw;
      nw.lambda_N = number_at(v, "lambda_N");
      nw.mu_N = number_at(v, "mu_N");
      nw.varkappa_N = number_at(v, "varkappa_N");
      nw.alpha_N = number_at(v, "alpha_N");
      nw.beta_N = number_at(v, "beta_N");
      nw.gamma_N = number_at(v, "gamma_N");
      out.params.payload = nw;
      break;
    }
    case Notation::MindlinMicropolar: {
      reject_unknown_keys(
          v, {"lambda_M", "mu_M", "mu_c_M", "beta1_M", "beta2_M", "beta3_M"},
          "mindlin values");
      MindlinMicropolarParams mm;
      mm.lambda_M = number_at(v, "lambda_M");
      mm.mu_M = number_at(v, "mu_M");
      mm.mu_c_M = number_at(v, "mu_c_M");
      mm.beta1_M = number_at(v, "beta1_M");
      mm.beta2_M = number_at(v, "beta2_M");
      mm.beta3_M = number_at(v, "beta3_M");
      out.params.payload = mm;
      break;
    }
    case Notation::Lakes: {
      reject_unknown_keys(v, {"E", "G", "nu", "N", "N_sq", "ell_t", "ell_b", "Psi"},
                          "lakes values");
      LakesConstants lk;
      lk.E = number_at(v, "E");
      lk.G = number_at(v, "G");
      lk.ell_t = number_at(v, "ell_t");
      lk.ell_b = number_at(v, "ell_b");
      lk.Psi = number_at(v, "Psi");
      const auto n = optional_number(v, "N");
      const auto n_sq = optional_number(v, "N_sq");
      if (n && n_sq) fail("lakes values: give either \"N\" or \"N_sq\", not both");
      if (!n && !n_sq) fail("lakes values: missing \"N\" or \"N_sq\"");
      lk.N = n ? *n : std::sqrt(*n_sq);
      if (const auto nu = optional_number(v, "nu")) {
        lk.nu = *nu;
      } else if (lk.E != 3.0 * lk.G) {
        // nu from (E, G); the two are the independent pair here.
        const double lambda = -lk.G * (lk.E - 2.0 * lk.G) / (lk.E - 3.0 * lk.G);
        lk.nu = lambda / (2.0 * (lk.G + lambda));
      } else {
        lk.nu = 0.5;
      }
      out.params.payload = lk;
      break;
    }
    case Notation::RelaxedMicromorphic: {
      reject_unknown_keys(v,
                          {"mu_e", "lambda_e", "mu_c", "mu_micro",
                           "lambda_micro", "mu", "a1", "a2", "a3"},
                          "relaxed values");
      RelaxedMicromorphicParams rm;
      rm.mu_e = number_at(v, "mu_e");
      rm.lambda_e = number_at(v, "lambda_e");
      rm.mu_c = number_at(v, "mu_c");
      rm.mu_micro = number_at(v, "mu_micro");
      rm.lambda_micro = number_at(v, "lambda_micro");
      rm.mu = number_at(v, "mu");
      rm.a1 = number_at(v, "a1");
      rm.a2 = number_at(v, "a2");
      rm.a3 = number_at(v, "a3");
      rm.L_c = out.L_c.value_or(1.0);
      out.params.payload = rm;
      break;
    }
  }
  return out;
}

json material_to_json(const TaggedParams& p) {
  json j;
  j["notation"] = to_string(p.notation);
  j["units"] = to_string(p.units);
  json v;
  switch (p.notation) {
    case Notation::Dislocation: {
      const auto& d = std::get<DislocationParams>(p.payload);
      j["L_c"] = d.L_c;
      v["lambda_e"] = extended_to_json(d.lambda_e);
      v["mu_e"] = d.mu_e;
      v["mu_c"] = extended_to_json(d.mu_c);
      v["alpha1"] = d.alpha1;
      v["alpha2"] = d.alpha2;
      v["alpha3"] = d.alpha3;
      if (d.rho) v["rho"] = *d.rho;
      if (d.rot_inertia) v["rot_inertia"] = *d.rot_inertia;
      break;
    }
    case Notation::Eringen: {
      const auto& er = std::get<EringenParams>(p.payload);
      v["lambda"] = extended_to_json(er.lambda);
      v["mu_star"] = er.mu_star;
      v["varkappa"] = er.varkappa;
      v["alpha"] = er.alpha;
      v["beta"] = er.beta;
      v["gamma"] = er.gamma;
      if (er.j) v["j"] = *er.j;
      if (er.rho) v["rho"] = *er.rho;
      break;
    }
    case Notation::Nowacki: {
      const auto& nw = std::get<NowackiParams>(p.payload);
      v["lambda_N"] = extended_to_json(nw.lambda_N);
      v["mu_N"] = nw.mu_N;
      v["varkappa_N"] = nw.varkappa_N;
      v["alpha_N"] = nw.alpha_N;
      v["beta_N"] = nw.beta_N;
      v["gamma_N"] = nw.gamma_N;
      break;
    }
    case Notation::MindlinMicropolar: {
      const auto& mm = std::get<MindlinMicropolarParams>(p.payload);
      v["lambda_M"] = extended_to_json(mm.lambda_M);
      v["mu_M"] = mm.mu_M;
      v["mu_c_M"] = mm.mu_c_M;
      v["beta1_M"] = mm.beta1_M;
      v["beta2_M"] = mm.beta2_M;
      v["beta3_M"] = mm.beta3_M;
      break;
    }
    case Notation::Lakes: {
      const auto& lk = std::get<LakesConstants>(p.payload);
      v["E"] = lk.E;
      v["G"] = lk.G;
      v["nu"] = lk.nu;
      v["ell_t"] = lk.ell_t;
      v["ell_b"] = lk.ell_b;
      v["N"] = lk.N;
      v["Psi"] = lk.Psi;
      break;
    }
    case Notation::RelaxedMicromorphic: {
      const auto& rm = std::get<RelaxedMicromorphicParams>(p.payload);
      j["L_c"] = rm.L_c;
      v["mu_e"] = rm.mu_e;
      v["lambda_e"] = extended_to_json(rm.lambda_e);
      v["mu_c"] = extended_to_json(rm.mu_c);
      v["mu_micro"] = rm.mu_micro;
      v["lambda_micro"] = rm.lambda_micro;
      v["mu"] = rm.mu;
      v["a1"] = rm.a1;
      v["a2"] = rm.a2;
      v["a3"] = rm.a3;
      break;
    }
  }
  j["values"] = v;
  return j;
}

namespace {

// Converts a byte offset from nlohmann's parse_error into line/column.
std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

MaterialFile parse_material_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << col << ": "
        << e.what();
    throw Error(ErrorKind::ParseError, msg.str());
  }
  return material_from_json(j);
}

MaterialFile load_material_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open material file: " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_material_text(ss.str());
}

json condition_report_to_json(const ConditionReport& r) {
  json j;
  j["positive_definite"] = r.positive_definite;
  j["well_posed"] = r.well_posed;
  j["real_plane_waves"] = r.real_plane_waves;
  j["strongly_elliptic"] = r.strongly_elliptic;
  j["conformal_curvature"] = r.conformal_curvature;
  json violated = json::array();
  for (const Violation& v : r.violated) {
    violated.push_back({{"condition_set", v.condition_set},
                        {"inequality", v.inequality},
                        {"margin", extended_to_json(v.margin)}});
  }
  j["violated"] = violated;
  return j;
}

json technical_constants_to_json(const TechnicalConstants& tc) {
  // NaN (e.g. ell_t for a negative alpha1) serializes as "undefined"
  // rather than nlohmann's null.
  const auto value = [](double v) {
    return std::isnan(v) ? json("undefined") : extended_to_json(v);
  };
  const auto opt = [&](const std::optional<double>& v) {
    return v ? value(*v) : json("undefined");
  };
  json j;
  j["E"] = value(tc.E);
  j["G"] = tc.G;
  j["nu"] = value(tc.nu);
  j["kappa_bulk"] = value(tc.kappa_bulk);
  j["N"] = value(tc.N);
  j["ell_t"] = value(tc.ell_t);
  j["ell_b"] = value(tc.ell_b);
  j["Psi"] = opt(tc.Psi);
  j["xi"] = opt(tc.xi);
  j["curly_E"] = opt(tc.curly_E);
  j["curly_B"] = value(tc.curly_B);
  return j;
}

}  // namespace cosserat
