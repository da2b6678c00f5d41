#include "cosserat/constitutive.hpp"

#include <cmath>

namespace cosserat {

namespace {

void require_finite_moduli(const DislocationParams& d, const char* who) {
  if (std::isinf(d.lambda_e) || std::isinf(d.mu_c)) {
    throw Error(ErrorKind::Unavailable,
                std::string(who) + ": undefined for infinite lambda_e or mu_c");
  }
}

int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

StrainState StrainState::from_e_alpha(const Matrix3& e, const Matrix3& alpha) {
  if (!is_finite(e) || !is_finite(alpha)) {
    throw Error(ErrorKind::InvalidInput, "StrainState: non-finite input");
  }
  StrainState s;
  s.e = e;
  s.e_star = e.transposed();
  s.alpha = alpha;
  s.K = nye_inverse(alpha);
  return s;
}

StrainState StrainState::from_e_K(const Matrix3& e, const Matrix3& K) {
  if (!is_finite(e) || !is_finite(K)) {
    throw Error(ErrorKind::InvalidInput, "StrainState: non-finite input");
  }
  StrainState s;
  s.e = e;
  s.e_star = e.transposed();
  s.K = K;
  s.alpha = nye_forward(K);
  return s;
}

double energy_dislocation(const Matrix3& e, const Matrix3& alpha,
                          const DislocationParams& d) {
  require_finite_moduli(d, "energy_dislocation");
  const auto a = d.a_weights();
  const double tr_e = e.trace();
  const double tr_al = alpha.trace();
  const double half_s = 0.5 * d.mu_e * d.L_c * d.L_c;
  return d.mu_e * norm_sq(sym(e)) + d.mu_c * norm_sq(skw(e)) +
         0.5 * d.lambda_e * tr_e * tr_e +
         half_s * (a[0] * norm_sq(dev(sym(alpha))) + a[1] * norm_sq(skw(alpha)) +
                   (a[2] / 3.0) * tr_al * tr_al);
}

double energy_eringen(const Matrix3& e_star, const Matrix3& K,
                      const EringenParams& er) {
  const double tr_e = e_star.trace();
  const double tr_k = K.trace();
  return 0.5 * ((er.mu_star + er.varkappa) * inner(e_star, e_star) +
                er.mu_star * inner(e_star, e_star.transposed()) +
                er.lambda * tr_e * tr_e + er.gamma * inner(K, K) +
                er.beta * inner(K, K.transposed()) + er.alpha * tr_k * tr_k);
}

double energy_split(const Matrix3& e, const Matrix3& K,
                    const DislocationParams& d) {
  require_finite_moduli(d, "energy_split");
  const double tr_e = e.trace();
  const double tr_k = K.trace();
  const double w1 = d.mu_e * norm_sq(dev(sym(e))) + d.mu_c * norm_sq(skw(e)) +
                    (2.0 * d.mu_e + 3.0 * d.lambda_e) / 6.0 * tr_e * tr_e;
  const double half_s = 0.5 * d.mu_e * d.L_c * d.L_c;
  const double w2 =
      half_s * (d.alpha1 * norm_sq(dev(sym(K))) + d.alpha2 * norm_sq(skw(K)) +
                (2.0 * d.alpha1 + 3.0 * d.alpha3) / 6.0 * tr_k * tr_k);
  return w1 + w2;
}

Mindlin3Tensor Mindlin3Tensor::from_curvature(const Matrix3& K) {
  Mindlin3Tensor t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) s += eps3(k, j, l) * K(l, i);
        t.v_[static_cast<std::size_t>(9 * i + 3 * j + k)] = s;
      }
  return t;
}

Mindlin3Tensor Mindlin3Tensor::from_entries(const std::array<double, 27>& v) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (v[static_cast<std::size_t>(9 * i + 3 * j + k)] !=
            -v[static_cast<std::size_t>(9 * i + 3 * k + j)]) {
          throw Error(ErrorKind::InvalidInput,
                      "Mindlin3Tensor: entries not antisymmetric in [jk]");
        }
      }
  Mindlin3Tensor t;
  t.v_ = v;
  return t;
}

double Mindlin3Tensor::contraction_trace() const {
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += (*this)(i, i, k);
    total += s * s;
  }
  return total;
}

double Mindlin3Tensor::contraction_full() const {
  double s = 0.0;
  for (double x : v_) s += x * x;
  return s;
}

double Mindlin3Tensor::contraction_cross() const {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += (*this)(i, j, k) * (*this)(j, i, k);
  return s;
}

double energy_mindlin(const Matrix3& eps, const SkewMatrix3& gamma,
                      const Mindlin3Tensor& kappa,
                      const MindlinMicropolarParams& m) {
  const double tr_eps = eps.trace();
  return m.mu_M * norm_sq(eps) + 0.5 * m.lambda_M * tr_eps * tr_eps +
         m.mu_c_M * norm_sq(gamma.matrix()) +
         m.beta1_M * kappa.contraction_trace() +
         m.beta2_M * kappa.contraction_full() +
         m.beta3_M * kappa.contraction_cross();
}

double energy_relaxed(const Matrix3& Du, const Matrix3& P,
                      const Matrix3& curl_P,
                      const RelaxedMicromorphicParams& rm) {
  const Matrix3 e = Du - P;
  const double tr_e = e.trace();
  const double tr_p = P.trace();
  const double tr_c = curl_P.trace();
  const double half_s = 0.5 * rm.mu * rm.L_c * rm.L_c;
  return rm.mu_e * norm_sq(sym(e)) + rm.mu_c * norm_sq(skw(e)) +
         0.5 * rm.lambda_e * tr_e * tr_e + rm.mu_micro * norm_sq(sym(P)) +
         0.5 * rm.lambda_micro * tr_p * tr_p +
         half_s * (rm.a1 * norm_sq(dev(sym(curl_P))) +
                   rm.a2 * norm_sq(skw(curl_P)) + (rm.a3 / 3.0) * tr_c * tr_c);
}

Matrix3 stress(const Matrix3& strain, const TaggedParams& p) {
  switch (p.notation) {
    case Notation::Dislocation: {
      const DislocationParams& d = p.dislocation();
      require_finite_moduli(d, "stress");
      return 2.0 * d.mu_e * sym(strain) + 2.0 * d.mu_c * skw(strain) +
             Matrix3::identity() * (d.lambda_e * strain.trace());
    }
    case Notation::Eringen: {
      const EringenParams& er = p.eringen();
      return (er.mu_star + er.varkappa) * strain +
             er.mu_star * strain.transposed() +
             Matrix3::identity() * (er.lambda * strain.trace());
    }
    default:
      throw Error(ErrorKind::UnsupportedNotation,
                  "stress: only dislocation and Eringen formats carry a stress law");
  }
}

Matrix3 couple_stress(const Matrix3& K, const TaggedParams& p) {
  switch (p.notation) {
    case Notation::Dislocation: {
      const DislocationParams& d = p.dislocation();
      require_finite_moduli(d, "couple_stress");
      const double half_s = 0.5 * d.mu_e * d.L_c * d.L_c;
      return half_s * (2.0 * d.alpha1 * sym(K) + 2.0 * d.alpha2 * skw(K) +
                       Matrix3::identity() * (d.alpha3 * K.trace()));
    }
    case Notation::Eringen: {
      const EringenParams& er = p.eringen();
      return er.gamma * K + er.beta * K.transposed() +
             Matrix3::identity() * (er.alpha * K.trace());
    }
    default:
      throw Error(ErrorKind::UnsupportedNotation,
                  "couple_stress: only dislocation and Eringen formats carry a couple-stress law");
  }
}

namespace {

struct Inequality {
  const char* name;
  double value;
  bool strict;  // strict: value > 0 required; otherwise value >= 0
};

bool evaluate_set(const char* set_name, const std::vector<Inequality>& ineqs,
                  std::vector<Violation>& out) {
  bool ok = true;
  for (const Inequality& q : ineqs) {
    const bool holds = q.strict ? (q.value > 0.0) : (q.value >= 0.0);
    if (!holds) {
      ok = false;
      out.push_back({set_name, q.name, q.value});
    }
  }
  return ok;
}

}  // namespace

ConditionReport check_conditions(const DislocationParams& d) {
  const auto a = d.a_weights();
  // Infinities (lambda_e, mu_c) evaluate as limits: +inf satisfies > 0.
  const double tme_3le = 2.0 * d.mu_e + 3.0 * d.lambda_e;
  const double tme_le = 2.0 * d.mu_e + d.lambda_e;

  ConditionReport r;
  r.positive_definite = evaluate_set(
      "positive_definite",
      {{"mu_e > 0", d.mu_e, true},
       {"mu_c > 0", d.mu_c, true},
       {"2 mu_e + 3 lambda_e > 0", tme_3le, true},
       {"a1 > 0", a[0], true},
       {"a2 > 0", a[1], true},
       {"a3 > 0", a[2], true}},
      r.violated);
  r.well_posed = evaluate_set(
      "well_posed",
      {{"mu_e > 0", d.mu_e, true},
       {"mu_c > 0", d.mu_c, true},
       {"2 mu_e + 3 lambda_e > 0", tme_3le, true},
       {"a1 > 0", a[0], true},
       {"a2 >= 0", a[1], false},
       {"a3 >= 0", a[2], false}},
      r.violated);
  r.real_plane_waves = evaluate_set(
      "real_plane_waves",
      {{"2 mu_e + lambda_e > 0", tme_le, true},
       {"mu_e > 0", d.mu_e, true},
       {"mu_c > 0", d.mu_c, true},
       {"2 alpha1 + alpha3 > 0", 2.0 * d.alpha1 + d.alpha3, true},
       {"alpha1 + alpha2 > 0", d.alpha1 + d.alpha2, true}},
      r.violated);
  r.strongly_elliptic = evaluate_set(
      "strongly_elliptic",
      {{"2 mu_e + lambda_e > 0", tme_le, true},
       {"mu_e + mu_c > 0", d.mu_e + d.mu_c, true},
       {"a1 + 2 a3 > 0", a[0] + 2.0 * a[2], true},
       {"a1 + a2 > 0", a[0] + a[1], true}},
      r.violated);

  const double scale = std::max(1.0, std::abs(a[0]));
  r.conformal_curvature =
      std::abs(a[1]) <= 1e-12 * scale && std::abs(a[2]) <= 1e-12 * scale;

  // posCoss2 => posCoss1 => (d11 and dse1); guaranteed algebraically.
  if ((r.positive_definite && !r.well_posed) ||
      (r.well_posed && !(r.real_plane_waves && r.strongly_elliptic))) {
    throw std::logic_error("check_conditions: implication chain violated");
  }
  return r;
}

std::pair<Matrix3, Matrix3> acoustic_blocks(const DislocationParams& d,
                                            const Vector3& xi,
                                            const Vector3& zeta) {
  if (std::abs(norm(xi) - 1.0) > 1e-12 || std::abs(norm(zeta) - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidDirection, "acoustic_blocks: directions must be unit");
  }

  const auto assemble = [](double on_axis, double transverse, double coupling,
                           const Vector3& n) {
    Matrix3 q;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double nij = n[i] * n[j];  // commutative, keeps q exactly symmetric
        if (i == j) {
          double others = 0.0;
          for (int k = 0; k < 3; ++k)
            if (k != i) others += n[k] * n[k];
          q(i, j) = 0.5 * (on_axis * nij + transverse * others);
        } else {
          q(i, j) = 0.5 * coupling * nij;
        }
      }
    }
    return q;
  };

  const Matrix3 q1 = assemble(2.0 * d.mu_e + d.lambda_e, d.mu_e + d.mu_c,
                              d.mu_e - d.mu_c + d.lambda_e, xi);
  const Matrix3 q2 = assemble(2.0 * d.alpha1 + d.alpha3, d.alpha1 + d.alpha2,
                              d.alpha1 - d.alpha2 + d.alpha3, zeta);
  return {q1, q2};
}

RankOneCheck rank_one_second_derivative(double b1, double b2, double b3,
                                        const Vector3& xi, const Vector3& eta) {
  const Matrix3 dyad = outer(xi, eta);
  RankOneCheck r;
  const double c = dot(xi, eta);
  r.direct = b1 * norm_sq(sym(dyad)) + b2 * norm_sq(skw(dyad)) + b3 * c * c;

  const double p = dot(xi, xi) * dot(eta, eta);
  // (b1+b2)/2 P sin^2 + (b1+b3) P cos^2 with P cos^2 = <xi,eta>^2.
  r.closed_form = 0.5 * (b1 + b2) * (p - c * c) + (b1 + b3) * c * c;
  return r;
}

BalanceResiduals balance_residuals(const PolyVectorField& u,
                                   const PolySkewField& A,
                                   const TaggedParams& p) {
  if (p.notation != Notation::Dislocation && p.notation != Notation::Eringen) {
    throw Error(ErrorKind::UnsupportedNotation,
                "balance_residuals: dislocation or Eringen parameters required");
  }
  // Both parameter sets; the curvature gauge cancels in the residuals.
  const DislocationParams d =
      p.notation == Notation::Dislocation
          ? p.dislocation()
          : dislocation_from_eringen(p.eringen(), 1.0);
  require_finite_moduli(d, "balance_residuals");
  const EringenParams er = eringen_from_dislocation(d);
  const auto a = d.a_weights();

  const PolyMatrixField Du = vector_grad(u);
  const PolyMatrixField Amat = A.matrix();
  const PolyMatrixField e = Du - Amat;
  const PolyMatrixField e_star = e.transposed();

  const PolyMatrixField sigma_d = sym(e) * (2.0 * d.mu_e) +
                                  skw(e) * (2.0 * d.mu_c) +
                                  identity_times(e.trace() * d.lambda_e);
  const PolyMatrixField sigma_er = e_star * (er.mu_star + er.varkappa) +
                                   e_star.transposed() * er.mu_star +
                                   identity_times(e_star.trace() * er.lambda);

  BalanceResiduals out;
  out.force_vec = matrix_div(sigma_er.transposed());
  out.force_dislo = matrix_div(sigma_d);

  // Microrotation-vector couple operator. With m* = D_K W = gamma K +
  // beta K^T + alpha tr(K) Id, the divergence acts on the second index;
  // Eringen's own index layout writes the same operator as Div m^T.
  const PolyMatrixField K = vector_grad(A.axial);
  const PolyMatrixField m_star = K * er.gamma + K.transposed() * er.beta +
                                 identity_times(K.trace() * er.alpha);
  out.couple_vec = matrix_div(m_star) - axl_of_skew(sigma_er) * 2.0;

  // Skew-format couple operator with the moment conjugate to Curl A.
  const PolyMatrixField curl_A = matrix_curl(Amat);
  const double s = d.mu_e * d.L_c * d.L_c;
  const PolyMatrixField m_d = dev(sym(curl_A)) * (s * a[0]) +
                              skw(curl_A) * (s * a[1]) +
                              identity_times(curl_A.trace() * (s * a[2] / 3.0));
  out.couple_skew = skw(matrix_curl(m_d)) * -1.0 + skw(sigma_d);
  return out;
}

}  // namespace cosserat
