#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cosserat/params.hpp"
#include "cosserat/polyfield.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

// Pointwise strain data of the micropolar model in both formats:
// e = Du - A and its transpose e* = e^T, the wryness K = D axl A and the
// dislocation density alpha = -Curl A, coupled through the Nye maps.
struct StrainState {
  Matrix3 e;
  Matrix3 e_star;
  Matrix3 K;
  Matrix3 alpha;

  static StrainState from_e_alpha(const Matrix3& e, const Matrix3& alpha);
  static StrainState from_e_K(const Matrix3& e, const Matrix3& K);
};

// Energy densities. All quadratic; units MPa when fed MPa/mm parameters.
double energy_dislocation(const Matrix3& e, const Matrix3& alpha,
                          const DislocationParams& d);
double energy_eringen(const Matrix3& e_star, const Matrix3& K,
                      const EringenParams& er);
double energy_split(const Matrix3& e, const Matrix3& K,
                    const DislocationParams& d);

// Third-order Mindlin curvature kappa_{i[jk]}, antisymmetric in [jk].
class Mindlin3Tensor {
 public:
  Mindlin3Tensor() = default;

  // kappa_{i[jk]} = eps_{kjl} K_{li} for K = D axl A.
  static Mindlin3Tensor from_curvature(const Matrix3& K);
  // Raw 27 entries, validated for exact antisymmetry in [jk].
  static Mindlin3Tensor from_entries(const std::array<double, 27>& v);

  double operator()(int i, int j, int k) const {
    return v_[static_cast<std::size_t>(9 * i + 3 * j + k)];
  }

  double contraction_trace() const;  // kappa_{i[ik]} kappa_{j[jk]}
  double contraction_full() const;   // kappa_{i[jk]} kappa_{i[jk]}
  double contraction_cross() const;  // kappa_{i[jk]} kappa_{j[ik]}

 private:
  std::array<double, 27> v_{};
};

double energy_mindlin(const Matrix3& eps, const SkewMatrix3& gamma,
                      const Mindlin3Tensor& kappa,
                      const MindlinMicropolarParams& m);

// Curl P is supplied precomputed since P is given pointwise.
double energy_relaxed(const Matrix3& Du, const Matrix3& P,
                      const Matrix3& curl_P,
                      const RelaxedMicromorphicParams& rm);

// Force stress from the notation's own strain (e for dislocation, e* for
// Eringen) and couple stress from the wryness K; gradients of the energies.
Matrix3 stress(const Matrix3& strain, const TaggedParams& p);
Matrix3 couple_stress(const Matrix3& K, const TaggedParams& p);

struct Violation {
  std::string condition_set;
  std::string inequality;
  double margin = 0.0;  // signed value of the left-hand side
};

struct ConditionReport {
  bool positive_definite = false;
  bool well_posed = false;
  bool real_plane_waves = false;
  bool strongly_elliptic = false;
  bool conformal_curvature = false;
  std::vector<Violation> violated;
};

ConditionReport check_conditions(const DislocationParams& d);

// Acoustic tensor blocks Q1(xi), Q2(zeta), each with prefactor 1/2.
// Directions must be unit to 1e-12.
std::pair<Matrix3, Matrix3> acoustic_blocks(const DislocationParams& d,
                                            const Vector3& xi,
                                            const Vector3& zeta);

// Second derivative of the generic quadratic form b1 ||sym||^2 +
// b2 ||skw||^2 + b3 tr^2 along the rank-one direction xi (x) eta, both as
// the direct evaluation and the sin/cos closed form.
struct RankOneCheck {
  double direct = 0.0;
  double closed_form = 0.0;
};

RankOneCheck rank_one_second_derivative(double b1, double b2, double b3,
                                        const Vector3& xi, const Vector3& eta);

// Static balance residuals of the two PDE formats on exact polynomial
// fields. force_vec = Div sigma_er^T, force_dislo = Div sigma_d,
// couple_vec is the microrotation-vector couple operator and couple_skew
// the skew-format one; axl(couple_skew) = c * couple_vec with a single
// model constant.
struct BalanceResiduals {
  PolyVectorField force_vec;
  PolyVectorField force_dislo;
  PolyVectorField couple_vec;
  PolyMatrixField couple_skew;
};

BalanceResiduals balance_residuals(const PolyVectorField& u,
                                   const PolySkewField& A,
                                   const TaggedParams& p);

}  // namespace cosserat
