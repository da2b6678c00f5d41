#include "cosserat/waves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include "cosserat/constitutive.hpp"

namespace cosserat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double curvature_stiffness(const WaveMedium& w, double weight_sum) {
  return w.d.mu_e * w.d.L_c * w.d.L_c * weight_sum;
}

Matrix3 dQ1_dk(const WaveMedium& w, double k) {
  const auto& d = w.d;
  const double t = curvature_stiffness(w, d.alpha1 + d.alpha2);
  return {2.0 * k * (2.0 * d.mu_e + d.lambda_e), 0.0, 0.0,
          0.0, 2.0 * k * (d.mu_e + d.mu_c), -2.0 * d.mu_c,
          0.0, -2.0 * d.mu_c, 2.0 * k * t};
}

Matrix3 dQ2_dk(const WaveMedium& w, double k) {
  const auto& d = w.d;
  const double t = curvature_stiffness(w, d.alpha1 + d.alpha2);
  const double c = curvature_stiffness(w, 2.0 * d.alpha1 + d.alpha3);
  return {2.0 * k * (d.mu_e + d.mu_c), 0.0, 2.0 * d.mu_c,
          0.0, 2.0 * k * c, 0.0,
          2.0 * d.mu_c, 0.0, 2.0 * k * t};
}

struct BlockSolution {
  std::array<double, 3> omega_sq;
  Matrix3 y;  // orthonormal reduced eigenvectors, columns
};

BlockSolution solve_block(const Matrix3& q, const Matrix3& m) {
  const GenEigen ge = gen_eigen_diag_full(q, m);
  return {ge.values, ge.reduced_vectors};
}

// Analytic k = 0 eigenvector seeds: Q1(0) = diag(0, 0, 4 mu_c) and
// Q2(0) = diag(0, 4 mu_c, 4 mu_c) are exactly diagonal, so the identity
// columns are exact eigenvectors and anchor the label assignment.
constexpr std::array<BranchLabel, 3> kBlock1Labels = {
    BranchLabel::LongitudinalAcoustic, BranchLabel::ShearAcoustic,
    BranchLabel::ShearOptical};
constexpr std::array<BranchLabel, 3> kBlock2Labels = {
    BranchLabel::RotationalOpticalA, BranchLabel::CompressionalRotationalOptical,
    BranchLabel::RotationalOpticalB};

// Matches the 3 new eigenvectors to the previous ones by maximizing the
// summed absolute overlaps over all permutations.
std::array<int, 3> match_columns(const Matrix3& prev, const Matrix3& next) {
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                       {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  double overlap[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int r = 0; r < 3; ++r) s += prev(r, i) * next(r, j);
      overlap[i][j] = std::abs(s);
    }
  int best = 0;
  double best_score = -1.0;
  for (int p = 0; p < 6; ++p) {
    const double score =
        overlap[0][kPerms[p][0]] + overlap[1][kPerms[p][1]] + overlap[2][kPerms[p][2]];
    if (score > best_score) {
      best_score = score;
      best = p;
    }
  }
  return {kPerms[best][0], kPerms[best][1], kPerms[best][2]};
}

double frobenius(const Matrix3& q) { return norm(q); }

}  // namespace

double WaveMedium::rho() const { return d.rho.value_or(0.0); }

WaveMedium WaveMedium::create(const DislocationParams& d_si, double rho, double iota) {
  if (!(rho > 0.0) || !(iota > 0.0)) {
    throw Error(ErrorKind::InvalidMass, "WaveMedium: rho and iota must be > 0");
  }
  if (std::isinf(d_si.lambda_e) || std::isinf(d_si.mu_c)) {
    throw Error(ErrorKind::Unavailable,
                "WaveMedium: dispersion needs finite lambda_e and mu_c");
  }
  WaveMedium w;
  w.d = d_si;
  w.d.rho = rho;
  w.rot_inertia = iota;
  return w;
}

PropagationMatrices propagation_matrices(const WaveMedium& w, double k) {
  if (!(k >= 0.0)) {
    throw Error(ErrorKind::InvalidInput, "propagation_matrices: k must be >= 0");
  }
  const auto& d = w.d;
  const double k2 = k * k;
  const double t = curvature_stiffness(w, d.alpha1 + d.alpha2);
  const double c = curvature_stiffness(w, 2.0 * d.alpha1 + d.alpha3);
  const double rho = w.rho();
  const double iota = w.rot_inertia;

  PropagationMatrices pm;
  pm.Q1 = {k2 * (2.0 * d.mu_e + d.lambda_e), 0.0, 0.0,
           0.0, k2 * (d.mu_e + d.mu_c), -2.0 * k * d.mu_c,
           0.0, -2.0 * k * d.mu_c, k2 * t + 4.0 * d.mu_c};
  pm.Q2 = {k2 * (d.mu_e + d.mu_c), 0.0, 2.0 * k * d.mu_c,
           0.0, k2 * c + 4.0 * d.mu_c, 0.0,
           2.0 * k * d.mu_c, 0.0, k2 * t + 4.0 * d.mu_c};
  pm.M1 = Matrix3::diagonal(rho, rho, iota);
  pm.M2 = Matrix3::diagonal(rho, iota, iota);
  return pm;
}

const char* to_string(BranchLabel label) {
  switch (label) {
    case BranchLabel::LongitudinalAcoustic: return "longitudinal-acoustic";
    case BranchLabel::ShearAcoustic: return "shear-acoustic";
    case BranchLabel::ShearOptical: return "shear-optical";
    case BranchLabel::RotationalOpticalA: return "rotational-optical";
    case BranchLabel::RotationalOpticalB: return "rotational-optical";
    case BranchLabel::CompressionalRotationalOptical:
      return "compressional-rotational-optical";
  }
  return "?";
}

std::array<BranchFrequency, 6> branch_frequencies(const WaveMedium& w, double k) {
  const PropagationMatrices pm = propagation_matrices(w, k);
  const Matrix3 prev = Matrix3::identity();

  std::array<BranchFrequency, 6> out;
  for (int block = 0; block < 2; ++block) {
    const BlockSolution sol =
        solve_block(block == 0 ? pm.Q1 : pm.Q2, block == 0 ? pm.M1 : pm.M2);
    const auto perm = match_columns(prev, sol.y);
    const auto& labels = block == 0 ? kBlock1Labels : kBlock2Labels;
    for (int pos = 0; pos < 3; ++pos) {
      BranchFrequency bf;
      bf.omega_sq = sol.omega_sq[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])];
      bf.label = labels[static_cast<std::size_t>(pos)];
      bf.block = block;
      bf.slot = perm[static_cast<std::size_t>(pos)];
      out[static_cast<std::size_t>(3 * block + pos)] = bf;
    }
  }
  return out;
}

Velocities velocities(const WaveMedium& w, double k, int block, int slot) {
  if (!(k > 0.0)) {
    throw Error(ErrorKind::InvalidInput, "velocities: k must be > 0");
  }
  const PropagationMatrices pm = propagation_matrices(w, k);
  const Matrix3& q = block == 0 ? pm.Q1 : pm.Q2;
  const Matrix3& m = block == 0 ? pm.M1 : pm.M2;
  const BlockSolution sol = solve_block(q, m);
  const double omega_sq = sol.omega_sq[static_cast<std::size_t>(slot)];
  if (!(omega_sq > 0.0)) {
    throw Error(ErrorKind::EvanescentBranch, "velocities: omega^2 <= 0");
  }
  const double omega = std::sqrt(omega_sq);

  const Matrix3 dq = block == 0 ? dQ1_dk(w, k) : dQ2_dk(w, k);
  Vector3 y{sol.y(0, slot), sol.y(1, slot), sol.y(2, slot)};
  // d omega^2/dk = y^T M^{-1/2} dQ/dk M^{-1/2} y for the unit reduced vector.
  const Vector3 dm{1.0 / std::sqrt(m(0, 0)), 1.0 / std::sqrt(m(1, 1)),
                   1.0 / std::sqrt(m(2, 2))};
  double der = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) der += y[i] * dm[i] * dq(i, j) * dm[j] * y[j];

  Velocities v;
  v.phase = omega / k;
  v.group = der / (2.0 * omega);
  return v;
}

AsymptoticVelocities asymptotic_velocities(const WaveMedium& w) {
  const auto& d = w.d;
  const double rho = w.rho();
  const double iota = w.rot_inertia;

  AsymptoticVelocities a;
  a.c_p = std::sqrt((d.lambda_e + 2.0 * d.mu_e) / rho);
  a.c_t = std::sqrt(d.mu_e / rho);
  a.c_s = std::sqrt((d.mu_e + d.mu_c) / rho);
  a.c_mp = std::sqrt(curvature_stiffness(w, 2.0 * d.alpha1 + d.alpha3) / iota);
  a.c_ms = std::sqrt(curvature_stiffness(w, d.alpha1 + d.alpha2) / iota);
  a.cutoff = 2.0 * std::sqrt(d.mu_c / iota);
  a.real_wave_conditions = check_conditions(d).real_plane_waves;
  return a;
}

DispersionResult dispersion_sweep(const WaveMedium& w,
                                  const std::vector<double>& k_grid) {
  if (k_grid.empty()) {
    throw Error(ErrorKind::InvalidInput, "dispersion_sweep: empty wavenumber grid");
  }
  for (std::size_t i = 0; i < k_grid.size(); ++i) {
    if (!(k_grid[i] >= 0.0) || (i > 0 && !(k_grid[i] > k_grid[i - 1]))) {
      throw Error(ErrorKind::InvalidInput,
                  "dispersion_sweep: grid must be non-negative and strictly increasing");
    }
  }

  DispersionResult res;
  res.k_grid = k_grid;
  res.asymptotic = asymptotic_velocities(w);
  res.cutoff_frequency = res.asymptotic.cutoff;
  for (int block = 0; block < 2; ++block)
    for (int pos = 0; pos < 3; ++pos) {
      auto& series = res.branches[static_cast<std::size_t>(3 * block + pos)];
      series.block = block;
      series.label = (block == 0 ? kBlock1Labels : kBlock2Labels)[static_cast<std::size_t>(pos)];
    }

  Matrix3 prev[2] = {Matrix3::identity(), Matrix3::identity()};
  const double min_mass = std::min(w.rho(), w.rot_inertia);

  for (double k : k_grid) {
    const PropagationMatrices pm = propagation_matrices(w, k);
    for (int block = 0; block < 2; ++block) {
      const Matrix3& q = block == 0 ? pm.Q1 : pm.Q2;
      const Matrix3& m = block == 0 ? pm.M1 : pm.M2;
      const BlockSolution sol = solve_block(q, m);
      const auto perm = match_columns(prev[block], sol.y);

      Matrix3 matched;
      for (int pos = 0; pos < 3; ++pos) {
        const int slot = perm[static_cast<std::size_t>(pos)];
        for (int r = 0; r < 3; ++r) matched(r, pos) = sol.y(r, slot);

        auto& series = res.branches[static_cast<std::size_t>(3 * block + pos)];
        const double omega_sq = sol.omega_sq[static_cast<std::size_t>(slot)];
        const double tol = 1e-12 * frobenius(q) / min_mass;
        const bool real = omega_sq >= -tol;
        series.omega_sq.push_back(omega_sq);
        series.omega.push_back(std::sqrt(std::abs(omega_sq)));
        series.real_flag.push_back(real);

        if (k > 0.0 && omega_sq > 0.0) {
          const Velocities v = velocities(w, k, block, slot);
          series.phase_velocity.push_back(v.phase);
          series.group_velocity.push_back(v.group);
        } else if (k == 0.0 && omega_sq > 0.0) {
          // Optical branch at the cut-off: undefined phase, zero slope.
          const Matrix3 dq = block == 0 ? dQ1_dk(w, k) : dQ2_dk(w, k);
          const Vector3 dm{1.0 / std::sqrt(m(0, 0)), 1.0 / std::sqrt(m(1, 1)),
                           1.0 / std::sqrt(m(2, 2))};
          double der = 0.0;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              der += sol.y(i, slot) * dm[i] * dq(i, j) * dm[j] * sol.y(j, slot);
          series.phase_velocity.push_back(kNaN);
          series.group_velocity.push_back(der / (2.0 * std::sqrt(omega_sq)));
        } else {
          series.phase_velocity.push_back(kNaN);
          series.group_velocity.push_back(kNaN);
        }
      }
      prev[block] = matched;
    }
  }
  return res;
}

bool real_wave_scan(const WaveMedium& w, const std::vector<double>& k_grid) {
  if (k_grid.empty()) {
    throw Error(ErrorKind::InvalidInput, "real_wave_scan: empty wavenumber grid");
  }
  const double min_mass = std::min(w.rho(), w.rot_inertia);
  for (double k : k_grid) {
    const PropagationMatrices pm = propagation_matrices(w, k);
    for (int block = 0; block < 2; ++block) {
      const Matrix3& q = block == 0 ? pm.Q1 : pm.Q2;
      const Matrix3& m = block == 0 ? pm.M1 : pm.M2;
      const double tol = 1e-12 * frobenius(q) / min_mass;
      for (double omega_sq : gen_eigen_diag(q, m)) {
        if (omega_sq < -tol) return false;
      }
    }
  }
  return true;
}

double validate_isotropy(const DislocationParams& d, int n_directions,
                         unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const Vector3 e1{1.0, 0.0, 0.0};
  const auto [q1_ref, q2_ref] = acoustic_blocks(d, e1, e1);
  const auto ref1 = sym_eigen(q1_ref).values;
  const auto ref2 = sym_eigen(q2_ref).values;

  double worst = 0.0;
  for (int n = 0; n < n_directions; ++n) {
    Vector3 dir{gauss(rng), gauss(rng), gauss(rng)};
    const double len = norm(dir);
    if (len < 1e-6) continue;
    dir = dir * (1.0 / len);
    const auto [q1, q2] = acoustic_blocks(d, dir, dir);
    const auto v1 = sym_eigen(q1).values;
    const auto v2 = sym_eigen(q2).values;
    for (int i = 0; i < 3; ++i) {
      worst = std::max(worst, std::abs(v1[static_cast<std::size_t>(i)] - ref1[static_cast<std::size_t>(i)]));
      worst = std::max(worst, std::abs(v2[static_cast<std::size_t>(i)] - ref2[static_cast<std::size_t>(i)]));
    }
  }
  return worst;
}

void write_dispersion_csv(const DispersionResult& r, std::ostream& os) {
  os << "k,branch_label,omega,omega_sq,phase_velocity,group_velocity,real_flag\n";
  char buf[512];
  for (std::size_t ik = 0; ik < r.k_grid.size(); ++ik) {
    for (const BranchSeries& series : r.branches) {
      std::snprintf(buf, sizeof buf, "%.16e,%s,%.16e,%.16e,%.16e,%.16e,%d\n",
                    r.k_grid[ik], to_string(series.label), series.omega[ik],
                    series.omega_sq[ik], series.phase_velocity[ik],
                    series.group_velocity[ik], series.real_flag[ik] ? 1 : 0);
      os << buf;
    }
  }
}

}  // namespace cosserat
