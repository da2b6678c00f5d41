#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "cosserat/params.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

// Plane-wave machinery for propagation along e1; isotropy extends the
// spectra to every direction (validate_isotropy checks this numerically).

struct WaveMedium {
  DislocationParams d;       // SI-coherent moduli and length
  double rot_inertia = 0.0;  // iota, the (fpm) rotational mass entry

  double rho() const;

  static WaveMedium create(const DislocationParams& d_si, double rho, double iota);
};

struct PropagationMatrices {
  Matrix3 Q1;       // couples (u1, u2, theta3)
  Matrix3 Q2;       // couples (u3, theta1, theta2)
  Matrix3 M1;       // diag(rho, rho, iota)
  Matrix3 M2;       // diag(rho, iota, iota)
};

PropagationMatrices propagation_matrices(const WaveMedium& w, double k);

enum class BranchLabel {
  LongitudinalAcoustic,
  ShearAcoustic,
  ShearOptical,
  RotationalOpticalA,
  RotationalOpticalB,
  CompressionalRotationalOptical,
};

const char* to_string(BranchLabel label);

struct BranchFrequency {
  double omega_sq = 0.0;
  BranchLabel label{};
  int block = 0;  // 0 -> (Q1, M1), 1 -> (Q2, M2)
  int slot = 0;   // ascending eigenvalue index within the block
};

// Six generalized eigenvalues of the two (Q, M) pencils at one wavenumber,
// labeled by their k -> 0 limits (acoustic: 0; optical: 4 mu_c / iota).
std::array<BranchFrequency, 6> branch_frequencies(const WaveMedium& w, double k);

struct Velocities {
  double phase = 0.0;  // omega / k
  double group = 0.0;  // d omega / d k, Hellmann-Feynman
};

Velocities velocities(const WaveMedium& w, double k, int block, int slot);

struct AsymptoticVelocities {
  double c_p = 0.0;
  double c_t = 0.0;
  double c_s = 0.0;
  double c_mp = 0.0;
  double c_ms = 0.0;
  double cutoff = 0.0;
  bool real_wave_conditions = false;  // Prop. 5.1 closed form
};

AsymptoticVelocities asymptotic_velocities(const WaveMedium& w);

struct BranchSeries {
  BranchLabel label{};
  int block = 0;
  std::vector<double> omega_sq;
  std::vector<double> omega;           // |omega| for evanescent samples
  std::vector<double> phase_velocity;  // NaN where undefined (k = 0, evanescent)
  std::vector<double> group_velocity;
  std::vector<bool> real_flag;
};

struct DispersionResult {
  std::vector<double> k_grid;
  std::array<BranchSeries, 6> branches;
  double cutoff_frequency = 0.0;
  AsymptoticVelocities asymptotic;
};

// Sweeps the grid; branch continuity across k is kept by eigenvector
// overlap matching between adjacent grid points (eigenvalue order alone
// swaps labels at crossings).
DispersionResult dispersion_sweep(const WaveMedium& w,
                                  const std::vector<double>& k_grid);

// True iff every omega^2 across the grid is >= -1e-12 ||Q|| / min(M).
bool real_wave_scan(const WaveMedium& w, const std::vector<double>& k_grid);

// Max deviation of acoustic-block eigenvalues over random directions from
// the e1 values; isotropy makes this zero up to roundoff.
double validate_isotropy(const DislocationParams& d, int n_directions,
                         unsigned seed);

// CSV contract: header row, then one row per (k, branch) in full double
// precision scientific notation.
void write_dispersion_csv(const DispersionResult& r, std::ostream& os);

}  // namespace cosserat
