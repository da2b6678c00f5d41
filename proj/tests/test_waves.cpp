#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "cosserat/constitutive.hpp"
#include "cosserat/waves.hpp"
#include "test_util.hpp"

using namespace cosserat;
using namespace testutil;

namespace {

WaveMedium unit_medium() {
  // mu_e = lambda_e = mu_c = 1, Lc = 1, alpha = (2, 0, 1), rho = iota = 1.
  DislocationParams d;
  d.mu_e = 1.0;
  d.lambda_e = 1.0;
  d.mu_c = 1.0;
  d.L_c = 1.0;
  d.alpha1 = 2.0;
  d.alpha2 = 0.0;
  d.alpha3 = 1.0;
  return WaveMedium::create(d, 1.0, 1.0);
}

WaveMedium random_medium(std::mt19937_64& rng) {
  DislocationParams d = random_valid_params(rng);
  return WaveMedium::create(d, uniform(rng, 0.5, 3.0), uniform(rng, 0.5, 3.0));
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) {
    g.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  }
  return g;
}

const BranchSeries& find_branch(const DispersionResult& r, BranchLabel label) {
  for (const BranchSeries& b : r.branches)
    if (b.label == label) return b;
  throw std::logic_error("branch not found");
}

}  // namespace

TEST_CASE("propagation matrices: entries, symmetry, k = 0") {
  const WaveMedium w = unit_medium();

  const PropagationMatrices at0 = propagation_matrices(w, 0.0);
  CHECK(norm(at0.Q1 - Matrix3::diagonal(0, 0, 4)) == 0.0);
  CHECK(norm(at0.Q2 - Matrix3::diagonal(0, 4, 4)) == 0.0);

  const PropagationMatrices at1 = propagation_matrices(w, 1.0);
  const Matrix3 expected{3, 0, 0,
                         0, 2, -2,
                         0, -2, 6};
  CHECK(norm(at1.Q1 - expected) == 0.0);

  std::mt19937_64 rng(131);
  for (int n = 0; n < 1000; ++n) {
    const WaveMedium m = random_medium(rng);
    const PropagationMatrices pm = propagation_matrices(m, uniform(rng, 0.0, 100.0));
    CHECK(norm(pm.Q1 - pm.Q1.transposed()) == 0.0);
    CHECK(norm(pm.Q2 - pm.Q2.transposed()) == 0.0);
  }

  CHECK_THROWS_AS(propagation_matrices(w, -1.0), Error);
  CHECK_THROWS_AS(WaveMedium::create(w.d, -1.0, 1.0), Error);
}

TEST_CASE("branch frequencies: closed-form block and k = 0 limits") {
  const WaveMedium w = unit_medium();

  const auto at1 = branch_frequencies(w, 1.0);
  std::vector<double> block1;
  for (const auto& b : at1)
    if (b.block == 0) block1.push_back(b.omega_sq);
  std::sort(block1.begin(), block1.end());
  CHECK(block1[0] == doctest::Approx(4.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(block1[1] == doctest::Approx(3.0));
  CHECK(block1[2] == doctest::Approx(4.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-14));

  // Every k = 0 eigenvalue is 0 or the cut-off value 4 mu_c / iota;
  // block 1 carries (0, 0, 4 mu_c/iota), block 2 (0, 4 mu_c/iota x2).
  const auto at0 = branch_frequencies(w, 0.0);
  const double cutoff_sq = 4.0 * w.d.mu_c / w.rot_inertia;
  int zeros[2] = {0, 0}, cuts[2] = {0, 0};
  for (const auto& b : at0) {
    const bool is_zero = std::abs(b.omega_sq) <= 1e-12 * cutoff_sq;
    const bool is_cut = std::abs(b.omega_sq - cutoff_sq) <= 1e-12 * cutoff_sq;
    CHECK((is_zero || is_cut));
    zeros[b.block] += is_zero;
    cuts[b.block] += is_cut;
  }
  CHECK(zeros[0] == 2);
  CHECK(cuts[0] == 1);
  CHECK(zeros[1] == 1);
  CHECK(cuts[1] == 2);
}

TEST_CASE("longitudinal branch is exactly non-dispersive") {
  std::mt19937_64 rng(137);
  for (int n = 0; n < 50; ++n) {
    const WaveMedium w = random_medium(rng);
    const double cp_sq = (2.0 * w.d.mu_e + w.d.lambda_e) / w.rho();
    const DispersionResult res = dispersion_sweep(w, log_grid(1e-3, 1e3, 40));
    const BranchSeries& lng = find_branch(res, BranchLabel::LongitudinalAcoustic);
    for (std::size_t i = 0; i < res.k_grid.size(); ++i) {
      const double k = res.k_grid[i];
      CHECK(rel_diff(lng.omega_sq[i], cp_sq * k * k) <= 1e-12);
      CHECK(std::abs(lng.phase_velocity[i] - lng.group_velocity[i]) <=
            1e-12 * lng.phase_velocity[i]);
    }
  }
}

TEST_CASE("velocity limits: c_t at small k, zero optical slope at cut-off") {
  const WaveMedium w = unit_medium();

  const DispersionResult res = dispersion_sweep(w, {1e-8, 1e-7, 1e-6});
  const BranchSeries& sa = find_branch(res, BranchLabel::ShearAcoustic);
  const double c_t = std::sqrt(w.d.mu_e / w.rho());
  CHECK(rel_diff(sa.group_velocity[0], c_t) <= 1e-8);
  CHECK(rel_diff(sa.phase_velocity[0], c_t) <= 1e-8);

  const DispersionResult at0 = dispersion_sweep(w, {0.0, 1e-6});
  const BranchSeries& so = find_branch(at0, BranchLabel::ShearOptical);
  CHECK(so.group_velocity[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::isnan(so.phase_velocity[0]));
  CHECK(so.omega[0] == doctest::Approx(2.0));  // cutoff = 2 sqrt(mu_c/iota)

  CHECK_THROWS_AS(velocities(w, 0.0, 0, 0), Error);
  // Evanescent: rig a medium failing at large k.
  DislocationParams bad = w.d;
  bad.alpha3 = -2.0 * bad.alpha1 - 1.0;  // 2 alpha1 + alpha3 < 0
  const WaveMedium wb = WaveMedium::create(bad, 1.0, 1.0);
  CHECK_THROWS_AS(velocities(wb, 1e4, 1, 0), Error);
}

TEST_CASE("asymptotic velocities and large-k branch speeds") {
  SUBCASE("hand values") {
    DislocationParams d;
    d.mu_e = 1.0;
    d.lambda_e = 1.0;
    d.mu_c = 1.0;
    d.L_c = 1.0;
    d.alpha1 = 1.0;
    d.alpha2 = 0.5;
    d.alpha3 = 0.25;
    const WaveMedium w = WaveMedium::create(d, 1.0, 1.0);
    const AsymptoticVelocities a = asymptotic_velocities(w);
    CHECK(a.c_p == doctest::Approx(std::sqrt(3.0)));
    CHECK(a.c_t == doctest::Approx(1.0));
    CHECK(a.c_s == doctest::Approx(std::sqrt(2.0)));
    CHECK(a.cutoff == doctest::Approx(2.0));
    CHECK(a.real_wave_conditions);
  }
  SUBCASE("c_ms carries the Eringen gamma pair under identification") {
    std::mt19937_64 rng(141);
    for (int n = 0; n < 50; ++n) {
      const WaveMedium w = random_medium(rng);
      const AsymptoticVelocities a = asymptotic_velocities(w);
      // mu_e Lc^2 (alpha1 + alpha2) = (gamma+beta) + (gamma-beta) = 2 gamma.
      const EringenParams er = eringen_from_dislocation(w.d);
      CHECK(rel_diff(a.c_ms * a.c_ms, 2.0 * er.gamma / w.rot_inertia) <= 1e-13);
      CHECK(rel_diff(a.c_mp * a.c_mp,
                     (2.0 * (er.gamma + er.beta) + 2.0 * er.alpha) / w.rot_inertia) <= 1e-13);
    }
  }
  SUBCASE("branch speeds at k = 1e4 / Lc match the closed forms") {
    std::mt19937_64 rng(139);
    for (int n = 0; n < 30; ++n) {
      const WaveMedium w = random_medium(rng);
      const AsymptoticVelocities a = asymptotic_velocities(w);
      const double k_hi = 1e4 / w.d.L_c;
      const DispersionResult res = dispersion_sweep(w, {k_hi * 0.5, k_hi});

      // The shear pair ends at {c_s, c_ms} (order depends on the medium);
      // the decoupled rotational-compression branch ends at c_mp.
      const BranchSeries& b1a = find_branch(res, BranchLabel::ShearAcoustic);
      const BranchSeries& b1o = find_branch(res, BranchLabel::ShearOptical);
      double speeds[2] = {b1a.omega[1] / k_hi, b1o.omega[1] / k_hi};
      std::sort(speeds, speeds + 2);
      double expect[2] = {a.c_s, a.c_ms};
      std::sort(expect, expect + 2);
      CHECK(rel_diff(speeds[0], expect[0]) <= 1e-6);
      CHECK(rel_diff(speeds[1], expect[1]) <= 1e-6);

      const BranchSeries& crot = find_branch(res, BranchLabel::CompressionalRotationalOptical);
      CHECK(rel_diff(crot.omega[1] / k_hi, a.c_mp) <= 1e-6);
    }
  }
}

TEST_CASE("Hellmann-Feynman group velocity matches central differences") {
  std::mt19937_64 rng(149);
  for (int n = 0; n < 20; ++n) {
    const WaveMedium w = random_medium(rng);
    for (double k : {0.37, 2.1, 8.9}) {
      for (int block = 0; block < 2; ++block) {
        for (int slot = 0; slot < 3; ++slot) {
          const PropagationMatrices pm = propagation_matrices(w, k);
          const Matrix3& q = block == 0 ? pm.Q1 : pm.Q2;
          const Matrix3& m = block == 0 ? pm.M1 : pm.M2;
          const auto vals = gen_eigen_diag(q, m);
          // Stay away from near-degenerate pairs; matching is separate.
          const double gap =
              std::min(std::abs(vals[1] - vals[0]), std::abs(vals[2] - vals[1]));
          if (gap < 1e-3 || vals[static_cast<std::size_t>(slot)] <= 1e-6) continue;

          const Velocities v = velocities(w, k, block, slot);
          const double h = 1e-6 * k;
          const auto up = gen_eigen_diag(
              block == 0 ? propagation_matrices(w, k + h).Q1 : propagation_matrices(w, k + h).Q2,
              m);
          const auto dn = gen_eigen_diag(
              block == 0 ? propagation_matrices(w, k - h).Q1 : propagation_matrices(w, k - h).Q2,
              m);
          const double fd_omega =
              (std::sqrt(up[static_cast<std::size_t>(slot)]) - std::sqrt(dn[static_cast<std::size_t>(slot)])) / (2.0 * h);
          CHECK(rel_diff(v.group, fd_omega) <= 1e-6);
        }
      }
    }
  }
}

TEST_CASE("sweep: continuity, acoustic monotonicity, eigen residuals") {
  std::mt19937_64 rng(151);
  for (int n = 0; n < 10; ++n) {
    const WaveMedium w = random_medium(rng);
    const auto grid = log_grid(1e-3, 1e3, 200);
    const DispersionResult res = dispersion_sweep(w, grid);

    for (const BranchSeries& b : res.branches) {
      REQUIRE(b.omega_sq.size() == grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) CHECK(b.real_flag[i]);
    }
    const BranchSeries& la = find_branch(res, BranchLabel::LongitudinalAcoustic);
    const BranchSeries& sa = find_branch(res, BranchLabel::ShearAcoustic);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      CHECK(la.omega_sq[i] >= la.omega_sq[i - 1] * (1.0 - 1e-12));
      CHECK(sa.omega_sq[i] >= sa.omega_sq[i - 1] * (1.0 - 1e-12));
    }
  }

  // Residual contract ||(Q - w^2 M) v|| <= 1e-10 ||Q||.
  std::mt19937_64 rng2(157);
  for (int n = 0; n < 50; ++n) {
    const WaveMedium w = random_medium(rng2);
    const double k = uniform(rng2, 0.0, 50.0);
    const PropagationMatrices pm = propagation_matrices(w, k);
    for (int block = 0; block < 2; ++block) {
      const Matrix3& q = block == 0 ? pm.Q1 : pm.Q2;
      const Matrix3& m = block == 0 ? pm.M1 : pm.M2;
      const GenEigen ge = gen_eigen_diag_full(q, m);
      for (int slot = 0; slot < 3; ++slot) {
        Vector3 wv;
        for (int i = 0; i < 3; ++i) {
          wv[i] = ge.reduced_vectors(i, slot) / std::sqrt(ge.mass_diag[i]);
        }
        const Vector3 resid = q * wv - (m * wv) * ge.values[static_cast<std::size_t>(slot)];
        CHECK(cosserat::norm(resid) <= 1e-10 * std::max(norm(q), 1e-12));
      }
    }
  }
}

TEST_CASE("real_wave_scan agrees with the closed-form conditions") {
  std::mt19937_64 rng(163);
  const auto grid = log_grid(1e-3, 1e4, 60);
  int checked = 0;
  while (checked < 300) {
    DislocationParams d;
    d.mu_e = uniform(rng, -1.0, 2.0);
    d.lambda_e = uniform(rng, -2.0, 2.0);
    d.mu_c = uniform(rng, -1.0, 2.0);
    d.L_c = 1.0;
    d.alpha1 = uniform(rng, -1.0, 2.0);
    d.alpha2 = uniform(rng, -1.0, 2.0);
    d.alpha3 = uniform(rng, -1.0, 2.0);
    const double margins[5] = {2.0 * d.mu_e + d.lambda_e, d.mu_e, d.mu_c,
                               2.0 * d.alpha1 + d.alpha3, d.alpha1 + d.alpha2};
    bool safe = true;
    for (double m : margins)
      if (std::abs(m) < 1e-6) safe = false;
    if (!safe) continue;
    ++checked;

    const WaveMedium w = WaveMedium::create(d, 1.0, 1.0);
    CHECK(real_wave_scan(w, grid) == check_conditions(d).real_plane_waves);
  }

  // Single point k = 0 with mu_c > 0 is trivially real.
  const WaveMedium w = unit_medium();
  CHECK(real_wave_scan(w, {0.0}));
  CHECK_THROWS_AS(real_wave_scan(w, {}), Error);

  // 2 alpha1 + alpha3 < 0 turns evanescent at large k.
  DislocationParams bad = w.d;
  bad.alpha3 = -2.0 * bad.alpha1 - 0.5;
  WaveMedium wb = WaveMedium::create(bad, 1.0, 1.0);
  CHECK_FALSE(real_wave_scan(wb, grid));
  const DispersionResult res = dispersion_sweep(wb, {1e4});
  bool any_evanescent = false;
  for (const BranchSeries& b : res.branches) {
    if (!b.real_flag[0]) any_evanescent = true;
  }
  CHECK(any_evanescent);
}

TEST_CASE("branch matching survives an eigenvalue crossing") {
  // c_p^2 = 5 and the shear-optical branch omega^2 ~ k^2 + 4 cross at k = 1;
  // sorted eigenvalue order swaps there, eigenvector matching must not.
  DislocationParams d;
  d.mu_e = 1.0;
  d.lambda_e = 3.0;
  d.mu_c = 1.0;
  d.L_c = 1.0;
  d.alpha1 = 0.6;
  d.alpha2 = 0.4;
  d.alpha3 = 0.2;
  const WaveMedium w = WaveMedium::create(d, 1.0, 1.0);

  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back(0.05 + 2.0 * i / 200.0);
  const DispersionResult res = dispersion_sweep(w, grid);
  const BranchSeries& lng = find_branch(res, BranchLabel::LongitudinalAcoustic);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(rel_diff(lng.omega_sq[i], 5.0 * grid[i] * grid[i]) <= 1e-12);
  }
}

TEST_CASE("isotropy of the acoustic blocks over random directions") {
  std::mt19937_64 rng(167);
  for (int n = 0; n < 10; ++n) {
    const DislocationParams d = random_valid_params(rng);
    CHECK(validate_isotropy(d, 200, 17u + static_cast<unsigned>(n)) <= 1e-10);
  }
}

TEST_CASE("CSV writer: header, shape, values") {
  const WaveMedium w = unit_medium();
  const DispersionResult res = dispersion_sweep(w, log_grid(0.1, 10.0, 5));
  std::ostringstream os;
  write_dispersion_csv(res, os);
  const std::string text = os.str();

  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  CHECK(line == "k,branch_label,omega,omega_sq,phase_velocity,group_velocity,real_flag");
  int rows = 0;
  bool has_label = false;
  while (std::getline(is, line)) {
    ++rows;
    if (line.find("compressional-rotational-optical") != std::string::npos) has_label = true;
  }
  CHECK(rows == 6 * 5);
  CHECK(has_label);
}
