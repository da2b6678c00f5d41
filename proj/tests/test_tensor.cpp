#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cosserat/tensor.hpp"
#include "test_util.hpp"

using namespace cosserat;
using namespace testutil;

TEST_CASE("decompose: identity is purely spherical") {
  const CartanParts p = decompose(Matrix3::identity());
  CHECK(norm(p.dev_sym) == 0.0);
  CHECK(norm(p.skew.matrix()) == 0.0);
  CHECK(p.spherical_trace == 3.0);
}

TEST_CASE("decompose: skew input stays skew") {
  const Matrix3 a = anti(Vector3{1, 2, 3}).matrix();
  const CartanParts p = decompose(a);
  CHECK(norm(p.dev_sym) == 0.0);
  CHECK(p.spherical_trace == 0.0);
  CHECK(norm(p.skew.matrix() - a) == 0.0);
}

TEST_CASE("decompose: diag(1,2,3) by hand subtraction") {
  const CartanParts p = decompose(Matrix3::diagonal(1, 2, 3));
  CHECK(p.spherical_trace == doctest::Approx(6.0));
  CHECK(norm(p.dev_sym - Matrix3::diagonal(-1, 0, 1)) <= 1e-15);
  CHECK(norm(p.skew.matrix()) == 0.0);
}

TEST_CASE("decompose: recomposition and Pythagoras on random input") {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 500; ++n) {
    const Matrix3 x = random_matrix(rng, -5.0, 5.0);
    const CartanParts p = decompose(x);

    const Matrix3 back = p.recompose();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(ulp_distance(back(i, j), x(i, j)) <= 8);
      }

    const double lhs = norm_sq(x);
    const double rhs = norm_sq(p.dev_sym) + norm_sq(p.skew.matrix()) +
                       p.spherical_trace * p.spherical_trace / 3.0;
    CHECK(rel_diff(lhs, rhs) <= 1e-13);

    // Mutual orthogonality of the Cartan parts.
    const Matrix3 sph = Matrix3::identity() * (p.spherical_trace / 3.0);
    const double scale = std::max(1.0, norm(x) * norm(x));
    CHECK(std::abs(inner(p.dev_sym, p.skew.matrix())) / scale <= 1e-14);
    CHECK(std::abs(inner(p.dev_sym, sph)) / scale <= 1e-14);
    CHECK(std::abs(inner(p.skew.matrix(), sph)) / scale <= 1e-14);
  }
}

TEST_CASE("decompose rejects non-finite input") {
  Matrix3 x = Matrix3::identity();
  x(1, 1) = std::nan("");
  CHECK_THROWS_AS(decompose(x), Error);
}

TEST_CASE("axl matches the canonical skew layout") {
  // A built from (a1,a2,a3) = (1,2,3).
  const Matrix3 a{0, -3, 2,
                  3, 0, -1,
                  -2, 1, 0};
  const Vector3 v = axl(a);
  CHECK(v[0] == 1.0);
  CHECK(v[1] == 2.0);
  CHECK(v[2] == 3.0);
  CHECK(axl(Matrix3::zero())[0] == 0.0);
}

TEST_CASE("anti acts as the cross product") {
  const Matrix3 a = anti(Vector3{0, 0, 1}).matrix();
  const Vector3 r = a * Vector3{1, 0, 0};
  CHECK(r[0] == 0.0);
  CHECK(r[1] == 1.0);
  CHECK(r[2] == 0.0);

  std::mt19937_64 rng(7);
  for (int n = 0; n < 200; ++n) {
    const Vector3 v = random_vector(rng), w = random_vector(rng);
    const Vector3 lhs = anti(v).matrix() * w;
    const Vector3 rhs = cross(v, w);
    for (int i = 0; i < 3; ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-14));
  }
}

TEST_CASE("axl and anti are mutually inverse on exact data") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 200; ++n) {
    const Vector3 v = random_vector(rng, -7.0, 7.0);
    const Vector3 round = axl(anti(v).matrix());
    for (int i = 0; i < 3; ++i) CHECK(round[i] == v[i]);

    const SkewMatrix3 a = anti(v);
    CHECK(norm(a.matrix() + a.matrix().transposed()) == 0.0);
  }
}

TEST_CASE("axl rejects non-skew input") {
  CHECK_THROWS_AS(axl(Matrix3::identity()), Error);
  Matrix3 nearly = anti(Vector3{1, 2, 3}).matrix();
  nearly(0, 1) += 1e-6;
  CHECK_THROWS_AS(axl(nearly), Error);
}

TEST_CASE("sym_eigen: diagonal and identity cases") {
  const SymEigen e = sym_eigen(Matrix3::diagonal(3, 1, 2));
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(2.0));
  CHECK(e.values[2] == doctest::Approx(3.0));

  const SymEigen id = sym_eigen(Matrix3::identity());
  for (int i = 0; i < 3; ++i) CHECK(id.values[static_cast<std::size_t>(i)] == doctest::Approx(1.0));
}

TEST_CASE("sym_eigen: embedded 2x2 block with closed-form roots") {
  // [[2,-2],[-2,6]] has eigenvalues 4 -+ 2 sqrt(2) (roots of l^2-8l+8).
  const Matrix3 s{2, -2, 0,
                  -2, 6, 0,
                  0, 0, 1};
  const SymEigen e = sym_eigen(s);
  const double lo = 4.0 - 2.0 * std::sqrt(2.0);
  const double hi = 4.0 + 2.0 * std::sqrt(2.0);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(lo).epsilon(1e-14));
  CHECK(e.values[2] == doctest::Approx(hi).epsilon(1e-14));
}

TEST_CASE("sym_eigen: residual, orthonormality, rotation invariance") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 300; ++n) {
    const Matrix3 s = sym(random_matrix(rng, -4.0, 4.0));
    const SymEigen e = sym_eigen(s);
    const double ns = std::max(norm(s), 1e-30);

    for (int k = 0; k < 3; ++k) {
      const Vector3 v{e.vectors(0, k), e.vectors(1, k), e.vectors(2, k)};
      const Vector3 r = s * v - v * e.values[static_cast<std::size_t>(k)];
      CHECK(norm(r) <= 1e-12 * ns);
    }
    const Matrix3 vtv = e.vectors.transposed() * e.vectors;
    CHECK(norm(vtv - Matrix3::identity()) <= 1e-12);
    CHECK(e.values[0] <= e.values[1]);
    CHECK(e.values[1] <= e.values[2]);

    const Matrix3 r = random_rotation(rng);
    const SymEigen rot = sym_eigen(r.transposed() * s * r);
    for (int k = 0; k < 3; ++k) {
      CHECK(rel_diff(rot.values[static_cast<std::size_t>(k)], e.values[static_cast<std::size_t>(k)]) <= 1e-10);
    }
  }
}

TEST_CASE("sym_eigen rejects asymmetric input") {
  Matrix3 s = Matrix3::identity();
  s(0, 1) = 0.5;
  CHECK_THROWS_AS(sym_eigen(s), Error);
}

TEST_CASE("gen_eigen_diag: diagonal cases") {
  const auto v = gen_eigen_diag(Matrix3::diagonal(0, 0, 4), Matrix3::identity());
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[1] == doctest::Approx(0.0));
  CHECK(v[2] == doctest::Approx(4.0));

  const auto w = gen_eigen_diag(Matrix3::diagonal(4, 4, 4), Matrix3::diagonal(1, 1, 4));
  CHECK(w[0] == doctest::Approx(1.0));
  CHECK(w[1] == doctest::Approx(4.0));
  CHECK(w[2] == doctest::Approx(4.0));
}

TEST_CASE("gen_eigen_diag: coupled block and determinant residual") {
  const Matrix3 q{3, 0, 0,
                  0, 2, -2,
                  0, -2, 6};
  const auto v = gen_eigen_diag(q, Matrix3::identity());
  CHECK(v[0] == doctest::Approx(4.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(v[1] == doctest::Approx(3.0));
  CHECK(v[2] == doctest::Approx(4.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-14));

  std::mt19937_64 rng(31);
  for (int n = 0; n < 200; ++n) {
    const Matrix3 s = sym(random_matrix(rng, -3.0, 3.0));
    const Matrix3 m = Matrix3::diagonal(uniform(rng, 0.1, 4.0), uniform(rng, 0.1, 4.0),
                                        uniform(rng, 0.1, 4.0));
    const double nq = norm(s);
    for (double lambda : gen_eigen_diag(s, m)) {
      const Matrix3 shifted = s - m * lambda;
      double det = shifted(0, 0) * (shifted(1, 1) * shifted(2, 2) - shifted(1, 2) * shifted(2, 1)) -
                   shifted(0, 1) * (shifted(1, 0) * shifted(2, 2) - shifted(1, 2) * shifted(2, 0)) +
                   shifted(0, 2) * (shifted(1, 0) * shifted(2, 1) - shifted(1, 1) * shifted(2, 0));
      CHECK(std::abs(det) <= 1e-10 * std::max(nq * nq * nq, 1e-12));
    }
  }
}

TEST_CASE("gen_eigen_diag rejects bad mass matrices") {
  CHECK_THROWS_AS(gen_eigen_diag(Matrix3::identity(), Matrix3::diagonal(1, -1, 1)), Error);
  CHECK_THROWS_AS(gen_eigen_diag(Matrix3::identity(), Matrix3::diagonal(1, 0, 1)), Error);
  Matrix3 m = Matrix3::identity();
  m(0, 1) = 0.25;
  CHECK_THROWS_AS(gen_eigen_diag(Matrix3::identity(), m), Error);
}
