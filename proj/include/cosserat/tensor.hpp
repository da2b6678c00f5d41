#pragma once

#include <array>
#include <cmath>

#include "cosserat/errors.hpp"

namespace cosserat {

struct Vector3 {
  std::array<double, 3> c{0.0, 0.0, 0.0};

  Vector3() = default;
  Vector3(double x, double y, double z) : c{x, y, z} {}

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vector3 operator+(const Vector3& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]};
  }
  Vector3 operator-(const Vector3& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]};
  }
  Vector3 operator*(double s) const { return {c[0] * s, c[1] * s, c[2] * s}; }
  Vector3 operator-() const { return {-c[0], -c[1], -c[2]}; }
};

inline Vector3 operator*(double s, const Vector3& v) { return v * s; }

double dot(const Vector3& a, const Vector3& b);
Vector3 cross(const Vector3& a, const Vector3& b);
double norm(const Vector3& v);
bool is_finite(const Vector3& v);

// Dense 3x3 second-order tensor. Row-major; X(i, j) is row i, column j.
struct Matrix3 {
  std::array<double, 9> m{};

  Matrix3() = default;
  Matrix3(double a00, double a01, double a02,
          double a10, double a11, double a12,
          double a20, double a21, double a22)
      : m{a00, a01, a02, a10, a11, a12, a20, a21, a22} {}

  double& operator()(int i, int j) {
    return m[static_cast<std::size_t>(3 * i + j)];
  }
  double operator()(int i, int j) const {
    return m[static_cast<std::size_t>(3 * i + j)];
  }

  static Matrix3 zero() { return Matrix3{}; }
  static Matrix3 identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }
  static Matrix3 diagonal(double a, double b, double c) {
    return {a, 0, 0, 0, b, 0, 0, 0, c};
  }

  Matrix3 operator+(const Matrix3& o) const;
  Matrix3 operator-(const Matrix3& o) const;
  Matrix3 operator*(double s) const;
  Matrix3 operator-() const;
  Matrix3 operator*(const Matrix3& o) const;  // matrix product
  Vector3 operator*(const Vector3& v) const;

  Matrix3 transposed() const;
  double trace() const { return m[0] + m[4] + m[8]; }
};

inline Matrix3 operator*(double s, const Matrix3& x) { return x * s; }

Matrix3 sym(const Matrix3& x);
Matrix3 skw(const Matrix3& x);
Matrix3 dev(const Matrix3& x);
Matrix3 outer(const Vector3& a, const Vector3& b);
double inner(const Matrix3& a, const Matrix3& b);  // <A,B> = tr(A B^T)
double norm_sq(const Matrix3& x);
double norm(const Matrix3& x);
bool is_finite(const Matrix3& x);

// Skew-symmetric tensor stored through its axial vector, so the
// materialized matrix satisfies M = -M^T exactly.
struct SkewMatrix3 {
  Vector3 axial;

  SkewMatrix3() = default;
  explicit SkewMatrix3(const Vector3& a) : axial(a) {}

  Matrix3 matrix() const;
};

// axl : so(3) -> R^3 and its inverse anti : R^3 -> so(3).
Vector3 axl(const SkewMatrix3& a);
SkewMatrix3 anti(const Vector3& v);

// axl applied to a general matrix. Requires ||sym X|| <= 1e-12 ||X||,
// otherwise InvalidInput. Extracts the axial vector of the skew part.
Vector3 axl(const Matrix3& x);

// Orthogonal Cartan split: X = dev_sym + skew + (trace/3) Id.
struct CartanParts {
  Matrix3 dev_sym;
  SkewMatrix3 skew;
  double spherical_trace = 0.0;

  Matrix3 recompose() const;
};

CartanParts decompose(const Matrix3& x);

struct SymEigen {
  std::array<double, 3> values;  // ascending
  Matrix3 vectors;               // orthonormal, column i pairs with values[i]
};

// Cyclic Jacobi eigensolver for symmetric 3x3 input. Converges when the
// off-diagonal Frobenius mass drops below 1e-14 ||S||.
SymEigen sym_eigen(const Matrix3& s);

struct GenEigen {
  std::array<double, 3> values;  // ascending generalized eigenvalues
  Matrix3 reduced_vectors;       // orthonormal y; physical w = M^{-1/2} y
  Vector3 mass_diag;
};

// Generalized problem (Q - w^2 M) w = 0 for diagonal positive M, reduced
// by the M^{-1/2} congruence.
GenEigen gen_eigen_diag_full(const Matrix3& q, const Matrix3& m_diag);
std::array<double, 3> gen_eigen_diag(const Matrix3& q, const Matrix3& m_diag);

}  // namespace cosserat
