#pragma once

#include <array>
#include <map>
#include <vector>

#include "cosserat/tensor.hpp"

namespace cosserat {

// Multivariate polynomial fields over R^3 with exact coefficient calculus.
// Degrees are capped at 6; everything the toolkit verifies needs <= 4.

using MultiIndex = std::array<int, 3>;

class PolyScalarField {
 public:
  static constexpr int kMaxDegree = 6;

  PolyScalarField() = default;                    // the zero field
  explicit PolyScalarField(double constant);

  static PolyScalarField monomial(const MultiIndex& idx, double coeff);
  static PolyScalarField coordinate(int axis);    // x, y or z

  PolyScalarField operator+(const PolyScalarField& o) const;
  PolyScalarField operator-(const PolyScalarField& o) const;
  PolyScalarField operator*(const PolyScalarField& o) const;
  PolyScalarField operator*(double s) const;
  PolyScalarField operator-() const;

  // Exact on coefficients: d/dx_axis of x^i y^j z^k carries coefficient i.
  PolyScalarField diff(int axis) const;

  double eval(const Vector3& p) const;
  int degree() const;
  bool is_zero() const { return terms_.empty(); }

  const std::map<MultiIndex, double>& terms() const { return terms_; }

 private:
  void add_term(const MultiIndex& idx, double coeff);

  std::map<MultiIndex, double> terms_;
};

inline PolyScalarField operator*(double s, const PolyScalarField& f) {
  return f * s;
}

struct PolyVectorField {
  std::array<PolyScalarField, 3> c;

  PolyScalarField& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const PolyScalarField& operator[](int i) const {
    return c[static_cast<std::size_t>(i)];
  }

  Vector3 eval(const Vector3& p) const;

  PolyVectorField operator+(const PolyVectorField& o) const;
  PolyVectorField operator-(const PolyVectorField& o) const;
  PolyVectorField operator*(double s) const;
};

struct PolyMatrixField {
  std::array<PolyScalarField, 9> c;

  PolyScalarField& operator()(int i, int j) {
    return c[static_cast<std::size_t>(3 * i + j)];
  }
  const PolyScalarField& operator()(int i, int j) const {
    return c[static_cast<std::size_t>(3 * i + j)];
  }

  Matrix3 eval(const Vector3& p) const;

  PolyMatrixField operator+(const PolyMatrixField& o) const;
  PolyMatrixField operator-(const PolyMatrixField& o) const;
  PolyMatrixField operator*(double s) const;
  PolyMatrixField operator-() const;

  PolyMatrixField transposed() const;
  PolyScalarField trace() const;
};

PolyMatrixField sym(const PolyMatrixField& p);
PolyMatrixField skw(const PolyMatrixField& p);
PolyMatrixField dev(const PolyMatrixField& p);
PolyMatrixField identity_times(const PolyScalarField& f);

// Axial vector of the skew part, entrywise (M21-M12)/2 etc.
PolyVectorField axl_of_skew(const PolyMatrixField& p);

// Skew-symmetric matrix field carried by its axial vector field; the
// materialized matrix is skew at every point by construction.
struct PolySkewField {
  PolyVectorField axial;

  PolyMatrixField matrix() const;
  SkewMatrix3 eval(const Vector3& p) const;
};

// D u = (u_{i,j}); row i of Curl P is curl of row i; Div P is row-wise div.
PolyMatrixField vector_grad(const PolyVectorField& v);
PolyVectorField vector_curl(const PolyVectorField& v);
PolyMatrixField matrix_curl(const PolyMatrixField& p);
PolyVectorField matrix_div(const PolyMatrixField& p);

// Pointwise Nye maps between the curvature K = D axl A and the
// dislocation density alpha = -Curl A.
Matrix3 nye_forward(const Matrix3& k);       // alpha = K^T - tr(K) Id
Matrix3 nye_inverse(const Matrix3& alpha);   // K = alpha^T - tr(alpha)/2 Id

// Evaluates both sides of the Nye identity -Curl A = (D axl A)^T -
// tr[(D axl A)^T] Id by exact field calculus at each sample point and
// returns the max entrywise discrepancy, including the four split
// implications (dev sym, skew, sym, trace).
double verify_nye(const PolySkewField& a, const std::vector<Vector3>& points);

// Same check for a general matrix field; rejects fields whose coefficients
// are not exactly skew-symmetric.
double verify_nye(const PolyMatrixField& a, const std::vector<Vector3>& points);

}  // namespace cosserat
