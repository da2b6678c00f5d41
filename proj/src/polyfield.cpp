#include "cosserat/polyfield.hpp"

#include <algorithm>
#include <cmath>

namespace cosserat {

namespace {

int total_degree(const MultiIndex& idx) { return idx[0] + idx[1] + idx[2]; }

double int_pow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

PolyScalarField::PolyScalarField(double constant) {
  add_term({0, 0, 0}, constant);
}

PolyScalarField PolyScalarField::monomial(const MultiIndex& idx, double coeff) {
  if (idx[0] < 0 || idx[1] < 0 || idx[2] < 0 || total_degree(idx) > kMaxDegree) {
    throw Error(ErrorKind::InvalidInput, "PolyScalarField: multi-degree out of range");
  }
  PolyScalarField f;
  f.add_term(idx, coeff);
  return f;
}

PolyScalarField PolyScalarField::coordinate(int axis) {
  MultiIndex idx{0, 0, 0};
  idx[static_cast<std::size_t>(axis)] = 1;
  return monomial(idx, 1.0);
}

void PolyScalarField::add_term(const MultiIndex& idx, double coeff) {
  if (coeff == 0.0) return;
  if (total_degree(idx) > kMaxDegree) {
    throw Error(ErrorKind::InvalidInput, "PolyScalarField: degree cap (6) exceeded");
  }
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

PolyScalarField PolyScalarField::operator+(const PolyScalarField& o) const {
  PolyScalarField r = *this;
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, c);
  return r;
}

PolyScalarField PolyScalarField::operator-(const PolyScalarField& o) const {
  PolyScalarField r = *this;
  for (const auto& [idx, c] : o.terms_) r.add_term(idx, -c);
  return r;
}

PolyScalarField PolyScalarField::operator*(const PolyScalarField& o) const {
  PolyScalarField r;
  for (const auto& [ia, ca] : terms_)
    for (const auto& [ib, cb] : o.terms_) {
      r.add_term({ia[0] + ib[0], ia[1] + ib[1], ia[2] + ib[2]}, ca * cb);
    }
  return r;
}

PolyScalarField PolyScalarField::operator*(double s) const {
  PolyScalarField r;
  if (s == 0.0) return r;
  for (const auto& [idx, c] : terms_) r.add_term(idx, c * s);
  return r;
}

PolyScalarField PolyScalarField::operator-() const { return (*this) * -1.0; }

PolyScalarField PolyScalarField::diff(int axis) const {
  const std::size_t ax = static_cast<std::size_t>(axis);
  PolyScalarField r;
  for (const auto& [idx, c] : terms_) {
    if (idx[ax] == 0) continue;
    MultiIndex d = idx;
    d[ax] -= 1;
    r.add_term(d, c * static_cast<double>(idx[ax]));
  }
  return r;
}

double PolyScalarField::eval(const Vector3& p) const {
  double s = 0.0;
  for (const auto& [idx, c] : terms_) {
    s += c * int_pow(p[0], idx[0]) * int_pow(p[1], idx[1]) * int_pow(p[2], idx[2]);
  }
  return s;
}

int PolyScalarField::degree() const {
  int d = 0;
  for (const auto& [idx, c] : terms_) d = std::max(d, total_degree(idx));
  return d;
}

Vector3 PolyVectorField::eval(const Vector3& p) const {
  return {c[0].eval(p), c[1].eval(p), c[2].eval(p)};
}

PolyVectorField PolyVectorField::operator+(const PolyVectorField& o) const {
  PolyVectorField r;
  for (int i = 0; i < 3; ++i) r[i] = (*this)[i] + o[i];
  return r;
}

PolyVectorField PolyVectorField::operator-(const PolyVectorField& o) const {
  PolyVectorField r;
  for (int i = 0; i < 3; ++i) r[i] = (*this)[i] - o[i];
  return r;
}

PolyVectorField PolyVectorField::operator*(double s) const {
  PolyVectorField r;
  for (int i = 0; i < 3; ++i) r[i] = (*this)[i] * s;
  return r;
}

Matrix3 PolyMatrixField::eval(const Vector3& p) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(i, j).eval(p);
  return r;
}

PolyMatrixField PolyMatrixField::operator+(const PolyMatrixField& o) const {
  PolyMatrixField r;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

PolyMatrixField PolyMatrixField::operator-(const PolyMatrixField& o) const {
  PolyMatrixField r;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

PolyMatrixField PolyMatrixField::operator*(double s) const {
  PolyMatrixField r;
  for (std::size_t i = 0; i < 9; ++i) r.c[i] = c[i] * s;
  return r;
}

PolyMatrixField PolyMatrixField::operator-() const { return (*this) * -1.0; }

PolyMatrixField PolyMatrixField::transposed() const {
  PolyMatrixField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

PolyScalarField PolyMatrixField::trace() const {
  return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2);
}

PolyMatrixField sym(const PolyMatrixField& p) {
  PolyMatrixField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (p(i, j) + p(j, i)) * 0.5;
  return r;
}

PolyMatrixField skw(const PolyMatrixField& p) {
  PolyMatrixField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (p(i, j) - p(j, i)) * 0.5;
  return r;
}

PolyMatrixField dev(const PolyMatrixField& p) {
  return p - identity_times(p.trace() * (1.0 / 3.0));
}

PolyMatrixField identity_times(const PolyScalarField& f) {
  PolyMatrixField r;
  r(0, 0) = f;
  r(1, 1) = f;
  r(2, 2) = f;
  return r;
}

PolyVectorField axl_of_skew(const PolyMatrixField& p) {
  PolyVectorField r;
  r[0] = (p(2, 1) - p(1, 2)) * 0.5;
  r[1] = (p(0, 2) - p(2, 0)) * 0.5;
  r[2] = (p(1, 0) - p(0, 1)) * 0.5;
  return r;
}

PolyMatrixField PolySkewField::matrix() const {
  PolyMatrixField r;
  r(0, 1) = -axial[2];
  r(0, 2) = axial[1];
  r(1, 0) = axial[2];
  r(1, 2) = -axial[0];
  r(2, 0) = -axial[1];
  r(2, 1) = axial[0];
  return r;
}

SkewMatrix3 PolySkewField::eval(const Vector3& p) const {
  return SkewMatrix3(axial.eval(p));
}

PolyMatrixField vector_grad(const PolyVectorField& v) {
  PolyMatrixField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = v[i].diff(j);
  return r;
}

PolyVectorField vector_curl(const PolyVectorField& v) {
  PolyVectorField r;
  r[0] = v[2].diff(1) - v[1].diff(2);
  r[1] = v[0].diff(2) - v[2].diff(0);
  r[2] = v[1].diff(0) - v[0].diff(1);
  return r;
}

PolyMatrixField matrix_curl(const PolyMatrixField& p) {
  PolyMatrixField r;
  for (int i = 0; i < 3; ++i) {
    r(i, 0) = p(i, 2).diff(1) - p(i, 1).diff(2);
    r(i, 1) = p(i, 0).diff(2) - p(i, 2).diff(0);
    r(i, 2) = p(i, 1).diff(0) - p(i, 0).diff(1);
  }
  return r;
}

PolyVectorField matrix_div(const PolyMatrixField& p) {
  PolyVectorField r;
  for (int i = 0; i < 3; ++i) {
    r[i] = p(i, 0).diff(0) + p(i, 1).diff(1) + p(i, 2).diff(2);
  }
  return r;
}

Matrix3 nye_forward(const Matrix3& k) {
  return k.transposed() - Matrix3::identity() * k.trace();
}

Matrix3 nye_inverse(const Matrix3& alpha) {
  return alpha.transposed() - Matrix3::identity() * (0.5 * alpha.trace());
}

namespace {

double max_abs_entry(const Matrix3& x) {
  double m = 0.0;
  for (double v : x.m) m = std::max(m, std::abs(v));
  return m;
}

double nye_discrepancy(const PolyMatrixField& a_mat,
                       const PolyVectorField& axial,
                       const std::vector<Vector3>& points) {
  const PolyMatrixField lhs = -matrix_curl(a_mat);        // alpha
  const PolyMatrixField k_field = vector_grad(axial);     // K = D axl A

  double worst = 0.0;
  for (const Vector3& p : points) {
    const Matrix3 alpha = lhs.eval(p);
    const Matrix3 k = k_field.eval(p);

    const Matrix3 rhs = k.transposed() - Matrix3::identity() * k.trace();
    worst = std::max(worst, max_abs_entry(alpha - rhs));

    // Split implications of the identity.
    worst = std::max(worst, max_abs_entry(dev(sym(alpha)) - dev(sym(k))));
    worst = std::max(worst, max_abs_entry(skw(alpha) + skw(k)));
    worst = std::max(worst, max_abs_entry(sym(alpha) - (sym(k) - Matrix3::identity() * k.trace())));
    worst = std::max(worst, std::abs(alpha.trace() + 2.0 * k.trace()));
  }
  return worst;
}

}  // namespace

double verify_nye(const PolySkewField& a, const std::vector<Vector3>& points) {
  return nye_discrepancy(a.matrix(), a.axial, points);
}

double verify_nye(const PolyMatrixField& a, const std::vector<Vector3>& points) {
  const PolyMatrixField s = a + a.transposed();
  for (const auto& f : s.c) {
    if (!f.is_zero()) {
      throw Error(ErrorKind::InvalidInput, "verify_nye: field is not skew-symmetric");
    }
  }
  return nye_discrepancy(a, axl_of_skew(a), points);
}

}  // namespace cosserat
