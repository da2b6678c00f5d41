#include "cosserat/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace cosserat {

double dot(const Vector3& a, const Vector3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vector3& v) { return std::sqrt(dot(v, v)); }

bool is_finite(const Vector3& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

Matrix3 Matrix3::operator+(const Matrix3& o) const {
  Matrix3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i] + o.m[i];
  return r;
}

Matrix3 Matrix3::operator-(const Matrix3& o) const {
  Matrix3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i] - o.m[i];
  return r;
}

Matrix3 Matrix3::operator*(double s) const {
  Matrix3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = m[i] * s;
  return r;
}

Matrix3 Matrix3::operator-() const {
  Matrix3 r;
  for (std::size_t i = 0; i < 9; ++i) r.m[i] = -m[i];
  return r;
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
      r(i, j) = s;
    }
  return r;
}

Vector3 Matrix3::operator*(const Vector3& v) const {
  Vector3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
  return r;
}

Matrix3 Matrix3::transposed() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Matrix3 sym(const Matrix3& x) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (x(i, j) + x(j, i));
  return r;
}

Matrix3 skw(const Matrix3& x) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = 0.5 * (x(i, j) - x(j, i));
  return r;
}

Matrix3 dev(const Matrix3& x) {
  const double third = x.trace() / 3.0;
  Matrix3 r = x;
  r(0, 0) -= third;
  r(1, 1) -= third;
  r(2, 2) -= third;
  return r;
}

Matrix3 outer(const Vector3& a, const Vector3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

double inner(const Matrix3& a, const Matrix3& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 9; ++i) s += a.m[i] * b.m[i];
  return s;
}

double norm_sq(const Matrix3& x) { return inner(x, x); }

double norm(const Matrix3& x) { return std::sqrt(norm_sq(x)); }

bool is_finite(const Matrix3& x) {
  for (double v : x.m)
    if (!std::isfinite(v)) return false;
  return true;
}

Matrix3 SkewMatrix3::matrix() const {
  const double a1 = axial[0], a2 = axial[1], a3 = axial[2];
  return {0.0, -a3, a2,
          a3, 0.0, -a1,
          -a2, a1, 0.0};
}

Vector3 axl(const SkewMatrix3& a) { return a.axial; }

SkewMatrix3 anti(const Vector3& v) {
  if (!is_finite(v)) throw Error(ErrorKind::InvalidInput, "anti: non-finite input");
  return SkewMatrix3(v);
}

Vector3 axl(const Matrix3& x) {
  if (!is_finite(x)) throw Error(ErrorKind::InvalidInput, "axl: non-finite input");
  const double n = norm(x);
  if (norm(sym(x)) > 1e-12 * n) {
    throw Error(ErrorKind::InvalidInput, "axl: input is not skew-symmetric");
  }
  return {0.5 * (x(2, 1) - x(1, 2)),
          0.5 * (x(0, 2) - x(2, 0)),
          0.5 * (x(1, 0) - x(0, 1))};
}

Matrix3 CartanParts::recompose() const {
  return dev_sym + skew.matrix() + Matrix3::identity() * (spherical_trace / 3.0);
}

CartanParts decompose(const Matrix3& x) {
  if (!is_finite(x)) {
    throw Error(ErrorKind::InvalidInput, "decompose: non-finite input");
  }
  CartanParts parts;
  parts.spherical_trace = x.trace();
  parts.dev_sym = dev(sym(x));
  const Matrix3 k = skw(x);
  parts.skew = SkewMatrix3({k(2, 1), k(0, 2), k(1, 0)});
  return parts;
}

namespace {

// One Jacobi rotation annihilating a(p,q); accumulates into v.
void jacobi_rotate(Matrix3& a, Matrix3& v, int p, int q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const double app = a(p, p), aqq = a(q, q);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  const int r = 3 - p - q;  // the remaining index
  const double arp = a(r, p), arq = a(r, q);
  a(r, p) = c * arp - s * arq;
  a(p, r) = a(r, p);
  a(r, q) = s * arp + c * arq;
  a(q, r) = a(r, q);

  for (int i = 0; i < 3; ++i) {
    const double vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip - s * viq;
    v(i, q) = s * vip + c * viq;
  }
}

double off_diagonal_mass(const Matrix3& a) {
  return std::sqrt(2.0 * (a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) +
                          a(1, 2) * a(1, 2)));
}

}  // namespace

SymEigen sym_eigen(const Matrix3& s) {
  if (!is_finite(s)) {
    throw Error(ErrorKind::InvalidInput, "sym_eigen: non-finite input");
  }
  const double ns = norm(s);
  if (norm(skw(s)) > 1e-12 * ns) {
    throw Error(ErrorKind::InvalidInput, "sym_eigen: input is not symmetric");
  }

  Matrix3 a = sym(s);
  Matrix3 v = Matrix3::identity();
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (off_diagonal_mass(a) <= 1e-14 * ns) break;
    jacobi_rotate(a, v, 0, 1);
    jacobi_rotate(a, v, 0, 2);
    jacobi_rotate(a, v, 1, 2);
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i) < a(j, j); });

  SymEigen out;
  for (int k = 0; k < 3; ++k) {
    out.values[static_cast<std::size_t>(k)] = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    for (int i = 0; i < 3; ++i) out.vectors(i, k) = v(i, order[static_cast<std::size_t>(k)]);
  }
  return out;
}

GenEigen gen_eigen_diag_full(const Matrix3& q, const Matrix3& m_diag) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && m_diag(i, j) != 0.0) {
        throw Error(ErrorKind::InvalidInput, "gen_eigen_diag: mass matrix must be diagonal");
      }
  for (int i = 0; i < 3; ++i) {
    if (!(m_diag(i, i) > 0.0) || !std::isfinite(m_diag(i, i))) {
      throw Error(ErrorKind::InvalidMass, "gen_eigen_diag: non-positive mass entry");
    }
  }

  const Vector3 d{1.0 / std::sqrt(m_diag(0, 0)),
                  1.0 / std::sqrt(m_diag(1, 1)),
                  1.0 / std::sqrt(m_diag(2, 2))};
  Matrix3 reduced;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) reduced(i, j) = q(i, j) * d[i] * d[j];

  const SymEigen se = sym_eigen(reduced);
  GenEigen out;
  out.values = se.values;
  out.reduced_vectors = se.vectors;
  out.mass_diag = {m_diag(0, 0), m_diag(1, 1), m_diag(2, 2)};
  return out;
}

std::array<double, 3> gen_eigen_diag(const Matrix3& q, const Matrix3& m_diag) {
  return gen_eigen_diag_full(q, m_diag).values;
}

}  // namespace cosserat
