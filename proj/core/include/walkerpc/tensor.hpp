#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace walkerpc {

using Vec3 = std::array<double, 3>;

namespace detail {
constexpr std::size_t pow3(int n) { return n == 0 ? 1 : 3 * pow3(n - 1); }
}  // namespace detail

/// Components of a tensor over the coordinate basis {dx, dy, dz} with
/// `Up` contravariant and `Down` covariant slots. Index order is documented
/// at each alias below; all indices range over {0, 1, 2}.
template <int Up, int Down>
class TensorValue {
 public:
  static constexpr int kUp = Up;
  static constexpr int kDown = Down;
  static constexpr int kRank = Up + Down;
  static constexpr std::size_t kSize = detail::pow3(kRank);

  TensorValue() { c_.fill(0.0); }

  template <class... I>
  double& operator()(I... idx) {
    static_assert(sizeof...(I) == kRank, "wrong number of indices");
    return c_[flat(idx...)];
  }
  template <class... I>
  double operator()(I... idx) const {
    static_assert(sizeof...(I) == kRank, "wrong number of indices");
    return c_[flat(idx...)];
  }

  const std::array<double, kSize>& data() const { return c_; }
  std::array<double, kSize>& data() { return c_; }

  double max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  TensorValue& operator+=(const TensorValue& o) {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] += o.c_[i];
    return *this;
  }
  TensorValue& operator-=(const TensorValue& o) {
    for (std::size_t i = 0; i < kSize; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TensorValue operator+(TensorValue a, const TensorValue& b) { return a += b; }
  friend TensorValue operator-(TensorValue a, const TensorValue& b) { return a -= b; }
  friend TensorValue operator*(double s, TensorValue a) {
    for (double& v : a.c_) v *= s;
    return a;
  }

 private:
  template <class... I>
  static std::size_t flat(I... idx) {
    std::size_t f = 0;
    ((f = 3 * f + static_cast<std::size_t>(idx)), ...);
    return f;
  }

  std::array<double, kSize> c_;
};

/// g(i, j) = g(d_i, d_j).
using Metric = TensorValue<0, 2>;
/// g^{ij}.
using InverseMetric = TensorValue<2, 0>;
/// (k, i, j) = Gamma^k_{ij}, i.e. nabla_{d_i} d_j = Gamma^k_{ij} d_k.
using Christoffel = TensorValue<1, 2>;
/// (l, i, j, k) = l-th component of R(d_i, d_j) d_k.
using Curvature = TensorValue<1, 3>;
/// (a, b) = A^a_b, so (A X)^a = A(a, b) X^b.
using Endomorphism = TensorValue<1, 1>;
/// (i, j) = T(d_i, d_j).
using Covariant2 = TensorValue<0, 2>;
/// (i, j, k) = T(d_i, d_j, d_k).
using Covariant3 = TensorValue<0, 3>;

inline Vec3 basis(int i) {
  Vec3 e{0.0, 0.0, 0.0};
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double max_abs(const Vec3& v) {
  return std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
}

inline Vec3 act(const Endomorphism& a, const Vec3& x) {
  Vec3 r{0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += a(i, j) * x[j];
  return r;
}

inline Endomorphism compose(const Endomorphism& a, const Endomorphism& b) {
  Endomorphism r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

inline Endomorphism identity_endomorphism() {
  Endomorphism r;
  for (int i = 0; i < 3; ++i) r(i, i) = 1.0;
  return r;
}

inline double eval(const Covariant2& t, const Vec3& x, const Vec3& y) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += t(i, j) * x[i] * y[j];
  return s;
}

inline double eval(const Covariant3& t, const Vec3& x, const Vec3& y, const Vec3& z) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += t(i, j, k) * x[i] * y[j] * z[k];
  return s;
}

/// R(X, Y) Z as a vector.
inline Vec3 act(const Curvature& r, const Vec3& x, const Vec3& y, const Vec3& z) {
  Vec3 out{0.0, 0.0, 0.0};
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out[l] += r(l, i, j, k) * x[i] * y[j] * z[k];
  return out;
}

/// Lowers the vector to a covector with g.
inline Vec3 lower(const Metric& g, const Vec3& v) {
  Vec3 r{0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += g(i, j) * v[j];
  return r;
}

}  // namespace walkerpc
