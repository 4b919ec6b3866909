#pragma once

#include <array>
#include <cstddef>

#include "walkerpc/point.hpp"

namespace walkerpc {

/// Value and all partial derivatives up to order 3 of a scalar field at a
/// point, stored as the 20 Taylor coefficients of a truncated polynomial in
/// (dx, dy, dz). Each mixed partial has exactly one slot.
///
/// Arithmetic is truncated Taylor arithmetic at the jet's order; combining
/// jets of different order yields the lower order.
class Jet3 {
 public:
  static constexpr int kMaxOrder = 3;
  static constexpr std::size_t kSize = 20;

  /// The zero jet of the given order.
  explicit Jet3(int order = kMaxOrder);

  static Jet3 constant(double value, int order = kMaxOrder);
  /// The coordinate function `axis`, expanded at `value`.
  static Jet3 variable(Axis axis, double value, int order = kMaxOrder);

  int order() const noexcept { return order_; }
  double value() const noexcept { return c_[0]; }

  /// Partial derivative d/dx_i.
  double d(Axis i) const;
  /// Second partial d^2/(dx_i dx_j).
  double d(Axis i, Axis j) const;
  /// Third partial d^3/(dx_i dx_j dx_k).
  double d(Axis i, Axis j, Axis k) const;
  double d(int i) const { return d(static_cast<Axis>(i)); }
  double d(int i, int j) const { return d(static_cast<Axis>(i), static_cast<Axis>(j)); }
  double d(int i, int j, int k) const {
    return d(static_cast<Axis>(i), static_cast<Axis>(j), static_cast<Axis>(k));
  }

  /// The jet of the partial derivative along `axis`; its order is one less.
  Jet3 derivative(Axis axis) const;
  Jet3 derivative(int axis) const { return derivative(static_cast<Axis>(axis)); }

  /// Same jet with order lowered to `order` (higher coefficients dropped).
  Jet3 truncated(int order) const;

  /// Largest absolute value among the stored derivatives up to `order`.
  double max_abs_derivative(int order) const;

  /// Raw Taylor coefficient for monomial slot `slot` (see monomial()).
  double coefficient(std::size_t slot) const { return c_[slot]; }
  /// Exponent triple of slot `slot`, in graded order 1, x, y, z, xx, xy, ...
  static std::array<int, 3> monomial(std::size_t slot);

  Jet3 operator-() const;
  Jet3& operator+=(const Jet3& o);
  Jet3& operator-=(const Jet3& o);
  Jet3& operator*=(double s);

  friend Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
  friend Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
  friend Jet3 operator*(const Jet3& a, const Jet3& b);
  friend Jet3 operator/(const Jet3& a, const Jet3& b);
  friend Jet3 operator+(Jet3 a, double s) { a.c_[0] += s; return a; }
  friend Jet3 operator+(double s, Jet3 a) { a.c_[0] += s; return a; }
  friend Jet3 operator-(Jet3 a, double s) { a.c_[0] -= s; return a; }
  friend Jet3 operator-(double s, const Jet3& a) { return s + (-a); }
  friend Jet3 operator*(Jet3 a, double s) { return a *= s; }
  friend Jet3 operator*(double s, Jet3 a) { return a *= s; }
  friend Jet3 operator/(Jet3 a, double s) { return a *= (1.0 / s); }
  friend Jet3 operator/(double s, const Jet3& a) { return Jet3::constant(s, a.order_) / a; }

  /// Caller guarantees value() != 0 for negative exponents.
  friend Jet3 pow(const Jet3& a, int n);
  friend Jet3 exp(const Jet3& a);
  /// Caller guarantees value() > 0.
  friend Jet3 sqrt(const Jet3& a);

 private:
  /// h(a) where h_k = h^(k)(a0) / k! for k = 0..order.
  Jet3 compose(const std::array<double, 4>& h) const;

  int order_;
  std::array<double, kSize> c_;
};

}  // namespace walkerpc
