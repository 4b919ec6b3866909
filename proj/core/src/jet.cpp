#include "walkerpc/jet.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace walkerpc {
namespace {

constexpr std::array<std::array<int, 3>, Jet3::kSize> kMonomials{{
    {0, 0, 0},
    {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
    {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2},
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};

constexpr int degree(const std::array<int, 3>& m) { return m[0] + m[1] + m[2]; }

constexpr int slot_of(int a, int b, int c) {
  for (std::size_t s = 0; s < Jet3::kSize; ++s) {
    if (kMonomials[s][0] == a && kMonomials[s][1] == b && kMonomials[s][2] == c) return static_cast<int>(s);
  }
  return -1;
}

constexpr double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

constexpr double multi_factorial(const std::array<int, 3>& m) {
  return factorial(m[0]) * factorial(m[1]) * factorial(m[2]);
}

// Slots of each degree, so products can stop at the target order.
constexpr std::array<std::size_t, 5> kDegreeEnd{1, 4, 10, 20, 20};

struct ProductTerm {
  std::uint8_t a, b, out;
};

// All (a, b) slot pairs whose product monomial has total degree <= 3.
std::vector<ProductTerm> build_product_table() {
  std::vector<ProductTerm> table;
  for (std::size_t a = 0; a < Jet3::kSize; ++a) {
    for (std::size_t b = 0; b < Jet3::kSize; ++b) {
      const auto& ma = kMonomials[a];
      const auto& mb = kMonomials[b];
      if (degree(ma) + degree(mb) > Jet3::kMaxOrder) continue;
      const int out = slot_of(ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]);
      table.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(out)});
    }
  }
  return table;
}

const std::vector<ProductTerm>& product_table() {
  static const std::vector<ProductTerm> table = build_product_table();
  return table;
}

int slot_for(std::array<int, 3> m) { return slot_of(m[0], m[1], m[2]); }

}  // namespace

Jet3::Jet3(int order) : order_(std::clamp(order, 0, kMaxOrder)) { c_.fill(0.0); }

Jet3 Jet3::constant(double value, int order) {
  Jet3 j(order);
  j.c_[0] = value;
  return j;
}

Jet3 Jet3::variable(Axis axis, double value, int order) {
  Jet3 j(order);
  j.c_[0] = value;
  if (j.order_ >= 1) j.c_[1 + static_cast<std::size_t>(index(axis))] = 1.0;
  return j;
}

std::array<int, 3> Jet3::monomial(std::size_t slot) { return kMonomials.at(slot); }

double Jet3::d(Axis i) const {
  if (order_ < 1) return 0.0;
  return c_[1 + static_cast<std::size_t>(index(i))];
}

double Jet3::d(Axis i, Axis j) const {
  if (order_ < 2) return 0.0;
  std::array<int, 3> m{0, 0, 0};
  ++m[index(i)];
  ++m[index(j)];
  return c_[static_cast<std::size_t>(slot_for(m))] * multi_factorial(m);
}

double Jet3::d(Axis i, Axis j, Axis k) const {
  if (order_ < 3) return 0.0;
  std::array<int, 3> m{0, 0, 0};
  ++m[index(i)];
  ++m[index(j)];
  ++m[index(k)];
  return c_[static_cast<std::size_t>(slot_for(m))] * multi_factorial(m);
}

Jet3 Jet3::derivative(Axis axis) const {
  Jet3 r(std::max(order_ - 1, 0));
  if (order_ == 0) return r;
  const int ax = index(axis);
  for (std::size_t s = 0; s < kDegreeEnd[static_cast<std::size_t>(r.order_)]; ++s) {
    auto m = kMonomials[s];
    const double k = m[ax] + 1;
    ++m[ax];
    r.c_[s] = k * c_[static_cast<std::size_t>(slot_for(m))];
  }
  return r;
}

Jet3 Jet3::truncated(int order) const {
  Jet3 r(std::min(order, order_));
  for (std::size_t s = 0; s < kDegreeEnd[static_cast<std::size_t>(r.order_)]; ++s) r.c_[s] = c_[s];
  return r;
}

double Jet3::max_abs_derivative(int order) const {
  double m = 0.0;
  const int top = std::min(order, order_);
  for (std::size_t s = 0; s < kDegreeEnd[static_cast<std::size_t>(top)]; ++s) {
    m = std::max(m, std::abs(c_[s] * multi_factorial(kMonomials[s])));
  }
  return m;
}

Jet3 Jet3::operator-() const {
  Jet3 r = *this;
  for (double& v : r.c_) v = -v;
  return r;
}

Jet3& Jet3::operator+=(const Jet3& o) {
  order_ = std::min(order_, o.order_);
  for (std::size_t s = 0; s < kSize; ++s) c_[s] += o.c_[s];
  for (std::size_t s = kDegreeEnd[static_cast<std::size_t>(order_)]; s < kSize; ++s) c_[s] = 0.0;
  return *this;
}

Jet3& Jet3::operator-=(const Jet3& o) {
  order_ = std::min(order_, o.order_);
  for (std::size_t s = 0; s < kSize; ++s) c_[s] -= o.c_[s];
  for (std::size_t s = kDegreeEnd[static_cast<std::size_t>(order_)]; s < kSize; ++s) c_[s] = 0.0;
  return *this;
}

Jet3& Jet3::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Jet3 operator*(const Jet3& a, const Jet3& b) {
  Jet3 r(std::min(a.order_, b.order_));
  const std::size_t end = kDegreeEnd[static_cast<std::size_t>(r.order_)];
  for (const auto& t : product_table()) {
    if (t.out < end) r.c_[t.out] += a.c_[t.a] * b.c_[t.b];
  }
  return r;
}

Jet3 Jet3::compose(const std::array<double, 4>& h) const {
  // delta = a - a0 has no constant term, so delta^k only contributes up to k = order.
  Jet3 delta = *this;
  delta.c_[0] = 0.0;
  Jet3 result = Jet3::constant(h[0], order_);
  Jet3 power = Jet3::constant(1.0, order_);
  for (int k = 1; k <= order_; ++k) {
    power = power * delta;
    Jet3 term = power;
    term *= h[static_cast<std::size_t>(k)];
    result += term;
  }
  return result;
}

Jet3 operator/(const Jet3& a, const Jet3& b) {
  const double u = b.value();
  const std::array<double, 4> recip{1.0 / u, -1.0 / (u * u), 1.0 / (u * u * u), -1.0 / (u * u * u * u)};
  return a * b.compose(recip);
}

Jet3 pow(const Jet3& a, int n) {
  if (n == 0) return Jet3::constant(1.0, a.order_);
  if (n == 1) return a;
  const double u = a.value();
  // h_k = binom(n, k) u^(n-k), generalized binomial for negative n.
  std::array<double, 4> h{};
  double binom = 1.0;
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) binom *= static_cast<double>(n - k + 1) / k;
    h[static_cast<std::size_t>(k)] = (binom == 0.0) ? 0.0 : binom * std::pow(u, n - k);
  }
  return a.compose(h);
}

Jet3 exp(const Jet3& a) {
  const double e = std::exp(a.value());
  return a.compose({e, e, e / 2.0, e / 6.0});
}

Jet3 sqrt(const Jet3& a) {
  const double u = a.value();
  const double s = std::sqrt(u);
  return a.compose({s, 0.5 / s, -0.125 / (s * u), 0.0625 / (s * u * u)});
}

}  // namespace walkerpc
