#include "walkerpc/scalar_field.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

#include "walkerpc/error.hpp"

namespace walkerpc {

// ---------------------------------------------------------------- Rational

namespace {

__extension__ typedef __int128 Wide;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational reduce(Wide num, Wide den) {
  if (den == 0) throw Error("rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  Wide num = 0;
  Wide den = 1;
  bool digits = false;
  auto push_digit = [&](char c) {
    num = num * 10 + (c - '0');
    if (num > std::numeric_limits<std::int64_t>::max()) throw Error("numeric literal too large: " + std::string(text));
    digits = true;
  };
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) push_digit(text[i++]);
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      push_digit(text[i++]);
      den *= 10;
      if (den > std::numeric_limits<std::int64_t>::max()) throw Error("numeric literal too precise: " + std::string(text));
    }
  }
  if (!digits) throw Error("malformed number '" + std::string(text) + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool neg_exp = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg_exp = text[i++] == '-';
    int e = 0;
    bool exp_digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      e = e * 10 + (text[i++] - '0');
      exp_digits = true;
      if (e > 18) throw Error("numeric exponent out of range: " + std::string(text));
    }
    if (!exp_digits) throw Error("malformed number '" + std::string(text) + "'");
    for (int k = 0; k < e; ++k) (neg_exp ? den : num) *= 10;
  }
  if (i < text.size() && text[i] == '/') {
    ++i;
    Wide d = 0;
    bool den_digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      d = d * 10 + (text[i++] - '0');
      den_digits = true;
      if (d > std::numeric_limits<std::int64_t>::max()) throw Error("numeric literal too large: " + std::string(text));
    }
    if (!den_digits) throw Error("malformed number '" + std::string(text) + "'");
    den *= d;
  }
  if (i != text.size()) throw Error("malformed number '" + std::string(text) + "'");
  return reduce(negative ? -num : num, den);
}

Rational Rational::operator-() const { return reduce(-static_cast<Wide>(num_), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return reduce(static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_,
                static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return reduce(static_cast<Wide>(a.num_) * b.num_, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error("rational division by zero");
  return reduce(static_cast<Wide>(a.num_) * b.den_, static_cast<Wide>(a.den_) * b.num_);
}

Rational pow(const Rational& a, int n) {
  Rational base = n < 0 ? Rational(1) / a : a;
  Rational r(1);
  for (int k = 0; k < std::abs(n); ++k) r = r * base;
  return r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------- nodes

struct ScalarField::Node {
  Kind kind = Kind::Literal;
  Rational value;
  Axis axis = Axis::X;
  std::string name;
  int exponent = 0;
  std::vector<ScalarField> operands;
};

ScalarField ScalarField::make(Node node) { return ScalarField(std::make_shared<const Node>(std::move(node))); }

ScalarField::ScalarField() : ScalarField(Rational(0)) {}

ScalarField::ScalarField(std::int64_t n) : ScalarField(Rational(n)) {}

ScalarField::ScalarField(Rational r) {
  Node n;
  n.kind = Kind::Literal;
  n.value = r;
  node_ = std::make_shared<const Node>(std::move(n));
}

ScalarField ScalarField::variable(Axis axis) {
  Node n;
  n.kind = Kind::Variable;
  n.axis = axis;
  return make(std::move(n));
}

ScalarField ScalarField::constant(std::string name, Rational value) {
  Node n;
  n.kind = Kind::Constant;
  n.name = std::move(name);
  n.value = value;
  return make(std::move(n));
}

ScalarField::Kind ScalarField::kind() const { return node_->kind; }
const Rational& ScalarField::rational() const { return node_->value; }
Axis ScalarField::axis() const { return node_->axis; }
const std::string& ScalarField::name() const { return node_->name; }
int ScalarField::exponent() const { return node_->exponent; }
std::size_t ScalarField::arity() const { return node_->operands.size(); }
const ScalarField& ScalarField::operand(std::size_t i) const { return node_->operands.at(i); }

bool ScalarField::depends_on(Axis axis) const {
  if (kind() == Kind::Variable) return node_->axis == axis;
  for (const auto& o : node_->operands) {
    if (o.depends_on(axis)) return true;
  }
  return false;
}

bool operator==(const ScalarField& a, const ScalarField& b) {
  if (a.node_ == b.node_) return true;
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  if (na.kind != nb.kind || na.operands.size() != nb.operands.size()) return false;
  switch (na.kind) {
    case ScalarField::Kind::Literal:
      return na.value == nb.value;
    case ScalarField::Kind::Variable:
      return na.axis == nb.axis;
    case ScalarField::Kind::Constant:
      return na.name == nb.name && na.value == nb.value;
    case ScalarField::Kind::Pow:
      if (na.exponent != nb.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < na.operands.size(); ++i) {
    if (!(na.operands[i] == nb.operands[i])) return false;
  }
  return true;
}

namespace {

ScalarField unary(ScalarField::Kind kind, const ScalarField& a);
ScalarField binary(ScalarField::Kind kind, const ScalarField& a, const ScalarField& b);

bool is_minus_one(const ScalarField& a) { return a.is_literal() && a.rational() == Rational(-1); }

}  // namespace

// Node construction without folding lives behind these two helpers, which
// need access to the private factory.
struct NodeFactory {
  static ScalarField unary(ScalarField::Kind kind, const ScalarField& a, int exponent = 0) {
    ScalarField::Node n;
    n.kind = kind;
    n.exponent = exponent;
    n.operands = {a};
    return ScalarField::make(std::move(n));
  }
  static ScalarField binary(ScalarField::Kind kind, const ScalarField& a, const ScalarField& b) {
    ScalarField::Node n;
    n.kind = kind;
    n.operands = {a, b};
    return ScalarField::make(std::move(n));
  }
};

namespace {

ScalarField unary(ScalarField::Kind kind, const ScalarField& a) { return NodeFactory::unary(kind, a); }
ScalarField binary(ScalarField::Kind kind, const ScalarField& a, const ScalarField& b) {
  return NodeFactory::binary(kind, a, b);
}

}  // namespace

ScalarField operator-(const ScalarField& a) {
  if (a.is_literal()) return ScalarField(-a.rational());
  if (a.kind() == ScalarField::Kind::Neg) return a.operand(0);
  return unary(ScalarField::Kind::Neg, a);
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_literal() && b.is_literal()) return ScalarField(a.rational() + b.rational());
  return binary(ScalarField::Kind::Add, a, b);
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  if (a.is_literal() && b.is_literal()) return ScalarField(a.rational() - b.rational());
  return binary(ScalarField::Kind::Sub, a, b);
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  if (a.is_zero() || b.is_zero()) return ScalarField();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.is_literal() && b.is_literal()) return ScalarField(a.rational() * b.rational());
  if (is_minus_one(a)) return -b;
  if (is_minus_one(b)) return -a;
  return binary(ScalarField::Kind::Mul, a, b);
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  if (b.is_one()) return a;
  if (a.is_zero() && !b.is_zero()) return ScalarField();
  if (a.is_literal() && b.is_literal() && !b.is_zero()) return ScalarField(a.rational() / b.rational());
  return binary(ScalarField::Kind::Div, a, b);
}

ScalarField pow(const ScalarField& a, int n) {
  if (n == 0) return ScalarField(1);
  if (n == 1) return a;
  if (a.is_literal() && !(a.is_zero() && n < 0)) return ScalarField(pow(a.rational(), n));
  return NodeFactory::unary(ScalarField::Kind::Pow, a, n);
}

ScalarField exp(const ScalarField& a) {
  if (a.is_zero()) return ScalarField(1);
  return unary(ScalarField::Kind::Exp, a);
}

ScalarField sqrt(const ScalarField& a) { return unary(ScalarField::Kind::Sqrt, a); }

// ---------------------------------------------------------------- calculus

ScalarField ScalarField::diff(Axis v) const {
  const auto& n = *node_;
  switch (n.kind) {
    case Kind::Literal:
    case Kind::Constant:
      return ScalarField();
    case Kind::Variable:
      return ScalarField(n.axis == v ? 1 : 0);
    case Kind::Neg:
      return -n.operands[0].diff(v);
    case Kind::Add:
      return n.operands[0].diff(v) + n.operands[1].diff(v);
    case Kind::Sub:
      return n.operands[0].diff(v) - n.operands[1].diff(v);
    case Kind::Mul: {
      const auto& a = n.operands[0];
      const auto& b = n.operands[1];
      return a.diff(v) * b + a * b.diff(v);
    }
    case Kind::Div: {
      const auto& a = n.operands[0];
      const auto& b = n.operands[1];
      const ScalarField da = a.diff(v);
      const ScalarField db = b.diff(v);
      if (db.is_zero()) return da / b;
      return (da * b - a * db) / pow(b, 2);
    }
    case Kind::Pow: {
      const auto& a = n.operands[0];
      return ScalarField(n.exponent) * pow(a, n.exponent - 1) * a.diff(v);
    }
    case Kind::Exp:
      return *this * n.operands[0].diff(v);
    case Kind::Sqrt:
      return n.operands[0].diff(v) / (ScalarField(2) * *this);
  }
  return ScalarField();
}

namespace {

void check_finite(double v, const ScalarField& e, const Point3& p) {
  if (!std::isfinite(v)) throw DomainError("non-finite value", e.to_string(), p);
}

}  // namespace

double ScalarField::eval(const Point3& p) const { return eval_scaled(p).value; }

ScaledValue ScalarField::eval_scaled(const Point3& p) const {
  const auto& n = *node_;
  ScaledValue r;
  switch (n.kind) {
    case Kind::Literal:
    case Kind::Constant:
      r.value = n.value.to_double();
      r.scale = std::abs(r.value);
      return r;
    case Kind::Variable:
      r.value = p[n.axis];
      r.scale = std::abs(r.value);
      return r;
    case Kind::Neg: {
      r = n.operands[0].eval_scaled(p);
      r.value = -r.value;
      return r;
    }
    case Kind::Add:
    case Kind::Sub: {
      const ScaledValue a = n.operands[0].eval_scaled(p);
      const ScaledValue b = n.operands[1].eval_scaled(p);
      r.value = n.kind == Kind::Add ? a.value + b.value : a.value - b.value;
      r.scale = a.scale + b.scale;
      break;
    }
    case Kind::Mul: {
      const ScaledValue a = n.operands[0].eval_scaled(p);
      const ScaledValue b = n.operands[1].eval_scaled(p);
      r.value = a.value * b.value;
      r.scale = a.scale * b.scale;
      break;
    }
    case Kind::Div: {
      const ScaledValue a = n.operands[0].eval_scaled(p);
      const ScaledValue b = n.operands[1].eval_scaled(p);
      if (b.value == 0.0) throw DomainError("division by zero", to_string(), p);
      r.value = a.value / b.value;
      r.scale = a.scale / std::abs(b.value);
      break;
    }
    case Kind::Pow: {
      const ScaledValue a = n.operands[0].eval_scaled(p);
      if (n.exponent < 0 && a.value == 0.0) throw DomainError("division by zero", to_string(), p);
      r.value = std::pow(a.value, n.exponent);
      r.scale = n.exponent > 0 ? std::pow(a.scale, n.exponent) : std::abs(r.value);
      break;
    }
    case Kind::Exp: {
      const ScaledValue a = n.operands[0].eval_scaled(p);
      r.value = std::exp(a.value);
      r.scale = r.value;
      break;
    }
    case Kind::Sqrt: {
      const ScaledValue a = n.operands[0].eval_scaled(p);
      if (!(a.value > 0.0)) throw DomainError("sqrt of non-positive value", to_string(), p);
      r.value = std::sqrt(a.value);
      r.scale = r.value;
      break;
    }
  }
  check_finite(r.value, *this, p);
  return r;
}

Jet3 ScalarField::jet(const Point3& p, int order) const {
  const auto& n = *node_;
  Jet3 r(order);
  switch (n.kind) {
    case Kind::Literal:
    case Kind::Constant:
      return Jet3::constant(n.value.to_double(), order);
    case Kind::Variable:
      return Jet3::variable(n.axis, p[n.axis], order);
    case Kind::Neg:
      return -n.operands[0].jet(p, order);
    case Kind::Add:
      r = n.operands[0].jet(p, order) + n.operands[1].jet(p, order);
      break;
    case Kind::Sub:
      r = n.operands[0].jet(p, order) - n.operands[1].jet(p, order);
      break;
    case Kind::Mul:
      r = n.operands[0].jet(p, order) * n.operands[1].jet(p, order);
      break;
    case Kind::Div: {
      const Jet3 b = n.operands[1].jet(p, order);
      if (b.value() == 0.0) throw DomainError("division by zero", to_string(), p);
      r = n.operands[0].jet(p, order) / b;
      break;
    }
    case Kind::Pow: {
      const Jet3 a = n.operands[0].jet(p, order);
      if (n.exponent < 0 && a.value() == 0.0) throw DomainError("division by zero", to_string(), p);
      r = pow(a, n.exponent);
      break;
    }
    case Kind::Exp:
      r = exp(n.operands[0].jet(p, order));
      break;
    case Kind::Sqrt: {
      const Jet3 a = n.operands[0].jet(p, order);
      if (!(a.value() > 0.0)) throw DomainError("sqrt of non-positive value", to_string(), p);
      r = sqrt(a);
      break;
    }
  }
  for (std::size_t s = 0; s < Jet3::kSize; ++s) check_finite(r.coefficient(s), *this, p);
  return r;
}

// ---------------------------------------------------------------- printing

namespace {

constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecUnary = 3;
constexpr int kPrecPower = 4;
constexpr int kPrecAtom = 5;

int precedence(const ScalarField& e) {
  using K = ScalarField::Kind;
  switch (e.kind()) {
    case K::Literal:
      if (!e.rational().is_integer()) return kPrecProduct;
      return e.rational().num() < 0 ? kPrecUnary : kPrecAtom;
    case K::Variable:
    case K::Constant:
    case K::Exp:
    case K::Sqrt:
      return kPrecAtom;
    case K::Neg:
      return kPrecUnary;
    case K::Pow:
      return kPrecPower;
    case K::Mul:
    case K::Div:
      return kPrecProduct;
    case K::Add:
    case K::Sub:
      return kPrecSum;
  }
  return kPrecAtom;
}

void print(const ScalarField& e, std::string& out);

void print_operand(const ScalarField& e, int min_prec, bool wrap_leading_minus, std::string& out) {
  std::string inner;
  print(e, inner);
  const bool wrap = precedence(e) < min_prec || (wrap_leading_minus && !inner.empty() && inner[0] == '-');
  if (wrap) {
    out += '(';
    out += inner;
    out += ')';
  } else {
    out += inner;
  }
}

void print(const ScalarField& e, std::string& out) {
  using K = ScalarField::Kind;
  switch (e.kind()) {
    case K::Literal:
      out += e.rational().to_string();
      return;
    case K::Variable:
      out += axis_name(e.axis());
      return;
    case K::Constant:
      out += e.name();
      return;
    case K::Neg:
      out += '-';
      print_operand(e.operand(0), kPrecPower, false, out);
      return;
    case K::Add:
    case K::Sub:
      print_operand(e.operand(0), kPrecSum, false, out);
      out += e.kind() == K::Add ? " + " : " - ";
      print_operand(e.operand(1), kPrecProduct, true, out);
      return;
    case K::Mul:
    case K::Div:
      print_operand(e.operand(0), kPrecProduct, false, out);
      out += e.kind() == K::Mul ? "*" : "/";
      print_operand(e.operand(1), kPrecUnary, true, out);
      return;
    case K::Pow:
      print_operand(e.operand(0), kPrecAtom, true, out);
      out += '^';
      if (e.exponent() < 0) {
        out += "(" + std::to_string(e.exponent()) + ")";
      } else {
        out += std::to_string(e.exponent());
      }
      return;
    case K::Exp:
    case K::Sqrt:
      out += e.kind() == K::Exp ? "exp(" : "sqrt(";
      print(e.operand(0), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string ScalarField::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

}  // namespace walkerpc
