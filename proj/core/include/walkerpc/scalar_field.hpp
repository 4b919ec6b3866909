#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "walkerpc/jet.hpp"
#include "walkerpc/point.hpp"

namespace walkerpc {

/// Exact rational number with 64-bit numerator and positive denominator,
/// always in lowest terms. Overflow throws walkerpc::Error.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Parses "12", "-3/4", "0.25" or "1e-3" (decimal forms become exact ratios).
  static Rational parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational pow(const Rational& a, int n);
  friend bool operator==(const Rational&, const Rational&) = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

class ScalarField;

using ConstantMap = std::map<std::string, Rational, std::less<>>;
using DefinitionMap = std::map<std::string, ScalarField, std::less<>>;

/// Value of a field at a point together with a magnitude scale: the value the
/// expression would have if no cancellation took place in sums. Used to make
/// zero tests relative.
struct ScaledValue {
  double value = 0.0;
  double scale = 0.0;
};

/// Immutable symbolic expression in the coordinates x, y, z.
///
/// Nodes are shared; copying a ScalarField is cheap. The arithmetic helpers
/// fold literal subexpressions and the neutral elements 0 and 1, so trees
/// built by the parser and by diff() stay small.
class ScalarField {
 public:
  enum class Kind { Literal, Variable, Constant, Neg, Add, Sub, Mul, Div, Pow, Exp, Sqrt };

  /// The literal 0.
  ScalarField();
  ScalarField(std::int64_t n);  // NOLINT(google-explicit-constructor)
  ScalarField(Rational r);      // NOLINT(google-explicit-constructor)

  static ScalarField variable(Axis axis);
  static ScalarField x() { return variable(Axis::X); }
  static ScalarField y() { return variable(Axis::Y); }
  static ScalarField z() { return variable(Axis::Z); }
  /// A named constant bound to `value`; prints as its name.
  static ScalarField constant(std::string name, Rational value);

  Kind kind() const;
  /// Literal value, or the bound value of a Constant.
  const Rational& rational() const;
  Axis axis() const;
  const std::string& name() const;
  /// Exponent of a Pow node.
  int exponent() const;
  std::size_t arity() const;
  const ScalarField& operand(std::size_t i) const;

  bool is_literal() const { return kind() == Kind::Literal; }
  bool is_zero() const { return is_literal() && rational().is_zero(); }
  bool is_one() const { return is_literal() && rational() == Rational(1); }
  bool depends_on(Axis axis) const;

  /// Exact partial derivative.
  ScalarField diff(Axis axis) const;

  /// Throws DomainError when a subexpression leaves its domain at `p`.
  double eval(const Point3& p) const;
  ScaledValue eval_scaled(const Point3& p) const;
  /// Value and partial derivatives up to `order` at `p`.
  Jet3 jet(const Point3& p, int order = Jet3::kMaxOrder) const;

  /// Source text in the expression grammar; parse(to_string()) rebuilds the
  /// same tree given the same constants.
  std::string to_string() const;

  /// Structural equality of trees.
  friend bool operator==(const ScalarField& a, const ScalarField& b);

  friend ScalarField operator-(const ScalarField& a);
  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator/(const ScalarField& a, const ScalarField& b);
  friend ScalarField pow(const ScalarField& a, int n);
  friend ScalarField exp(const ScalarField& a);
  friend ScalarField sqrt(const ScalarField& a);

  struct Node;

 private:
  friend struct NodeFactory;
  explicit ScalarField(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ScalarField make(Node node);

  std::shared_ptr<const Node> node_;
};

/// Position of the first character of an expression inside a larger
/// document; parse errors are reported relative to it.
struct SourceOrigin {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses `source`. Identifiers other than x, y, z must be bound either in
/// `constants` (exact values) or in `definitions` (substituted subtrees).
///
/// Grammar:
///   expr    := term (("+" | "-") term)*
///   term    := unary (("*" | "/") unary)*
///   unary   := "-" unary | power
///   power   := base ("^" exponent)?
///   exponent:= ["-"] integer | "(" ["-"] integer ")"
///   base    := number | identifier | "(" expr ")" | ("exp" | "sqrt") "(" expr ")"
ScalarField parse_expr(std::string_view source, const ConstantMap& constants = {},
                       const DefinitionMap& definitions = {}, SourceOrigin origin = {});

}  // namespace walkerpc
