#include "walkerpc/corpus.hpp"

#include <algorithm>

#include "walkerpc/error.hpp"

namespace walkerpc {

const std::vector<Fixture>& corpus() {
  static const std::vector<Fixture> fixtures{
      {"paracosymplectic-linear",
       "f = psi x + m with psi = 1, m = z^2; xi1 = exp((C - z)/2): F = 0, paracosymplectic",
       R"m(name = "paracosymplectic-linear"
epsilon = 1
const.C = 1
define.psi = "1"
define.Psi = "z"
define.m = "z^2"
f = "psi*x + m"
xi1 = "exp((C - Psi)/2)"
xi2 = "1"
xi3 = "0"
)m"},
      {"normal-quotient",
       "f = x^2/y^2, xi1 = x/y: G5 + G6, normal, theta = theta* = -1/y",
       R"m(name = "normal-quotient"
epsilon = 1
f = "x^2/y^2"
xi1 = "x/y"
xi2 = "1"
xi3 = "0"
domain.y = [0.5, 2]
require_nonzero = ["y"]
)m"},
      {"almost-paracosymplectic",
       "f = C x + psi with C = 1, psi = z; xi1 = exp((C z + C1)/2): G10, almost paracosymplectic",
       R"m(name = "almost-paracosymplectic"
epsilon = 1
const.C = 1
const.C1 = 0
define.psi = "z"
f = "C*x + psi"
xi1 = "exp((C*z + C1)/2)"
xi2 = "1"
xi3 = "0"
)m"},
      {"almost-alpha-paracosymplectic",
       "f = x/z, xi = (0, 0, 1/sqrt(x/z)): G6 + G10, almost alpha-paracosymplectic",
       R"m(name = "almost-alpha-paracosymplectic"
epsilon = 1
f = "x/z"
xi1 = "0"
xi2 = "0"
xi3 = "1/sqrt(x/z)"
domain.x = [0.5, 2]
domain.z = [0.5, 2]
require_positive = ["x/z"]
)m"},
      {"g12-linear",
       "f = C x + psi with C = 2, psi = 0; xi1 = C y/2 + C1: G12",
       R"m(name = "g12-linear"
epsilon = 1
const.C = 2
const.C1 = 0
define.psi = "0"
f = "C*x + psi"
xi1 = "C/2*y + C1"
xi2 = "1"
xi3 = "0"
)m"},
      {"paracontact-exponential",
       "f = 2 psi' x + m with psi = z, m = 0; xi3 = exp(-2y + psi): paracontact metric",
       R"m(name = "paracontact-exponential"
epsilon = 1
define.psi = "z"
define.dpsi = "1"
define.m = "0"
define.w = "exp(-2*y + psi)"
f = "2*dpsi*x + m"
xi1 = "(1 - (2*dpsi*x + m)*w^2)/(2*w)"
xi2 = "0"
xi3 = "w"
)m"},
      {"eta-einstein-x2",
       "f = x^2, xi = d_y: eta-Einstein with a = 1, b = -1, scal = 2, paracosymplectic",
       R"m(name = "eta-einstein-x2"
epsilon = 1
f = "x^2"
xi1 = "0"
xi2 = "1"
xi3 = "0"
)m"},
      {"flat-yz",
       "f = y z, xi = d_y: flat, almost paracosymplectic",
       R"m(name = "flat-yz"
epsilon = 1
f = "y*z"
xi1 = "0"
xi2 = "1"
xi3 = "0"
)m"},
  };
  return fixtures;
}

const Fixture& find_fixture(std::string_view name) {
  const auto& all = corpus();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  if (it == all.end()) throw InputError("unknown example '" + std::string(name) + "'");
  return *it;
}

}  // namespace walkerpc
