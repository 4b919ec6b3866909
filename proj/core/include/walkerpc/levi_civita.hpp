#pragma once

#include <array>

#include "walkerpc/jet.hpp"
#include "walkerpc/tensor.hpp"

namespace walkerpc {

/// Metric components g_ij as jets at a point.
using MetricJets = std::array<std::array<Jet3, 3>, 3>;
/// Christoffel symbols as jets, indexed [k][i][j] = Gamma^k_ij.
using ChristoffelJets = std::array<std::array<std::array<Jet3, 3>, 3>, 3>;

/// Levi-Civita connection of an arbitrary nondegenerate metric,
/// Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij).
/// The result has one order less than the input jets.
ChristoffelJets levi_civita(const MetricJets& g);

Christoffel christoffel_values(const ChristoffelJets& gamma);

/// Curvature R(X,Y)Z = nabla_[X,Y] Z - nabla_X nabla_Y Z + nabla_Y nabla_X Z
/// from Christoffel jets of order >= 1.
Curvature curvature_from(const ChristoffelJets& gamma);

}  // namespace walkerpc
