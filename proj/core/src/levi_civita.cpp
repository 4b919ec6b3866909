#include "walkerpc/levi_civita.hpp"

namespace walkerpc {
namespace {

MetricJets inverse(const MetricJets& g) {
  MetricJets c;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      const int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      // Cofactor of entry (i, j); cyclic index choice carries the sign.
      c[j][i] = g[i1][j1] * g[i2][j2] - g[i1][j2] * g[i2][j1];
    }
  }
  const Jet3 det = g[0][0] * c[0][0] + g[0][1] * c[1][0] + g[0][2] * c[2][0];
  for (auto& row : c)
    for (auto& v : row) v = v / det;
  return c;
}

}  // namespace

ChristoffelJets levi_civita(const MetricJets& g) {
  const MetricJets ginv = inverse(g);
  const int order = g[0][0].order() - 1;
  std::array<std::array<std::array<Jet3, 3>, 3>, 3> dg;  // dg[l][i][j] = d_l g_ij
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) dg[l][i][j] = g[i][j].derivative(l);

  ChristoffelJets gamma;
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        Jet3 s(order);
        for (int l = 0; l < 3; ++l) {
          s += ginv[k][l].truncated(order) * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        }
        gamma[k][i][j] = 0.5 * s;
      }
    }
  }
  return gamma;
}

Christoffel christoffel_values(const ChristoffelJets& gamma) {
  Christoffel c;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c(k, i, j) = gamma[k][i][j].value();
  return c;
}

Curvature curvature_from(const ChristoffelJets& gamma) {
  const Christoffel G = christoffel_values(gamma);
  Curvature r;
  for (int l = 0; l < 3; ++l) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
          double v = -gamma[l][j][k].d(i) + gamma[l][i][k].d(j);
          for (int m = 0; m < 3; ++m) v += -G(m, j, k) * G(l, i, m) + G(m, i, k) * G(l, j, m);
          r(l, i, j, k) = v;
        }
      }
    }
  }
  return r;
}

}  // namespace walkerpc
