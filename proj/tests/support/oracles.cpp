#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace fusion_forge::testing {

namespace {

using Vec = Eigen::VectorXcd;
using Tensor = std::map<std::pair<int, int>, Complex>;

Vec multiply(const MonomialAlgebra& a, const Vec& x, const Vec& y) {
  Vec out = Vec::Zero(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    if (x[i] == Complex(0)) continue;
    for (int j = 0; j < a.dim; ++j) {
      const int k = a.product[a.index(i, j)];
      if (k >= 0 && y[j] != Complex(0)) out[k] += x[i] * y[j] * a.coefficient[a.index(i, j)];
    }
  }
  return out;
}

Tensor coproduct_of(const MonomialAlgebra& a, int i, Complex scale) {
  Tensor t;
  for (const auto& [p, q, c] : a.coproduct[i]) t[{p, q}] += scale * c;
  return t;
}

}  // namespace

MonomialAlgebra crossed_product(const ActionData& data) {
  const int m = data.acting_group()->order();
  const int n = data.pointed_group()->order();
  const auto& gamma = *data.pointed_group();
  const auto& g = *data.acting_group();
  MonomialAlgebra a;
  a.dim = m * n;
  a.product.assign(static_cast<std::size_t>(a.dim) * a.dim, -1);
  a.coefficient.assign(a.product.size(), Complex(0));
  a.coproduct.resize(a.dim);
  a.counit.assign(a.dim, Complex(0));
  for (int g1 = 0; g1 < m; ++g1)
    for (int x = 0; x < n; ++x) {
      const int i = g1 * n + x;
      for (int h = 0; h < m; ++h)
        for (int y = 0; y < n; ++y) {
          if (x != data.act(h, y)) continue;
          const int j = h * n + y;
          a.product[a.index(i, j)] = g.mul(g1, h) * n + y;
          a.coefficient[a.index(i, j)] = 1.0 / data.sigma(g1, h, y);
        }
      for (int y = 0; y < n; ++y) {
        const int z = gamma.mul(gamma.inv(y), x);
        a.coproduct[i].emplace_back(g1 * n + y, g1 * n + z, 1.0 / data.tau(g1, y, z));
      }
      if (x == 0) a.counit[i] = 1.0;
    }
  return a;
}

MonomialAlgebra dpr_double(const Cocycle3& w) {
  const auto& G = *w.group();
  const int n = G.order();
  auto inv_conj = [&](Element g, Element x) { return G.conj(G.inv(g), x); };
  MonomialAlgebra a;
  a.dim = n * n;
  a.product.assign(static_cast<std::size_t>(a.dim) * a.dim, -1);
  a.coefficient.assign(a.product.size(), Complex(0));
  a.coproduct.resize(a.dim);
  a.counit.assign(a.dim, Complex(0));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) {
      const int i = g * n + x;
      for (int h = 0; h < n; ++h) {
        const int y = inv_conj(g, x);
        const int gh = G.mul(g, h);
        const Complex theta = w(x, g, h) * w(g, h, inv_conj(gh, x)) / w(g, inv_conj(g, x), h);
        a.product[a.index(i, h * n + y)] = gh * n + x;
        a.coefficient[a.index(i, h * n + y)] = theta;
      }
      for (int y = 0; y < n; ++y) {
        const int z = G.mul(G.inv(y), x);
        const Complex gamma = w(y, z, g) * w(g, inv_conj(g, y), inv_conj(g, z)) / w(y, g, inv_conj(g, z));
        a.coproduct[i].emplace_back(g * n + y, g * n + z, gamma);
      }
      if (x == 0) a.counit[i] = 1.0;
    }
  return a;
}

double coproduct_defect(const MonomialAlgebra& a) {
  double worst = 0.0;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      const int k = a.product[a.index(i, j)];
      Tensor lhs = k >= 0 ? coproduct_of(a, k, a.coefficient[a.index(i, j)]) : Tensor{};
      Tensor rhs;
      for (const auto& [p1, q1, c1] : a.coproduct[i])
        for (const auto& [p2, q2, c2] : a.coproduct[j]) {
          const int p = a.product[a.index(p1, p2)], q = a.product[a.index(q1, q2)];
          if (p < 0 || q < 0) continue;
          rhs[{p, q}] += c1 * c2 * a.coefficient[a.index(p1, p2)] * a.coefficient[a.index(q1, q2)];
        }
      for (const auto& [key, v] : lhs) {
        auto it = rhs.find(key);
        worst = std::max(worst, std::abs(v - (it == rhs.end() ? Complex(0) : it->second)));
      }
      for (const auto& [key, v] : rhs)
        if (!lhs.count(key)) worst = std::max(worst, std::abs(v));
    }
  return worst;
}

AlgebraSplitting split_algebra(const MonomialAlgebra& a, std::uint64_t seed) {
  const int D = a.dim;

  // trace of left multiplication by each basis element
  std::vector<Complex> trace(D, Complex(0));
  for (int k = 0; k < D; ++k)
    for (int j = 0; j < D; ++j)
      if (a.product[a.index(k, j)] == j) trace[k] += a.coefficient[a.index(k, j)];

  // center = common kernel of z -> b_i z - z b_i
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(D, D);
  for (int i = 0; i < D; ++i) {
    std::vector<std::map<int, Complex>> rows(D);
    for (int j = 0; j < D; ++j) {
      if (int k = a.product[a.index(i, j)]; k >= 0) rows[k][j] += a.coefficient[a.index(i, j)];
      if (int k = a.product[a.index(j, i)]; k >= 0) rows[k][j] -= a.coefficient[a.index(j, i)];
    }
    for (const auto& row : rows)
      for (const auto& [p, cp] : row)
        for (const auto& [q, cq] : row) gram(p, q) += std::conj(cp) * cq;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<int> null;
  for (int i = 0; i < D; ++i)
    if (es.eigenvalues()[i] < 1e-9 * scale) null.push_back(i);
  const int r = static_cast<int>(null.size());
  Eigen::MatrixXcd V(D, r);
  for (int c = 0; c < r; ++c) V.col(c) = es.eigenvectors().col(null[c]);

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Vec coeffs(r);
    for (int c = 0; c < r; ++c) coeffs[c] = Complex(normal(rng), normal(rng));
    const Vec z = V * coeffs;
    Eigen::MatrixXcd Z(r, r);
    for (int c = 0; c < r; ++c) Z.col(c) = V.adjoint() * multiply(a, z, V.col(c));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> ces(Z);
    const auto& lambda = ces.eigenvalues();
    double gap = 1e300;
    for (int p = 0; p < r; ++p)
      for (int q = p + 1; q < r; ++q) gap = std::min(gap, std::abs(lambda[p] - lambda[q]));
    if (r > 1 && gap < 1e-6 * std::max(1.0, lambda.cwiseAbs().maxCoeff())) continue;

    AlgebraSplitting out;
    std::vector<Vec> idempotents;
    long long total = 0;
    for (int p = 0; p < r; ++p) {
      Vec w = V * ces.eigenvectors().col(p);
      const Vec w2 = multiply(a, w, w);
      const Complex c = w.dot(w2) / w.squaredNorm();
      w /= c;
      if ((multiply(a, w, w) - w).norm() > 1e-7 * std::max(1.0, w.norm()))
        throw std::runtime_error("central idempotent did not square to itself");
      Complex tr = 0;
      for (int k = 0; k < D; ++k) tr += w[k] * trace[k];
      const double d = std::sqrt(std::max(0.0, tr.real()));
      const long long di = std::llround(d);
      if (std::abs(tr - Complex(double(di * di))) > 1e-6) throw std::runtime_error("block dimension is not a square");
      out.dims.push_back(static_cast<int>(di));
      total += di * di;
      idempotents.push_back(std::move(w));
    }
    if (total != D) throw std::runtime_error("algebra is not split semisimple of the expected dimension");

    out.characters.assign(r, std::vector<Complex>(D));
    for (int p = 0; p < r; ++p)
      for (int b = 0; b < D; ++b) {
        Complex s = 0;
        for (int k = 0; k < D; ++k) {
          const int t = a.product[a.index(b, k)];
          if (t >= 0) s += a.coefficient[a.index(b, k)] * idempotents[p][k] * trace[t];
        }
        out.characters[p][b] = s / double(out.dims[p]);
      }

    Eigen::MatrixXcd X(D, r);
    for (int p = 0; p < r; ++p)
      for (int b = 0; b < D; ++b) X(b, p) = out.characters[p][b];
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(X);

    FusionRing ring = FusionRing::zero(r);
    ring.unit = -1;
    for (int p = 0; p < r; ++p) {
      ring.labels[p] = std::to_string(p);
      ring.dims[p] = out.dims[p];
      bool is_unit = true;
      for (int b = 0; b < D && is_unit; ++b) is_unit = std::abs(out.characters[p][b] - a.counit[b]) < 1e-7;
      if (is_unit) ring.unit = p;
    }
    if (ring.unit < 0) throw std::runtime_error("no simple has the counit as character");

    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        Vec y(D);
        for (int b = 0; b < D; ++b) {
          Complex s = 0;
          for (const auto& [p, q, c] : a.coproduct[b]) s += c * out.characters[i][p] * out.characters[j][q];
          y[b] = s;
        }
        const Vec sol = qr.solve(y);
        if ((X * sol - y).norm() > 1e-6 * std::max(1.0, y.norm()))
          throw std::runtime_error("tensor character is outside the span of simple characters");
        for (int k = 0; k < r; ++k) {
          const long long v = std::llround(sol[k].real());
          if (std::abs(sol[k] - Complex(double(v))) > 1e-6 || v < 0)
            throw std::runtime_error("tensor product multiplicity is not a nonnegative integer");
          ring.N(i, j, k) = static_cast<int>(v);
        }
      }
    for (int i = 0; i < r; ++i) {
      ring.dual[i] = -1;
      for (int k = 0; k < r; ++k)
        if (ring.N(i, k, ring.unit) == 1) ring.dual[i] = k;
    }
    out.ring = std::move(ring);
    return out;
  }
  throw std::runtime_error("no generic central element found");
}

}  // namespace fusion_forge::testing
