#include "fusion_forge/projective_rep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "fusion_forge/errors.hpp"

namespace fusion_forge {

namespace {

void require_same_factor_set(const Cocycle2& a, const Cocycle2& b, double tol, const char* what) {
  if (!a.same_table(b, tol)) throw FactorSetMismatch(what);
}

// Key used to order irreps: values snapped to a coarse grid.
std::vector<std::pair<double, double>> sort_key(const ProjCharacter& chi) {
  std::vector<std::pair<double, double>> key;
  key.reserve(chi.values.size());
  for (Complex v : chi.values) key.emplace_back(std::round(v.real() * 1e6) / 1e6, std::round(v.imag() * 1e6) / 1e6);
  return key;
}

bool characters_equal(const ProjCharacter& a, const ProjCharacter& b, double tol) {
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (!near(a.values[i], b.values[i], tol)) return false;
  return true;
}

}  // namespace

ProjRep::ProjRep(Cocycle2 fs, std::vector<Eigen::MatrixXcd> ms) : factor_set(std::move(fs)), matrices(std::move(ms)) {
  if (static_cast<int>(matrices.size()) != factor_set.domain().order())
    throw ParseError("representation needs one matrix per domain element");
  const auto d = matrices.front().rows();
  for (const auto& m : matrices)
    if (m.rows() != d || m.cols() != d) throw ParseError("representation matrices have inconsistent shapes");
}

ValidationReport check_invariants(const ProjRep& rep, const Tolerances& tol) {
  ValidationReport r;
  auto fail = [&](const char* what, std::vector<int> w, double dev) {
    r.ok = false;
    ++r.violation_count;
    if (static_cast<int>(r.violations.size()) < kMaxWitnesses) r.violations.push_back({what, std::move(w), dev});
  };
  const Subgroup& h = rep.domain();
  const FiniteGroup& g = h.group();
  const auto d = rep.dim();
  const double e0 = (rep.matrices[0] - Eigen::MatrixXcd::Identity(d, d)).norm();
  if (e0 > tol.validation) fail("pi(e) = 1", {0}, e0);
  for (Element a : h.elements())
    for (Element b : h.elements()) {
      const double dev = (rep.at(a) * rep.at(b) - rep.factor_set(a, b) * rep.at(g.mul(a, b))).norm();
      if (dev > tol.validation * std::max<double>(1.0, d)) fail("pi(g) pi(h) = alpha(g,h) pi(gh)", {a, b}, dev);
    }
  return r;
}

ProjCharacter character(const ProjRep& rep) {
  std::vector<Complex> values(rep.matrices.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = rep.matrices[i].trace();
  return {rep.factor_set, std::move(values)};
}

int multiplicity(const ProjCharacter& irr, const ProjCharacter& chi, const Tolerances& tol) {
  require_same_factor_set(irr.factor_set, chi.factor_set, tol.validation,
                          "multiplicity of characters with different factor sets");
  return multiplicity(irr.factor_set, irr.values, chi.values, tol);
}

int multiplicity(const Cocycle2& factor_set, const std::vector<Complex>& irr, const std::vector<Complex>& chi,
                 const Tolerances& tol) {
  const Subgroup& h = factor_set.domain();
  const FiniteGroup& g = h.group();
  Complex sum = 0.0;
  for (int p = 0; p < h.order(); ++p) {
    const Element a = h.element(p);
    const Element ai = g.inv(a);
    sum += chi[p] * irr[h.position(ai)] / factor_set(ai, a);
  }
  sum /= static_cast<double>(h.order());
  const double rounded = std::round(sum.real());
  if (std::abs(sum - Complex(rounded, 0.0)) > tol.integrality || rounded < 0) {
    std::ostringstream os;
    os << "multiplicity " << sum << " is not a non-negative integer";
    throw NonIntegralMultiplicity(os.str());
  }
  return static_cast<int>(rounded);
}

std::vector<int> IrrepSet::decompose(const ProjCharacter& chi, const Tolerances& tol) const {
  std::vector<int> m(characters.size());
  for (std::size_t i = 0; i < characters.size(); ++i) m[i] = multiplicity(characters[i], chi, tol);
  return m;
}

int IrrepSet::find(const ProjCharacter& chi, const Tolerances& tol) const {
  const double eps = std::max(tol.integrality, tol.validation);
  for (int i = 0; i < size(); ++i)
    if (characters[i].values.size() == chi.values.size() && characters_equal(characters[i], chi, eps)) return i;
  return -1;
}

IrrepSet twisted_irreducibles(const Cocycle2& alpha, std::uint64_t seed) {
  const Subgroup& h = alpha.domain();
  const FiniteGroup& g = h.group();
  const int n = h.order();

  // Twisted left regular representation L_a e_h = alpha(a,h) e_ah and the
  // commuting right operators R_b e_h = alpha(h,b) e_hb.
  std::vector<Eigen::MatrixXcd> left(n, Eigen::MatrixXcd::Zero(n, n));
  std::vector<Eigen::MatrixXcd> right(n, Eigen::MatrixXcd::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Element a = h.element(i), x = h.element(j);
      left[i](h.position(g.mul(a, x)), j) = alpha(a, x);
      right[i](h.position(g.mul(x, a)), j) = alpha(x, a);
    }

  constexpr int kAttempts = 8;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd herm = Eigen::MatrixXcd::Zero(n, n);
    for (int b = 0; b < n; ++b) herm += Complex(normal(rng), normal(rng)) * right[b];
    herm = (herm + herm.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    if (solver.info() != Eigen::Success) continue;
    const auto& evals = solver.eigenvalues();
    const auto& evecs = solver.eigenvectors();
    const double scale = std::max(1.0, evals.cwiseAbs().maxCoeff());

    std::vector<ProjRep> found;
    std::vector<ProjCharacter> chars;
    bool good = true;
    int start = 0;
    while (start < n && good) {
      int stop = start + 1;
      while (stop < n && evals(stop) - evals(stop - 1) < 1e-7 * scale) ++stop;
      const Eigen::MatrixXcd q = evecs.middleCols(start, stop - start);
      std::vector<Eigen::MatrixXcd> ms(n);
      for (int i = 0; i < n; ++i) {
        ms[i] = q.adjoint() * left[i] * q;
        if ((left[i] * q - q * ms[i]).norm() > 1e-8 * n) {
          good = false;
          break;
        }
      }
      start = stop;
      if (!good) break;
      ProjRep rep(alpha, std::move(ms));
      ProjCharacter chi = character(rep);
      double norm2 = 0.0;
      for (Complex v : chi.values) norm2 += std::norm(v);
      if (std::abs(norm2 - n) > 1e-6 * n) {
        good = false;
        break;
      }
      const bool seen = std::any_of(chars.begin(), chars.end(),
                                    [&](const ProjCharacter& c) { return characters_equal(c, chi, 1e-6); });
      if (!seen) {
        found.push_back(std::move(rep));
        chars.push_back(std::move(chi));
      }
    }
    if (!good) continue;
    int total = 0;
    for (const auto& r : found) total += r.dim() * r.dim();
    if (total != n) continue;

    std::vector<int> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::vector<std::vector<std::pair<double, double>>> keys;
    for (const auto& c : chars) keys.push_back(sort_key(c));
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (found[a].dim() != found[b].dim()) return found[a].dim() < found[b].dim();
      return keys[a] > keys[b];
    });
    IrrepSet set{alpha, {}, {}};
    for (int i : order) {
      set.irreps.push_back(std::move(found[i]));
      set.characters.push_back(std::move(chars[i]));
    }
    return set;
  }
  std::ostringstream os;
  os << "could not split the twisted group algebra of a subgroup of order " << n;
  throw DecompositionFailure(os.str());
}

ProjRep tensor(const ProjRep& a, const ProjRep& b) {
  if (!(a.domain() == b.domain())) throw FactorSetMismatch("tensor product of representations of different subgroups");
  std::vector<Eigen::MatrixXcd> ms(a.matrices.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const auto& x = a.matrices[i];
    const auto& y = b.matrices[i];
    Eigen::MatrixXcd k(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index r = 0; r < x.rows(); ++r)
      for (Eigen::Index c = 0; c < x.cols(); ++c)
        k.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
    ms[i] = std::move(k);
  }
  return ProjRep(a.factor_set * b.factor_set, std::move(ms));
}

ProjRep dual(const ProjRep& rep) {
  std::vector<Eigen::MatrixXcd> ms(rep.matrices.size());
  for (std::size_t i = 0; i < ms.size(); ++i) ms[i] = rep.matrices[i].inverse().transpose();
  return ProjRep(rep.factor_set.inverse(), std::move(ms));
}

ProjRep conjugate(const ProjRep& rep, Element t) {
  Cocycle2 fs = conjugate_cocycle2(rep.factor_set, t);
  const Subgroup& target = fs.domain();
  const FiniteGroup& g = target.group();
  const Element tinv = g.inv(t);
  std::vector<Eigen::MatrixXcd> ms(target.order());
  for (int i = 0; i < target.order(); ++i) ms[i] = rep.at(g.conj(tinv, target.element(i)));
  return ProjRep(std::move(fs), std::move(ms));
}

ProjRep restrict_rep(const ProjRep& rep, const Subgroup& k) {
  Cocycle2 fs = restrict_cocycle2(rep.factor_set, k);
  std::vector<Eigen::MatrixXcd> ms(k.order());
  for (int i = 0; i < k.order(); ++i) ms[i] = rep.at(k.element(i));
  return ProjRep(std::move(fs), std::move(ms));
}

ProjRep induce(const ProjRep& rep, const Cocycle2& alpha, const Tolerances& tol) {
  const Subgroup& h = rep.domain();
  const Subgroup& k = alpha.domain();
  if (!h.is_subgroup_of(k)) throw FactorSetMismatch("induction to a group that does not contain the domain");
  require_same_factor_set(restrict_cocycle2(alpha, h), rep.factor_set, tol.validation,
                          "induction with a factor set that does not restrict to the representation's");
  const FiniteGroup& g = k.group();

  // Left transversal of h in k: minimal element of each coset.
  std::vector<Element> reps;
  std::vector<int> coset_index(g.order(), -1);
  for (Element x : k.elements()) {
    if (coset_index[x] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Element y : h.elements()) coset_index[g.mul(x, y)] = idx;
  }
  const int m = static_cast<int>(reps.size());
  const int d = rep.dim();
  std::vector<Eigen::MatrixXcd> ms(k.order(), Eigen::MatrixXcd::Zero(m * d, m * d));
  for (int p = 0; p < k.order(); ++p) {
    const Element x = k.element(p);
    for (int i = 0; i < m; ++i) {
      const Element xr = g.mul(x, reps[i]);
      const int j = coset_index[xr];
      const Element hh = g.mul(g.inv(reps[j]), xr);
      ms[p].block(j * d, i * d, d, d) = (alpha(x, reps[i]) / alpha(reps[j], hh)) * rep.at(hh);
    }
  }
  return ProjRep(alpha, std::move(ms));
}

ProjRep one_dimensional(Cocycle2 factor_set, const std::vector<Complex>& values) {
  std::vector<Eigen::MatrixXcd> ms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) ms[i] = Eigen::MatrixXcd::Constant(1, 1, values[i]);
  return ProjRep(std::move(factor_set), std::move(ms));
}

ProjRep twist(const ProjRep& rep, const ProjRep& line) {
  if (line.dim() != 1) throw ParseError("twist needs a one-dimensional representation");
  if (!(rep.domain() == line.domain())) throw FactorSetMismatch("twist by a representation of another subgroup");
  std::vector<Eigen::MatrixXcd> ms(rep.matrices.size());
  for (std::size_t i = 0; i < ms.size(); ++i) ms[i] = line.matrices[i](0, 0) * rep.matrices[i];
  return ProjRep(rep.factor_set * line.factor_set, std::move(ms));
}

}  // namespace fusion_forge
