#include "fusion_forge/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "fusion_forge/errors.hpp"

namespace fusion_forge {

namespace {

constexpr std::size_t kWitnesses = 8;

struct Recorder {
  CheckResult& r;
  bool stop_at_first = false;
  bool done() const { return stop_at_first && !r.passed; }
  void fail(std::vector<int> w) {
    r.passed = false;
    ++r.failures;
    if (r.witnesses.size() < kWitnesses) r.witnesses.push_back(std::move(w));
  }
};

}  // namespace

FusionRing FusionRing::zero(int rank) {
  FusionRing ring;
  ring.labels.resize(rank);
  for (int i = 0; i < rank; ++i) ring.labels[i] = std::to_string(i);
  ring.n.assign(static_cast<std::size_t>(rank) * rank * rank, 0);
  ring.dual.resize(rank);
  for (int i = 0; i < rank; ++i) ring.dual[i] = i;
  ring.dims.assign(rank, 1);
  return ring;
}

FusionRing FusionRing::group_ring(int order, const std::vector<int>& mult) {
  FusionRing ring = zero(order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int c = mult[static_cast<std::size_t>(a) * order + b];
      ring.N(a, b, c) = 1;
      if (c == 0) ring.dual[a] = b;
    }
  return ring;
}

bool FusionReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* FusionReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<double> perron_frobenius_dims(const FusionRing& ring) {
  const int r = ring.rank();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m(j, k) += ring.N(i, j, k);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  const auto& values = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < values.size(); ++i)
    if (values(i).real() > values(best).real()) best = i;
  Eigen::VectorXcd v = solver.eigenvectors().col(best);
  const Complex at_unit = v(ring.unit);
  std::vector<double> dims(r);
  for (int i = 0; i < r; ++i) dims[i] = std::abs(at_unit) > 0 ? (v(i) / at_unit).real() : 0.0;
  return dims;
}

namespace {

using Check = std::function<void(const FusionRing&, Recorder&)>;

void check_unit(const FusionRing& ring, Recorder& rec) {
  const int r = ring.rank(), u = ring.unit;
  for (int j = 0; j < r && !rec.done(); ++j)
    for (int k = 0; k < r && !rec.done(); ++k) {
      const int want = j == k ? 1 : 0;
      if (ring.N(u, j, k) != want || ring.N(j, u, k) != want) rec.fail({j, k});
    }
}

void check_assoc(const FusionRing& ring, Recorder& rec) {
  const int r = ring.rank();
  std::vector<long long> lhs(static_cast<std::size_t>(r) * r), rhs(static_cast<std::size_t>(r) * r);
  for (int i = 0; i < r && !rec.done(); ++i)
    for (int j = 0; j < r && !rec.done(); ++j) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(rhs.begin(), rhs.end(), 0);
      // (i j) k and i (j k), indexed by [k][l].
      for (int m = 0; m < r; ++m) {
        const int a = ring.N(i, j, m);
        if (a == 0) continue;
        for (int k = 0; k < r; ++k)
          for (int l = 0; l < r; ++l) lhs[static_cast<std::size_t>(k) * r + l] += static_cast<long long>(a) * ring.N(m, k, l);
      }
      for (int k = 0; k < r; ++k)
        for (int m = 0; m < r; ++m) {
          const int b = ring.N(j, k, m);
          if (b == 0) continue;
          for (int l = 0; l < r; ++l) rhs[static_cast<std::size_t>(k) * r + l] += static_cast<long long>(b) * ring.N(i, m, l);
        }
      for (int k = 0; k < r && !rec.done(); ++k)
        for (int l = 0; l < r && !rec.done(); ++l)
          if (lhs[static_cast<std::size_t>(k) * r + l] != rhs[static_cast<std::size_t>(k) * r + l]) rec.fail({i, j, k, l});
    }
}

void check_duality(const FusionRing& ring, Recorder& rec) {
  const int r = ring.rank();
  for (int i = 0; i < r && !rec.done(); ++i)
    for (int j = 0; j < r && !rec.done(); ++j)
      if (ring.N(i, j, ring.unit) != (j == ring.dual[i] ? 1 : 0)) rec.fail({i, j});
}

void check_rigidity(const FusionRing& ring, Recorder& rec) {
  const int r = ring.rank();
  for (int i = 0; i < r && !rec.done(); ++i)
    for (int j = 0; j < r && !rec.done(); ++j)
      for (int k = 0; k < r && !rec.done(); ++k) {
        const int v = ring.N(i, j, k);
        if (v != ring.N(ring.dual[i], k, j) || v != ring.N(k, ring.dual[j], i)) rec.fail({i, j, k});
      }
}

void check_dims(const FusionRing& ring, Recorder& rec) {
  const int r = ring.rank();
  for (int i = 0; i < r && !rec.done(); ++i)
    for (int j = 0; j < r && !rec.done(); ++j) {
      long long s = 0;
      for (int k = 0; k < r; ++k) s += ring.N(i, j, k) * ring.dims[k];
      if (s != ring.dims[i] * ring.dims[j]) rec.fail({i, j});
    }
}

void check_comm(const FusionRing& ring, Recorder& rec) {
  const int r = ring.rank();
  for (int i = 0; i < r && !rec.done(); ++i)
    for (int j = i + 1; j < r && !rec.done(); ++j)
      for (int k = 0; k < r && !rec.done(); ++k)
        if (ring.N(i, j, k) != ring.N(j, i, k)) rec.fail({i, j, k});
}

}  // namespace

FusionReport verify(const FusionRing& ring, const VerifyOptions& options) {
  FusionReport report;
  const int r = ring.rank();

  CheckResult shape{"shape"};
  {
    Recorder rec{shape};
    const auto cube = static_cast<std::size_t>(r) * r * r;
    if (r == 0 || ring.n.size() != cube || ring.dual.size() != static_cast<std::size_t>(r) ||
        ring.dims.size() != static_cast<std::size_t>(r) || ring.unit < 0 || ring.unit >= r) {
      rec.fail({});
    } else {
      for (std::size_t i = 0; i < cube; ++i)
        if (ring.n[i] < 0) rec.fail({static_cast<int>(i / (r * r)), static_cast<int>(i / r % r), static_cast<int>(i % r)});
      for (int i = 0; i < r; ++i) {
        if (ring.dual[i] < 0 || ring.dual[i] >= r || ring.dual[ring.dual[i]] != i) rec.fail({i});
        if (ring.dims[i] <= 0) rec.fail({i});
      }
    }
  }
  report.checks.push_back(shape);
  if (!shape.passed) return report;

  const auto fp = [&](const FusionRing& t, Recorder& rec) {
    const auto pf = perron_frobenius_dims(t);
    for (int i = 0; i < r && !rec.done(); ++i)
      if (std::abs(pf[i] - static_cast<double>(t.dims[i])) > options.tol.integrality * std::max<double>(1.0, t.dims[i]))
        rec.fail({i});
  };
  std::vector<std::pair<std::string, Check>> checks;
  if (options.fail_fast)
    checks = {{"unit", check_unit},         {"duality", check_duality}, {"dim-hom", check_dims},
              {"rigidity", check_rigidity}, {"assoc", check_assoc},     {"fp-dims", fp}};
  else
    checks = {{"unit", check_unit},         {"assoc", check_assoc}, {"duality", check_duality},
              {"rigidity", check_rigidity}, {"dim-hom", check_dims}, {"fp-dims", fp}};
  if (options.commutativity) checks.emplace_back("comm", check_comm);

  for (const auto& [name, body] : checks) {
    CheckResult result{name};
    Recorder rec{result, options.fail_fast};
    body(ring, rec);
    report.checks.push_back(std::move(result));
    if (options.fail_fast && !report.checks.back().passed) break;
  }
  return report;
}

namespace {

using Signature = std::tuple<long long, bool, std::vector<int>, std::vector<int>, int>;

Signature signature(const FusionRing& ring, int i) {
  const int r = ring.rank();
  std::vector<int> row, square;
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k)
      if (ring.N(i, j, k) != 0) row.push_back(ring.N(i, j, k));
  for (int k = 0; k < r; ++k)
    if (ring.N(i, i, k) != 0) square.push_back(ring.N(i, i, k) * 1000 + static_cast<int>(ring.dims[k]));
  std::sort(row.begin(), row.end());
  std::sort(square.begin(), square.end());
  // order of i in the based ring, up to a bound: smallest p with unit in i^p
  int power = 0;
  if (ring.dims[i] == 1) {
    int cur = i;
    for (power = 1; power <= r && cur != ring.unit; ++power) {
      for (int k = 0; k < r; ++k)
        if (ring.N(cur, i, k) != 0) {
          cur = k;
          break;
        }
    }
  }
  return {ring.dims[i], ring.dual[i] == i, std::move(row), std::move(square), power};
}

}  // namespace

std::optional<std::vector<int>> isomorphic_as_based_rings(const FusionRing& a, const FusionRing& b) {
  const int r = a.rank();
  if (r != b.rank()) {
    std::ostringstream os;
    os << "based rings have ranks " << a.rank() << " and " << b.rank();
    throw RankMismatch(os.str());
  }
  std::vector<Signature> sa(r), sb(r);
  for (int i = 0; i < r; ++i) {
    sa[i] = signature(a, i);
    sb[i] = signature(b, i);
  }
  std::vector<std::vector<int>> candidates(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (sa[i] == sb[j] && ((i == a.unit) == (j == b.unit))) candidates[i].push_back(j);
  for (const auto& c : candidates)
    if (c.empty()) return std::nullopt;

  std::vector<int> order(r);
  for (int i = 0; i < r; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return candidates[x].size() < candidates[y].size(); });

  std::vector<int> f(r, -1), used_by(r, -1);
  std::vector<int> assigned;

  auto consistent = [&](int x) {
    for (int y : assigned)
      for (int z : assigned) {
        if (a.N(x, y, z) != b.N(f[x], f[y], f[z])) return false;
        if (a.N(y, x, z) != b.N(f[y], f[x], f[z])) return false;
        if (a.N(y, z, x) != b.N(f[y], f[z], f[x])) return false;
      }
    return true;
  };

  // Assigns x -> target and x* -> target*, undoing on failure.
  auto place = [&](int x, int target, std::vector<int>& placed) {
    auto put = [&](int p, int q) {
      if (f[p] == q) return true;
      if (f[p] != -1 || used_by[q] != -1) return false;
      f[p] = q;
      used_by[q] = p;
      assigned.push_back(p);
      placed.push_back(p);
      return consistent(p);
    };
    return put(x, target) && put(a.dual[x], b.dual[target]);
  };
  auto undo = [&](std::vector<int>& placed) {
    for (auto it = placed.rbegin(); it != placed.rend(); ++it) {
      used_by[f[*it]] = -1;
      f[*it] = -1;
      assigned.pop_back();
    }
    placed.clear();
  };

  std::function<bool(std::size_t)> search = [&](std::size_t pos) {
    while (pos < order.size() && f[order[pos]] != -1) ++pos;
    if (pos == order.size()) return true;
    const int x = order[pos];
    for (int target : candidates[x]) {
      if (used_by[target] != -1) continue;
      std::vector<int> placed;
      if (place(x, target, placed) && search(pos + 1)) return true;
      undo(placed);
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return f;
}

FusionRing permuted(const FusionRing& ring, const std::vector<int>& order) {
  const int r = ring.rank();
  std::vector<int> where(r);
  for (int p = 0; p < r; ++p) where[order[p]] = p;
  FusionRing out = FusionRing::zero(r);
  for (int p = 0; p < r; ++p) {
    out.labels[p] = ring.labels[order[p]];
    out.dims[p] = ring.dims[order[p]];
    out.dual[p] = where[ring.dual[order[p]]];
  }
  out.unit = where[ring.unit];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) out.N(where[i], where[j], where[k]) = ring.N(i, j, k);
  return out;
}

}  // namespace fusion_forge
