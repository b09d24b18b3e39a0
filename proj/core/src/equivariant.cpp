#include "fusion_forge/equivariant.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "fusion_forge/errors.hpp"

namespace fusion_forge {

std::string to_string(const SimpleLabel& s) {
  std::ostringstream os;
  os << '(' << s.orbit_rep << ',' << s.irrep << ')';
  return os.str();
}

EquivariantCategory::EquivariantCategory(ActionData data, std::vector<OrbitData> orbits, std::vector<PointData> points,
                                         Tolerances tol)
    : data_(std::move(data)), orbits_(std::move(orbits)), points_(std::move(points)), tol_(tol) {
  for (const auto& o : orbits_) {
    first_index_.push_back(static_cast<int>(simples_.size()));
    for (int i = 0; i < o.irreps.size(); ++i) simples_.push_back({o.representative, i});
  }
}

int EquivariantCategory::index_of(const SimpleLabel& s) const {
  const int o = points_.at(s.orbit_rep).orbit;
  if (orbits_[o].representative != s.orbit_rep || s.irrep < 0 || s.irrep >= orbits_[o].irreps.size())
    throw ParseError("not a simple label of this category: " + to_string(s));
  return first_index_[o] + s.irrep;
}

Cocycle2 inertia_factor_set(const ActionData& data, const Subgroup& stabilizer, Element p) {
  const int k = stabilizer.order();
  std::vector<Complex> v(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      v[static_cast<std::size_t>(i) * k + j] = 1.0 / data.sigma(stabilizer.element(i), stabilizer.element(j), p);
  return Cocycle2(stabilizer, std::move(v));
}

namespace {

// Factor set of a one-dimensional representation given by its values.
Cocycle2 line_factor_set(const Subgroup& h, const std::vector<Complex>& values) {
  const FiniteGroup& g = h.group();
  const int k = h.order();
  std::vector<Complex> v(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      v[static_cast<std::size_t>(i) * k + j] =
          values[i] * values[j] / values[h.position(g.mul(h.element(i), h.element(j)))];
  return Cocycle2(h, std::move(v));
}

// Replaces a computed factor set by the expected table after checking them.
ProjRep with_factor_set(ProjRep rep, const Cocycle2& expected, double tol, const char* what) {
  if (!rep.factor_set.same_table(expected, tol)) throw FactorSetMismatch(what);
  rep.factor_set = expected;
  return rep;
}

}  // namespace

ProjRep transport(const ActionData& data, const ProjRep& rep, Element p, Element u, const Tolerances& tol) {
  const FiniteGroup& G = *data.acting_group();
  ProjRep moved = conjugate(rep, u);
  const Subgroup& target = moved.domain();
  const Element ui = G.inv(u);
  std::vector<Complex> d(target.order());
  for (int i = 0; i < target.order(); ++i) {
    const Element hp = target.element(i);
    const Element h = G.conj(ui, hp);
    d[i] = data.sigma(u, h, p) / data.sigma(hp, u, p);
  }
  ProjRep line = one_dimensional(line_factor_set(target, d), d);
  return with_factor_set(twist(moved, line), inertia_factor_set(data, target, data.act(u, p)), tol.validation,
                         "transported representation has the wrong factor set");
}

EquivariantCategory build_category(const ActionData& data, const BuildOptions& options) {
  const auto report = validate(data, options.tol);
  if (!report) {
    std::ostringstream os;
    os << "action data fails " << report.violation_count << " identities";
    if (!report.violations.empty()) os << " (first: " << report.violations.front().identity << ")";
    throw ValidationFailure(os.str());
  }
  const GroupAction& action = data.action();
  const GroupPtr& G = data.acting_group();
  const int n = data.pointed_group()->order();

  std::optional<std::mt19937_64> rng;
  if (options.representative_seed) rng.emplace(*options.representative_seed);

  std::vector<OrbitData> orbit_list;
  std::vector<std::optional<PointData>> slots(n);
  for (auto& pts : orbits(action)) {
    Element y = pts.front();
    if (rng) y = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(*rng)];
    auto os = orbit_and_stabilizer(action, y);
    Cocycle2 fs = inertia_factor_set(data, os.stabilizer, y);
    IrrepSet irreps = twisted_irreducibles(fs, options.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(y) + 1);
    const int index = static_cast<int>(orbit_list.size());

    for (Element p : pts) {
      std::vector<Element> carriers;
      for (Element t = 0; t < G->order(); ++t)
        if (action.act(t, y) == p) carriers.push_back(t);
      Element t = carriers.front();
      if (rng) t = carriers[std::uniform_int_distribution<std::size_t>(0, carriers.size() - 1)(*rng)];
      PointData pd{index, t, os.stabilizer.conjugated(t), inertia_factor_set(data, os.stabilizer.conjugated(t), p), {}, {}};
      for (const auto& r : irreps.irreps) {
        pd.reps.push_back(transport(data, r, y, t, options.tol));
        pd.characters.push_back(character(pd.reps.back()));
      }
      slots[p] = std::move(pd);
    }
    orbit_list.push_back(OrbitData{y, std::move(pts), std::move(os.stabilizer), std::move(fs), std::move(irreps)});
  }
  std::vector<PointData> points;
  points.reserve(n);
  for (auto& slot : slots) points.push_back(std::move(*slot));
  return EquivariantCategory(data, std::move(orbit_list), std::move(points), options.tol);
}

long long fpdim(const EquivariantCategory& cat, const SimpleLabel& s) {
  const auto& o = cat.orbit_of(s.orbit_rep);
  return static_cast<long long>(o.irreps.irreps.at(s.irrep).dim()) * static_cast<long long>(o.points.size());
}

namespace {

// One G_x-orbit of pairs (a, b) with ab = x, a in orbit Y, b in orbit Z.
struct Contribution {
  Element a;
  Element b;
  Subgroup t;                   // G_a ∩ G_b
  Cocycle2 factor_set;          // alpha_x restricted to t
  std::vector<Complex> tau;     // tau(g;a,b)^-1 by position in t
};

Contribution make_contribution(const EquivariantCategory& cat, Element a, Element b, Subgroup t) {
  const ActionData& data = cat.data();
  const Element x = data.pointed_group()->mul(a, b);
  const FiniteGroup& G = *data.acting_group();
  const int k = t.order();
  std::vector<Complex> tau(k);
  for (int i = 0; i < k; ++i) tau[i] = 1.0 / data.tau(t.element(i), a, b);
  Cocycle2 fs = inertia_factor_set(data, t, x);
  // alpha_a alpha_b times the factor set of tau^-1 must be alpha_x.
  const double eps = cat.tolerances().validation;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Element g = t.element(i), h = t.element(j);
      const Complex lhs = tau[i] * tau[j] / tau[t.position(G.mul(g, h))] /
                          (data.sigma(g, h, a) * data.sigma(g, h, b));
      if (!near(lhs, fs.local(i, j), eps))
        throw FactorSetMismatch("the two sides of a fusion multiplicity carry different factor sets");
    }
  return {a, b, std::move(t), std::move(fs), std::move(tau)};
}

std::vector<Contribution> contributions(const EquivariantCategory& cat, int iy, int iz, int ix, FusionPath path) {
  const ActionData& data = cat.data();
  const FiniteGroup& X = *data.pointed_group();
  const auto& oy = cat.orbits()[iy];
  const auto& oz = cat.orbits()[iz];
  const auto& ox = cat.orbits()[ix];
  const Element x = ox.representative;
  std::vector<Contribution> out;
  if (path == FusionPath::double_cosets) {
    for (auto& d : diagonal_orbits(ox.stabilizer, oy.stabilizer, oz.stabilizer)) {
      const Element a = data.act(d.representative.first, oy.representative);
      const Element b = data.act(d.representative.second, oz.representative);
      if (X.mul(a, b) != x) continue;
      out.push_back(make_contribution(cat, a, b, std::move(d.stabilizer)));
    }
  } else {
    std::vector<char> seen(X.order(), 0);
    for (Element a : oy.points) {
      const Element b = X.mul(X.inv(a), x);
      if (seen[a] || cat.orbit_index(b) != iz) continue;
      for (Element g : ox.stabilizer.elements()) seen[data.act(g, a)] = 1;
      Subgroup t = ox.stabilizer.intersect(cat.point(a).stabilizer).intersect(cat.point(b).stabilizer);
      out.push_back(make_contribution(cat, a, b, std::move(t)));
    }
  }
  return out;
}

std::vector<Complex> restricted(const ProjCharacter& chi, const Subgroup& t) {
  std::vector<Complex> v(t.order());
  for (int i = 0; i < t.order(); ++i) v[i] = chi.at(t.element(i));
  return v;
}

int evaluate(const EquivariantCategory& cat, const std::vector<Contribution>& parts, const SimpleLabel& sy,
             const SimpleLabel& sz, const SimpleLabel& sx) {
  int total = 0;
  const auto& irr_x = cat.orbit_of(sx.orbit_rep).irreps.characters[sx.irrep];
  for (const auto& c : parts) {
    const auto& pa = cat.point(c.a).characters[sy.irrep];
    const auto& pb = cat.point(c.b).characters[sz.irrep];
    std::vector<Complex> chi(c.t.order());
    for (int i = 0; i < c.t.order(); ++i) {
      const Element g = c.t.element(i);
      chi[i] = pa.at(g) * pb.at(g) * c.tau[i];
    }
    total += multiplicity(c.factor_set, restricted(irr_x, c.t), chi, cat.tolerances());
  }
  return total;
}

}  // namespace

int fusion_multiplicity(const EquivariantCategory& cat, const SimpleLabel& sy, const SimpleLabel& sz,
                        const SimpleLabel& sx, FusionPath path) {
  cat.index_of(sy);
  cat.index_of(sz);
  cat.index_of(sx);
  const auto parts = contributions(cat, cat.orbit_index(sy.orbit_rep), cat.orbit_index(sz.orbit_rep),
                                   cat.orbit_index(sx.orbit_rep), path);
  return evaluate(cat, parts, sy, sz, sx);
}

FusionRing fusion_table(const EquivariantCategory& cat, unsigned threads) {
  const int r = cat.rank();
  const int no = static_cast<int>(cat.orbits().size());
  FusionRing ring = FusionRing::zero(r);
  const auto& simples = cat.simples();
  for (int i = 0; i < r; ++i) {
    ring.labels[i] = to_string(simples[i]);
    ring.dims[i] = fpdim(cat, simples[i]);
  }
  ring.unit = 0;

  std::vector<int> first(no + 1, 0);
  for (int o = 0; o < no; ++o) first[o + 1] = first[o] + cat.orbits()[o].irreps.size();

  auto fill_row = [&](int iy) {
    for (int iz = 0; iz < no; ++iz)
      for (int ix = 0; ix < no; ++ix) {
        const auto parts = contributions(cat, iy, iz, ix, FusionPath::double_cosets);
        if (parts.empty()) continue;
        for (int a = first[iy]; a < first[iy + 1]; ++a)
          for (int b = first[iz]; b < first[iz + 1]; ++b)
            for (int c = first[ix]; c < first[ix + 1]; ++c)
              ring.N(a, b, c) = evaluate(cat, parts, simples[a], simples[b], simples[c]);
      }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(no));
  if (threads <= 1) {
    for (int iy = 0; iy < no; ++iy) fill_row(iy);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (int iy = next++; iy < no; iy = next++) {
          try {
            fill_row(iy);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  for (int i = 0; i < r; ++i) ring.dual[i] = cat.index_of(dual(cat, simples[i]));
  return ring;
}

SimpleLabel dual(const EquivariantCategory& cat, const SimpleLabel& s) {
  const ActionData& data = cat.data();
  const FiniteGroup& X = *data.pointed_group();
  const FiniteGroup& G = *data.acting_group();
  const double eps = cat.tolerances().validation;
  const Element y = s.orbit_rep;
  const Element yi = X.inv(y);
  const ProjRep& pi = cat.rep(s);
  const Subgroup& gy = pi.domain();

  std::vector<Complex> lambda(gy.order());
  for (int i = 0; i < gy.order(); ++i) lambda[i] = data.tau(gy.element(i), y, yi);
  ProjRep line = one_dimensional(line_factor_set(gy, lambda), lambda);
  ProjRep rho = with_factor_set(twist(dual(pi), line), inertia_factor_set(data, gy, yi), eps,
                                "dual representation has the wrong factor set");

  const PointData& target = cat.point(yi);
  const OrbitData& orbit = cat.orbits()[target.orbit];
  ProjRep moved = transport(data, rho, yi, G.inv(target.transporter), cat.tolerances());
  const ProjCharacter chi = character(moved);

  int found = -1;
  for (int i = 0; i < orbit.irreps.size(); ++i) {
    const int m = multiplicity(orbit.irreps.characters[i], chi, cat.tolerances());
    if (m == 0) continue;
    if (m != 1 || found != -1) throw DualNotFound("dual of " + to_string(s) + " is not irreducible");
    found = i;
  }
  if (found < 0) throw DualNotFound("no irrep matches the dual of " + to_string(s));
  const SimpleLabel d{orbit.representative, found};
  if (fusion_multiplicity(cat, s, d, cat.unit()) != 1)
    throw DualNotFound("the unit does not occur once in " + to_string(s) + " * " + to_string(d));
  return d;
}

std::vector<SimpleLabel> invertibles(const EquivariantCategory& cat) {
  std::vector<SimpleLabel> out;
  for (const auto& s : cat.simples())
    if (fpdim(cat, s) == 1) out.push_back(s);
  return out;
}

FusionRing orbit_ring(const EquivariantCategory& cat) {
  const ActionData& data = cat.data();
  const FiniteGroup& X = *data.pointed_group();
  const auto& orbs = cat.orbits();
  const int r = static_cast<int>(orbs.size());
  FusionRing ring = FusionRing::zero(r);
  for (int i = 0; i < r; ++i) {
    ring.labels[i] = "[" + std::to_string(orbs[i].representative) + "]";
    ring.dims[i] = static_cast<long long>(orbs[i].points.size());
    ring.dual[i] = cat.orbit_index(X.inv(orbs[i].representative));
  }
  ring.unit = cat.orbit_index(0);
  for (int iy = 0; iy < r; ++iy)
    for (int iz = 0; iz < r; ++iz)
      for (int iu = 0; iu < r; ++iu) {
        const Element u = orbs[iu].representative;
        int count = 0;
        for (Element a : orbs[iy].points)
          if (cat.orbit_index(X.mul(X.inv(a), u)) == iz) ++count;
        ring.N(iy, iz, iu) = count;
      }
  return ring;
}

bool factor_set_is_trivial_class(const OrbitData& orbit) {
  return std::any_of(orbit.irreps.irreps.begin(), orbit.irreps.irreps.end(),
                     [](const ProjRep& r) { return r.dim() == 1; });
}

}  // namespace fusion_forge
