#include "fusion_forge/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fusion_forge/errors.hpp"

namespace fusion_forge {

namespace {

std::string describe(const std::string& what, int a, int b, int c) {
  std::ostringstream os;
  os << what << " at (" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<Element> mult, std::string name)
    : order_(order), mult_(std::move(mult)), name_(std::move(name)) {
  if (order_ <= 0) throw ParseError("group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (mult_.size() != n * n) throw ParseError("multiplication table has wrong size");
  for (Element v : mult_)
    if (v < 0 || v >= order_) throw ParseError("multiplication table entry out of range");
  for (Element g = 0; g < order_; ++g) {
    if (mul(0, g) != g || mul(g, 0) != g) throw ParseError("element 0 is not the identity");
  }
  // Latin square rows give unique inverses.
  inverse_.assign(n, -1);
  for (Element g = 0; g < order_; ++g) {
    for (Element h = 0; h < order_; ++h) {
      if (mul(g, h) == 0) {
        if (inverse_[g] != -1) throw ParseError("element has two right inverses");
        inverse_[g] = h;
      }
    }
    if (inverse_[g] < 0) throw ParseError("element has no inverse");
  }
  for (Element g = 0; g < order_; ++g)
    if (mul(inverse_[g], g) != 0) throw ParseError("left and right inverses differ");
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) throw ParseError(describe("multiplication is not associative", a, b, c));
    }
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element p = a; p != 0; p = mul(p, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupPtr make_group(int order, std::vector<Element> mult, std::string name) {
  return std::make_shared<const FiniteGroup>(order, std::move(mult), std::move(name));
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (!parent_) throw ParseError("subgroup without parent group");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  position_.assign(static_cast<std::size_t>(parent_->order()), -1);
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) {
    const Element g = elements_[i];
    if (g < 0 || g >= parent_->order()) throw ParseError("subgroup element out of range");
    position_[g] = i;
  }
  if (elements_.empty() || elements_.front() != 0) throw ParseError("subgroup must contain the identity");
  for (Element a : elements_) {
    if (!contains(parent_->inv(a))) throw ParseError("subgroup not closed under inverse");
    for (Element b : elements_)
      if (!contains(parent_->mul(a, b))) throw ParseError("subgroup not closed under multiplication");
  }
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(static_cast<std::size_t>(parent->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}); }

Subgroup Subgroup::generated_by(GroupPtr parent, std::span<const Element> generators) {
  const FiniteGroup& g = *parent;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Element> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      const Element next = g.mul(members[i], s);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }
  return Subgroup(std::move(parent), std::move(members));
}

Subgroup Subgroup::conjugated(Element t) const {
  std::vector<Element> out;
  out.reserve(elements_.size());
  for (Element h : elements_) out.push_back(parent_->conj(t, h));
  return Subgroup(parent_, std::move(out));
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  std::vector<Element> out;
  for (Element h : elements_)
    if (other.contains(h)) out.push_back(h);
  return Subgroup(parent_, std::move(out));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](Element h) { return other.contains(h); });
}

// ---------------------------------------------------------------------------

GroupAction::GroupAction(GroupPtr group, int set_size, std::vector<int> act)
    : group_(std::move(group)), set_size_(set_size), act_(std::move(act)) {
  const FiniteGroup& g = *group_;
  if (set_size_ <= 0) throw ParseError("action on an empty set");
  if (act_.size() != static_cast<std::size_t>(g.order()) * set_size_) throw ParseError("action table has wrong size");
  for (int v : act_)
    if (v < 0 || v >= set_size_) throw ParseError("action table entry out of range");
  for (int x = 0; x < set_size_; ++x)
    if (this->act(0, x) != x) throw ParseError("identity does not act trivially");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      for (int x = 0; x < set_size_; ++x)
        if (this->act(g.mul(a, b), x) != this->act(a, this->act(b, x))) throw ParseError("action table is not a homomorphism");
}

GroupAction GroupAction::by_automorphisms(GroupPtr group, GroupPtr target, std::vector<int> act) {
  GroupAction a(std::move(group), target->order(), std::move(act));
  const FiniteGroup& t = *target;
  for (Element g = 0; g < a.group_->order(); ++g) {
    for (Element x = 0; x < t.order(); ++x)
      for (Element y = 0; y < t.order(); ++y)
        if (a.act(g, t.mul(x, y)) != t.mul(a.act(g, x), a.act(g, y)))
          throw ParseError("action is not by group automorphisms");
  }
  a.target_ = std::move(target);
  return a;
}

GroupAction GroupAction::trivial(GroupPtr group, int set_size) {
  std::vector<int> act(static_cast<std::size_t>(group->order()) * set_size);
  for (std::size_t i = 0; i < act.size(); ++i) act[i] = static_cast<int>(i % set_size);
  return GroupAction(std::move(group), set_size, std::move(act));
}

GroupAction GroupAction::adjoint(GroupPtr group) {
  const int n = group->order();
  std::vector<int> act(static_cast<std::size_t>(n) * n);
  for (Element g = 0; g < n; ++g)
    for (Element x = 0; x < n; ++x) act[static_cast<std::size_t>(g) * n + x] = group->conj(g, x);
  return by_automorphisms(group, group, std::move(act));
}

// ---------------------------------------------------------------------------

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ElementSet> classes;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ElementSet cls;
    for (Element t = 0; t < g.order(); ++t) {
      const Element y = g.conj(t, x);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup centralizer(const GroupPtr& g, Element x) {
  std::vector<Element> out;
  for (Element t = 0; t < g->order(); ++t)
    if (g->mul(t, x) == g->mul(x, t)) out.push_back(t);
  return Subgroup(g, std::move(out));
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<Element> commutators;
  for (Element a = 0; a < g->order(); ++a)
    for (Element b = 0; b < g->order(); ++b)
      commutators.push_back(g->mul(g->mul(a, b), g->mul(g->inv(a), g->inv(b))));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return Subgroup::generated_by(g, commutators);
}

OrbitStabilizer orbit_and_stabilizer(const GroupAction& a, int x) {
  const FiniteGroup& g = *a.group();
  std::vector<int> orbit;
  std::vector<Element> stab;
  std::vector<char> seen(static_cast<std::size_t>(a.set_size()), 0);
  for (Element t = 0; t < g.order(); ++t) {
    const int y = a.act(t, x);
    if (y == x) stab.push_back(t);
    if (!seen[y]) {
      seen[y] = 1;
      orbit.push_back(y);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return {std::move(orbit), Subgroup(a.group(), std::move(stab))};
}

std::vector<std::vector<int>> orbits(const GroupAction& a) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(a.set_size()), 0);
  for (int x = 0; x < a.set_size(); ++x) {
    if (seen[x]) continue;
    auto os = orbit_and_stabilizer(a, x);
    for (int y : os.orbit) seen[y] = 1;
    out.push_back(std::move(os.orbit));
  }
  return out;
}

Element coset_representative(const Subgroup& h, Element g) {
  const FiniteGroup& grp = h.group();
  Element best = grp.mul(g, h.element(0));
  for (Element k : h.elements()) best = std::min(best, grp.mul(g, k));
  return best;
}

std::vector<ElementSet> left_cosets(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::vector<ElementSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ElementSet coset;
    for (Element k : h.elements()) {
      const Element y = g.mul(x, k);
      seen[y] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

DoubleCosetDecomposition double_cosets(const Subgroup& h, const Subgroup& k) {
  if (h.parent() != k.parent()) throw ParseError("double cosets of subgroups of different groups");
  const FiniteGroup& g = h.group();
  DoubleCosetDecomposition d{h, k, {}, {}, std::vector<int>(static_cast<std::size_t>(g.order()), -1)};
  for (Element x = 0; x < g.order(); ++x) {
    if (d.coset_of[x] >= 0) continue;
    const int idx = d.size();
    ElementSet coset;
    for (Element a : h.elements())
      for (Element b : k.elements()) {
        const Element y = g.mul(g.mul(a, x), b);
        if (d.coset_of[y] < 0) {
          d.coset_of[y] = idx;
          coset.push_back(y);
        }
      }
    std::sort(coset.begin(), coset.end());
    d.representatives.push_back(coset.front());
    d.cosets.push_back(std::move(coset));
  }
  return d;
}

std::vector<DiagonalOrbit> diagonal_orbits(const Subgroup& h, const Subgroup& gy, const Subgroup& gz) {
  const FiniteGroup& g = h.group();
  const auto ycosets = left_cosets(gy);
  const auto zcosets = left_cosets(gz);
  // Index cosets by representative for quick lookup.
  std::vector<int> yindex(static_cast<std::size_t>(g.order())), zindex(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < static_cast<int>(ycosets.size()); ++i)
    for (Element e : ycosets[i]) yindex[e] = i;
  for (int i = 0; i < static_cast<int>(zcosets.size()); ++i)
    for (Element e : zcosets[i]) zindex[e] = i;
  const int ny = static_cast<int>(ycosets.size());
  const int nz = static_cast<int>(zcosets.size());

  std::vector<char> seen(static_cast<std::size_t>(ny) * nz, 0);
  std::vector<DiagonalOrbit> out;
  for (int i = 0; i < ny; ++i) {
    for (int j = 0; j < nz; ++j) {
      if (seen[static_cast<std::size_t>(i) * nz + j]) continue;
      const Element t = ycosets[i].front();
      const Element s = zcosets[j].front();
      DiagonalOrbit orbit{{}, {t, s}, Subgroup::trivial(h.parent())};
      std::vector<Element> stab;
      for (Element a : h.elements()) {
        const int i2 = yindex[g.mul(a, t)];
        const int j2 = zindex[g.mul(a, s)];
        if (i2 == i && j2 == j) stab.push_back(a);
        auto& flag = seen[static_cast<std::size_t>(i2) * nz + j2];
        if (!flag) {
          flag = 1;
          orbit.pairs.emplace_back(ycosets[i2].front(), zcosets[j2].front());
        }
      }
      std::sort(orbit.pairs.begin(), orbit.pairs.end());
      orbit.stabilizer = Subgroup(h.parent(), std::move(stab));
      out.push_back(std::move(orbit));
    }
  }
  return out;
}

}  // namespace fusion_forge
