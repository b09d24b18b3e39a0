#include <algorithm>
#include <set>

#include "doctest.h"
#include "fusion_forge/errors.hpp"
#include "fusion_forge/group_catalog.hpp"
#include "zoo.hpp"

using namespace fusion_forge;

namespace {

std::vector<Element> of_order(const FiniteGroup& g, int k) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k) out.push_back(x);
  return out;
}

std::vector<std::size_t> sizes(const std::vector<ElementSet>& sets) {
  std::vector<std::size_t> out;
  for (const auto& s : sets) out.push_back(s.size());
  return out;
}

}  // namespace

TEST_CASE("multiplication tables are checked on construction") {
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), ParseError);
  CHECK_THROWS_AS(FiniteGroup(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}), ParseError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1}), ParseError);
  CHECK_NOTHROW(FiniteGroup(2, {0, 1, 1, 0}));
}

TEST_CASE("conjugacy classes") {
  auto trivial = catalog::trivial();
  CHECK(conjugacy_classes(*trivial) == std::vector<ElementSet>{{0}});

  auto s3 = catalog::symmetric(3);
  auto cls = sizes(conjugacy_classes(*s3));
  std::sort(cls.begin(), cls.end());
  CHECK(cls == std::vector<std::size_t>{1, 2, 3});
  CHECK(conjugacy_classes(*s3).front() == ElementSet{0});

  CHECK(conjugacy_classes(*catalog::cyclic(4)).size() == 4);

  for (const auto& [name, g] : testing::groups_up_to(12)) {
    CAPTURE(name);
    // classes are exactly the orbits of the conjugation action
    CHECK(conjugacy_classes(*g) == orbits(GroupAction::adjoint(g)));
  }
}

TEST_CASE("centralizers") {
  auto s3 = catalog::symmetric(3);
  CHECK(centralizer(s3, 0).order() == 6);
  for (Element t : of_order(*s3, 2)) {
    const auto c = centralizer(s3, t);
    CHECK(c.order() == 2);
    CHECK(c.contains(t));
  }
  auto klein = catalog::by_name("Z2xZ2");
  for (Element x = 0; x < 4; ++x) CHECK(centralizer(klein, x).order() == 4);
}

TEST_CASE("orbits and stabilizers") {
  auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3);
  const auto inversion = GroupAction::by_automorphisms(z2, z3, {0, 1, 2, 0, 2, 1});
  auto o1 = orbit_and_stabilizer(inversion, 1);
  CHECK(o1.orbit == std::vector<int>{1, 2});
  CHECK(o1.stabilizer.order() == 1);
  auto o0 = orbit_and_stabilizer(inversion, 0);
  CHECK(o0.orbit == std::vector<int>{0});
  CHECK(o0.stabilizer.order() == 2);

  const auto still = GroupAction::trivial(catalog::symmetric(3), 5);
  for (int x = 0; x < 5; ++x) {
    auto o = orbit_and_stabilizer(still, x);
    CHECK(o.orbit == std::vector<int>{x});
    CHECK(o.stabilizer.order() == 6);
  }

  // orbit-stabilizer and the class equation on every small group
  for (const auto& [name, g] : testing::groups_up_to(8)) {
    for (const auto& [gname, gamma] : testing::groups_up_to(8))
      for (const auto& a : testing::actions_up_to_conjugacy(g, gamma, 3)) {
        int total = 0;
        for (const auto& orbit : orbits(a)) {
          const auto os = orbit_and_stabilizer(a, orbit.front());
          CHECK(os.orbit == orbit);
          CHECK(os.orbit.size() * os.stabilizer.order() == static_cast<std::size_t>(g->order()));
          total += g->order() / os.stabilizer.order();
        }
        CHECK(total == a.set_size());
      }
  }
}

TEST_CASE("actions are checked") {
  auto z2 = catalog::cyclic(2), z3 = catalog::cyclic(3);
  CHECK_THROWS_AS(GroupAction::by_automorphisms(z2, z3, {0, 1, 2, 0, 1, 1}), ParseError);
  CHECK_THROWS_AS(GroupAction::by_automorphisms(z2, z3, {0, 1, 2, 1, 2, 0}), ParseError);
  CHECK_THROWS_AS(GroupAction(z2, 2, {1, 0, 0, 1}), ParseError);
}

TEST_CASE("double cosets") {
  auto s3 = catalog::symmetric(3);
  const auto whole = Subgroup::whole(s3);
  auto one = double_cosets(whole, whole);
  CHECK(one.size() == 1);
  CHECK(one.cosets.front().size() == 6);

  const Element t = of_order(*s3, 2).front();
  const Element gens[] = {t};
  const auto h = Subgroup::generated_by(s3, gens);
  auto two = double_cosets(h, h);
  CHECK(two.size() == 2);
  auto sz = sizes(two.cosets);
  std::sort(sz.begin(), sz.end());
  CHECK(sz == std::vector<std::size_t>{2, 4});

  const auto e = Subgroup::trivial(s3);
  CHECK(double_cosets(e, e).size() == 6);

  for (const auto& [name, g] : testing::groups_up_to(12)) {
    const auto subs = testing::all_subgroups(g);
    for (const auto& a : subs)
      for (const auto& b : subs) {
        const auto d = double_cosets(a, b);
        std::set<Element> seen;
        for (int c = 0; c < d.size(); ++c) {
          CHECK(d.representatives[c] == d.cosets[c].front());
          std::set<Element> expected;
          for (Element x : a.elements())
            for (Element y : b.elements()) expected.insert(g->mul(g->mul(x, d.representatives[c]), y));
          CHECK(std::vector<Element>(expected.begin(), expected.end()) == d.cosets[c]);
          seen.insert(d.cosets[c].begin(), d.cosets[c].end());
        }
        CHECK(static_cast<int>(seen.size()) == g->order());
      }
  }
}

TEST_CASE("diagonal orbits") {
  auto s3 = catalog::symmetric(3);
  const auto whole = Subgroup::whole(s3);
  auto single = diagonal_orbits(whole, whole, whole);
  REQUIRE(single.size() == 1);
  CHECK(single[0].representative == std::pair<Element, Element>{0, 0});
  CHECK(single[0].stabilizer.order() == 6);

  auto z2 = catalog::cyclic(2);
  const auto e = Subgroup::trivial(z2);
  auto four = diagonal_orbits(e, e, e);
  CHECK(four.size() == 4);
  for (const auto& o : four) CHECK(o.pairs.size() == 1);

  const Element t = of_order(*s3, 2).front();
  const Element gens[] = {t};
  const auto h = Subgroup::generated_by(s3, gens);
  CHECK(diagonal_orbits(whole, h, h).size() == 2);

  // (tGy, sGz) -> Gy t^-1 s Gz is a bijection from G-orbits to double cosets,
  // and stabilizers are H ∩ tGyt^-1 ∩ sGzs^-1
  for (const auto& [name, g] : testing::groups_up_to(12)) {
    CAPTURE(name);
    const auto subs = testing::all_subgroups(g);
    const auto all = Subgroup::whole(g);
    for (const auto& gy : subs)
      for (const auto& gz : subs) {
        const auto orbs = diagonal_orbits(all, gy, gz);
        const auto dc = double_cosets(gy, gz);
        CHECK(static_cast<int>(orbs.size()) == dc.size());
        std::set<int> hit;
        for (const auto& o : orbs) {
          const auto [t, s] = o.representative;
          hit.insert(dc.coset_of[g->mul(g->inv(t), s)]);
          const auto expected = all.intersect(gy.conjugated(t)).intersect(gz.conjugated(s));
          CHECK(o.stabilizer.elements() == expected.elements());
          CHECK(o.pairs.size() * o.stabilizer.order() == static_cast<std::size_t>(g->order()));
        }
        CHECK(static_cast<int>(hit.size()) == dc.size());
      }
  }

  // a proper acting subgroup still partitions the pair set
  auto d4 = catalog::dihedral(4);
  const auto subs = testing::all_subgroups(d4);
  for (const auto& h2 : subs)
    for (const auto& gy : subs)
      for (const auto& gz : subs) {
        std::size_t total = 0;
        for (const auto& o : diagonal_orbits(h2, gy, gz)) total += o.pairs.size();
        CHECK(total == static_cast<std::size_t>(gy.index() * gz.index()));
      }
}

TEST_CASE("catalog groups") {
  CHECK(catalog::symmetric(4)->order() == 24);
  CHECK(catalog::alternating(4)->order() == 12);
  CHECK(catalog::dicyclic(2)->order() == 8);
  CHECK(testing::isomorphic(*catalog::by_name("Q8"), *catalog::dicyclic(2)));
  CHECK_FALSE(testing::isomorphic(*catalog::by_name("D4"), *catalog::dicyclic(2)));
  CHECK(derived_subgroup(catalog::symmetric(3)).order() == 3);
  CHECK(derived_subgroup(catalog::symmetric(4)).order() == 12);
  const catalog::Permutation gens[] = {{1, 0, 2}, {1, 2, 0}};
  CHECK(testing::isomorphic(*catalog::from_permutations(gens), *catalog::symmetric(3)));
}
