#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "fusion_forge/group_catalog.hpp"
#include "fusion_forge/twisted_double.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "zoo.hpp"

using namespace fusion_forge;

namespace {

FusionRing klein_ring() {
  auto z2 = catalog::cyclic(2);
  auto k = catalog::direct_product(*z2, *z2);
  return FusionRing::group_ring(4, std::vector<int>(k->table().begin(), k->table().end()));
}

FusionRing cyclic_ring(int n) {
  auto z = catalog::cyclic(n);
  return FusionRing::group_ring(n, std::vector<int>(z->table().begin(), z->table().end()));
}

std::vector<Cocycle3> omegas_for(const GroupPtr& g) {
  std::vector<Cocycle3> out{Cocycle3::trivial(g), random_coboundary(g, 4, 3)};
  for (int n = 2; n <= g->order(); ++n) {
    auto zn = catalog::cyclic(n);
    for (const auto& hom : testing::homomorphisms(*g, *zn)) {
      std::vector<char> hit(n);
      int c = 0;
      for (Element y : hom)
        if (!hit[y]) hit[y] = 1, ++c;
      if (c != n) continue;
      for (int q = 1; q < n; ++q) out.push_back(pullback(cyclic_3cocycle(n, q), g, hom) * random_coboundary(g, 4, q));
      break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("doubles of Z2") {
  const auto plain = fusion_table(build_double(Cocycle3::trivial(catalog::cyclic(2))));
  CHECK(plain.rank() == 4);
  CHECK(isomorphic_as_based_rings(plain, klein_ring()).has_value());

  // the twisted double of Z2 (double semion) is again pointed on Z2 x Z2
  const auto twisted = fusion_table(build_double(cyclic_3cocycle(2, 1)));
  CHECK(twisted.rank() == 4);
  for (long long d : twisted.dims) CHECK(d == 1);
  CHECK(isomorphic_as_based_rings(twisted, klein_ring()).has_value());
  CHECK_FALSE(isomorphic_as_based_rings(twisted, cyclic_ring(4)).has_value());

  const auto oracle = testing::split_algebra(testing::dpr_double(cyclic_3cocycle(2, 1)));
  CHECK(isomorphic_as_based_rings(oracle.ring, klein_ring()).has_value());
}

TEST_CASE("twisted doubles of cyclic groups") {
  // fusion group Z_{n^2/gcd(2q,n)} x Z_{gcd(2q,n)}
  auto group_ring_of = [](int a, int b) {
    auto g = catalog::direct_product(*catalog::cyclic(a), *catalog::cyclic(b));
    return FusionRing::group_ring(a * b, std::vector<int>(g->table().begin(), g->table().end()));
  };
  for (int n = 2; n <= 6; ++n)
    for (int q = 0; q < n; ++q) {
      CAPTURE(n);
      CAPTURE(q);
      const int g = std::gcd(2 * q, n);
      const auto ring = fusion_table(build_double(cyclic_3cocycle(n, q)));
      CHECK(isomorphic_as_based_rings(ring, group_ring_of(n * n / g, g)).has_value());
    }
}

TEST_CASE("D(S3)") {
  const auto ring = fusion_table(build_double(Cocycle3::trivial(catalog::symmetric(3))));
  auto dims = ring.dims;
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<long long>{1, 1, 2, 2, 2, 2, 3, 3});
  CHECK(testing::global_dimension(ring) == 36);
  VerifyOptions comm;
  comm.commutativity = true;
  CHECK(verify(ring, comm).ok());
}

TEST_CASE("simple count is a sum over classes of regular class counts") {
  for (const auto& [name, g] : testing::groups_up_to(8)) {
    CAPTURE(name);
    for (const auto& w : omegas_for(g)) {
      const auto cat = build_double(w);
      int expected = 0;
      for (const auto& cls : conjugacy_classes(*g)) {
        const auto& o = cat.orbit_of(cls.front());
        expected += testing::regular_class_count(o.factor_set);
        CHECK(o.stabilizer.elements() == centralizer(g, o.representative).elements());
      }
      CHECK(cat.rank() == expected);
      CHECK(testing::global_dimension(fusion_table(cat)) == g->order() * g->order());
    }
  }
}

TEST_CASE("untwisted doubles match the plain adjoint action") {
  for (const auto& [name, g] : testing::groups_up_to(8)) {
    CAPTURE(name);
    const auto via_double = fusion_table(build_double(Cocycle3::trivial(g)));
    const auto via_action = fusion_table(build_category(ActionData::trivial_cocycles(GroupAction::adjoint(g))));
    CHECK(via_double.n == via_action.n);
    CHECK(via_double.dual == via_action.dual);
  }
}

TEST_CASE("doubles agree with the twisted double algebra") {
  for (const auto& [name, g] : testing::groups_up_to(6)) {
    CAPTURE(name);
    for (const auto& w : omegas_for(g)) {
      const auto algebra = testing::dpr_double(w);
      CHECK(testing::coproduct_defect(algebra) < 1e-9);
      const auto oracle = testing::split_algebra(algebra);
      const auto ring = fusion_table(build_double(w));
      CHECK(isomorphic_as_based_rings(ring, oracle.ring).has_value());
    }
  }
}

TEST_CASE("braided commutativity") {
  for (const auto& [name, g] : testing::groups_up_to(8))
    for (const auto& w : omegas_for(g)) CHECK(verify_braided_commutativity(fusion_table(build_double(w))).passed);

  // a corrupted table: swap one N_{a,b} row with N_{b,a}
  auto ring = fusion_table(build_double(Cocycle3::trivial(catalog::symmetric(3))));
  ring.N(3, 5, 7) += 1;
  const auto check = verify_braided_commutativity(ring);
  CHECK_FALSE(check.passed);
  REQUIRE_FALSE(check.witnesses.empty());
  const auto& wit = check.witnesses.front();
  CHECK(((wit[0] == 3 && wit[1] == 5) || (wit[0] == 5 && wit[1] == 3)));
}
