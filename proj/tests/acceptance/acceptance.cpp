// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fusion_forge/group_catalog.hpp"
#include "fusion_forge/io.hpp"
#include "fusion_forge/twisted_double.hpp"
#include "corpus.hpp"
#include "oracles.hpp"
#include "properties.hpp"
#include "zoo.hpp"

using namespace fusion_forge;
using namespace fusion_forge::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Built {
  std::string name;
  ActionData data;
  EquivariantCategory cat;
  FusionRing ring;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "{" + s + "}";
}

bool same_ring(const FusionRing& a, const FusionRing& b) {
  if (a.rank() != b.rank()) return false;
  return isomorphic_as_based_rings(a, b).has_value();
}

FusionRing group_ring(const GroupPtr& g) {
  return FusionRing::group_ring(g->order(), std::vector<int>(g->table().begin(), g->table().end()));
}

const std::vector<Built>& corpus_tables() {
  static const std::vector<Built> built = [] {
    std::vector<Built> out;
    for (auto& entry : corpus()) {
      auto cat = build_category(entry.data);
      auto ring = fusion_table(cat);
      out.push_back({entry.name, entry.data, std::move(cat), std::move(ring)});
    }
    return out;
  }();
  return built;
}

// Every action up to conjugacy with |G| |Gamma| <= 24, trivial cocycles.
Outcome smash_product_oracle() {
  const auto groups = groups_up_to(24);
  long long cases = 0, labelled = 0;
  std::vector<std::string> bad;
  for (const auto& G : groups)
    for (const auto& X : groups) {
      if (G.group->order() * X.group->order() > 24) continue;
      for (const auto& action : actions_up_to_conjugacy(G.group, X.group)) {
        ++cases;
        const auto data = ActionData::trivial_cocycles(action);
        const auto cat = build_category(data);
        const auto ring = fusion_table(cat);
        const auto oracle = split_algebra(crossed_product(data));
        if (!same_ring(ring, oracle.ring)) {
          bad.push_back(G.name + " on " + X.name);
          continue;
        }
        // the same simples, entry by entry
        const auto match = match_simples(cat, oracle);
        bool entrywise = match.has_value();
        for (int i = 0; i < ring.rank() && entrywise; ++i)
          for (int j = 0; j < ring.rank() && entrywise; ++j)
            for (int k = 0; k < ring.rank() && entrywise; ++k)
              entrywise = ring.N(i, j, k) == oracle.ring.N((*match)[i], (*match)[j], (*match)[k]);
        if (entrywise) ++labelled;
        else bad.push_back(G.name + " on " + X.name + " (labels)");
      }
    }
  std::ostringstream os;
  os << cases << " actions, " << labelled << " agree with the smash-product oracle";
  if (!bad.empty()) os << "; first mismatch " << bad.front();
  return {bad.empty(), os.str()};
}

Outcome z3_by_z2() {
  const auto data = ActionData::trivial_cocycles(
      GroupAction::by_automorphisms(catalog::cyclic(2), catalog::cyclic(3), {0, 1, 2, 0, 2, 1}));
  const auto ring = fusion_table(build_category(data));
  const auto s3 = catalog::symmetric(3);
  const auto rep_s3 = split_algebra(crossed_product(ActionData::trivial_cocycles(
                                        GroupAction::by_automorphisms(s3, catalog::trivial(), std::vector<int>(6, 0)))))
                          .ring;
  int std_index = -1, sgn_index = -1;
  for (int i = 0; i < ring.rank(); ++i) {
    if (ring.dims[i] == 2) std_index = i;
    if (ring.dims[i] == 1 && i != ring.unit) sgn_index = i;
  }
  bool squares = std_index >= 0 && sgn_index >= 0;
  if (squares)
    for (int k = 0; k < ring.rank(); ++k) squares = squares && ring.N(std_index, std_index, k) == 1;
  const bool pass = ring.rank() == 3 && sorted(ring.dims) == std::vector<long long>{1, 1, 2} && squares &&
                    verify(ring).ok() && same_ring(ring, rep_s3);
  return {pass, "rank " + std::to_string(ring.rank()) + ", dims " + join(sorted(ring.dims)) +
                    (squares ? ", std^2 = 1 + sgn + std" : ", std^2 wrong") +
                    (same_ring(ring, rep_s3) ? ", equals Rep(S3)" : ", differs from Rep(S3)")};
}

Outcome double_of_s3() {
  const auto s3 = catalog::symmetric(3);
  const auto ring = fusion_table(build_double(Cocycle3::trivial(s3)));
  VerifyOptions options;
  options.commutativity = true;
  const bool checks = verify(ring, options).ok();
  const bool oracle = same_ring(ring, split_algebra(dpr_double(Cocycle3::trivial(s3))).ring);
  const bool pass = ring.rank() == 8 && sorted(ring.dims) == std::vector<long long>{1, 1, 2, 2, 2, 2, 3, 3} &&
                    global_dimension(ring) == 36 && checks && oracle;
  return {pass, "rank " + std::to_string(ring.rank()) + ", dims " + join(sorted(ring.dims)) + ", sum d^2 = " +
                    std::to_string(global_dimension(ring)) + (checks ? ", all checks pass" : ", checks fail") +
                    (oracle ? ", matches the double oracle" : ", differs from the double oracle")};
}

Outcome twisted_double_of_z2() {
  const auto z2 = catalog::cyclic(2);
  const auto z4 = catalog::cyclic(4);
  const auto klein = catalog::direct_product(*z2, *z2);
  const Cocycle3 w = cyclic_3cocycle(2, 1);
  const auto twisted = fusion_table(build_double(w));
  const auto untwisted = fusion_table(build_double(Cocycle3::trivial(z2)));
  const auto oracle = split_algebra(dpr_double(w)).ring;

  const bool is_z4 = same_ring(twisted, group_ring(z4));
  const bool is_klein = same_ring(twisted, group_ring(klein));
  const bool agrees = same_ring(twisted, oracle);
  const bool untwisted_klein = same_ring(untwisted, group_ring(klein));
  std::string detail = std::string("twisted table is the group ring of ") +
                       (is_z4 ? "Z4" : is_klein ? "Z2xZ2" : "neither Z4 nor Z2xZ2") +
                       (agrees ? ", the twisted-double oracle agrees" : ", the twisted-double oracle disagrees") +
                       (untwisted_klein ? "; trivial omega gives Z2xZ2" : "; trivial omega is not Z2xZ2");
  if (!is_z4) detail += "; expected Z4";
  return {is_z4 && agrees && untwisted_klein, detail};
}

Outcome global_dimension_identity() {
  long long bad = 0;
  std::string first;
  for (const auto& b : corpus_tables()) {
    const long long want = static_cast<long long>(b.data.acting_group()->order()) * b.data.pointed_group()->order();
    if (global_dimension(b.ring) != want && !bad++) first = b.name;
  }
  return {bad == 0, std::to_string(corpus_tables().size()) + " categories, " + std::to_string(bad) + " failures" +
                        (bad ? " (first " + first + ")" : "")};
}

// Mutants are exhaustive up to this rank and sampled above it.
constexpr int kExhaustiveRank = 24;
constexpr std::size_t kMutantSample = 1000;

Outcome ring_axioms() {
  long long failing = 0, exhaustive = 0, sampled = 0, missed = 0;
  for (const auto& b : corpus_tables()) {
    if (!verify(b.ring).ok()) ++failing;
    const bool all = b.ring.rank() <= kExhaustiveRank;
    const auto m = mutant_sweep(b.ring, all ? 0 : kMutantSample, b.ring.n.size());
    (all ? exhaustive : sampled) += m.tried;
    missed += m.missed;
  }
  std::ostringstream os;
  os << corpus_tables().size() << " tables, " << failing << " failing; " << exhaustive + sampled - missed << "/"
     << exhaustive + sampled << " mutants flagged (" << exhaustive << " exhaustive up to rank " << kExhaustiveRank
     << ", " << sampled << " sampled above)";
  return {failing == 0 && missed == 0, os.str()};
}

Outcome appendix_suite() {
  std::vector<Cocycle2> cocycles;
  for (const auto& g : groups_up_to(12)) cocycles.push_back(Cocycle2::trivial(Subgroup::whole(g.group)));
  for (const char* file : {"klein_bc.json", "z4xz2_bc.json", "q8_coboundary.json", "d4_inflated.json"})
    cocycles.push_back(
        io::parse_cocycle2(io::read_file(std::string(FUSION_FORGE_TEST_DATA) + "/cocycles/" + file), nullptr));
  long long failures = 0, pairs = 0;
  std::string first;
  for (const auto& alpha : cocycles) {
    long long checked = 0;
    auto f = irrep_set_failures(alpha);
    const auto fr = frobenius_failures(alpha, &checked);
    f.insert(f.end(), fr.begin(), fr.end());
    pairs += checked;
    if (!f.empty() && failures == 0) first = f.front();
    failures += static_cast<long long>(f.size());
  }
  std::ostringstream os;
  os << cocycles.size() << " cocycles, " << pairs << " reciprocity pairs, " << failures << " failures";
  if (failures) os << " (" << first << ")";
  return {failures == 0, os.str()};
}

Outcome rep_action_rows() {
  long long bad = 0;
  std::string first;
  for (const auto& b : corpus_tables()) {
    const auto v = rep_action_violations(b.cat, b.ring);
    if (!v.empty() && bad == 0) first = b.name + ": " + v.front();
    bad += static_cast<long long>(v.size());
  }
  return {bad == 0, std::to_string(corpus_tables().size()) + " tables, " + std::to_string(bad) + " disagreeing entries" +
                        (bad ? " (" + first + ")" : "")};
}

Outcome representative_independence() {
  long long rebuilt = 0, bad = 0;
  std::string first;
  for (const auto& b : corpus_tables())
    for (std::uint64_t seed : {11u, 23u, 37u}) {
      BuildOptions options;
      options.representative_seed = seed;
      const auto again = fusion_table(build_category(b.data, options));
      ++rebuilt;
      if (!same_ring(again, b.ring) && !bad++) first = b.name;
    }
  return {bad == 0, std::to_string(rebuilt) + " rebuilds, " + std::to_string(bad) + " not isomorphic" +
                        (bad ? " (first " + first + ")" : "")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"smash-product oracle", smash_product_oracle},
      {"C(Z3)^Z2 is Rep(S3)", z3_by_z2},
      {"D(S3)", double_of_s3},
      {"D^w(Z2) with nontrivial w", twisted_double_of_z2},
      {"global dimension", global_dimension_identity},
      {"ring axioms and mutants", ring_axioms},
      {"twisted irreducibles and reciprocity", appendix_suite},
      {"rep(G) action rows", rep_action_rows},
      {"representative independence", representative_independence},
  };
  const double limits[] = {60, 1, 10, 1, 0, 0, 0, 0, 0};

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[c].second();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    if (limits[c] > 0 && secs > limits[c]) {
      out.pass = false;
      out.detail += "; over the " + std::to_string(static_cast<int>(limits[c])) + " s budget";
    }
    if (!out.pass) ++failed;
    std::printf("criterion %zu: %s  %-38s %8.2f s  %s\n", c + 1, out.pass ? "PASS" : "FAIL", criteria[c].first.c_str(),
                secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
