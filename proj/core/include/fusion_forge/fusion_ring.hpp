#pragma once

// Based rings with a nonnegative integer structure tensor, their axiom
// checks, and a search for basis bijections between two of them.

#include <optional>
#include <string>
#include <vector>

#include "fusion_forge/numeric.hpp"

namespace fusion_forge {

struct FusionRing {
  std::vector<std::string> labels;
  /// N[(i * rank + j) * rank + k] = N_{i,j}^k, the multiplicity of k in i*j.
  std::vector<int> n;
  int unit = 0;
  std::vector<int> dual;
  std::vector<long long> dims;

  int rank() const noexcept { return static_cast<int>(labels.size()); }
  int N(int i, int j, int k) const {
    const auto r = static_cast<std::size_t>(rank());
    return n[(i * r + j) * r + k];
  }
  int& N(int i, int j, int k) {
    const auto r = static_cast<std::size_t>(rank());
    return n[(i * r + j) * r + k];
  }

  /// Rank-r ring with a zero tensor, identity dual and unit 0.
  static FusionRing zero(int rank);
  /// The group ring of a finite group given by its multiplication table.
  static FusionRing group_ring(int order, const std::vector<int>& mult);
};

struct CheckResult {
  explicit CheckResult(std::string check_name = {}) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  long long failures = 0;
  std::vector<std::vector<int>> witnesses;  // first few failing index tuples
};

struct FusionReport {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

struct VerifyOptions {
  bool commutativity = false;
  /// Stop at the first failure, running the cheap checks first. The report
  /// then holds the checks run so far.
  bool fail_fast = false;
  Tolerances tol{};
};

/// Runs the checks "shape", "unit", "assoc", "duality", "rigidity", "dim-hom",
/// "fp-dims" and, when requested, "comm".
FusionReport verify(const FusionRing& ring, const VerifyOptions& options = {});

/// Frobenius-Perron dimensions normalized to 1 at the unit.
std::vector<double> perron_frobenius_dims(const FusionRing& ring);

/// A bijection f with N_a(i,j,k) = N_b(f i, f j, f k), f(unit) = unit and
/// f(dual i) = dual f(i), or nothing. Throws RankMismatch.
std::optional<std::vector<int>> isomorphic_as_based_rings(const FusionRing& a, const FusionRing& b);

/// Rewrites the ring in a new basis order: new index p holds old index order[p].
FusionRing permuted(const FusionRing& ring, const std::vector<int>& order);

}  // namespace fusion_forge
