#pragma once

// Simple objects and fusion rules of the equivariantization C(Gamma, omega)^G.
//
// A simple object is a pair (y, pi): y a representative of a G-orbit in Gamma
// and pi an irreducible projective representation of the stabilizer G_y with
// factor set alpha_y(g,h) = sigma(g,h;y)^-1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion_forge/cocycle.hpp"
#include "fusion_forge/fusion_ring.hpp"
#include "fusion_forge/group.hpp"
#include "fusion_forge/projective_rep.hpp"

namespace fusion_forge {

struct SimpleLabel {
  Element orbit_rep = 0;
  int irrep = 0;

  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
  friend auto operator<=>(const SimpleLabel&, const SimpleLabel&) = default;
};

std::string to_string(const SimpleLabel& s);

struct OrbitData {
  Element representative = 0;
  std::vector<Element> points;  // sorted
  Subgroup stabilizer;
  Cocycle2 factor_set;
  IrrepSet irreps;
};

/// Everything attached to one point p of Gamma: the element carrying the orbit
/// representative to p, and the orbit's irreps moved to the stabilizer of p.
struct PointData {
  int orbit = 0;
  Element transporter = 0;
  Subgroup stabilizer;
  Cocycle2 factor_set;
  std::vector<ProjRep> reps;
  std::vector<ProjCharacter> characters;
};

struct BuildOptions {
  std::uint64_t seed = 0;
  /// When set, orbit representatives and transporters are drawn at random
  /// from this seed instead of taking minimal elements.
  std::optional<std::uint64_t> representative_seed;
  Tolerances tol{};
};

class EquivariantCategory {
 public:
  EquivariantCategory(ActionData data, std::vector<OrbitData> orbits, std::vector<PointData> points,
                      Tolerances tol);

  const ActionData& data() const noexcept { return data_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  const std::vector<OrbitData>& orbits() const noexcept { return orbits_; }
  const OrbitData& orbit_of(Element y) const { return orbits_[points_[y].orbit]; }
  int orbit_index(Element y) const { return points_[y].orbit; }
  const PointData& point(Element y) const { return points_[y]; }

  /// All simples in basis order: orbits by minimal point, then irrep order.
  /// The unit comes first.
  const std::vector<SimpleLabel>& simples() const noexcept { return simples_; }
  int rank() const noexcept { return static_cast<int>(simples_.size()); }
  int index_of(const SimpleLabel& s) const;
  SimpleLabel unit() const { return simples_.front(); }
  const ProjRep& rep(const SimpleLabel& s) const { return orbit_of(s.orbit_rep).irreps.irreps[s.irrep]; }

 private:
  ActionData data_;
  std::vector<OrbitData> orbits_;
  std::vector<PointData> points_;
  std::vector<SimpleLabel> simples_;
  std::vector<int> first_index_;  // per orbit, basis index of its first simple
  Tolerances tol_;
};

/// Validates the data (ValidationFailure otherwise) and splits every
/// stabilizer's twisted group algebra.
EquivariantCategory build_category(const ActionData& data, const BuildOptions& options = {});

/// The representation of the point stabilizer G_{u.p} obtained from one of G_p.
/// Its factor set is alpha_{u.p}; throws FactorSetMismatch otherwise.
ProjRep transport(const ActionData& data, const ProjRep& rep, Element p, Element u, const Tolerances& tol = {});

/// alpha_p(g,h) = sigma(g,h;p)^-1 on the stabilizer of p.
Cocycle2 inertia_factor_set(const ActionData& data, const Subgroup& stabilizer, Element p);

long long fpdim(const EquivariantCategory& cat, const SimpleLabel& s);

enum class FusionPath {
  /// Diagonal orbits of G_x on G/G_y x G/G_z, one per double coset at most.
  double_cosets,
  /// G_x-orbits on the pairs (a, b) of points with ab = x.
  points,
};

/// N_{sy, sz}^{sx}.
int fusion_multiplicity(const EquivariantCategory& cat, const SimpleLabel& sy, const SimpleLabel& sz,
                        const SimpleLabel& sx, FusionPath path = FusionPath::double_cosets);

/// The full fusion ring; `threads` = 0 picks the hardware concurrency.
FusionRing fusion_table(const EquivariantCategory& cat, unsigned threads = 1);

/// Throws DualNotFound when no irrep matches or N_{s, s*}^{unit} != 1.
SimpleLabel dual(const EquivariantCategory& cat, const SimpleLabel& s);

std::vector<SimpleLabel> invertibles(const EquivariantCategory& cat);

/// Based ring on orbits: m^U_{Y,Z} = #{(a, b) in Y x Z : ab = u} for the
/// representative u of U; dims are orbit sizes.
FusionRing orbit_ring(const EquivariantCategory& cat);

/// True when the orbit's factor set admits a one-dimensional representation.
bool factor_set_is_trivial_class(const OrbitData& orbit);

}  // namespace fusion_forge
