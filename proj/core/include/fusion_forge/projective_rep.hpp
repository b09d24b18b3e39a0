#pragma once

// Projective representations of subgroups with a prescribed factor set:
// pi(g) pi(h) = alpha(g,h) pi(gh). Matrices are indexed by local position in
// the domain subgroup.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fusion_forge/cocycle.hpp"
#include "fusion_forge/group.hpp"
#include "fusion_forge/numeric.hpp"

namespace fusion_forge {

struct ProjRep {
  ProjRep(Cocycle2 factor_set, std::vector<Eigen::MatrixXcd> matrices);

  const Subgroup& domain() const noexcept { return factor_set.domain(); }
  int dim() const { return static_cast<int>(matrices.front().rows()); }
  /// Matrix of a parent-group element of the domain.
  const Eigen::MatrixXcd& at(Element g) const { return matrices[domain().position(g)]; }

  Cocycle2 factor_set;
  std::vector<Eigen::MatrixXcd> matrices;
};

/// pi(e) = 1 and pi(g) pi(h) = alpha(g,h) pi(gh) for all g, h.
ValidationReport check_invariants(const ProjRep& rep, const Tolerances& tol = {});

struct ProjCharacter {
  Cocycle2 factor_set;
  std::vector<Complex> values;  // by local position

  const Subgroup& domain() const noexcept { return factor_set.domain(); }
  Complex at(Element g) const { return values[domain().position(g)]; }
  int degree() const { return static_cast<int>(std::lround(values.front().real())); }
};

ProjCharacter character(const ProjRep& rep);

/// dim Hom(irr, chi) for an irreducible `irr` and any `chi` with the same
/// factor set. Throws FactorSetMismatch or NonIntegralMultiplicity.
int multiplicity(const ProjCharacter& irr, const ProjCharacter& chi, const Tolerances& tol = {});
/// The same inner product on raw values (by local position) sharing one
/// factor set; the caller vouches for the factor sets.
int multiplicity(const Cocycle2& factor_set, const std::vector<Complex>& irr, const std::vector<Complex>& chi,
                 const Tolerances& tol = {});

/// The irreducible projective representations for one factor set, ordered by
/// dimension and then by character values, so the trivial representation of
/// an untwisted group comes first.
struct IrrepSet {
  Cocycle2 factor_set;
  std::vector<ProjRep> irreps;
  std::vector<ProjCharacter> characters;

  const Subgroup& domain() const noexcept { return factor_set.domain(); }
  int size() const { return static_cast<int>(irreps.size()); }
  /// Multiplicity of every irrep in chi.
  std::vector<int> decompose(const ProjCharacter& chi, const Tolerances& tol = {}) const;
  /// Index of the irrep with character chi, or -1.
  int find(const ProjCharacter& chi, const Tolerances& tol = {}) const;
};

/// Splits the alpha-twisted regular representation with a random Hermitian
/// element of its commutant. Throws DecompositionFailure when no seed in a
/// short retry window yields sum d_i^2 = |H|.
IrrepSet twisted_irreducibles(const Cocycle2& alpha, std::uint64_t seed = 0x5eed);

/// Kronecker product; factor sets multiply.
ProjRep tensor(const ProjRep& a, const ProjRep& b);
/// g -> pi(g)^-T with factor set alpha^-1.
ProjRep dual(const ProjRep& rep);
/// t H t^-1 -> matrices pi(t^-1 x t), factor set conjugate_cocycle2.
ProjRep conjugate(const ProjRep& rep, Element t);
ProjRep restrict_rep(const ProjRep& rep, const Subgroup& k);
/// Induction to a larger subgroup carrying `alpha`, whose restriction must
/// match the factor set of `rep`.
ProjRep induce(const ProjRep& rep, const Cocycle2& alpha, const Tolerances& tol = {});
/// A one-dimensional representation from its values by local position.
ProjRep one_dimensional(Cocycle2 factor_set, const std::vector<Complex>& values);
/// Pointwise product of a representation with a 1-dimensional one.
ProjRep twist(const ProjRep& rep, const ProjRep& line);

}  // namespace fusion_forge
