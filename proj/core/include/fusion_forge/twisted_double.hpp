#pragma once

// Rep of the twisted quantum double D^omega G as the equivariantization of
// C(G, omega^-1) under conjugation, with the transgressed action data.

#include "fusion_forge/equivariant.hpp"
#include "fusion_forge/fusion_ring.hpp"

namespace fusion_forge {

/// Simples are (conjugacy class representative x, irrep of the centralizer
/// of x). Throws ValidationFailure if omega or the transgression fails.
EquivariantCategory build_double(const Cocycle3& omega, const BuildOptions& options = {});

/// A "comm" check on an existing table: N_{a,b}^c = N_{b,a}^c.
CheckResult verify_braided_commutativity(const FusionRing& ring);

}  // namespace fusion_forge
