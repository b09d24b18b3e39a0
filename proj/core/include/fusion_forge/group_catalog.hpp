#pragma once

// Constructors for the small groups used by the CLI, tests and benchmarks.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fusion_forge/group.hpp"

namespace fusion_forge::catalog {

using Permutation = std::vector<int>;

GroupPtr trivial();
GroupPtr cyclic(int n);
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// N x| H where `phi[h]` is the automorphism of N (as a permutation of its
/// elements) by which h acts. Element (n, h) has index n + |N| h.
GroupPtr semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const std::vector<Permutation>& phi,
                            std::string name = {});
/// Z_m x| Z_k with the generator of Z_k acting by x -> r x.
GroupPtr metacyclic(int m, int k, int r);
/// Dihedral group of order 2n.
GroupPtr dihedral(int n);
/// Dicyclic group of order 4n (n = 2 gives Q8).
GroupPtr dicyclic(int n);
GroupPtr symmetric(int n);
GroupPtr alternating(int n);
/// Closure of the given permutations; elements sorted lexicographically.
GroupPtr from_permutations(std::span<const Permutation> generators, std::string name = {});

/// Parses names such as "Z4", "Z2xZ2", "S3", "D4" (order 8), "Q8", "A4",
/// "Dic3", "1". Throws ParseError for unknown names.
GroupPtr by_name(std::string_view name);

}  // namespace fusion_forge::catalog
