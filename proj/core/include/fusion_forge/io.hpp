#pragma once

// JSON readers and writers for groups, cocycle tables, categories and fusion
// rings. Table values are exact: [num, den] stands for exp(2 pi i num/den).

#include <filesystem>
#include <string>

#include "fusion_forge/cocycle.hpp"
#include "fusion_forge/equivariant.hpp"
#include "fusion_forge/fusion_ring.hpp"
#include "fusion_forge/group.hpp"
#include "fusion_forge/projective_rep.hpp"

namespace fusion_forge::io {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

/// {"order": n, "mult": [[...], ...]} or {"permutations": [[...], ...]}.
GroupPtr parse_group(const std::string& json);
GroupPtr load_group(const std::filesystem::path& path);
std::string group_to_json(const FiniteGroup& g);

/// {"kind": "cocycle2", "values": ...} on all of `group`.
Cocycle2 parse_cocycle2(const std::string& json, const GroupPtr& group);
/// {"kind": "cocycle3", "values": ...}; an inline "group" overrides `group`.
Cocycle3 parse_cocycle3(const std::string& json, const GroupPtr& group = nullptr);
/// {"kind": "action_data", "G": group, "Gamma": group, "action": [[...]],
///  "tau": ..., "sigma": ..., "omega": ...}; absent tables are all ones.
ActionData parse_action_data(const std::string& json);

std::string cocycle2_to_json(const Cocycle2& c);
std::string cocycle3_to_json(const Cocycle3& c);
std::string action_data_to_json(const ActionData& d);

/// "cyclic:n:q" or a path to a cocycle3 file for `group`.
Cocycle3 omega_from_spec(const std::string& spec, const GroupPtr& group);

/// {"labels", "unit", "dual", "dims", "N": [[i, j, k, v], ...]} without zeros.
std::string ring_to_json(const FusionRing& ring);
FusionRing parse_ring(const std::string& json);
/// Aligned human-readable table of all nonzero products.
std::string ring_to_text(const FusionRing& ring);

/// Element index -> [re, im] for every irrep character.
std::string irreps_to_json(const IrrepSet& irreps);

std::string report_to_json(const FusionReport& report);

}  // namespace fusion_forge::io
