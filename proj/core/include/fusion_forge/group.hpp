#pragma once

// Finite groups as explicit multiplication tables, together with the
// subgroup, action, coset and double-coset combinatorics built on them.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fusion_forge {

using Element = int;

/// A finite group on the elements 0..order-1 with identity 0.
///
/// The constructor checks the group axioms exhaustively (associativity on all
/// triples), so every FiniteGroup in the program is a genuine group.
class FiniteGroup {
 public:
  /// `mult` is row-major: mult[a * order + b] = a*b.
  /// Throws ParseError if the table is not a group with identity 0.
  FiniteGroup(int order, std::vector<Element> mult, std::string name = {});

  int order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element mul(Element a, Element b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }
  /// Order of the element a.
  int element_order(Element a) const;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::span<const Element> table() const noexcept { return mult_; }
  bool is_abelian() const;

 private:
  int order_;
  std::vector<Element> mult_;
  std::vector<Element> inverse_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(int order, std::vector<Element> mult, std::string name = {});

/// A subgroup of a parent group, stored as the sorted list of its elements.
///
/// Local positions 0..order()-1 index `elements()`; position 0 is always the
/// identity because elements are sorted and the identity is element 0.
class Subgroup {
 public:
  /// Throws ParseError unless `elements` is closed under mult and inverse.
  Subgroup(GroupPtr parent, std::vector<Element> elements);

  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);
  /// Subgroup generated by `generators`.
  static Subgroup generated_by(GroupPtr parent, std::span<const Element> generators);

  const GroupPtr& parent() const noexcept { return parent_; }
  const FiniteGroup& group() const noexcept { return *parent_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  Element element(int position) const { return elements_[position]; }
  bool contains(Element g) const { return position_[g] >= 0; }
  /// Local position of g, or -1 when g is not in the subgroup.
  int position(Element g) const { return position_[g]; }

  /// t H t^-1
  Subgroup conjugated(Element t) const;
  Subgroup intersect(const Subgroup& other) const;
  bool is_subgroup_of(const Subgroup& other) const;
  int index() const { return parent_->order() / order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> elements_;
  std::vector<int> position_;
};

/// A left action of a group on {0..set_size-1}.
class GroupAction {
 public:
  /// `act` is row-major: act[g * set_size + x] = g.x.
  /// Throws ParseError unless identity acts trivially and act(gh) = act(g)act(h).
  GroupAction(GroupPtr group, int set_size, std::vector<int> act);

  /// Action by group automorphisms of `target` (checked).
  static GroupAction by_automorphisms(GroupPtr group, GroupPtr target, std::vector<int> act);
  static GroupAction trivial(GroupPtr group, int set_size);
  /// Conjugation action of G on itself.
  static GroupAction adjoint(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  int set_size() const noexcept { return set_size_; }
  int act(Element g, int x) const { return act_[static_cast<std::size_t>(g) * set_size_ + x]; }
  /// The group being acted on when this is an action by automorphisms.
  const GroupPtr& target() const noexcept { return target_; }
  bool is_automorphic() const noexcept { return target_ != nullptr; }
  std::span<const int> table() const noexcept { return act_; }

 private:
  GroupPtr group_;
  GroupPtr target_;
  int set_size_;
  std::vector<int> act_;
};

using ElementSet = std::vector<Element>;

/// Conjugacy classes, each sorted; classes ordered by their minimal element.
std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g);

/// {g : gx = xg}
Subgroup centralizer(const GroupPtr& g, Element x);

/// Commutator subgroup [G, G].
Subgroup derived_subgroup(const GroupPtr& g);

struct OrbitStabilizer {
  std::vector<int> orbit;  // sorted
  Subgroup stabilizer;
};

OrbitStabilizer orbit_and_stabilizer(const GroupAction& a, int x);

/// All orbits of the action, each sorted, ordered by minimal point.
std::vector<std::vector<int>> orbits(const GroupAction& a);

/// Left cosets gH, each sorted, ordered by minimal element (the representative).
std::vector<ElementSet> left_cosets(const Subgroup& h);

struct DoubleCosetDecomposition {
  Subgroup left;   // H
  Subgroup right;  // K
  std::vector<ElementSet> cosets;       // each sorted, ordered by minimal element
  std::vector<Element> representatives;  // minimal element of each coset
  std::vector<int> coset_of;             // element -> coset index

  int size() const { return static_cast<int>(cosets.size()); }
};

/// H \ G / K
DoubleCosetDecomposition double_cosets(const Subgroup& h, const Subgroup& k);

struct DiagonalOrbit {
  /// Pairs of coset representatives (t, s) standing for (t Gy, s Gz).
  std::vector<std::pair<Element, Element>> pairs;
  std::pair<Element, Element> representative;
  /// H ∩ t Gy t^-1 ∩ s Gz s^-1 for the representative.
  Subgroup stabilizer;
};

/// Orbits of H acting diagonally by left multiplication on G/Gy x G/Gz.
std::vector<DiagonalOrbit> diagonal_orbits(const Subgroup& h, const Subgroup& gy, const Subgroup& gz);

/// Minimal element of the left coset g H.
Element coset_representative(const Subgroup& h, Element g);

}  // namespace fusion_forge
