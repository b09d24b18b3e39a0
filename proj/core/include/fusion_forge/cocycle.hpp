#pragma once

// Unit-modulus cocycle tables: 2-cocycles on subgroups, 3-cocycles on groups,
// and the (tau, sigma, omega) data describing a group action on a pointed
// fusion category. Every table can be validated against its identities.

#include <cstdint>
#include <string>
#include <vector>

#include "fusion_forge/group.hpp"
#include "fusion_forge/numeric.hpp"

namespace fusion_forge {

/// A 2-cocycle on a subgroup H, indexed by parent-group elements of H.
class Cocycle2 {
 public:
  /// `values` is row-major over local positions of `domain`.
  Cocycle2(Subgroup domain, std::vector<Complex> values);

  static Cocycle2 trivial(Subgroup domain);

  const Subgroup& domain() const noexcept { return domain_; }
  Complex operator()(Element g, Element h) const {
    return values_[static_cast<std::size_t>(domain_.position(g)) * domain_.order() + domain_.position(h)];
  }
  Complex local(int i, int j) const { return values_[static_cast<std::size_t>(i) * domain_.order() + j]; }
  const std::vector<Complex>& values() const noexcept { return values_; }

  /// Pointwise product / inverse.
  Cocycle2 operator*(const Cocycle2& other) const;
  Cocycle2 inverse() const;

  bool is_trivial(double tol = Tolerances{}.validation) const;
  /// Same domain and values within `tol` everywhere.
  bool same_table(const Cocycle2& other, double tol = Tolerances{}.validation) const;

 private:
  Subgroup domain_;
  std::vector<Complex> values_;
};

/// A 3-cocycle on a whole group.
class Cocycle3 {
 public:
  Cocycle3(GroupPtr group, std::vector<Complex> values);
  static Cocycle3 trivial(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  Complex operator()(Element a, Element b, Element c) const {
    const auto n = static_cast<std::size_t>(group_->order());
    return values_[(a * n + b) * n + c];
  }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Cocycle3 inverse() const;
  Cocycle3 operator*(const Cocycle3& other) const;

 private:
  GroupPtr group_;
  std::vector<Complex> values_;
};

/// Action of G on C(Gamma, omega) by tensor autoequivalences: an action of G
/// on Gamma by automorphisms plus the scalars tau(g; x, y) and sigma(g, h; x).
///
/// With these, the twisted crossed product
///   u_g u_h e_x = sigma(g,h;x)^-1 u_gh e_x,   u_g e_x = e_{g.x} u_g
/// with coproduct u_g -> sum tau(g;x,y)^-1 u_g e_x (x) u_g e_y
/// is the algebra whose modules form the equivariantization.
class ActionData {
 public:
  ActionData(GroupAction action, std::vector<Complex> tau, std::vector<Complex> sigma, Cocycle3 omega);

  /// tau = sigma = 1 and omega = 1.
  static ActionData trivial_cocycles(GroupAction action);
  /// tau = sigma = 1 with the given omega (valid only when omega is G-invariant).
  static ActionData with_omega(GroupAction action, Cocycle3 omega);

  const GroupPtr& acting_group() const noexcept { return action_.group(); }
  const GroupPtr& pointed_group() const noexcept { return action_.target(); }
  const GroupAction& action() const noexcept { return action_; }
  const Cocycle3& omega() const noexcept { return omega_; }

  Element act(Element g, Element x) const { return action_.act(g, x); }
  Complex tau(Element g, Element x, Element y) const {
    const auto n = static_cast<std::size_t>(gamma_order_);
    return tau_[(g * n + x) * n + y];
  }
  Complex sigma(Element g, Element h, Element x) const {
    const auto m = static_cast<std::size_t>(g_order_);
    return sigma_[(g * m + h) * static_cast<std::size_t>(gamma_order_) + x];
  }
  const std::vector<Complex>& tau_values() const noexcept { return tau_; }
  const std::vector<Complex>& sigma_values() const noexcept { return sigma_; }

 private:
  GroupAction action_;
  std::vector<Complex> tau_;    // [g][x][y]
  std::vector<Complex> sigma_;  // [g][h][x]
  Cocycle3 omega_;
  int g_order_;
  int gamma_order_;
};

/// One violated identity, with the arguments that witness it.
struct Violation {
  std::string identity;
  std::vector<int> witness;
  double deviation = 0.0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;  // at most `max_witnesses` entries
  long long violation_count = 0;

  explicit operator bool() const noexcept { return ok; }
};

constexpr int kMaxWitnesses = 16;

ValidationReport validate(const Cocycle2& c, const Tolerances& tol = {});
ValidationReport validate(const Cocycle3& c, const Tolerances& tol = {});
/// Checks the three compatibility identities and the normalization of the
/// action data, plus the 3-cocycle identity for omega.
ValidationReport validate(const ActionData& d, const Tolerances& tol = {});

/// omega_q(a,b,c) = exp(2 pi i q a floor((b+c)/n) / n) on Z/n.
Cocycle3 cyclic_3cocycle(int n, std::int64_t q);

/// omega(phi(a), phi(b), phi(c)) for a homomorphism phi: G -> H given as a table.
Cocycle3 pullback(const Cocycle3& omega, GroupPtr source, const std::vector<Element>& hom);

/// The coboundary of a seeded random normalized 2-cochain with values in the
/// `order`-th roots of unity: a 3-cocycle cohomologous to 1 with generic values.
Cocycle3 random_coboundary(GroupPtr group, int order, std::uint64_t seed);

Cocycle2 restrict_cocycle2(const Cocycle2& c, const Subgroup& h);

/// The cocycle on t H t^-1 with value c(h, h') at (t h t^-1, t h' t^-1).
Cocycle2 conjugate_cocycle2(const Cocycle2& c, Element t);

/// Transgression tables of a 3-cocycle on G:
///   gamma(g,h;x) = w(g,h,x) w(ghx(gh)^-1, g, h) / w(g, hxh^-1, h)
///   mu(g;x,y)    = w(gxg^-1, g, y) / (w(gxg^-1, gyg^-1, g) w(g, x, y))
struct Transgression {
  std::vector<Complex> gamma;  // [g][h][x]
  std::vector<Complex> mu;     // [g][x][y]
  int order = 0;

  Complex gamma_at(Element g, Element h, Element x) const {
    const auto n = static_cast<std::size_t>(order);
    return gamma[(g * n + h) * n + x];
  }
  Complex mu_at(Element g, Element x, Element y) const {
    const auto n = static_cast<std::size_t>(order);
    return mu[(g * n + x) * n + y];
  }
};

Transgression dpr_transgression(const Cocycle3& omega);

/// The action data of the adjoint crossed module (G, G, id) built from the
/// transgression: sigma = gamma, tau = mu^-1 on C(G, omega^-1).
/// Throws ValidationFailure if the assembled data does not validate.
ActionData adjoint_action_data(const Cocycle3& omega, const Tolerances& tol = {});

/// sigma(g,h;x) = beta(g,h)^chi(x) for a 2-cocycle beta on G with values in
/// the n-th roots of unity and a G-invariant homomorphism chi: Gamma -> Z/n
/// (given as a table of exponents). tau = omega = 1.
ActionData character_twisted_action(GroupAction action, const Cocycle2& beta, int n,
                                    const std::vector<int>& chi);

}  // namespace fusion_forge
