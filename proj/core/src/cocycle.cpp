#include "fusion_forge/cocycle.hpp"

#include <random>
#include <sstream>

#include "fusion_forge/errors.hpp"
#include "fusion_forge/group_catalog.hpp"

namespace fusion_forge {

namespace {

void record(ValidationReport& r, const char* identity, std::vector<int> witness, double deviation) {
  r.ok = false;
  ++r.violation_count;
  if (static_cast<int>(r.violations.size()) < kMaxWitnesses)
    r.violations.push_back({identity, std::move(witness), deviation});
}

void check_unit(ValidationReport& r, const std::vector<Complex>& values, const char* what, double tol) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double dev = std::abs(std::abs(values[i]) - 1.0);
    if (dev > tol) record(r, what, {static_cast<int>(i)}, dev);
  }
}

std::size_t cube(int n) { return static_cast<std::size_t>(n) * n * n; }

}  // namespace

// ---------------------------------------------------------------------------

Cocycle2::Cocycle2(Subgroup domain, std::vector<Complex> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  const auto k = static_cast<std::size_t>(domain_.order());
  if (values_.size() != k * k) throw ParseError("2-cocycle table has wrong size");
}

Cocycle2 Cocycle2::trivial(Subgroup domain) {
  const auto k = static_cast<std::size_t>(domain.order());
  return Cocycle2(std::move(domain), std::vector<Complex>(k * k, Complex{1.0, 0.0}));
}

Cocycle2 Cocycle2::operator*(const Cocycle2& other) const {
  if (!(domain_ == other.domain_)) throw FactorSetMismatch("product of 2-cocycles on different subgroups");
  std::vector<Complex> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * other.values_[i];
  return Cocycle2(domain_, std::move(v));
}

Cocycle2 Cocycle2::inverse() const {
  std::vector<Complex> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / values_[i];
  return Cocycle2(domain_, std::move(v));
}

bool Cocycle2::is_trivial(double tol) const {
  for (Complex v : values_)
    if (!near(v, 1.0, tol)) return false;
  return true;
}

bool Cocycle2::same_table(const Cocycle2& other, double tol) const {
  if (!(domain_ == other.domain_)) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!near(values_[i], other.values_[i], tol)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Cocycle3::Cocycle3(GroupPtr group, std::vector<Complex> values) : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != cube(group_->order())) throw ParseError("3-cocycle table has wrong size");
}

Cocycle3 Cocycle3::trivial(GroupPtr group) {
  const auto size = cube(group->order());
  return Cocycle3(std::move(group), std::vector<Complex>(size, Complex{1.0, 0.0}));
}

Cocycle3 Cocycle3::inverse() const {
  std::vector<Complex> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / values_[i];
  return Cocycle3(group_, std::move(v));
}

Cocycle3 Cocycle3::operator*(const Cocycle3& other) const {
  if (group_ != other.group_) throw ParseError("product of 3-cocycles on different groups");
  std::vector<Complex> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * other.values_[i];
  return Cocycle3(group_, std::move(v));
}

// ---------------------------------------------------------------------------

ActionData::ActionData(GroupAction action, std::vector<Complex> tau, std::vector<Complex> sigma, Cocycle3 omega)
    : action_(std::move(action)), tau_(std::move(tau)), sigma_(std::move(sigma)), omega_(std::move(omega)) {
  if (!action_.is_automorphic()) throw ParseError("action data needs an action by group automorphisms");
  if (omega_.group() != action_.target()) throw ParseError("omega must live on the group being acted on");
  g_order_ = action_.group()->order();
  gamma_order_ = action_.target()->order();
  const auto m = static_cast<std::size_t>(g_order_), n = static_cast<std::size_t>(gamma_order_);
  if (tau_.size() != m * n * n) throw ParseError("tau table has wrong size");
  if (sigma_.size() != m * m * n) throw ParseError("sigma table has wrong size");
}

ActionData ActionData::trivial_cocycles(GroupAction action) {
  auto omega = Cocycle3::trivial(action.target());
  return with_omega(std::move(action), std::move(omega));
}

ActionData ActionData::with_omega(GroupAction action, Cocycle3 omega) {
  const auto m = static_cast<std::size_t>(action.group()->order());
  const auto n = static_cast<std::size_t>(action.target()->order());
  std::vector<Complex> tau(m * n * n, 1.0), sigma(m * m * n, 1.0);
  return ActionData(std::move(action), std::move(tau), std::move(sigma), std::move(omega));
}

// ---------------------------------------------------------------------------

ValidationReport validate(const Cocycle2& c, const Tolerances& tol) {
  ValidationReport r;
  const Subgroup& h = c.domain();
  const FiniteGroup& g = h.group();
  check_unit(r, c.values(), "unit modulus", tol.validation);
  for (Element a : h.elements()) {
    if (!near(c(a, 0), 1.0, tol.validation)) record(r, "normalized: a(g,e) = 1", {a}, std::abs(c(a, 0) - 1.0));
    if (!near(c(0, a), 1.0, tol.validation)) record(r, "normalized: a(e,g) = 1", {a}, std::abs(c(0, a) - 1.0));
  }
  for (Element a : h.elements())
    for (Element b : h.elements()) {
      const Element ab = g.mul(a, b);
      for (Element t : h.elements()) {
        const Complex lhs = c(a, b) * c(ab, t);
        const Complex rhs = c(a, g.mul(b, t)) * c(b, t);
        if (!near(lhs, rhs, tol.validation))
          record(r, "a(g,h) a(gh,t) = a(g,ht) a(h,t)", {a, b, t}, std::abs(lhs - rhs));
      }
    }
  return r;
}

ValidationReport validate(const Cocycle3& w, const Tolerances& tol) {
  ValidationReport r;
  const FiniteGroup& g = *w.group();
  const int n = g.order();
  check_unit(r, w.values(), "unit modulus", tol.validation);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      for (auto [x, y, z] : {std::tuple{0, a, b}, std::tuple{a, 0, b}, std::tuple{a, b, 0}})
        if (!near(w(x, y, z), 1.0, tol.validation))
          record(r, "normalized: w = 1 when an argument is e", {x, y, z}, std::abs(w(x, y, z) - 1.0));
    }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        const Element bc = g.mul(b, c);
        for (Element d = 0; d < n; ++d) {
          const Complex lhs = w(b, c, d) * w(a, bc, d) * w(a, b, c);
          const Complex rhs = w(ab, c, d) * w(a, b, g.mul(c, d));
          if (!near(lhs, rhs, tol.validation))
            record(r, "w(b,c,d) w(a,bc,d) w(a,b,c) = w(ab,c,d) w(a,b,cd)", {a, b, c, d}, std::abs(lhs - rhs));
        }
      }
    }
  return r;
}

ValidationReport validate(const ActionData& d, const Tolerances& tol) {
  ValidationReport r = validate(d.omega(), tol);
  const FiniteGroup& G = *d.acting_group();
  const FiniteGroup& X = *d.pointed_group();
  const int m = G.order(), n = X.order();
  const double eps = tol.validation;
  check_unit(r, d.tau_values(), "tau unit modulus", eps);
  check_unit(r, d.sigma_values(), "sigma unit modulus", eps);

  for (Element g = 0; g < m; ++g)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if ((g == 0 || x == 0 || y == 0) && !near(d.tau(g, x, y), 1.0, eps))
          record(r, "normalized: tau(g;x,y) = 1", {g, x, y}, std::abs(d.tau(g, x, y) - 1.0));
  for (Element g = 0; g < m; ++g)
    for (Element h = 0; h < m; ++h)
      for (Element x = 0; x < n; ++x)
        if ((g == 0 || h == 0 || x == 0) && !near(d.sigma(g, h, x), 1.0, eps))
          record(r, "normalized: sigma(g,h;x) = 1", {g, h, x}, std::abs(d.sigma(g, h, x) - 1.0));

  // w(x,y,z)/w(gx,gy,gz) = tau(g;xy,z) tau(g;x,y) / (tau(g;y,z) tau(g;x,yz))
  const Cocycle3& w = d.omega();
  for (Element g = 0; g < m; ++g)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z) {
          const Complex lhs = w(x, y, z) * d.tau(g, y, z) * d.tau(g, x, X.mul(y, z));
          const Complex rhs =
              w(d.act(g, x), d.act(g, y), d.act(g, z)) * d.tau(g, X.mul(x, y), z) * d.tau(g, x, y);
          if (!near(lhs, rhs, eps)) record(r, "omega / g.omega = d tau(g)", {g, x, y, z}, std::abs(lhs - rhs));
        }
  // sigma(h,l;x) sigma(g,hl;x) = sigma(gh,l;x) sigma(g,h;l.x)
  for (Element g = 0; g < m; ++g)
    for (Element h = 0; h < m; ++h)
      for (Element l = 0; l < m; ++l)
        for (Element x = 0; x < n; ++x) {
          const Complex lhs = d.sigma(h, l, x) * d.sigma(g, G.mul(h, l), x);
          const Complex rhs = d.sigma(G.mul(g, h), l, x) * d.sigma(g, h, d.act(l, x));
          if (!near(lhs, rhs, eps))
            record(r, "sigma(h,l;x) sigma(g,hl;x) = sigma(gh,l;x) sigma(g,h;l.x)", {g, h, l, x}, std::abs(lhs - rhs));
        }
  // tau(gh;x,y) sigma(g,h;xy) = tau(g;h.x,h.y) tau(h;x,y) sigma(g,h;x) sigma(g,h;y)
  for (Element g = 0; g < m; ++g)
    for (Element h = 0; h < m; ++h)
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
          const Complex lhs = d.tau(G.mul(g, h), x, y) * d.sigma(g, h, X.mul(x, y));
          const Complex rhs =
              d.tau(g, d.act(h, x), d.act(h, y)) * d.tau(h, x, y) * d.sigma(g, h, x) * d.sigma(g, h, y);
          if (!near(lhs, rhs, eps))
            record(r, "tau(gh;x,y) / (tau(g;h.x,h.y) tau(h;x,y)) = sigma(g,h;x) sigma(g,h;y) / sigma(g,h;xy)",
                   {g, h, x, y}, std::abs(lhs - rhs));
        }
  return r;
}

// ---------------------------------------------------------------------------

Cocycle3 cyclic_3cocycle(int n, std::int64_t q) {
  if (n < 1) throw ParseError("cyclic_3cocycle needs n >= 1");
  auto group = catalog::cyclic(n);
  std::vector<Complex> v(cube(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const std::int64_t carry = (b + c) / n;
        v[(static_cast<std::size_t>(a) * n + b) * n + c] = root_of_unity(q * a * carry, n);
      }
  return Cocycle3(std::move(group), std::move(v));
}

Cocycle3 pullback(const Cocycle3& omega, GroupPtr source, const std::vector<Element>& hom) {
  const FiniteGroup& s = *source;
  const FiniteGroup& t = *omega.group();
  if (static_cast<int>(hom.size()) != s.order()) throw ParseError("homomorphism table has wrong size");
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (hom[s.mul(a, b)] != t.mul(hom[a], hom[b])) throw ParseError("pullback map is not a homomorphism");
  const int n = s.order();
  std::vector<Complex> v(cube(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) v[(static_cast<std::size_t>(a) * n + b) * n + c] = omega(hom[a], hom[b], hom[c]);
  return Cocycle3(std::move(source), std::move(v));
}

Cocycle3 random_coboundary(GroupPtr group, int order, std::uint64_t seed) {
  const FiniteGroup& g = *group;
  const int n = g.order();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, order - 1);
  std::vector<Complex> beta(static_cast<std::size_t>(n) * n, 1.0);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) beta[static_cast<std::size_t>(a) * n + b] = root_of_unity(pick(rng), order);
  auto B = [&](Element a, Element b) { return beta[static_cast<std::size_t>(a) * n + b]; };
  std::vector<Complex> v(cube(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        v[(static_cast<std::size_t>(a) * n + b) * n + c] =
            B(b, c) * B(a, g.mul(b, c)) / (B(g.mul(a, b), c) * B(a, b));
  return Cocycle3(std::move(group), std::move(v));
}

Cocycle2 restrict_cocycle2(const Cocycle2& c, const Subgroup& h) {
  if (!h.is_subgroup_of(c.domain())) throw ParseError("restriction to a subgroup outside the domain");
  const int k = h.order();
  std::vector<Complex> v(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) v[static_cast<std::size_t>(i) * k + j] = c(h.element(i), h.element(j));
  return Cocycle2(h, std::move(v));
}

Cocycle2 conjugate_cocycle2(const Cocycle2& c, Element t) {
  const Subgroup& h = c.domain();
  const FiniteGroup& g = h.group();
  Subgroup target = h.conjugated(t);
  const Element tinv = g.inv(t);
  const int k = target.order();
  std::vector<Complex> v(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Element a = g.conj(tinv, target.element(i));
      const Element b = g.conj(tinv, target.element(j));
      v[static_cast<std::size_t>(i) * k + j] = c(a, b);
    }
  return Cocycle2(std::move(target), std::move(v));
}

Transgression dpr_transgression(const Cocycle3& omega) {
  const FiniteGroup& G = *omega.group();
  const int n = G.order();
  Transgression t;
  t.order = n;
  t.gamma.resize(cube(n));
  t.mu.resize(cube(n));
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      const Element gh = G.mul(g, h);
      for (Element x = 0; x < n; ++x) {
        const Complex num = omega(g, h, x) * omega(G.conj(gh, x), g, h);
        t.gamma[(static_cast<std::size_t>(g) * n + h) * n + x] = num / omega(g, G.conj(h, x), h);
      }
    }
  for (Element g = 0; g < n; ++g)
    for (Element x = 0; x < n; ++x) {
      const Element gx = G.conj(g, x);
      for (Element y = 0; y < n; ++y) {
        const Element gy = G.conj(g, y);
        t.mu[(static_cast<std::size_t>(g) * n + x) * n + y] = omega(gx, g, y) / (omega(gx, gy, g) * omega(g, x, y));
      }
    }
  return t;
}

ActionData adjoint_action_data(const Cocycle3& omega, const Tolerances& tol) {
  const GroupPtr& group = omega.group();
  const auto t = dpr_transgression(omega);
  std::vector<Complex> tau(t.mu.size());
  for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = 1.0 / t.mu[i];
  // gamma is stored [g][h][x], the same layout as sigma.
  ActionData data(GroupAction::adjoint(group), std::move(tau), t.gamma, omega.inverse());
  auto report = validate(data, tol);
  if (!report) {
    std::ostringstream os;
    os << "transgressed action data fails " << report.violation_count << " identities";
    if (!report.violations.empty()) os << " (first: " << report.violations.front().identity << ")";
    throw ValidationFailure(os.str());
  }
  return data;
}

ActionData character_twisted_action(GroupAction action, const Cocycle2& beta, int n, const std::vector<int>& chi) {
  const FiniteGroup& G = *action.group();
  const FiniteGroup& X = *action.target();
  if (!(beta.domain() == Subgroup::whole(action.group()))) throw ParseError("beta must be a cocycle on all of G");
  if (static_cast<int>(chi.size()) != X.order()) throw ParseError("chi table has wrong size");
  for (Element x = 0; x < X.order(); ++x)
    for (Element y = 0; y < X.order(); ++y)
      if ((chi[x] + chi[y] - chi[X.mul(x, y)]) % n != 0) throw ParseError("chi is not a homomorphism to Z/n");
  for (Element g = 0; g < G.order(); ++g)
    for (Element x = 0; x < X.order(); ++x)
      if ((chi[action.act(g, x)] - chi[x]) % n != 0) throw ParseError("chi is not invariant under the action");
  for (Complex v : beta.values())
    if (!near(std::pow(v, n), 1.0, 1e-9)) throw ParseError("beta values are not n-th roots of unity");

  const auto m = static_cast<std::size_t>(G.order()), k = static_cast<std::size_t>(X.order());
  std::vector<Complex> sigma(m * m * k), tau(m * k * k, 1.0);
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h)
      for (Element x = 0; x < X.order(); ++x) {
        const int e = ((chi[x] % n) + n) % n;
        Complex v = 1.0;
        for (int i = 0; i < e; ++i) v *= beta(g, h);
        sigma[(g * m + h) * k + x] = v;
      }
  auto omega = Cocycle3::trivial(action.target());
  return ActionData(std::move(action), std::move(tau), std::move(sigma), std::move(omega));
}

}  // namespace fusion_forge
