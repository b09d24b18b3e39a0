#include "fusion_forge/group_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "fusion_forge/errors.hpp"

namespace fusion_forge::catalog {

namespace {

Permutation compose(const Permutation& p, const Permutation& q) {
  // (p q)(i) = p(q(i))
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

GroupPtr trivial() { return make_group(1, {0}, "1"); }

GroupPtr cyclic(int n) {
  if (n <= 0) throw ParseError("cyclic group order must be positive");
  std::vector<Element> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return make_group(n, std::move(mult), "Z" + std::to_string(n));
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> mult(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      mult[static_cast<std::size_t>(x) * n + y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  return make_group(n, std::move(mult), a.name() + "x" + b.name());
}

GroupPtr semidirect_product(const FiniteGroup& n, const FiniteGroup& h, const std::vector<Permutation>& phi,
                            std::string name) {
  const int nn = n.order(), nh = h.order(), total = nn * nh;
  if (static_cast<int>(phi.size()) != nh) throw ParseError("semidirect product needs one automorphism per element");
  std::vector<Element> mult(static_cast<std::size_t>(total) * total);
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      const int n1 = x % nn, h1 = x / nn, n2 = y % nn, h2 = y / nn;
      mult[static_cast<std::size_t>(x) * total + y] = n.mul(n1, phi[h1][n2]) + nn * h.mul(h1, h2);
    }
  return make_group(total, std::move(mult), std::move(name));
}

GroupPtr metacyclic(int m, int k, int r) {
  auto zm = cyclic(m);
  auto zk = cyclic(k);
  std::vector<Permutation> phi(static_cast<std::size_t>(k), Permutation(static_cast<std::size_t>(m)));
  long long power = 1;
  for (int j = 0; j < k; ++j) {
    for (int x = 0; x < m; ++x) phi[j][x] = static_cast<int>((power * x) % m);
    power = (power * r) % m;
  }
  return semidirect_product(*zm, *zk, phi,
                            "Z" + std::to_string(m) + ":Z" + std::to_string(k) + "[" + std::to_string(r) + "]");
}

GroupPtr dihedral(int n) {
  auto g = metacyclic(n, 2, n - 1);
  auto out = std::make_shared<FiniteGroup>(*g);
  out->set_name(n == 3 ? "S3" : "D" + std::to_string(n));
  return out;
}

GroupPtr dicyclic(int n) {
  const int m = 2 * n, total = 4 * n;
  std::vector<Element> mult(static_cast<std::size_t>(total) * total);
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      const int i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
      int i, j;
      if (j1 == 0) {
        i = (i1 + i2) % m;
        j = j2;
      } else if (j2 == 0) {
        i = ((i1 - i2) % m + m) % m;
        j = 1;
      } else {
        i = ((i1 - i2 + n) % m + m) % m;
        j = 0;
      }
      mult[static_cast<std::size_t>(x) * total + y] = i + m * j;
    }
  return make_group(total, std::move(mult), n == 2 ? "Q8" : "Dic" + std::to_string(n));
}

GroupPtr from_permutations(std::span<const Permutation> generators, std::string name) {
  if (generators.empty()) return trivial();
  const std::size_t degree = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw ParseError("permutation generators of different degree");
    Permutation sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != static_cast<int>(i)) throw ParseError("generator is not a permutation");
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Permutation, int> index{{id, 0}};
  std::vector<Permutation> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& s : generators) {
      auto next = compose(elements[i], s);
      if (index.emplace(next, 0).second) elements.push_back(std::move(next));
    }
  std::sort(elements.begin(), elements.end());
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) index[elements[i]] = i;
  const int n = static_cast<int>(elements.size());
  std::vector<Element> mult(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[static_cast<std::size_t>(a) * n + b] = index.at(compose(elements[a], elements[b]));
  return make_group(n, std::move(mult), std::move(name));
}

GroupPtr symmetric(int n) {
  if (n <= 1) return trivial();
  Permutation swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  const std::vector<Permutation> gens{swap, cycle};
  return from_permutations(gens, "S" + std::to_string(n));
}

GroupPtr alternating(int n) {
  if (n <= 2) return trivial();
  std::vector<Permutation> gens;
  for (int k = 2; k < n; ++k) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(p);
  }
  return from_permutations(gens, "A" + std::to_string(n));
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v <= 0) throw ParseError("bad group name: " + std::string(s));
  return v;
}

GroupPtr single(std::string_view name) {
  if (name == "1" || name == "trivial") return trivial();
  if (name == "Q8") return dicyclic(2);
  if (name.starts_with("Dic")) return dicyclic(parse_int(name.substr(3)));
  if (name.starts_with("Z")) return cyclic(parse_int(name.substr(1)));
  if (name.starts_with("S")) return symmetric(parse_int(name.substr(1)));
  if (name.starts_with("A")) return alternating(parse_int(name.substr(1)));
  if (name.starts_with("D")) return dihedral(parse_int(name.substr(1)));
  throw ParseError("unknown group name: " + std::string(name));
}

}  // namespace

GroupPtr by_name(std::string_view name) {
  GroupPtr result;
  while (!name.empty()) {
    const auto cut = name.find('x');
    auto factor = single(name.substr(0, cut));
    result = result ? direct_product(*result, *factor) : factor;
    name = cut == std::string_view::npos ? std::string_view{} : name.substr(cut + 1);
  }
  if (!result) throw ParseError("empty group name");
  return result;
}

}  // namespace fusion_forge::catalog
