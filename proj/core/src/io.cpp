#include "fusion_forge/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fusion_forge/errors.hpp"
#include "fusion_forge/group_catalog.hpp"
#include "json.hpp"

namespace fusion_forge::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("unexpected JSON shape: ") + e.what());
  }
}

bool is_angle(const json& v) {
  return v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer();
}

// Flattens nested arrays of [num, den] pairs in row-major order.
void collect_angles(const json& v, std::vector<Complex>& out) {
  if (is_angle(v)) {
    const auto den = v[1].get<std::int64_t>();
    if (den <= 0) throw ParseError("root-of-unity denominator must be positive");
    out.push_back(root_of_unity(v[0].get<std::int64_t>(), den));
    return;
  }
  if (v.is_number_integer() && v.get<std::int64_t>() == 1) {
    out.push_back(1.0);
    return;
  }
  if (!v.is_array()) throw ParseError("table entries must be [num, den] pairs");
  for (const auto& e : v) collect_angles(e, out);
}

std::vector<Complex> angles(const json& v, std::size_t expected, const char* what) {
  std::vector<Complex> out;
  collect_angles(v, out);
  if (out.size() != expected) {
    std::ostringstream os;
    os << what << " has " << out.size() << " entries, expected " << expected;
    throw ParseError(os.str());
  }
  return out;
}

void collect_ints(const json& v, std::vector<int>& out) {
  if (v.is_number_integer()) {
    out.push_back(v.get<int>());
    return;
  }
  if (!v.is_array()) throw ParseError("expected an integer table");
  for (const auto& e : v) collect_ints(e, out);
}

json angle_json(Complex z) {
  RationalAngle a;
  if (!to_rational_angle(z, a)) throw ValidationFailure("table value is not a root of unity of small order");
  return json::array({a.num, a.den});
}

json angles_json(const std::vector<Complex>& values) {
  json out = json::array();
  for (Complex z : values) out.push_back(angle_json(z));
  return out;
}

GroupPtr group_from(const json& doc) {
  return guarded([&]() -> GroupPtr {
    const std::string name = doc.value("name", std::string{});
    if (doc.contains("permutations")) {
      std::vector<catalog::Permutation> gens = doc.at("permutations").get<std::vector<catalog::Permutation>>();
      return catalog::from_permutations(gens, name);
    }
    if (doc.contains("catalog")) return catalog::by_name(doc.at("catalog").get<std::string>());
    std::vector<int> mult;
    collect_ints(doc.at("mult"), mult);
    int order = doc.contains("order") ? doc.at("order").get<int>() : 0;
    if (order == 0) {
      while (static_cast<std::size_t>(order) * order < mult.size()) ++order;
    }
    if (order <= 0 || mult.size() != static_cast<std::size_t>(order) * order)
      throw ParseError("mult must be an order x order table");
    return make_group(order, std::move(mult), name);
  });
}

json group_json(const FiniteGroup& g) {
  json rows = json::array();
  for (int a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  json doc{{"order", g.order()}, {"mult", std::move(rows)}};
  if (!g.name().empty()) doc["name"] = g.name();
  return doc;
}

void expect_kind(const json& doc, const char* kind) {
  if (doc.contains("kind") && doc.at("kind") != kind)
    throw ParseError(std::string("expected a document of kind ") + kind);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

GroupPtr parse_group(const std::string& text) { return group_from(parse_json(text)); }

GroupPtr load_group(const std::filesystem::path& path) { return parse_group(read_file(path)); }

std::string group_to_json(const FiniteGroup& g) { return group_json(g).dump(2) + "\n"; }

Cocycle2 parse_cocycle2(const std::string& text, const GroupPtr& group) {
  const json doc = parse_json(text);
  return guarded([&] {
    expect_kind(doc, "cocycle2");
    GroupPtr g = doc.contains("group") ? group_from(doc.at("group")) : group;
    if (!g) throw ParseError("cocycle2 needs a group");
    const auto n = static_cast<std::size_t>(g->order());
    return Cocycle2(Subgroup::whole(g), angles(doc.at("values"), n * n, "cocycle2 values"));
  });
}

Cocycle3 parse_cocycle3(const std::string& text, const GroupPtr& group) {
  const json doc = parse_json(text);
  return guarded([&] {
    expect_kind(doc, "cocycle3");
    GroupPtr g = doc.contains("group") ? group_from(doc.at("group")) : group;
    if (!g) throw ParseError("cocycle3 needs a group");
    if (group && g != group) {
      if (!std::equal(g->table().begin(), g->table().end(), group->table().begin(), group->table().end()))
        throw ParseError("cocycle3 group does not match the given group");
      g = group;
    }
    const auto n = static_cast<std::size_t>(g->order());
    return Cocycle3(g, angles(doc.at("values"), n * n * n, "cocycle3 values"));
  });
}

ActionData parse_action_data(const std::string& text) {
  const json doc = parse_json(text);
  return guarded([&] {
    expect_kind(doc, "action_data");
    GroupPtr G = group_from(doc.at("G"));
    GroupPtr X = group_from(doc.at("Gamma"));
    const auto m = static_cast<std::size_t>(G->order()), n = static_cast<std::size_t>(X->order());
    std::vector<int> act;
    if (doc.contains("action")) {
      collect_ints(doc.at("action"), act);
    } else {
      for (std::size_t g = 0; g < m; ++g)
        for (std::size_t x = 0; x < n; ++x) act.push_back(static_cast<int>(x));
    }
    if (act.size() != m * n) throw ParseError("action must be a |G| x |Gamma| table");
    auto action = GroupAction::by_automorphisms(G, X, std::move(act));
    auto tau = doc.contains("tau") ? angles(doc.at("tau"), m * n * n, "tau") : std::vector<Complex>(m * n * n, 1.0);
    auto sigma =
        doc.contains("sigma") ? angles(doc.at("sigma"), m * m * n, "sigma") : std::vector<Complex>(m * m * n, 1.0);
    Cocycle3 omega = Cocycle3::trivial(X);
    if (doc.contains("omega")) {
      const json& w = doc.at("omega");
      if (w.is_string())
        omega = omega_from_spec(w.get<std::string>(), X);
      else
        omega = Cocycle3(X, angles(w, n * n * n, "omega"));
    }
    return ActionData(std::move(action), std::move(tau), std::move(sigma), std::move(omega));
  });
}

std::string cocycle2_to_json(const Cocycle2& c) {
  json doc{{"kind", "cocycle2"}, {"group", group_json(c.domain().group())}, {"values", angles_json(c.values())}};
  return doc.dump(2) + "\n";
}

std::string cocycle3_to_json(const Cocycle3& c) {
  json doc{{"kind", "cocycle3"}, {"group", group_json(*c.group())}, {"values", angles_json(c.values())}};
  return doc.dump(2) + "\n";
}

std::string action_data_to_json(const ActionData& d) {
  json act = json::array();
  const int m = d.acting_group()->order(), n = d.pointed_group()->order();
  for (int g = 0; g < m; ++g) {
    json row = json::array();
    for (int x = 0; x < n; ++x) row.push_back(d.act(g, x));
    act.push_back(std::move(row));
  }
  json doc{{"kind", "action_data"},
           {"G", group_json(*d.acting_group())},
           {"Gamma", group_json(*d.pointed_group())},
           {"action", std::move(act)},
           {"tau", angles_json(d.tau_values())},
           {"sigma", angles_json(d.sigma_values())},
           {"omega", angles_json(d.omega().values())}};
  return doc.dump(2) + "\n";
}

Cocycle3 omega_from_spec(const std::string& spec, const GroupPtr& group) {
  if (spec.rfind("cyclic:", 0) == 0) {
    int n = 0;
    long long q = 0;
    char colon = 0;
    std::istringstream is(spec.substr(7));
    if (!(is >> n >> colon >> q) || colon != ':' || !is.eof())
      throw ParseError("omega spec must look like cyclic:<n>:<q>");
    Cocycle3 w = cyclic_3cocycle(n, q);
    if (!group) return w;
    if (group->order() != n) throw ParseError("cyclic omega order does not match the group");
    // The file group must be Z/n with the standard labelling 0..n-1.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (group->mul(a, b) != (a + b) % n)
          throw ParseError("cyclic omega needs the group Z/n with elements labelled by residues");
    return Cocycle3(group, w.values());
  }
  return parse_cocycle3(read_file(spec), group);
}

std::string ring_to_json(const FusionRing& ring) {
  json quads = json::array();
  const int r = ring.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        if (ring.N(i, j, k) != 0) quads.push_back(json::array({i, j, k, ring.N(i, j, k)}));
  json doc{{"labels", ring.labels}, {"unit", ring.unit}, {"dual", ring.dual}, {"dims", ring.dims}, {"N", quads}};
  return doc.dump(2) + "\n";
}

FusionRing parse_ring(const std::string& text) {
  const json doc = parse_json(text);
  return guarded([&] {
    FusionRing ring;
    ring.labels = doc.at("labels").get<std::vector<std::string>>();
    const int r = ring.rank();
    if (r == 0) throw ParseError("fusion ring has no basis");
    ring.unit = doc.at("unit").get<int>();
    ring.dual = doc.at("dual").get<std::vector<int>>();
    ring.dims = doc.at("dims").get<std::vector<long long>>();
    ring.n.assign(static_cast<std::size_t>(r) * r * r, 0);
    for (const auto& q : doc.at("N")) {
      if (!q.is_array() || q.size() != 4) throw ParseError("N entries must be [i, j, k, value]");
      const int i = q[0].get<int>(), j = q[1].get<int>(), k = q[2].get<int>();
      if (i < 0 || j < 0 || k < 0 || i >= r || j >= r || k >= r) throw ParseError("N index out of range");
      ring.N(i, j, k) = q[3].get<int>();
    }
    return ring;
  });
}

std::string ring_to_text(const FusionRing& ring) {
  const int r = ring.rank();
  std::size_t width = 0;
  for (const auto& l : ring.labels) width = std::max(width, l.size());
  std::ostringstream os;
  os << "rank " << r << ", unit " << ring.labels[ring.unit] << "\n";
  os << std::left << std::setw(static_cast<int>(width)) << "label" << "  dim  dual\n";
  for (int i = 0; i < r; ++i)
    os << std::left << std::setw(static_cast<int>(width)) << ring.labels[i] << "  " << std::setw(3) << ring.dims[i]
       << "  " << ring.labels[ring.dual[i]] << "\n";
  os << "\n";
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      os << std::left << std::setw(static_cast<int>(width)) << ring.labels[i] << " x " << std::setw(static_cast<int>(width))
         << ring.labels[j] << " =";
      bool first = true;
      for (int k = 0; k < r; ++k) {
        const int v = ring.N(i, j, k);
        if (v == 0) continue;
        os << (first ? " " : " + ");
        if (v != 1) os << v << ' ';
        os << ring.labels[k];
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

std::string irreps_to_json(const IrrepSet& irreps) {
  json reps = json::array();
  for (const auto& chi : irreps.characters) {
    json values = json::object();
    for (int p = 0; p < chi.domain().order(); ++p)
      values[std::to_string(chi.domain().element(p))] = json::array({chi.values[p].real(), chi.values[p].imag()});
    reps.push_back(json{{"dim", chi.degree()}, {"character", std::move(values)}});
  }
  json doc{{"subgroup", irreps.domain().elements()}, {"irreps", std::move(reps)}};
  return doc.dump(2) + "\n";
}

std::string report_to_json(const FusionReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"failures", c.failures}, {"witnesses", c.witnesses}});
  json doc{{"ok", report.ok()}, {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

}  // namespace fusion_forge::io
