#include "fusion_forge/job.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <sstream>

#include "fusion_forge/errors.hpp"
#include "fusion_forge/group_catalog.hpp"
#include "fusion_forge/io.hpp"
#include "fusion_forge/twisted_double.hpp"
#include "json.hpp"

namespace fusion_forge {

using nlohmann::json;

Tolerances tolerances_from_environment() {
  Tolerances tol;
  if (const char* env = std::getenv("FUSION_FORGE_TOL"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0)) throw ParseError(std::string("FUSION_FORGE_TOL is not a positive number: ") + env);
    tol.validation = v;
  }
  return tol;
}

namespace {

SimpleLabel parse_label(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::istringstream is(s);
  SimpleLabel label;
  char comma = 0;
  if (!(is >> label.orbit_rep >> comma >> label.irrep) || comma != ',' || !is.eof())
    throw ParseError("labels look like y,i or (y,i): " + text);
  return label;
}

EquivariantCategory load_category(const JobSpec& job) {
  BuildOptions options;
  options.seed = job.seed;
  options.tol = job.tol;
  if (job.category_path) return build_category(io::parse_action_data(io::read_file(*job.category_path)), options);
  if (job.group_path && job.omega) {
    GroupPtr g = io::load_group(*job.group_path);
    return build_double(io::omega_from_spec(*job.omega, g), options);
  }
  if (job.omega && job.omega->rfind("cyclic:", 0) == 0) return build_double(io::omega_from_spec(*job.omega, nullptr), options);
  throw ParseError(job.command + " needs --category, or --group with --omega");
}

std::string render_ring(const FusionRing& ring, OutputFormat format) {
  return format == OutputFormat::json ? io::ring_to_json(ring) : io::ring_to_text(ring);
}

std::string simples(const JobSpec& job) {
  const auto cat = load_category(job);
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(10) << "label" << std::setw(8) << "fpdim" << std::setw(12) << "stabilizer"
       << std::setw(16) << "factor set" << "orbit\n";
  for (const auto& s : cat.simples()) {
    const auto& o = cat.orbit_of(s.orbit_rep);
    const bool trivial = factor_set_is_trivial_class(o);
    rows.push_back(json{{"label", to_string(s)},
                        {"orbit", o.points},
                        {"stabilizer_order", o.stabilizer.order()},
                        {"irrep_dim", o.irreps.irreps[s.irrep].dim()},
                        {"factor_set_trivial", trivial},
                        {"fpdim", fpdim(cat, s)}});
    std::ostringstream orbit;
    for (std::size_t i = 0; i < o.points.size(); ++i) orbit << (i ? " " : "") << o.points[i];
    text << std::left << std::setw(10) << to_string(s) << std::setw(8) << fpdim(cat, s) << std::setw(12)
         << o.stabilizer.order() << std::setw(16) << (trivial ? "trivial" : "nontrivial") << "{" << orbit.str()
         << "}\n";
  }
  if (job.format == OutputFormat::text) return text.str();
  return json{{"simples", std::move(rows)}}.dump(2) + "\n";
}

std::string fuse(const JobSpec& job) {
  const auto cat = load_category(job);
  const SimpleLabel a = parse_label(job.lhs), b = parse_label(job.rhs);
  cat.index_of(a);
  cat.index_of(b);
  json terms = json::array();
  std::ostringstream text;
  text << to_string(a) << " x " << to_string(b) << " =";
  bool first = true;
  for (const auto& c : cat.simples()) {
    const int m = fusion_multiplicity(cat, a, b, c);
    if (m == 0) continue;
    terms.push_back(json{{"label", to_string(c)}, {"multiplicity", m}});
    text << (first ? " " : " + ");
    if (m != 1) text << m << ' ';
    text << to_string(c);
    first = false;
  }
  if (job.format == OutputFormat::text) return text.str() + "\n";
  return json{{"lhs", to_string(a)}, {"rhs", to_string(b)}, {"terms", std::move(terms)}}.dump(2) + "\n";
}

std::string verify_command(const JobSpec& job, bool& ok) {
  if (!job.table_path) throw ParseError("verify needs --table");
  const FusionRing ring = io::parse_ring(io::read_file(*job.table_path));
  VerifyOptions options;
  options.commutativity = job.commutativity;
  options.tol = job.tol;
  const auto report = verify(ring, options);
  ok = report.ok();
  if (job.format == OutputFormat::json) return io::report_to_json(report);
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed) {
      os << " (" << c.failures << " failures; first at";
      for (int v : c.witnesses.front()) os << ' ' << v;
      os << ')';
    }
    os << "\n";
  }
  return os.str();
}

std::string double_command(const JobSpec& job) {
  if (!job.omega) throw ParseError("double needs --omega");
  GroupPtr g = job.group_path ? io::load_group(*job.group_path) : nullptr;
  if (!g && job.omega->rfind("cyclic:", 0) != 0) throw ParseError("double needs --group unless omega is cyclic:n:q");
  BuildOptions options;
  options.seed = job.seed;
  options.tol = job.tol;
  const auto cat = build_double(io::omega_from_spec(*job.omega, g), options);
  return render_ring(fusion_table(cat, job.threads), job.format);
}

std::string selftest(const JobSpec& job, bool& ok) {
  BuildOptions options;
  options.seed = job.seed;
  options.tol = job.tol;
  VerifyOptions verify_options;
  verify_options.commutativity = true;
  verify_options.tol = job.tol;

  std::vector<std::pair<std::string, bool>> results;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool passed = false;
    try {
      passed = body();
    } catch (const Error&) {
      passed = false;
    }
    results.emplace_back(name, passed);
  };
  auto sorted_dims = [](const FusionRing& r) {
    auto d = r.dims;
    std::sort(d.begin(), d.end());
    return d;
  };

  GroupPtr s3 = catalog::symmetric(3);
  GroupPtr z3 = catalog::cyclic(3), z2 = catalog::cyclic(2);
  FusionRing rep_s3;
  check("character ring of S3", [&] {
    auto cat = build_category(
        ActionData::trivial_cocycles(GroupAction::by_automorphisms(s3, catalog::trivial(), std::vector<int>(6, 0))),
        options);
    rep_s3 = fusion_table(cat);
    return rep_s3.rank() == 3 && sorted_dims(rep_s3) == std::vector<long long>{1, 1, 2} &&
           verify(rep_s3, verify_options).ok();
  });
  check("C(Z3)^Z2 is the character ring of S3", [&] {
    auto cat = build_category(ActionData::trivial_cocycles(GroupAction::by_automorphisms(z2, z3, {0, 1, 2, 0, 2, 1})),
                              options);
    const auto ring = fusion_table(cat);
    return verify(ring, verify_options).ok() && rep_s3.rank() == 3 && isomorphic_as_based_rings(ring, rep_s3).has_value();
  });
  check("D(S3)", [&] {
    const auto ring = fusion_table(build_double(Cocycle3::trivial(s3), options));
    long long sum = 0;
    for (auto d : ring.dims) sum += d * d;
    return ring.rank() == 8 && sorted_dims(ring) == std::vector<long long>{1, 1, 2, 2, 2, 2, 3, 3} && sum == 36 &&
           verify(ring, verify_options).ok();
  });
  check("D^w(Z2) with nontrivial w", [&] {
    const auto ring = fusion_table(build_double(cyclic_3cocycle(2, 1), options));
    auto klein = catalog::direct_product(*z2, *z2);
    std::vector<int> mult(klein->table().begin(), klein->table().end());
    return ring.rank() == 4 && verify(ring, verify_options).ok() &&
           isomorphic_as_based_rings(ring, FusionRing::group_ring(4, mult)).has_value();
  });

  ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.second; });
  if (job.format == OutputFormat::text) {
    std::ostringstream os;
    for (const auto& [name, passed] : results) os << (passed ? "pass " : "FAIL ") << name << "\n";
    return os.str();
  }
  json rows = json::array();
  for (const auto& [name, passed] : results) rows.push_back(json{{"name", name}, {"passed", passed}});
  return json{{"ok", ok}, {"checks", std::move(rows)}}.dump(2) + "\n";
}

std::string error_text(const JobSpec& job, const char* kind, const std::string& message) {
  if (!job.error_json) return message;
  return json{{"error", kind}, {"message", message}}.dump() + "\n";
}

}  // namespace

JobResult run(const JobSpec& job) {
  JobResult result;
  try {
    bool ok = true;
    std::string out;
    if (job.command == "simples") {
      out = simples(job);
    } else if (job.command == "fuse") {
      out = fuse(job);
    } else if (job.command == "table") {
      out = render_ring(fusion_table(load_category(job), job.threads), job.format);
    } else if (job.command == "verify") {
      out = verify_command(job, ok);
    } else if (job.command == "double") {
      out = double_command(job);
    } else if (job.command == "selftest") {
      out = selftest(job, ok);
    } else {
      throw ParseError("unknown command: " + job.command);
    }
    if (job.out_path)
      io::write_file(*job.out_path, out);
    else
      result.output = std::move(out);
    if (!ok) {
      result.exit_code = 1;
      result.error = error_text(job, "ValidationFailure", job.command + " found failing checks");
    }
  } catch (const ParseError& e) {
    result.exit_code = 2;
    result.error = error_text(job, e.kind(), e.what());
  } catch (const ValidationFailure& e) {
    result.exit_code = 1;
    result.error = error_text(job, e.kind(), e.what());
  } catch (const Error& e) {
    result.exit_code = 3;
    result.error = error_text(job, e.kind(), e.what());
  } catch (const std::exception& e) {
    result.exit_code = 3;
    result.error = error_text(job, "InternalError", e.what());
  }
  return result;
}

}  // namespace fusion_forge
