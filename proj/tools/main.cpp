#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fusion_forge/errors.hpp"
#include "fusion_forge/job.hpp"

using fusion_forge::JobSpec;

namespace {

void common_flags(CLI::App* sub, JobSpec& job, std::string& format) {
  sub->add_option("--seed", job.seed, "Seed for the irrep decomposition")->capture_default_str();
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  sub->add_option("--out", job.out_path, "Write the result here instead of stdout");
  sub->add_flag("--error-json", job.error_json, "Report errors as a JSON object on stderr");
}

void category_flags(CLI::App* sub, JobSpec& job) {
  sub->add_option("--category", job.category_path, "Action data JSON (G, Gamma, action, tau, sigma, omega)");
  sub->add_option("--group", job.group_path, "Group JSON; with --omega, the category is Rep D^omega G");
  sub->add_option("--omega", job.omega, "cyclic:<n>:<q> or a cocycle3 JSON file");
  sub->add_option("--threads", job.threads, "Worker threads for the fusion table (0 = all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple objects and fusion rings of equivariantized pointed fusion categories"};
  app.require_subcommand(1);
  JobSpec job;
  std::string format = "json";

  auto* simples = app.add_subcommand("simples", "List the simple objects with their FP dimensions");
  category_flags(simples, job);
  common_flags(simples, job, format);

  auto* fuse = app.add_subcommand("fuse", "Decompose one tensor product");
  category_flags(fuse, job);
  fuse->add_option("lhs", job.lhs, "Label y,i")->required();
  fuse->add_option("rhs", job.rhs, "Label z,j")->required();
  common_flags(fuse, job, format);

  auto* table = app.add_subcommand("table", "Emit the full fusion ring");
  category_flags(table, job);
  common_flags(table, job, format);

  auto* verify = app.add_subcommand("verify", "Check the ring axioms of a fusion table file");
  verify->add_option("--table", job.table_path, "Fusion ring JSON")->required();
  verify->add_flag("--comm", job.commutativity, "Also require commutativity");
  common_flags(verify, job, format);

  auto* dbl = app.add_subcommand("double", "Fusion ring of the twisted quantum double D^omega G");
  dbl->add_option("--group", job.group_path, "Group JSON");
  dbl->add_option("--omega", job.omega, "cyclic:<n>:<q> or a cocycle3 JSON file")->required();
  dbl->add_option("--threads", job.threads, "Worker threads (0 = all cores)")->capture_default_str();
  common_flags(dbl, job, format);

  auto* selftest = app.add_subcommand("selftest", "Run the built-in oracle checks");
  common_flags(selftest, job, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  job.command = app.get_subcommands().front()->get_name();
  job.format = format == "text" ? fusion_forge::OutputFormat::text : fusion_forge::OutputFormat::json;
  try {
    job.tol = fusion_forge::tolerances_from_environment();
  } catch (const fusion_forge::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  const auto result = fusion_forge::run(job);
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << result.error << (result.error.back() == '\n' ? "" : "\n");
  return result.exit_code;
}
