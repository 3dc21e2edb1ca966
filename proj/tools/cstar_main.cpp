// Command-line front end: check a descriptor against a named theorem,
// generate example families, or run the whole verification suite.
//
// Exit codes: 0 all consistent, 2 inconsistency or falsification,
// 3 invalid input, 4 hypothesis violation.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cstar/harness/check.hpp"

namespace {

using namespace cstar;
using namespace cstar::harness;

int parse_t0(const std::string& text, const GroupAction& action) {
  const auto& ab = action.group().abelian();
  if (!ab) throw InputError("--t0 requires an abelian group");
  std::vector<int> tuple;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      tuple.push_back(std::stoi(part));
    } catch (...) {
      throw InputError("--t0: expected a comma-separated integer tuple");
    }
  }
  if (tuple.size() == 1 && ab->factors().size() != 1)
    return tuple[0] >= 0 && tuple[0] < action.group().order()
               ? tuple[0]
               : throw InputError("--t0 out of range");
  if (tuple.size() != ab->factors().size())
    throw InputError("--t0 arity does not match the group factors");
  return ab->index_of(tuple);
}

int cmd_check(const std::string& input, const std::string& theorem,
              const std::string& t0_text, double tol_eps, bool as_json) {
  Tolerance tol{tol_eps};
  SystemDescriptor descriptor = load_descriptor(input);
  GroupAction action = descriptor.build(tol);
  std::optional<int> t0;
  if (!t0_text.empty()) t0 = parse_t0(t0_text, action);

  VerdictReport report = run_named_check(theorem, action, t0, tol);
  if (as_json)
    std::cout << report.to_json().dump(1) << "\n";
  else
    std::cout << report.to_text();
  return report.ok() ? 0 : 2;
}

int cmd_generate(const std::string& family_name_arg, std::uint64_t seed, int count,
                 const std::string& out_dir) {
  Family family = family_from_string(family_name_arg);
  std::filesystem::create_directories(out_dir);
  auto descriptors = generate_examples(family, seed, count);
  for (size_t i = 0; i < descriptors.size(); ++i) {
    std::string path = out_dir + "/" + family_name(family) + "_" + std::to_string(seed) + "_" +
                       std::to_string(i) + ".json";
    save_descriptor(descriptors[i], path);
    std::cout << path << "\n";
  }
  return 0;
}

int cmd_suite(std::uint64_t seed, int count, double tol_eps, const std::string& out_path) {
  SuiteOptions opts;
  opts.seed = seed;
  opts.count = count;
  opts.tol = Tolerance{tol_eps};
  SuiteResult result = run_suite(opts);
  std::string text = result.report.dump(1) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file: " + out_path);
    out << text;
    std::cout << "report written to " << out_path << "\n";
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional C*-dynamical systems: crossed products, "
               "spectra, outerness tests and theorem verification"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run one checker on a descriptor file");
  std::string input, theorem, t0_text;
  double tol_eps = 1e-9;
  bool as_json = false, as_text = false;
  check->add_option("--input", input, "descriptor JSON file")->required();
  check->add_option("--theorem", theorem, "one of 9, 11, 14, p13, p7, facts")->required();
  check->add_option("--t0", t0_text, "group element tuple for p7, e.g. 1 or 1,0");
  check->add_option("--tol", tol_eps, "tolerance epsilon");
  check->add_flag("--json", as_json, "JSON output");
  check->add_flag("--text", as_text, "text output (default)");

  auto* generate = app.add_subcommand("generate", "write example descriptor files");
  std::string family, out_dir = ".";
  std::uint64_t seed = 7;
  int count = 3;
  generate->add_option("--family", family,
                       "inner | block-permutation | gauge | mixed")->required();
  generate->add_option("--seed", seed, "generation seed")->required();
  generate->add_option("--count", count, "number of systems")->required();
  generate->add_option("--out", out_dir, "output directory")->required();

  auto* suite = app.add_subcommand("suite", "run all checkers over all generated families");
  std::uint64_t suite_seed = 7;
  int suite_count = 50;
  double suite_tol = 1e-9;
  std::string suite_out;
  suite->add_option("--seed", suite_seed, "suite seed")->required();
  suite->add_option("--count", suite_count, "instances per family")->required();
  suite->add_option("--tol", suite_tol, "tolerance epsilon");
  suite->add_option("--out", suite_out, "write the JSON report to a file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(input, theorem, t0_text, tol_eps, as_json && !as_text);
    if (generate->parsed()) return cmd_generate(family, seed, count, out_dir);
    if (suite->parsed()) return cmd_suite(suite_seed, suite_count, suite_tol, suite_out);
  } catch (const cstar::HypothesisError& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 4;
  } catch (const cstar::InputError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const cstar::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
