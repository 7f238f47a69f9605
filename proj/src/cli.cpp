#include "chroma/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "chroma/geometry.hpp"
#include "chroma/invariants.hpp"
#include "chroma/json_io.hpp"
#include "chroma/suites.hpp"

namespace chroma {

namespace {

struct validation_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HopfStructure load(const std::string& path, ValidateOptions opts) {
  HopfStructure x = parse_structure(slurp(path), opts);
  if (ground_of(x).size() > 8)
    throw guard_error("ground set larger than 8 elements");
  return x;
}

ColoringProblem as_problem(const HopfStructure& x) {
  if (const auto* cp = std::get_if<ColoringProblem>(&x)) return *cp;
  return phi(x);
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of coloring problems and the structures that map to them"};
  app.name("chroma");
  app.require_subcommand(1);

  bool paranoid = false;
  app.add_flag("--paranoid", paranoid,
               "validate with full order-ideal closure enumeration");
  auto opts = [&] { return ValidateOptions{paranoid}; };

  // convert
  std::string convert_in, convert_out, convert_to = "coloring-problem";
  auto* convert = app.add_subcommand("convert", "map a structure to its coloring problem");
  convert->fallthrough();
  convert->add_option("input", convert_in, "input JSON file")->required();
  convert->add_option("--to", convert_to, "target type")
      ->check(CLI::IsMember({"coloring-problem"}));
  convert->add_option("-o,--output", convert_out, "output file (default stdout)");
  convert->callback([&] {
    const std::string text = render(HopfStructure{as_problem(load(convert_in, opts()))});
    if (convert_out.empty()) {
      out << text;
    } else {
      std::ofstream f(convert_out);
      if (!f) throw schema_error("cannot open file: " + convert_out);
      f << text;
    }
  });

  // chromatic
  std::string chromatic_in;
  int eval_k = 0;
  auto* chromatic = app.add_subcommand("chromatic", "chromatic invariants");
  chromatic->fallthrough();
  chromatic->add_option("input", chromatic_in, "input JSON file")->required();
  auto* poly_flag = chromatic->add_flag("--poly", "print the chromatic polynomial (default)");
  auto* qsym_flag =
      chromatic->add_flag("--qsym", "print the chromatic quasisymmetric function");
  auto* eval_opt = chromatic->add_option("--eval", eval_k, "count colorings with k colors");
  poly_flag->excludes(qsym_flag)->excludes(eval_opt);
  qsym_flag->excludes(eval_opt);
  chromatic->callback([&] {
    const ColoringProblem cp = as_problem(load(chromatic_in, opts()));
    if (*eval_opt)
      out << count_colorings(cp, eval_k) << "\n";
    else if (*qsym_flag)
      out << to_string(chromatic_qsym(cp)) << "\n";
    else
      out << to_string(chromatic_polynomial(cp)) << "\n";
  });

  // hilbert
  std::string hilbert_in;
  int hilbert_n = 0;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the relative order complex");
  hilbert->fallthrough();
  hilbert->add_option("input", hilbert_in, "input JSON file")->required();
  hilbert->add_option("--n", hilbert_n, "degree")->required();
  hilbert->callback([&] {
    out << hilbert_function(as_problem(load(hilbert_in, opts())), hilbert_n) << "\n";
  });

  // ehrhart
  std::string ehrhart_in;
  auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasisymmetric function");
  ehrhart->fallthrough();
  ehrhart->add_option("input", ehrhart_in, "input JSON file")->required();
  ehrhart->callback(
      [&] { out << to_string(ehrhart_qsym(as_problem(load(ehrhart_in, opts())))) << "\n"; });

  // check
  std::string check_in;
  auto* check = app.add_subcommand("check", "validate a structure file");
  check->fallthrough();
  check->add_option("input", check_in, "input JSON file")->required();
  check->callback([&] {
    Json j;
    try {
      j = Json::parse(slurp(check_in));
    } catch (const Json::parse_error& e) {
      throw schema_error(std::string{"malformed JSON: "} + e.what());
    }
    std::vector<std::string> violations;
    if (j.is_object() && j.contains("type") && j["type"] == "coloring-problem") {
      violations = validate(coloring_problem_from_json_raw(j), opts());
    } else {
      try {
        structure_from_json(j, opts());
      } catch (const std::invalid_argument& e) {
        violations.push_back(e.what());
      }
    }
    if (violations.empty()) {
      out << "OK\n";
    } else {
      for (const auto& v : violations) err << v << "\n";
      throw validation_failure(std::to_string(violations.size()) + " violation(s)");
    }
  });

  // axioms
  GenConfig axioms_cfg;
  int axioms_trials = 500;
  std::string axioms_species;
  auto* axioms = app.add_subcommand("axioms", "run the Hopf axiom suite on random instances");
  axioms->fallthrough();
  axioms->add_option("--species", axioms_species, "graph|hypergraph|poset|matroid|antimatroid|coloring-problem")
      ->required();
  axioms->add_option("--trials", axioms_trials, "trial count");
  axioms->add_option("--seed", axioms_cfg.seed, "random seed");
  axioms->add_option("--size", axioms_cfg.ground_size, "maximum ground size (1..5)");
  axioms->callback([&] {
    auto tag = species_tag_from_string(axioms_species);
    if (!tag) throw CLI::ValidationError("--species", "unknown species " + axioms_species);
    const SuiteReport report = run_axiom_suite(*tag, axioms_trials, axioms_cfg);
    out << to_string(report);
    if (!report.passed())
      throw validation_failure(std::to_string(report.failures.size()) + " law failure(s)");
  });

  // flags
  std::string flags_in;
  auto* flags = app.add_subcommand("flags", "list the stable flags");
  flags->fallthrough();
  flags->add_option("input", flags_in, "input JSON file")->required();
  flags->callback([&] {
    const ColoringProblem cp = as_problem(load(flags_in, opts()));
    for_each_stable_flag(cp, [&](const StableFlag& f) {
      std::string line;
      for (std::size_t i = 0; i < f.chain.size(); ++i) {
        if (i) line += " < ";
        line += to_string(f.chain[i], cp.ground);
      }
      out << line << " : " << to_string(f.type()) << "\n";
    });
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const guard_error& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const schema_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const validation_failure& e) {
    err << "invalid: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace chroma
