// Command-line front end. Reports go to stdout, diagnostics to stderr.

#include "lefscalc/error.hpp"
#include "lefscalc/fixtures.hpp"
#include "lefscalc/homology.hpp"
#include "lefscalc/io.hpp"
#include "lefscalc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lefscalc;

namespace {

struct Options {
  std::string input;
  bool json = false;
  std::uint64_t seed = 1;
  int threads = 1;
  int cases = 100;
  std::string fixtures_dir;
  int component = -1;
  int n = 3;
  std::string blocks;
  std::string schubert;
  bool open = false;
  std::string complement;
  std::string pattern;
  std::string fixture_name;
  bool list = false;
};

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

ProblemFile input(const Options& o) {
  if (o.input.empty()) throw Error(ErrorKind::InvalidInput, "--input is required (a file or a fixture name)");
  return load_problem(o.input);
}

std::vector<int> parse_blocks(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadPartition, "block sizes must be integers, got '" + text + "'");
    }
  }
  return out;
}

int cmd_chi(const Options& o) {
  const long long chi = chi_c(problem_subset(input(o)));
  if (o.json)
    print(Json{{"chi_c", chi}});
  else
    std::cout << chi << "\n";
  return 0;
}

int cmd_integrate(const Options& o) {
  const auto value = euler_integral(problem_function(input(o)));
  if (o.json)
    print(Json{{"integral", to_json(value)}});
  else
    std::cout << value.to_string() << "\n";
  return 0;
}

int cmd_lefschetz(const Options& o) {
  const ProblemFile p = input(o);
  const TracedProblem t = problem_traced(p);
  const LocalizationReport r = localization_report(t);
  Json j = to_json(r);
  Json h = Json::array();
  for (const auto& x : hyperbolicity_report(t)) h.push_back(to_json(x));
  j["hyperbolicity"] = h;
  print(j);
  return 0;
}

int cmd_morse(const Options& o) {
  const ProblemFile p = input(o);
  print(to_json(morse_report(problem_function(p), problem_functional(p))));
  return 0;
}

int cmd_cc(const Options& o) {
  const ProblemFile p = input(o);
  if (o.component < 0) return cmd_morse(o);
  MorseReport r;
  const TracedProblem t = problem_traced(p);
  r.table = lefschetz_cycle_table(t, o.component, problem_functional(p));
  r.integral = signed_local_contribution(t, o.component).value;
  r.equal = r.table.total() == r.integral;
  print(to_json(r));
  return 0;
}

int cmd_index_check(const Options& o) {
  const IndexCheckReport r = index_check_report(input(o));
  print(to_json(r));
  return r.equal ? 0 : 1;
}

int cmd_pushforward(const Options& o) {
  const ProblemFile p = input(o);
  print(to_json(pushforward_report(problem_map(p), problem_function(p))));
  return 0;
}

int cmd_flag_model(const Options& o) {
  const BruhatCellSpace space = flag_cellspace(o.n);
  CellSpace cells = space.cells;
  if (!o.blocks.empty()) cells = fixed_locus_cellspace(o.n, parse_blocks(o.blocks));
  CellularSubset subset = CellularSubset::all(cells);
  if (!o.schubert.empty() || !o.complement.empty()) {
    if (!o.blocks.empty()) throw Error(ErrorKind::InvalidInput, "Schubert subsets live on the flag manifold, not on a fixed locus");
    if (!o.schubert.empty()) subset = schubert_subset(space, parse_permutation(o.schubert, o.n), !o.open);
    if (!o.complement.empty()) subset = schubert_complement(space, parse_permutation(o.complement, o.n));
  }
  std::set<std::string> components;
  for (const auto& c : cells.cells()) components.insert(c.component);
  Json j{{"n", o.n}};
  j.update(to_json(cells));
  j["subset"] = subset.labels();
  j["chi_c"] = chi_c(subset);
  j["components"] = o.blocks.empty() ? 1 : components.size();
  print(j);
  return 0;
}

int cmd_example(const Options& o) {
  IntersectionPattern pattern = flag3_default_pattern();
  if (!o.pattern.empty()) {
    std::ifstream in(o.pattern);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + o.pattern + "'");
    try {
      pattern = pattern_from_json(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::InvalidInput, o.pattern + ": " + e.what());
    }
  }
  Json j = to_json(run_flag_model(pattern));
  j["pattern"] = to_json(pattern);
  print(j);
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.seed = o.seed;
  v.threads = o.threads;
  v.cases = o.cases;
  if (!o.fixtures_dir.empty()) v.fixtures_dir = o.fixtures_dir;
  const VerifyReport r = run_verify(v);
  if (o.json)
    print(to_json(r));
  else
    std::cout << format_verify(r);
  return r.all_pass() ? 0 : 1;
}

int cmd_fixture(const Options& o) {
  if (o.list || o.fixture_name.empty()) {
    for (const auto& n : fixture_names()) std::cout << n << "\n";
    return 0;
  }
  print(to_json(fixture(o.fixture_name)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lefschetz numbers, Euler integrals and Morse multiplicities on finite complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "Problem file, or a built-in fixture name");
  app.add_flag("--json", o.json, "JSON output for commands that default to plain text");
  app.add_option("--seed", o.seed, "Seed for randomized checks");

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"chi", "Compactly supported Euler characteristic of the subset (default: everything)", cmd_chi},
      {"integrate", "Euler integral of the function in the values block (default: 1)", cmd_integrate},
      {"lefschetz", "Global trace against the signed local contributions", cmd_lefschetz},
      {"morse", "Morse multiplicity of every vertex and the index sum", cmd_morse},
      {"cc", "Characteristic cycle table; with --component, the Lefschetz cycle of that component", cmd_cc},
      {"index-check", "Index sums for ell and -ell, and microlocal indices of fixed components", cmd_index_check},
      {"pushforward", "Pushforward along the map block and both integrals", cmd_pushforward},
      {"flag-model", "Bruhat cells of a flag manifold, fixed loci and Schubert subsets", cmd_flag_model},
      {"example-3-9", "Fixed components of diag(a,a,b) on the flag manifold of C^3 against V", cmd_example},
      {"verify", "Run the property suite", cmd_verify},
      {"fixture", "Print a built-in problem as JSON (no name: list them)", cmd_fixture},
  };
  std::map<CLI::App*, int (*)(const Options&)> dispatch;
  for (const auto& c : commands) dispatch[app.add_subcommand(c.name, c.help)] = c.run;

  auto* cc = app.get_subcommand("cc");
  cc->add_option("--component", o.component, "Fixed component index");
  auto* flag = app.get_subcommand("flag-model");
  flag->add_option("--n", o.n, "Rank, 1..6");
  flag->add_option("--blocks", o.blocks, "Block sizes of a diagonal action, e.g. 2,1");
  flag->add_option("--schubert", o.schubert, "Schubert variety of this permutation");
  flag->add_flag("--open", o.open, "Only the open cell of --schubert");
  flag->add_option("--complement", o.complement, "Everything except the open cell of this permutation");
  app.get_subcommand("example-3-9")->add_option("--pattern", o.pattern, "Intersection pattern JSON file");
  auto* verify = app.get_subcommand("verify");
  verify->add_option("--threads", o.threads, "Worker threads; output does not depend on it");
  verify->add_option("--cases", o.cases, "Random cases per property");
  verify->add_option("--fixtures", o.fixtures_dir, "Also validate every .json file in this directory");
  auto* fixture_cmd = app.get_subcommand("fixture");
  fixture_cmd->add_option("name", o.fixture_name, "Fixture name");
  fixture_cmd->add_flag("--list", o.list, "List fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, run] : dispatch)
      if (sub->parsed()) return run(o);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    for (const auto& d : e.details()) std::cerr << "  " << d << "\n";
    return exit_code(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: InvalidInput: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
