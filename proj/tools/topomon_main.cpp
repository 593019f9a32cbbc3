#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "topomon/io.hpp"

namespace {

using namespace topomon;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, path, "cannot open input file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string describe_points(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x)) {
    if (!first) out += ' ';
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

struct Options {
  std::string format = "json";
  bool pretty() const { return format == "pretty"; }
};

void emit_monitor_verdict(const Options& opt, const MonitorVerdict& verdict,
                          const std::optional<Decomposition>& decomposition) {
  if (!opt.pretty()) {
    std::cout << monitor_verdict_json(verdict, decomposition) << "\n";
    return;
  }
  std::cout << "monitorable: " << (verdict.monitorable ? "yes" : "no") << "\n";
  if (verdict.witness)
    std::cout << "witness (open set where the set is dense and codense): "
              << describe_points(*verdict.witness) << "\n";
  if (decomposition)
    std::cout << "decomposition: regular open " << describe_points(decomposition->regular_part)
              << "  xor  nowhere dense " << describe_points(decomposition->nowhere_dense_part)
              << "\n";
}

void emit_symbolic_verdict(const Options& opt, const std::string& kind, bool monitorable,
                           const std::optional<std::uint32_t>& witness_column) {
  if (!opt.pretty()) {
    std::cout << symbolic_verdict_json(kind, monitorable, witness_column) << "\n";
    return;
  }
  std::cout << kind << " set monitorable: " << (monitorable ? "yes" : "no") << "\n";
  if (witness_column) std::cout << "witness column: " << *witness_column << "\n";
}

void run_monitorable(const Options& opt, const std::string& space_path,
                     const std::string& set_text, const std::string& symbolic_path) {
  if (!symbolic_path.empty()) {
    const SymbolicSet set = parse_symbolic(slurp(symbolic_path));
    if (const auto* cof = std::get_if<CofiniteSet>(&set))
      emit_symbolic_verdict(opt, "cofinite", cofinite_is_monitorable(*cof), std::nullopt);
    else if (const auto* grid = std::get_if<GridSet>(&set)) {
      const GridVerdict v = grid_is_monitorable(*grid);
      emit_symbolic_verdict(opt, "grid", v.monitorable, v.witness_column);
    } else if (const auto* scott = std::get_if<ScottSet>(&set))
      emit_symbolic_verdict(opt, "scott", scott_is_monitorable(*scott), std::nullopt);
    else
      emit_symbolic_verdict(opt, "sum", sum_is_monitorable(std::get<SumSet>(set)), std::nullopt);
    return;
  }

  const FiniteSpace space = parse_space(slurp(space_path));
  const PointSet a = parse_point_list(set_text, space.size());
  const MonitorVerdict verdict = is_monitorable_frontier(space, a);
  std::optional<Decomposition> decomposition;
  if (verdict.monitorable) decomposition = decompose(space, a);
  emit_monitor_verdict(opt, verdict, decomposition);
}

void run_decompose(const Options& opt, const std::string& space_path,
                   const std::string& set_text) {
  const FiniteSpace space = parse_space(slurp(space_path));
  const PointSet m = parse_point_list(set_text, space.size());
  const Decomposition d = decompose(space, m);  // throws NotMonitorableError -> exit 1
  emit_monitor_verdict(opt, MonitorVerdict{true, std::nullopt}, d);
}

void run_classify(const Options& opt, const std::string& space_path, const std::string& builtin,
                  std::size_t budget) {
  std::unique_ptr<SpacePresentation> presentation;
  if (!builtin.empty())
    presentation = builtin_presentation(builtin);
  else
    presentation = finite_presentation(parse_space(slurp(space_path)));
  const ComplexityVerdict v = classify(*presentation, budget);
  if (!opt.pretty()) {
    std::cout << classify_json(v) << "\n";
    return;
  }
  std::cout << "verdict: " << to_string(v.tag);
  if (v.refinement) std::cout << " (" << to_string(*v.refinement) << ")";
  std::cout << "\nminimal opens: " << v.evidence.minimal_opens << "\n";
  if (v.evidence.disjoint_bound)
    std::cout << "disjoint opens inside L: at most " << *v.evidence.disjoint_bound << "\n";
  for (const std::string& w : v.evidence.disjoint_witnesses) std::cout << "  witness: " << w << "\n";
  if (!v.evidence.note.empty()) std::cout << "note: " << v.evidence.note << "\n";
}

void run_hyperconnected(const Options& opt, const std::string& space_path,
                        const std::string& lts_path) {
  bool result = false;
  if (!lts_path.empty())
    result = is_hyperconnected_lts(parse_lts(slurp(lts_path)));
  else
    result = is_hyperconnected(parse_space(slurp(space_path)));
  if (!opt.pretty())
    std::cout << hyperconnected_json(result) << "\n";
  else
    std::cout << "hyperconnected: " << (result ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deciders and classifiers for monitorable sets over finite and symbolically "
               "presented topological spaces"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();

  std::string space_path, set_text, symbolic_path, lts_path, builtin, input_path;
  std::string alphabet_csv = "a";
  std::size_t budget = 16, samples = 0, cases = 0, n_states = 0, max_depth = 3;
  std::uint64_t seed = 0;
  double p = 0.5;
  unsigned jobs = 1;

  auto* cmd_mon = app.add_subcommand("monitorable", "decide monitorability of a set");
  auto* mon_space = cmd_mon->add_option("--space", space_path, "finite space file");
  auto* mon_set = cmd_mon->add_option("--set", set_text, "points of the tested set");
  auto* mon_sym = cmd_mon->add_option("--symbolic", symbolic_path, "symbolic set file");
  mon_space->needs(mon_set);
  mon_sym->excludes(mon_space)->excludes(mon_set);

  auto* cmd_dec = app.add_subcommand("decompose", "regular-open/nowhere-dense decomposition");
  cmd_dec->add_option("--space", space_path, "finite space file")->required();
  cmd_dec->add_option("--set", set_text, "points of the monitorable set")->required();

  auto* cmd_cls = app.add_subcommand("classify", "classify the family of monitorable sets");
  auto* cls_space = cmd_cls->add_option("--space", space_path, "finite space file");
  auto* cls_builtin = cmd_cls->add_option("--builtin", builtin,
                                          "discrete(n), indiscrete(n), sum(k), cofinite, grid, scott");
  cmd_cls->add_option("--budget", budget, "witness search budget")->capture_default_str();
  cls_builtin->excludes(cls_space);

  auto* cmd_hyp = app.add_subcommand("hyperconnected", "decide hyperconnectedness");
  auto* hyp_space = cmd_hyp->add_option("--space", space_path, "finite space file");
  auto* hyp_lts = cmd_hyp->add_option("--lts", lts_path, "transition system file");
  hyp_lts->excludes(hyp_space);

  auto* cmd_top = app.add_subcommand("lts-topology",
                                     "materialize the topology induced by a transition relation");
  cmd_top->add_option("--lts", lts_path, "transition system file")->required();

  auto* cmd_gen = app.add_subcommand("genericity", "sample random transition relations");
  cmd_gen->add_option("--n", n_states, "number of states")->required();
  cmd_gen->add_option("--alphabet", alphabet_csv, "comma-separated events")->required();
  cmd_gen->add_option("--p", p, "triple inclusion probability")->required();
  cmd_gen->add_option("--samples", samples, "number of sampled relations")->required();
  cmd_gen->add_option("--seed", seed, "master seed (required: no ambient randomness)")->required();
  cmd_gen->add_option("--jobs", jobs, "worker threads; the report does not depend on it")
      ->capture_default_str();

  auto* cmd_cg = app.add_subcommand("certify-grid", "check the grid reduction transfer property");
  auto* cg_cases = cmd_cg->add_option("--cases", cases, "number of random inputs");
  auto* cg_seed = cmd_cg->add_option("--seed", seed, "master seed");
  auto* cg_input = cmd_cg->add_option("--input", input_path, "single grid DSL input");
  cg_cases->needs(cg_seed);
  cg_input->excludes(cg_cases)->excludes(cg_seed);

  auto* cmd_ct = app.add_subcommand("certify-tree", "check the tree reduction transfer property");
  cmd_ct->add_option("--max-depth", max_depth, "exhaustive sweep depth")->capture_default_str();
  auto* ct_input = cmd_ct->add_option("--input", input_path, "single tree DSL input");
  ct_input->excludes(cmd_ct->get_option("--max-depth"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (cmd_mon->parsed()) {
      if (symbolic_path.empty() && space_path.empty())
        throw ParseError(0, "", "monitorable needs --space/--set or --symbolic");
      run_monitorable(opt, space_path, set_text, symbolic_path);
    } else if (cmd_dec->parsed()) {
      run_decompose(opt, space_path, set_text);
    } else if (cmd_cls->parsed()) {
      if (builtin.empty() && space_path.empty())
        throw ParseError(0, "", "classify needs --space or --builtin");
      run_classify(opt, space_path, builtin, budget);
    } else if (cmd_hyp->parsed()) {
      if (lts_path.empty() && space_path.empty())
        throw ParseError(0, "", "hyperconnected needs --space or --lts");
      run_hyperconnected(opt, space_path, lts_path);
    } else if (cmd_top->parsed()) {
      std::cout << induced_space_text(parse_lts(slurp(lts_path)));
    } else if (cmd_gen->parsed()) {
      std::vector<std::string> alphabet;
      std::size_t start = 0;
      while (start <= alphabet_csv.size()) {
        std::size_t comma = alphabet_csv.find(',', start);
        if (comma == std::string::npos) comma = alphabet_csv.size();
        const std::string event = alphabet_csv.substr(start, comma - start);
        if (event.empty()) throw ParseError(0, alphabet_csv, "empty event name in the alphabet");
        alphabet.push_back(event);
        start = comma + 1;
      }
      const GenericityReport report =
          genericity_sample(n_states, alphabet, p, samples, seed, jobs);
      if (!opt.pretty()) {
        std::cout << genericity_json(report) << "\n";
      } else {
        std::cout << "samples: " << report.samples << " (p = " << report.p << ", seed = "
                  << report.seed << ")\n"
                  << "hyperconnected fraction: " << report.hyperconnected_fraction << "\n"
                  << "sigma02-or-lower fraction: " << report.sigma02_fraction << "\n";
      }
    } else if (cmd_cg->parsed()) {
      CertificationReport report;
      if (!input_path.empty()) {
        const SymbolicSet set = parse_symbolic(slurp(input_path));
        const auto* alpha = std::get_if<GridSet>(&set);
        if (!alpha) throw ParseError(0, input_path, "certify-grid expects a grid DSL input");
        report.cases = 1;
        if (!certify_grid_reduction(*alpha)) report.failures.push_back(grid_to_dsl(*alpha));
      } else {
        if (cases == 0) throw ParseError(0, "", "certify-grid needs --cases with --seed, or --input");
        report = certify_grid_sweep(cases, seed);
      }
      std::cout << certification_json(report) << "\n";
      if (!report.all_passed()) return 1;
    } else if (cmd_ct->parsed()) {
      CertificationReport report;
      if (!input_path.empty()) {
        const TreePresentation t = parse_tree(slurp(input_path));
        report.cases = 1;
        if (!certify_tree_reduction(t)) report.failures.push_back("input tree");
      } else {
        report = certify_tree_sweep(max_depth);
      }
      std::cout << certification_json(report) << "\n";
      if (!report.all_passed()) return 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
