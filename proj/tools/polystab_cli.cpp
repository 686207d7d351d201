// Command-line front end: parse ideal files, dispatch library computations,
// render deterministic reports.
//
// Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
// 3 internal cross-check failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polystab/corpus.hpp"
#include "polystab/decompose.hpp"
#include "polystab/depth.hpp"
#include "polystab/io.hpp"
#include "polystab/polymatroid.hpp"
#include "polystab/search.hpp"
#include "polystab/stability.hpp"
#include "polystab/version.hpp"

namespace {

using namespace polystab;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return std::move(os).str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(1, 1, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return std::move(os).str();
}

IdealDocument load_ideal(const std::string& path, std::optional<int> vars) {
  IdealDocument doc = parse_ideal(read_input(path), vars);
  if (doc.reduced)
    std::cerr << "note: generating set reduced to minimal form ("
              << doc.parsed.size() << " -> " << doc.ideal.size()
              << " generators)\n";
  return doc;
}

struct IdealArgs {
  std::string path;
  std::optional<int> vars;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", path, "ideal file ('-' for stdin)")->required();
    cmd->add_option("--vars", vars, "ambient variable count (default: inferred)");
  }
};

std::vector<Exp> parse_caps(const std::string& text, int vars) {
  std::vector<Exp> caps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      caps.push_back(static_cast<Exp>(std::stoul(item)));
    } catch (...) {
      throw ParseError(1, 1, "bad cap value '" + item + "'");
    }
  }
  if (caps.size() != static_cast<std::size_t>(vars))
    throw PreconditionError("need exactly one cap per variable");
  return caps;
}

MonomialPrime parse_prime_spec(const std::string& text, int vars) {
  std::vector<int> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t i = item.find_first_not_of(" \t");
    if (i == std::string::npos || item[i] != 'x')
      throw ParseError(1, 1, "bad variable '" + item + "' in prime spec");
    const int idx = std::stoi(item.substr(i + 1));
    if (idx < 1) throw ParseError(1, 1, "variable indices are 1-based");
    members.push_back(idx - 1);
  }
  return MonomialPrime(vars, std::move(members));
}

int run(int argc, char** argv) {
  CLI::App app{"stability invariants of powers of monomial ideals"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + std::string(kToolVersion));
  app.require_subcommand(1);

  IdealArgs info_args, ass_args, dec_args, depth_args, astab_args, dstab_args,
      report_args, graph_args;
  int ass_power = 1, depth_power = 1;
  std::string report_format = "text";

  CLI::App* cmd_info = app.add_subcommand("info", "basic ideal statistics");
  info_args.attach(cmd_info);

  CLI::App* cmd_ass =
      app.add_subcommand("ass", "associated primes of a power");
  ass_args.attach(cmd_ass);
  cmd_ass->add_option("--power", ass_power, "power k (default 1)")
      ->check(CLI::PositiveNumber);

  CLI::App* cmd_dec =
      app.add_subcommand("decompose", "irreducible decomposition");
  dec_args.attach(cmd_dec);

  CLI::App* cmd_depth =
      app.add_subcommand("depth", "depth of R/I^k via linear quotients");
  depth_args.attach(cmd_depth);
  cmd_depth->add_option("--power", depth_power, "power k (default 1)")
      ->check(CLI::PositiveNumber);

  CLI::App* cmd_astab = app.add_subcommand(
      "astab", "index of stability of the associated primes");
  astab_args.attach(cmd_astab);

  CLI::App* cmd_dstab =
      app.add_subcommand("dstab", "index of depth stability");
  dstab_args.attach(cmd_dstab);

  CLI::App* cmd_report =
      app.add_subcommand("report", "full per-power stability report");
  report_args.attach(cmd_report);
  cmd_report->add_option("--format", report_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_graph =
      app.add_subcommand("graph", "linear relation graph and spread");
  graph_args.attach(cmd_graph);

  int ver_vars = 0, ver_degree = 0;
  std::string ver_caps;
  CLI::App* cmd_ver =
      app.add_subcommand("veronese", "construct a Veronese-type ideal");
  cmd_ver->add_option("--vars", ver_vars, "ambient variable count")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_ver->add_option("--degree", ver_degree, "generator degree")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_ver->add_option("--caps", ver_caps, "per-variable caps, e.g. 1,1,2,2")
      ->required();

  std::vector<std::string> trans_primes;
  std::optional<int> trans_vars;
  CLI::App* cmd_trans = app.add_subcommand(
      "transversal", "product of monomial prime ideals");
  cmd_trans
      ->add_option("--prime", trans_primes,
                   "variables of one prime, e.g. x1,x2 (repeatable)")
      ->required();
  cmd_trans->add_option("--vars", trans_vars,
                        "ambient variable count (default: inferred)");

  int hunt_vars = 0, hunt_degree = 0, hunt_cap = 1;
  bool hunt_exhaustive = false, hunt_matroidal = false;
  std::optional<std::uint64_t> hunt_samples;
  std::uint64_t hunt_seed = 0;
  CLI::App* cmd_hunt = app.add_subcommand(
      "hunt", "scan a space for ideals with astab != dstab");
  cmd_hunt->add_option("--vars", hunt_vars, "ambient variable count")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_hunt->add_option("--degree", hunt_degree, "generator degree")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_hunt->add_option("--cap", hunt_cap, "per-variable exponent cap")
      ->check(CLI::PositiveNumber);
  cmd_hunt->add_flag("--exhaustive", hunt_exhaustive,
                     "enumerate every subset of the pool (default)");
  cmd_hunt->add_option("--samples", hunt_samples,
                       "sampled mode: number of seeded draws");
  cmd_hunt->add_option("--seed", hunt_seed, "sampled mode: RNG seed");
  cmd_hunt->add_flag("--matroidal", hunt_matroidal,
                     "squarefree pool, full-supported matroidal candidates");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify-paper", "run the bundled verification suite");

  CLI11_PARSE(app, argc, argv);

  if (cmd_info->parsed()) {
    const IdealDocument doc = load_ideal(info_args.path, info_args.vars);
    const MonomialIdeal& I = doc.ideal;
    const IdealStats st = stats(I);
    std::cout << "ideal      : " << to_string(I) << '\n';
    std::cout << "vars       : " << I.vars()
              << (doc.vars_inferred ? " (inferred)" : "") << '\n';
    std::cout << "generators : " << I.size() << '\n';
    std::cout << "degree     : ";
    if (st.degree)
      std::cout << *st.degree << '\n';
    else
      std::cout << "mixed\n";
    std::cout << "gcd        : " << to_string(st.gcd) << '\n';
    std::cout << "support    : {";
    for (std::size_t i = 0; i < st.support.size(); ++i)
      std::cout << (i ? "," : "") << "x" << st.support[i] + 1;
    std::cout << "}\n";
    std::cout << "squarefree : " << (st.squarefree ? "yes" : "no") << '\n';
    std::cout << "full support: " << (st.full_supported ? "yes" : "no")
              << '\n';
    const bool poly = is_polymatroidal(I);
    std::cout << "polymatroidal : " << (poly ? "yes" : "no") << '\n';
    std::cout << "matroidal     : " << (is_matroidal(I) ? "yes" : "no")
              << '\n';
    std::cout << "strong exchange: " << (has_strong_exchange(I) ? "yes" : "no")
              << '\n';
    if (I.is_proper())
      std::cout << "height     : " << height(I) << '\n';
    if (poly && I.is_proper())
      std::cout << "spread     : " << analytic_spread(I) << '\n';
    return 0;
  }

  if (cmd_ass->parsed()) {
    const IdealDocument doc = load_ideal(ass_args.path, ass_args.vars);
    const AssSet s = ass_of_power(doc.ideal, ass_power);
    std::cout << "Ass(I^" << ass_power << "):\n";
    for (const MonomialPrime& p : s) std::cout << "  " << to_string(p) << '\n';
    return 0;
  }

  if (cmd_dec->parsed()) {
    const IdealDocument doc = load_ideal(dec_args.path, dec_args.vars);
    for (const IrreducibleComponent& c :
         irreducible_decomposition(doc.ideal)) {
      std::cout << "(";
      bool first = true;
      for (const auto& [v, e] : c.entries) {
        if (!first) std::cout << ", ";
        std::cout << to_string(Monomial::variable(c.vars, v, e));
        first = false;
      }
      std::cout << ")\n";
    }
    return 0;
  }

  if (cmd_depth->parsed()) {
    const IdealDocument doc = load_ideal(depth_args.path, depth_args.vars);
    if (doc.vars_inferred)
      std::cerr << "note: ambient inferred as " << doc.ideal.vars()
                << " variables; depth depends on the ambient count (pass "
                   "--vars to pin it)\n";
    const MonomialIdeal Ik = power(doc.ideal,
                                   static_cast<unsigned>(depth_power));
    std::cout << "depth R/I^" << depth_power << " = " << depth_of_quotient(Ik)
              << '\n';
    return 0;
  }

  if (cmd_astab->parsed()) {
    const IdealDocument doc = load_ideal(astab_args.path, astab_args.vars);
    std::cout << "astab = " << astab(doc.ideal) << '\n';
    return 0;
  }

  if (cmd_dstab->parsed()) {
    const IdealDocument doc = load_ideal(dstab_args.path, dstab_args.vars);
    std::cout << "dstab = " << dstab(doc.ideal) << '\n';
    return 0;
  }

  if (cmd_report->parsed()) {
    const IdealDocument doc = load_ideal(report_args.path, report_args.vars);
    const StabilityReport rep = full_report(doc.ideal);
    std::cout << (report_format == "json"
                      ? render_report_json(rep, doc.vars_inferred)
                      : render_report_text(rep, doc.vars_inferred));
    return 0;
  }

  if (cmd_graph->parsed()) {
    const IdealDocument doc = load_ideal(graph_args.path, graph_args.vars);
    const RelationGraph g = relation_graph(doc.ideal);
    std::cout << "edges: ";
    if (g.edges.empty()) std::cout << "(none)";
    for (const auto& [a, b] : g.edges)
      std::cout << "{x" << a + 1 << ",x" << b + 1 << "} ";
    std::cout << '\n';
    std::cout << "r = " << g.r << '\n';
    std::cout << "s = " << g.s << '\n';
    if (is_polymatroidal(doc.ideal))
      std::cout << "ℓ = " << analytic_spread(doc.ideal) << '\n';
    else
      std::cout << "ℓ = n/a (not polymatroidal)\n";
    return 0;
  }

  if (cmd_ver->parsed()) {
    const std::vector<Exp> caps = parse_caps(ver_caps, ver_vars);
    std::cout << to_string(veronese_type(
                     ver_vars, static_cast<unsigned>(ver_degree), caps))
              << '\n';
    return 0;
  }

  if (cmd_trans->parsed()) {
    int vars = 0;
    if (trans_vars) {
      vars = *trans_vars;
    } else {
      for (const std::string& spec : trans_primes) {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const std::size_t i = item.find('x');
          if (i != std::string::npos)
            vars = std::max(vars, std::stoi(item.substr(i + 1)));
        }
      }
    }
    std::vector<MonomialPrime> primes;
    for (const std::string& spec : trans_primes)
      primes.push_back(parse_prime_spec(spec, vars));
    std::cout << to_string(transversal(primes)) << '\n';
    return 0;
  }

  if (cmd_hunt->parsed()) {
    SearchSpace space = SearchSpace::exhaustive(
        hunt_vars, static_cast<unsigned>(hunt_degree),
        static_cast<Exp>(hunt_cap));
    space.squarefree = hunt_matroidal;
    if (hunt_samples) {
      if (hunt_exhaustive)
        throw PreconditionError("--exhaustive and --samples are exclusive");
      space.mode = SearchSpace::Mode::sampled;
      space.samples = *hunt_samples;
      space.seed = hunt_seed;
    }
    const HuntResult result = hunt(space);
    for (const HuntHit& hit : result.hits)
      std::cout << "astab=" << hit.astab << " dstab=" << hit.dstab
                << "  I = " << to_string(hit.ideal) << '\n';
    std::cout << "candidates: " << result.candidates
              << "  polymatroidal: " << result.polymatroidal
              << "  hits: " << result.hits.size() << '\n';
    return 0;
  }

  if (cmd_verify->parsed()) {
    const SuiteReport suite = run_verification_suite();
    for (const SuiteItem& item : suite.items)
      std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.name << " ["
                << item.detail << "]\n";
    if (!suite.all_pass()) {
      std::cerr << "verification suite failed\n";
      return 3;
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const polystab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const polystab::CrossCheckError& e) {
    std::cerr << "cross-check failure: " << e.what() << '\n';
    return 3;
  } catch (const polystab::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const polystab::ColonNotLinearError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const polystab::OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
