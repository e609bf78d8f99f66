// Command-line front end: table validation, Green's structure queries,
// construction driving, chain search and the verify-paper acceptance suite.
//
// Exit codes: 0 success, 1 semantic failure (with witness), 2 input or
// format error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "sgp/analysis.hpp"
#include "sgp/constructions.hpp"
#include "sgp/green.hpp"
#include "sgp/table_io.hpp"
#include "sgp/verify.hpp"
#include "sgp/witnesses.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitInput = 2;

bool is_witness_name(const std::string& token) {
  try {
    sgp::witnesses::witness(token);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int cmd_check(const std::string& path) {
  sgp::RawTable raw;
  try {
    raw = sgp::read_table_file(path);
  } catch (const sgp::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  auto const report = sgp::validate_associativity(raw);
  if (!report.well_formed) {
    std::cerr << "error: malformed table: " << report.message << "\n";
    return kExitInput;
  }
  if (!report.associative) {
    std::cout << "invalid: " << report.message << "\n";
    return kExitSemantic;
  }
  auto const s = sgp::FiniteSemigroup::from(raw);
  std::cout << "valid, order " << s.order();
  if (s.identity()) {
    std::cout << ", identity " << s.name(*s.identity());
  } else {
    std::cout << ", no identity";
  }
  if (s.zero()) {
    std::cout << ", zero " << s.name(*s.zero());
  } else {
    std::cout << ", no zero";
  }
  std::cout << "\n";
  return kExitOk;
}

void print_class(const sgp::RPoset& poset, const sgp::FiniteSemigroup& s,
                 int c, std::ostream& out) {
  out << '[';
  for (std::size_t i = 0; i < poset.classes[c].size(); ++i) {
    if (i) out << ' ';
    out << s.name(poset.classes[c][i]);
  }
  out << ']';
}

int cmd_green(const std::string& path, bool classes, bool poset_flag,
              const std::string& dot_path, bool antichain) {
  sgp::RawTable raw;
  try {
    raw = sgp::read_table_file(path);
  } catch (const sgp::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  auto const report = sgp::validate_associativity(raw);
  if (!report.well_formed) {
    std::cerr << "error: malformed table: " << report.message << "\n";
    return kExitInput;
  }
  if (!report.associative) {
    std::cout << "invalid: " << report.message << "\n";
    return kExitSemantic;
  }
  auto const s = sgp::FiniteSemigroup::from(raw);
  auto const poset = sgp::r_poset(s);

  if (classes) {
    std::cout << poset.num_classes() << " classes\n";
    for (int c = 0; c < poset.num_classes(); ++c) {
      std::cout << "class " << c << ": ";
      print_class(poset, s, c, std::cout);
      std::cout << "\n";
    }
  }
  if (poset_flag) {
    std::cout << poset.num_classes() << " classes";
    for (auto const& [lo, hi] : poset.hasse) {
      std::cout << "; ";
      print_class(poset, s, lo, std::cout);
      std::cout << " < ";
      print_class(poset, s, hi, std::cout);
    }
    std::cout << "\n";
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << dot_path << "'\n";
      return kExitInput;
    }
    out << sgp::to_dot(poset, s);
    std::cout << "wrote " << dot_path << "\n";
  }
  if (antichain) {
    std::cout << "antichain width " << sgp::antichain_width(poset) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------
// Construction spec files: line-oriented key = value with one [section].

struct ConstructSpec {
  std::string section;
  std::map<std::string, std::string> values;
};

ConstructSpec parse_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw sgp::format_error("cannot open '" + path + "'");
  }
  ConstructSpec spec;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']' || !spec.section.empty()) {
        throw sgp::format_error("bad section line: '" + line + "'");
      }
      spec.section = line.substr(1, line.size() - 2);
      continue;
    }
    auto const eq = line.find('=');
    if (eq == std::string::npos) {
      throw sgp::format_error("expected key = value: '" + line + "'");
    }
    auto trim = [](std::string t) {
      auto const a = t.find_first_not_of(" \t");
      auto const b = t.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
    };
    spec.values[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  if (spec.section.empty()) {
    throw sgp::format_error("spec file has no [section]");
  }
  return spec;
}

std::vector<int> parse_ints(const std::string& text) {
  std::istringstream ss(text);
  std::vector<int> out;
  int v;
  while (ss >> v) {
    out.push_back(v);
  }
  if (!ss.eof()) {
    throw sgp::format_error("expected integers: '" + text + "'");
  }
  return out;
}

std::string require(const ConstructSpec& spec, const std::string& key) {
  auto const it = spec.values.find(key);
  if (it == spec.values.end()) {
    throw sgp::format_error("missing key '" + key + "' in [" + spec.section
                            + "]");
  }
  return it->second;
}

struct Operand {
  std::optional<sgp::FiniteSemigroup> finite;
  std::optional<sgp::SymbolicSemigroup> symbolic;

  sgp::SymbolicSemigroup as_sym() const {
    return finite ? sgp::as_symbolic(*finite) : *symbolic;
  }
};

Operand load_operand(const std::string& token) {
  Operand op;
  if (is_witness_name(token)) {
    op.symbolic = sgp::witnesses::witness(token);
  } else {
    op.finite = sgp::FiniteSemigroup::from(sgp::read_table_file(token));
  }
  return op;
}

sgp::FiniteSemigroup require_finite(const Operand& op, const std::string& what) {
  if (!op.finite) {
    throw sgp::format_error(what + " must be a finite table file");
  }
  return *op.finite;
}

struct ConstructResult {
  std::optional<sgp::FiniteSemigroup> finite;
  std::optional<sgp::SymbolicSemigroup> symbolic;
};

ConstructResult run_construction(const ConstructSpec& spec) {
  ConstructResult result;
  if (spec.section == "semidirect") {
    auto const s = load_operand(require(spec, "s"));
    auto const t = load_operand(require(spec, "t"));
    auto const phi_kind = require(spec, "phi");
    if (s.finite && t.finite) {
      sgp::FiniteEndoAction phi;
      if (phi_kind == "identity") {
        phi = sgp::FiniteEndoAction::identity_action(*s.finite, *t.finite);
      } else if (phi_kind == "constant-identity") {
        phi = sgp::FiniteEndoAction::constant_identity_action(*s.finite,
                                                              *t.finite);
      } else if (phi_kind == "rows") {
        for (int u = 0; u < t.finite->order(); ++u) {
          phi.apply.push_back(
              parse_ints(require(spec, "phi." + std::to_string(u))));
        }
      } else {
        throw sgp::format_error("phi must be identity, constant-identity or rows");
      }
      result.finite = sgp::semidirect_product(*s.finite, *t.finite, phi);
    } else {
      if (phi_kind != "identity") {
        throw sgp::format_error(
            "symbolic semidirect operands support phi = identity only");
      }
      sgp::EndoAction phi{s.as_sym(), t.as_sym(),
                          [](const sgp::Term&, const sgp::Term& x) { return x; }};
      result.symbolic = sgp::semidirect_product_symbolic(phi, 500);
    }
  } else if (spec.section == "schutzenberger") {
    auto const s = load_operand(require(spec, "s"));
    auto const t = load_operand(require(spec, "t"));
    if (s.finite && t.finite) {
      result.finite = sgp::schutzenberger_product(*s.finite, *t.finite);
    } else {
      result.symbolic =
          sgp::schutzenberger_product_symbolic(s.as_sym(), t.as_sym());
    }
  } else if (spec.section == "rees" || spec.section == "rees0") {
    auto const s = require_finite(load_operand(require(spec, "s")), "s");
    int const num_i = std::stoi(require(spec, "i"));
    int const num_j = std::stoi(require(spec, "j"));
    sgp::SandwichMatrix p;
    for (int j = 0; j < num_j; ++j) {
      p.p.push_back(parse_ints(require(spec, "row." + std::to_string(j))));
    }
    result.finite = spec.section == "rees"
                        ? sgp::rees_matrix(s, num_i, num_j, p)
                        : sgp::rees_matrix_zero(s, num_i, num_j, p);
  } else if (spec.section == "brandt") {
    auto const s = require_finite(load_operand(require(spec, "s")), "s");
    result.finite = sgp::brandt_extension(s, std::stoi(require(spec, "i")));
  } else if (spec.section == "bruck-reilly") {
    auto const m = require_finite(load_operand(require(spec, "m")), "m");
    auto const theta_kind = require(spec, "theta");
    std::vector<int> theta;
    if (theta_kind == "identity") {
      for (int i = 0; i < m.order(); ++i) theta.push_back(i);
    } else if (theta_kind == "constant-identity") {
      if (!m.identity()) {
        throw sgp::format_error("constant-identity theta needs a monoid");
      }
      theta.assign(m.order(), *m.identity());
    } else {
      theta = parse_ints(theta_kind);
    }
    result.symbolic = sgp::bruck_reilly(m, theta);
  } else if (spec.section == "free-product") {
    std::istringstream ss(require(spec, "factors"));
    std::vector<sgp::SymbolicSemigroup> factors;
    std::string token;
    while (ss >> token) {
      factors.push_back(load_operand(token).as_sym());
    }
    auto const kind = spec.values.count("kind") ? spec.values.at("kind")
                                                : std::string("semigroup");
    if (kind == "monoid") {
      result.symbolic = sgp::monoid_free_product(std::move(factors)).sg;
    } else {
      result.symbolic = sgp::free_product(std::move(factors));
    }
  } else if (spec.section == "strong-semilattice") {
    sgp::StrongDecomposition d;
    d.y = require_finite(load_operand(require(spec, "y")), "y");
    for (int alpha = 0; alpha < d.y.order(); ++alpha) {
      d.components.push_back(require_finite(
          load_operand(require(spec, "component." + std::to_string(alpha))),
          "component"));
    }
    for (int a = 0; a < d.y.order(); ++a) {
      for (int b = 0; b < d.y.order(); ++b) {
        auto const key =
            "phi." + std::to_string(a) + "." + std::to_string(b);
        if (spec.values.count(key)) {
          d.transitions[{a, b}] = parse_ints(spec.values.at(key));
        }
      }
    }
    result.finite = sgp::strong_semilattice(d);
  } else {
    throw sgp::format_error("unknown section [" + spec.section + "]");
  }
  return result;
}

void print_chain(const sgp::ChainWitness& chain, std::ostream& out) {
  out << "chain of length " << chain.length() << ":\n";
  for (std::size_t i = 0; i < chain.elements.size(); ++i) {
    out << "  " << chain.elements[i].str();
    if (i + 1 < chain.elements.size()) {
      if (chain.multipliers[i]) {
        out << "  =  " << chain.elements[i + 1].str() << " * "
            << chain.multipliers[i]->str();
      }
      auto const& ev = chain.strictness[i];
      out << "  (strict: "
          << (ev.exhaustive ? "proved by exhaustion"
                            : "no reverse witness within budget "
                                  + std::to_string(ev.budget))
          << ")";
    }
    out << "\n";
  }
}

int cmd_construct(const std::string& spec_path, const std::string& out_path,
                  int show, int chain_len, std::uint64_t budget) {
  ConstructSpec spec;
  try {
    spec = parse_spec(spec_path);
  } catch (const sgp::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  ConstructResult result;
  try {
    result = run_construction(spec);
  } catch (const sgp::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitSemantic;
  }

  if (result.finite) {
    if (!out_path.empty()) {
      sgp::write_table_file(out_path, result.finite->raw());
      std::cout << "wrote " << out_path << " (order "
                << result.finite->order() << ")\n";
    } else {
      sgp::write_table(std::cout, result.finite->raw());
    }
    if (chain_len > 0) {
      auto const chain = sgp::find_ascending_chain(*result.finite, chain_len);
      if (chain) {
        print_chain(*chain, std::cout);
      } else {
        auto const poset = sgp::r_poset(*result.finite);
        std::cout << "not found (poset height " << poset.height() << ")\n";
      }
    }
    return kExitOk;
  }

  auto const& sym = *result.symbolic;
  std::cout << "symbolic result registered: " << sym.name << "\n";
  if (show > 0) {
    auto const elems = sym.prefix(show);
    for (auto const& e : elems) {
      std::cout << "  " << e.str() << "\n";
    }
  }
  if (chain_len > 0) {
    auto const chain = sgp::find_ascending_chain(sym, chain_len, budget);
    if (chain) {
      print_chain(*chain, std::cout);
    } else {
      std::cout << "not found within budget " << budget << "\n";
    }
  }
  return kExitOk;
}

int cmd_chains(const std::string& target, int length, std::uint64_t budget,
               bool phi_mode) {
  if (is_witness_name(target)) {
    auto const sym = sgp::witnesses::witness(target);
    if (phi_mode) {
      if (sym.name != "W2") {
        std::cerr << "error: --phi is available for witness W2 only\n";
        return kExitInput;
      }
      auto const phi = sgp::witnesses::w2_phi_action();
      auto const chain = sgp::phi_chain_search_bounded(phi, length, budget);
      if (!chain) {
        std::cout << "not found within budget " << budget << "\n";
        return kExitSemantic;
      }
      std::cout << "phi-chain of length " << chain->length() << ":\n";
      for (std::size_t i = 0; i < chain->bases.size(); ++i) {
        std::cout << "  " << chain->bases[i].str() << " (phi_"
                  << chain->indices[i].str() << "(S))^1";
        if (i + 1 < chain->bases.size()) {
          std::cout << "  [s = " << chain->s_witnesses[i].str()
                    << ", t = " << chain->t_witnesses[i].str()
                    << "; strict within budget "
                    << chain->strictness[i].budget << "]";
        }
        std::cout << "\n";
      }
      return kExitOk;
    }
    auto const chain = sgp::find_ascending_chain(sym, length, budget);
    if (!chain) {
      std::cout << "not found within budget " << budget << "\n";
      return kExitSemantic;
    }
    print_chain(*chain, std::cout);
    return kExitOk;
  }

  sgp::RawTable raw;
  try {
    raw = sgp::read_table_file(target);
  } catch (const sgp::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  auto const s = sgp::FiniteSemigroup::from(raw);
  auto const chain = sgp::find_ascending_chain(s, length);
  if (!chain) {
    auto const poset = sgp::r_poset(s);
    std::cout << "not found (poset height " << poset.height() << ")\n";
    return kExitOk;
  }
  print_chain(*chain, std::cout);
  return kExitOk;
}

int cmd_witness(const std::string& name, int show) {
  sgp::SymbolicSemigroup sym;
  try {
    sym = sgp::witnesses::witness(name);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::cout << sym.name;
  if (sym.identity) {
    std::cout << ", identity " << sym.identity->str();
  }
  if (sym.zero) {
    std::cout << ", zero " << sym.zero->str();
  }
  std::cout << "\n";
  auto const v = sgp::validate_symbolic(sym, 1000);
  std::cout << "validation (first " << v.terms_checked
            << " terms): " << (v.ok() ? "ok" : v.message) << "\n";
  auto const elems = sym.prefix(show);
  for (auto const& e : elems) {
    std::cout << "  " << e.str() << "\n";
  }
  return kExitOk;
}

int cmd_verify_paper(const std::string& suite, std::uint64_t seed,
                     bool no_timings, const std::string& mutation_token) {
  sgp::verify::Options options;
  options.suite = suite;
  options.seed = seed;
  options.timings = !no_timings;
  if (!mutation_token.empty()) {
    auto const kind = sgp::mutation::parse(mutation_token);
    if (!kind) {
      std::cerr << "error: unknown mutation '" << mutation_token << "'\n";
      return kExitInput;
    }
    options.inject = *kind;
  }
  auto const report = sgp::verify::run(options);
  std::cout << report.render(options.timings);
  return report.all_pass() ? kExitOk : kExitSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computational semigroup toolkit"};
  app.require_subcommand(1);

  std::string path, dot_path, out_path, target, name, spec_path;
  std::string suite = "all", mutation_token;
  bool classes = false, poset_flag = false, antichain = false;
  bool phi_mode = false, no_timings = false;
  int show = 0, length = 0, chain_len = 0;
  std::uint64_t budget = 200, seed = 1;

  auto* check = app.add_subcommand("check", "validate a table file");
  check->add_option("file", path)->required();

  auto* green = app.add_subcommand("green", "R-classes and their poset");
  green->add_option("file", target)->required();
  green->add_flag("--classes", classes);
  green->add_flag("--poset", poset_flag);
  green->add_option("--dot", dot_path);
  green->add_flag("--antichain", antichain);

  auto* construct = app.add_subcommand("construct", "drive a construction");
  construct->add_option("spec", spec_path)->required();
  construct->add_option("-o,--out", out_path);
  construct->add_option("--show", show);
  construct->add_option("--chains", chain_len);
  construct->add_option("--budget", budget);

  auto* chains = app.add_subcommand("chains", "ascending chain search");
  chains->add_option("target", name)->required();
  chains->add_option("--length", length)->required();
  chains->add_option("--budget", budget);
  chains->add_flag("--phi", phi_mode);

  auto* witness = app.add_subcommand("witness", "inspect a registered witness");
  witness->add_option("name", name)->required();
  witness->add_option("--show", show)->default_val(10);

  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");
  verify->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "finite", "symbolic"}));
  verify->add_option("--seed", seed);
  verify->add_flag("--no-timings", no_timings);
  verify->add_option("--inject-mutation", mutation_token);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed()) {
      return cmd_check(path);
    }
    if (green->parsed()) {
      return cmd_green(target, classes, poset_flag, dot_path, antichain);
    }
    if (construct->parsed()) {
      return cmd_construct(spec_path, out_path, show, chain_len, budget);
    }
    if (chains->parsed()) {
      return cmd_chains(name, length, budget, phi_mode);
    }
    if (witness->parsed()) {
      return cmd_witness(name, show);
    }
    if (verify->parsed()) {
      return cmd_verify_paper(suite, seed, no_timings, mutation_token);
    }
  } catch (const sgp::format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}
