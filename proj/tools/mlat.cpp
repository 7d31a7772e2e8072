#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>

#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/principle.hpp"
#include "mlat/text_format.hpp"
#include "mlat/zn.hpp"

using namespace mlat;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct FamilyArgs {
  std::string members;
  std::string kind;
  std::string primes;
  std::string generators;
  bool given_members = false;
};

struct Args {
  std::string file;
  std::string s;
  bool json = false;

  std::vector<std::string> gen;
  bool witnesses = false;
  FamilyArgs family;

  std::string variant = "all";
  bool converse = false;
  bool peps_all = false;
  std::string peps_above;
  std::string peps_within;

  std::size_t limit = 7;
  bool no_supplement = false;

  SuiteOptions suite;
  std::vector<std::string> only;

  unsigned modulus = 0;
  bool all_s = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0x5eed;

  std::string level = "multiplicative";
  std::optional<std::uint64_t> budget;
  std::size_t examples = 1;
  unsigned threads = 1;
};

unsigned parse_unsigned(const std::string& text, const char* what) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::BadParams, std::string("expected a number for ") + what + ", got '" + text + "'");
  }
  return value;
}

std::vector<std::string> labels_or_default(const MultLattice& m, const std::string& text,
                                           const std::vector<std::string>& from_file) {
  if (!text.empty()) return split_labels(text);
  if (!from_file.empty()) return from_file;
  return {m.lattice().label(m.one())};
}

MClosedSet parse_s(const MultLattice& m, const Args& args, const LatticeFile& file) {
  const auto labels = labels_or_default(m, args.s, file.s_labels);
  return validate_mclosed(m, parse_element_set(m.lattice(), labels));
}

std::vector<Element> parse_list(const MultLattice& m, const std::string& text) {
  std::vector<Element> out;
  for (const auto& label : split_labels(text)) out.push_back(m.lattice().at(label));
  return out;
}

ElementFamily parse_family(const MultLattice& m, const MClosedSet& s, const FamilyArgs& f) {
  if (f.given_members == !f.kind.empty()) throw Error(ErrorCode::BadParams, "give exactly one of --members or --kind");
  if (f.given_members) return {parse_element_set(m.lattice(), split_labels(f.members))};
  const auto kind = parse_family_kind(f.kind);
  if (!kind) throw Error(ErrorCode::UnknownName, "unknown family kind '" + f.kind + "'");
  FamilyParams params;
  params.s = s;
  params.primes = parse_element_set(m.lattice(), split_labels(f.primes));
  params.generators = parse_list(m, f.generators);
  return build_named_family(m, *kind, params);
}

void emit(const MultLattice& m, const std::vector<TheoremReport>& reports, bool json) {
  if (json) {
    std::cout << to_json(m.lattice(), reports) << "\n";
    return;
  }
  for (const auto& r : reports) std::cout << to_tsv(m.lattice(), r) << "\n";
}

int exit_for(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports) {
    if (r.failed()) return kExitFailed;
  }
  return 0;
}

std::string verdict_line(const FiniteLattice& l, const std::string& name, const Verdict& v) {
  std::string line = name + "\t" + std::string(to_string(v.outcome));
  const std::string w = format_witness(l, v.witness);
  if (!w.empty()) line += "\t" + w;
  return line;
}

std::string violation_text(const FiniteLattice& l, const AxiomViolation& v) {
  std::string out = v.axiom + " at (";
  for (std::size_t k = 0; k < v.witness.size(); ++k) {
    if (k > 0) out += (k == 1 && v.axiom == "distributivity") ? "; " : ",";
    out += l.label(v.witness[k].value);
  }
  return out + ")";
}

int cmd_gen(const Args& args) {
  if (args.gen.empty()) throw Error(ErrorCode::BadParams, "gen needs a structure name");
  const std::string& what = args.gen[0];
  auto argument = [&](const char* name) {
    if (args.gen.size() != 2) throw Error(ErrorCode::BadParams, "gen " + what + " needs <" + name + ">");
    return parse_unsigned(args.gen[1], name);
  };
  std::optional<MultLattice> m;
  if (what == "n5") {
    m = n5_meet();
  } else if (what == "k") {
    m = figure3_k();
  } else if (what == "zn") {
    m = ideal_lattice(argument("n"));
  } else if (what == "chain") {
    m = chain_lattice(argument("k"));
  } else if (what == "boolean") {
    m = boolean_lattice(argument("k"));
  } else {
    m = builtin(what);
  }
  std::cout << write_lattice_file(*m);
  return 0;
}

int cmd_check(const Args& args) {
  const LatticeFile file = read_lattice_file(args.file);
  const MultLattice m = load_mult_lattice(file);
  const FiniteLattice& l = m.lattice();
  std::cout << "class: " << to_string(m.mult_class());
  if (m.violation()) std::cout << "; violation: " << violation_text(l, *m.violation());
  std::cout << "\n";
  if (m.mult_class() == MultClass::Invalid) return kExitFailed;

  const LatticeClassFlags flags = lattice_class_flags(m);
  std::cout << "c-lattice: " << (flags.c_lattice ? "true" : "false") << "\n";
  std::cout << "r-lattice: " << (flags.r_lattice ? "true" : "false") << "\n";
  std::cout << verdict_line(l, "modular", is_modular(l)) << "\n";
  std::cout << verdict_line(l, "reduced", is_reduced(m)) << "\n";
  std::cout << "element\tnilpotent\tdense\tessential\tzero-divisor\tannihilator\tmeet-principal\tjoin-principal\n";
  for (Element a = 0; a < m.size(); ++a) {
    const ElementFlags f = element_predicates(m, a);
    std::cout << l.label(a);
    for (bool b : {f.nilpotent, f.dense, f.essential, f.zero_divisor, f.annihilator, f.meet_principal, f.join_principal}) {
      std::cout << '\t' << (b ? 1 : 0);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_sprimes(const Args& args) {
  const LatticeFile file = read_lattice_file(args.file);
  const MultLattice m = load_mult_lattice(file);
  const MClosedSet s = parse_s(m, args, file);
  std::cout << format_element_set(m.lattice(), spec_s(m, s)) << "\n";
  if (args.witnesses) {
    for (Element p = 0; p < m.size(); ++p) {
      std::cout << verdict_line(m.lattice(), m.lattice().label(p), is_sprime(m, s, p)) << "\n";
    }
  }
  return 0;
}

int cmd_family(const Args& args) {
  const LatticeFile file = read_lattice_file(args.file);
  const MultLattice m = load_mult_lattice(file);
  const MClosedSet s = parse_s(m, args, file);
  const ElementFamily f = parse_family(m, s, args.family);
  const FiniteLattice& l = m.lattice();
  std::cout << "members\t" << format_element_set(l, f.members) << "\n";
  if (f.contains(m.one())) {
    const StructuralFlags flags = structural_flags(m, f);
    std::cout << verdict_line(l, "semi-filter", flags.semi_filter) << "\n";
    std::cout << verdict_line(l, "filter", flags.filter) << "\n";
    std::cout << verdict_line(l, "m-closed", flags.m_closed) << "\n";
  }
  const Verdict ako = is_s_ako(m, f, s);
  const Verdict oka = is_s_oka(m, f, s);
  std::cout << verdict_line(l, "s-ako", ako) << "\n";
  std::cout << verdict_line(l, "s-oka", oka) << "\n";
  if (m.mult_class() != MultClass::Invalid && lattice_class_flags(m).r_lattice) {
    const ElementSet pr = principal_elements(m);
    if (s.members().subset_of(pr) && pr.subset_of(f.members)) {
      std::cout << verdict_line(l, "spr-oka", is_spr_oka(m, f, s)) << "\n";
    }
  }
  std::cout << "max-complement\t" << format_element_set(l, max_complement(m, f)) << "\n";
  return ako.passed() && oka.passed() ? 0 : kExitFailed;
}

int cmd_pep(const Args& args) {
  const LatticeFile file = read_lattice_file(args.file);
  const MultLattice m = load_mult_lattice(file);
  const MClosedSet s = parse_s(m, args, file);
  const ElementFamily f = parse_family(m, s, args.family);
  std::vector<TheoremReport> reports;
  const std::vector<std::pair<std::string, PepVariant>> variants{
      {"ako", PepVariant::Ako}, {"oka", PepVariant::Oka}, {"spr-oka", PepVariant::SprOka}};
  bool known = args.variant == "all";
  for (const auto& [name, v] : variants) {
    if (args.variant == "all" || args.variant == name) {
      known = true;
      reports.push_back(check_s_pep(m, s, f, v));
    }
  }
  if (!known) throw Error(ErrorCode::BadParams, "unknown variant '" + args.variant + "'");
  std::optional<TheoremReport> converse;
  if (args.converse) converse = check_converse_failure(m, s, f);
  if (args.peps_all) reports.push_back(check_s_peps(m, s, f, PepsMode::all()));
  if (!args.peps_above.empty()) {
    reports.push_back(check_s_peps(m, s, f, PepsMode::above_element(m.lattice().at(args.peps_above))));
  }
  if (!args.peps_within.empty()) {
    reports.push_back(check_s_peps(m, s, f, PepsMode::within(parse_element_set(m.lattice(), split_labels(args.peps_within)))));
  }
  const int status = exit_for(reports);
  if (converse) reports.push_back(*converse);
  emit(m, reports, args.json);
  return status;
}

int cmd_audit(const Args& args) {
  const MultLattice m = load_mult_lattice(read_lattice_file(args.file));
  const AuditResult a = exhaustive_audit(m, {.max_elements = args.limit, .supplement = !args.no_supplement});
  std::vector<TheoremReport> failures;
  for (const auto& r : a.reports) {
    if (r.failed()) failures.push_back(r);
  }
  if (args.json) {
    nlohmann::ordered_json out{{"instances", a.instances},
                               {"applicable", a.instances - a.not_applicable},
                               {"vacuous", a.vacuous},
                               {"failures", a.failures},
                               {"supplement_instances", a.supplement_instances},
                               {"supplement_failures", a.supplement_failures},
                               {"failed_reports", nlohmann::json::parse(to_json(m.lattice(), failures))}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "instances\t" << a.instances << "\n"
              << "applicable\t" << a.instances - a.not_applicable << "\n"
              << "vacuous\t" << a.vacuous << "\n"
              << "failures\t" << a.failures << "\n"
              << "supplement-instances\t" << a.supplement_instances << "\n"
              << "supplement-failures\t" << a.supplement_failures << "\n";
    emit(m, failures, false);
  }
  return a.failures + a.supplement_failures == 0 ? 0 : kExitFailed;
}

int cmd_suite(const Args& args) {
  const MultLattice m = load_mult_lattice(read_lattice_file(args.file));
  std::vector<TheoremReport> reports;
  if (args.only.empty()) {
    reports = run_theorem_suite(m, args.suite);
  } else {
    for (const auto& id : args.only) reports.push_back(run_suite_member(m, id, args.suite));
  }
  emit(m, reports, args.json);
  return exit_for(reports);
}

int cmd_crosscheck(const Args& args) {
  CrosscheckOptions options;
  options.seed = args.seed;
  TheoremReport r;
  if (args.all_s) {
    options.samples = args.samples == 0 ? 1000 : args.samples;
    r = crosscheck_all(args.modulus, options);
  } else {
    if (args.s.empty()) throw Error(ErrorCode::BadParams, "crosscheck needs --s or --all-s");
    std::vector<unsigned> residues;
    for (const auto& t : split_labels(args.s)) residues.push_back(parse_unsigned(t, "a residue"));
    if (args.samples != 0) options.samples = args.samples;
    r = crosscheck(args.modulus, residues, options);
  }
  const MultLattice m = ideal_lattice(args.modulus);
  emit(m, {r}, args.json);
  return exit_for({r});
}

int cmd_search(const Args& args) {
  const LatticeFile file = read_lattice_file(args.file);
  const auto level = parse_search_level(args.level);
  if (!level) throw Error(ErrorCode::BadParams, "unknown level '" + args.level + "'");
  SearchOptions options;
  options.level = *level;
  options.budget = args.budget;
  options.max_examples = args.examples;
  options.threads = args.threads;
  const SearchResult result = search_multiplications(file.lattice, options);
  std::cout << "count: " << result.count << (result.complete ? "" : " (incomplete)") << "\n";
  for (std::size_t k = 0; k < result.examples.size(); ++k) {
    std::cout << "\n# example " << k + 1 << "\n" << write_lattice_file(file.lattice, result.examples[k]);
  }
  return 0;
}

void add_family_options(CLI::App* cmd, Args& args) {
  cmd->add_option("--s", args.s, "Labels of S (default: the file's s: line, else {1})");
  cmd->add_option("--members", args.family.members, "Explicit family members")
      ->each([&args](const std::string&) { args.family.given_members = true; });
  cmd->add_option("--kind", args.family.kind, "Named family kind");
  cmd->add_option("--primes", args.family.primes, "S-prime parameters for avoiding_primes");
  cmd->add_option("--generators", args.family.generators, "Generators for product_closure");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification tool for finite multiplicative lattices and V-lattices"};
  app.require_subcommand(1);
  Args args;

  auto* gen = app.add_subcommand("gen", "Emit a lattice file: n5 | zn <n> | k | chain <k> | boolean <k>");
  gen->add_option("structure", args.gen)->required()->expected(1, 2);

  auto* check = app.add_subcommand("check", "Classify the multiplication and print flags");
  check->add_option("file", args.file)->required();

  auto* sprimes = app.add_subcommand("sprimes", "Print Spec_S");
  sprimes->add_option("file", args.file)->required();
  sprimes->add_option("--s", args.s, "Labels of S");
  sprimes->add_flag("--witnesses", args.witnesses, "Also print one verdict per element");

  auto* family = app.add_subcommand("family", "Structural and S-Ako/S-Oka checks for a family");
  family->add_option("file", args.file)->required();
  add_family_options(family, args);

  auto* pep = app.add_subcommand("pep", "Run the S-prime element principle on one family");
  pep->add_option("file", args.file)->required();
  add_family_options(pep, args);
  pep->add_option("--variant", args.variant, "ako | oka | spr-oka | all");
  pep->add_flag("--converse", args.converse, "Also test for the converse-failure configuration");
  pep->add_flag("--peps-all", args.peps_all, "Supplement with the whole carrier as semi-filter");
  pep->add_option("--peps-above", args.peps_above, "Supplement with the up-set of this element");
  pep->add_option("--peps-within", args.peps_within, "Supplement with the given semi-filter");
  pep->add_flag("--json", args.json);

  auto* audit = app.add_subcommand("audit", "Exhaustive principle audit over every S and F");
  audit->add_option("file", args.file)->required();
  audit->add_option("--limit", args.limit, "Largest carrier to audit");
  audit->add_flag("--no-supplement", args.no_supplement, "Skip the semi-filter supplement");
  audit->add_flag("--json", args.json);

  auto* suite = app.add_subcommand("suite", "Run the theorem registry");
  suite->add_option("file", args.file)->required();
  suite->add_option("--samples", args.suite.samples, "Sampled families above the exhaustive limit");
  suite->add_option("--seed", args.suite.seed);
  suite->add_option("--exhaustive-limit", args.suite.exhaustive_limit);
  suite->add_option("--only", args.only, "Run just these members")->delimiter(',');
  suite->add_flag("--json", args.json);

  auto* cross = app.add_subcommand("crosscheck", "Compare Z_n ring computations with Id(Z_n)");
  cross->add_option("n", args.modulus)->required();
  cross->add_option("--s", args.s, "Residues of S");
  cross->add_flag("--all-s", args.all_s, "Every valid S");
  cross->add_option("--samples", args.samples, "Sampled families");
  cross->add_option("--seed", args.seed);
  cross->add_flag("--json", args.json);

  auto* search = app.add_subcommand("search-mult", "Count multiplications on a lattice");
  search->add_option("file", args.file)->required();
  search->add_option("--level", args.level, "multiplicative | v_lattice");
  search->add_option("--budget", args.budget, "Node budget");
  search->add_option("--examples", args.examples, "Example tables to print");
  search->add_option("--threads", args.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(args);
    if (*check) return cmd_check(args);
    if (*sprimes) return cmd_sprimes(args);
    if (*family) return cmd_family(args);
    if (*pep) return cmd_pep(args);
    if (*audit) return cmd_audit(args);
    if (*suite) return cmd_suite(args);
    if (*cross) return cmd_crosscheck(args);
    if (*search) return cmd_search(args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
