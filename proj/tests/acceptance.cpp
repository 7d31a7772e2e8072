// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/principle.hpp"
#include "mlat/text_format.hpp"
#include "mlat/zn.hpp"

using namespace mlat;

namespace {

struct Criterion {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    ok = false;
    detail += (detail.empty() ? "" : "; ") + what;
  }
};

ElementSet set_of(const MultLattice& m, const std::string& labels) {
  return parse_element_set(m.lattice(), split_labels(labels));
}

MClosedSet s_of(const MultLattice& m, const std::string& labels) { return validate_mclosed(m, set_of(m, labels)); }

ElementFamily family_of(const MultLattice& m, const std::string& labels) { return {set_of(m, labels)}; }

std::string labels_of(const MultLattice& m, ElementSet set) { return format_element_set(m.lattice(), set); }

std::string witness(const MultLattice& m, const Verdict& v) {
  std::string out;
  for (const auto& b : v.witness) out += (out.empty() ? "" : " ") + b.role + "=" + m.lattice().label(b.value);
  return out;
}

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string ms(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f ms", value);
  return buf;
}

int failures = 0;

void run(const std::string& name, const std::function<Criterion()>& body) {
  Criterion o;
  try {
    o = body();
  } catch (const Error& e) {
    o.ok = false;
    o.detail = std::string("threw ") + e.what();
  }
  if (!o.ok) ++failures;
  std::printf("%s %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

struct SpecCase {
  std::string s;
  std::string expected;
};

Criterion spec_cases(const MultLattice& m, const std::vector<SpecCase>& cases) {
  Criterion o;
  std::vector<MClosedSet> sets;
  for (const auto& c : cases) sets.push_back(s_of(m, c.s));
  double worst = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    const ElementSet got = spec_s(m, sets[k]);
    const double t = millis_since(start);
    worst = std::max(worst, t);
    o.require(got == set_of(m, cases[k].expected),
              "S={" + cases[k].s + "} gave {" + labels_of(m, got) + "}, want {" + cases[k].expected + "}");
    o.require(t < 1.0, "S={" + cases[k].s + "} took " + ms(t));
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " sets exact, slowest " + ms(worst);
  return o;
}

std::vector<MultLattice> small_catalog() {
  std::vector<MultLattice> out{n5_meet()};
  for (unsigned k = 2; k <= 6; ++k) out.push_back(chain_lattice(k));
  out.push_back(boolean_lattice(2));
  for (unsigned n : {4U, 6U, 8U, 9U, 12U}) out.push_back(ideal_lattice(n));
  out.push_back(figure3_k());
  return out;
}

// Runs suite members over hosts; returns applicable-run and failure counts.
void members_over(const std::vector<MultLattice>& hosts, const std::vector<std::string>& ids, Criterion& o,
                  std::size_t& applicable) {
  for (const MultLattice& m : hosts) {
    for (const auto& id : ids) {
      const TheoremReport r = run_suite_member(m, id);
      if (r.status == ReportStatus::Pass || r.status == ReportStatus::VacuousPass) ++applicable;
      o.require(!r.failed(), id + " on " + m.name() + " [" + to_tsv(m.lattice(), r) + "]");
    }
  }
}

const std::vector<unsigned> kModuli{6, 12, 24, 30, 36, 60};

}  // namespace

int main() {
  run("N5 spectra", [] {
    return spec_cases(n5_meet(), {{"1", "b c"}, {"1 c", "0 a b"}, {"1 a", "0 c"}});
  });

  run("Id(Z12) spectra", [] {
    return spec_cases(ideal_lattice(12), {{"(1) (4)", "(0) (6) (3)"}, {"(1) (3)", "(2) (6)"}});
  });

  run("Id(Z12) Ako/Oka examples", [] {
    Criterion o;
    const MultLattice z = ideal_lattice(12);
    const ElementFamily f = family_of(z, "(1) (2) (4)");
    o.require(is_s_ako(z, f, s_of(z, "(1) (4)")).passed(), "{(1),(2),(4)} not S-Ako");
    o.require(is_s_oka(z, f, s_of(z, "(1) (4)")).passed(), "{(1),(2),(4)} not S-Oka");
    const ElementFamily g = family_of(z, "(1) (6)");
    o.require(is_s_oka(z, g, s_of(z, "(1)")).passed(), "{(1),(6)} not S-Oka");
    const Verdict ako = is_s_ako(z, g, s_of(z, "(1)"));
    o.require(ako.failed() && witness(z, ako) == "s=(1) i=(0) a=(6) b=(6)", "Ako witness '" + witness(z, ako) + "'");
    if (o.ok) o.detail = "Ako witness " + witness(z, ako);
    return o;
  });

  run("converse failure on Id(Z12)", [] {
    Criterion o;
    const MultLattice z = ideal_lattice(12);
    const ElementFamily f = family_of(z, "(4) (6) (2) (1)");
    const MClosedSet s = s_of(z, "(1)");
    const ElementSet maxima = max_complement(z, f);
    o.require(labels_of(z, maxima) == "(3)", "Max(F') = {" + labels_of(z, maxima) + "}");
    o.require(maxima.subset_of(spec_s(z, s)), "Max(F') not S-prime");
    const Verdict oka = is_s_oka(z, f, s);
    const Verdict ako = is_s_ako(z, f, s);
    o.require(witness(z, oka) == "s=(1) i=(0) a=(6) residual=(2)", "Oka witness '" + witness(z, oka) + "'");
    o.require(witness(z, ako) == "s=(1) i=(0) a=(6) b=(6)", "Ako witness '" + witness(z, ako) + "'");
    o.require(check_converse_failure(z, s, f).status == ReportStatus::Pass, "converse detector did not fire");
    if (o.ok) o.detail = "Max(F')={(3)}; Oka " + witness(z, oka) + "; Ako " + witness(z, ako);
    return o;
  });

  run("N5 multiplication search", [] {
    Criterion o;
    const MultLattice n5 = n5_meet();
    const auto start = std::chrono::steady_clock::now();
    const SearchResult mult = search_multiplications(n5.lattice(), SearchOptions{SearchLevel::Multiplicative, {}, 1, 1});
    const SearchResult vlat = search_multiplications(n5.lattice(), SearchOptions{SearchLevel::VLattice, {}, 1, 1});
    const double t = millis_since(start);
    o.require(mult.complete && vlat.complete, "search incomplete");
    o.require(mult.count == 0, "multiplicative count " + std::to_string(mult.count));
    o.require(vlat.count >= 1, "v_lattice count " + std::to_string(vlat.count));
    o.require(t < 10000, "took " + ms(t));
    o.detail = "multiplicative=" + std::to_string(mult.count) + " v_lattice=" + std::to_string(vlat.count) + " in " +
               ms(t);
    return o;
  });

  run("lattice K", [] {
    Criterion o;
    const MultLattice k = figure3_k();
    const MClosedSet s = s_of(k, "1");
    const ElementFamily f = build_named_family(k, FamilyKind::NonAnnihilator);
    o.require(labels_of(k, f.members) == "a b c 1", "non-annihilators {" + labels_of(k, f.members) + "}");
    const Verdict ako = is_s_ako(k, f, s);
    const Element zero = k.lattice().at("0"), a = k.lattice().at("a"), b = k.lattice().at("b");
    o.require(ako.failed() && ako.get("i") == zero, "Ako verdict '" + witness(k, ako) + "'");
    o.require(violates_s_ako(k, f, k.one(), zero, a, b), "(i=0, a, b) does not refute Ako");
    o.require(is_s_oka(k, f, s).passed(), "not S-Oka");
    const ElementSet maxima = max_complement(k, f);
    o.require(labels_of(k, maxima) == "d", "Max = {" + labels_of(k, maxima) + "}");
    o.require(is_prime(k, k.lattice().at("d")).passed(), "d not prime");
    if (o.ok) o.detail = "first Ako witness " + witness(k, ako) + "; Max={d}, d prime";
    return o;
  });

  run("soundness audits", [] {
    Criterion o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t instances = 0, supplements = 0, applicable = 0;
    const auto hosts = small_catalog();
    for (const MultLattice& m : hosts) {
      const AuditResult a = exhaustive_audit(m);
      instances += a.instances;
      supplements += a.supplement_instances;
      o.require(a.failures == 0, std::to_string(a.failures) + " principle failures on " + m.name());
      o.require(a.supplement_failures == 0, std::to_string(a.supplement_failures) + " supplement failures on " + m.name());
    }
    members_over(hosts, {"filter-mclosed-ako-oka", "oka-divisor-equivalence", "ako-implies-oka"}, o, applicable);
    const double t = millis_since(start);
    o.require(t < 60000, "took " + ms(t));
    const std::string counts = std::to_string(instances) + " principle instances, " + std::to_string(supplements) +
                               " supplement instances, " + std::to_string(applicable) + " applicable lemma runs, " +
                               ms(t);
    o.detail = o.ok ? counts : o.detail + " (" + counts + ")";
    return o;
  });

  run("constructed families", [] {
    Criterion o;
    std::size_t applicable = 0;
    members_over(small_catalog(), {"avoiding-primes-ako", "above-s-ako", "star-zero-ako", "dense-ako"}, o, applicable);
    const std::string counts = std::to_string(applicable) + " applicable runs";
    o.detail = o.ok ? counts : o.detail + " (" + counts + ")";
    return o;
  });

  run("meet-principal lemmas on Id(Z_n)", [] {
    Criterion o;
    const auto start = std::chrono::steady_clock::now();
    std::size_t applicable = 0;
    for (unsigned n : kModuli) {
      const MultLattice m = ideal_lattice(n);
      for (const char* id : {"meet-principal-product", "meet-principal-residual"}) {
        const TheoremReport r = run_suite_member(m, id);
        if (r.status == ReportStatus::Pass) ++applicable;
        o.require(r.status == ReportStatus::Pass, to_tsv(m.lattice(), r));
      }
    }
    const double t = millis_since(start);
    o.require(t < 5000, "took " + ms(t));
    if (o.ok) o.detail = std::to_string(applicable) + " passing runs in " + ms(t);
    return o;
  });

  run("ring oracle equivalence", [] {
    Criterion o;
    const auto start = std::chrono::steady_clock::now();
    for (unsigned n : kModuli) {
      const TheoremReport r = crosscheck_all(n);
      o.require(r.status == ReportStatus::Pass, to_tsv(ideal_lattice(n).lattice(), r));
    }
    const double t = millis_since(start);
    o.require(t < 60000, "took " + ms(t));
    if (o.ok) o.detail = "n in {6,12,24,30,36,60}, 1000 sampled families each, " + ms(t);
    return o;
  });

  run("residual prime equivalence", [] {
    Criterion o;
    std::size_t pairs = 0;
    for (unsigned n : kModuli) {
      const MultLattice m = ideal_lattice(n);
      for (const MClosedSet& s : enumerate_mclosed_sets(m)) {
        for (Element p : m.lattice().elements()) {
          if (p == m.one() || s.members().intersects(m.lattice().down_set(p))) continue;
          ++pairs;
          const Verdict v = residual_prime_equiv(m, s, p);
          o.require(v.passed(), "n=" + std::to_string(n) + " S={" + labels_of(m, s.members()) + "} p=" +
                                    m.lattice().label(p) + ": " + v.reason);
        }
      }
    }
    if (o.ok) o.detail = std::to_string(pairs) + " (S, p) pairs";
    return o;
  });

  run("essential member on Id(Z30) and Id(Z12)", [] {
    Criterion o;
    const MultLattice z30 = ideal_lattice(30), z12 = ideal_lattice(12);
    const std::string a = to_tsv(z30.lattice(), run_suite_member(z30, "essential-max-prime"));
    const std::string b = to_tsv(z12.lattice(), run_suite_member(z12, "essential-max-prime"));
    o.require(a == "essential-max-prime\tpass\tmax=(5)\tmax=(3)\tmax=(2)", "Z30 '" + a + "'");
    o.require(b == "essential-max-prime\tnot-applicable\tunmet=reduced\tnilpotent=(6)", "Z12 '" + b + "'");
    if (o.ok) o.detail = "Z30 maxima (5) (3) (2); Z12 unmet reduced, nilpotent (6)";
    return o;
  });

  run("finite product and supplement on Id(Z12)", [] {
    Criterion o;
    const MultLattice z = ideal_lattice(12);
    const std::vector<Element> gens{z.lattice().at("(2)"), z.lattice().at("(3)")};
    const ProductClosure pc = product_closure(z, gens);
    const Element zero = z.lattice().at("(0)");
    o.require(pc.products.contains(zero), "(0) not reached");
    std::string word;
    if (auto it = pc.words.find(zero); it != pc.words.end()) {
      o.require(it->second.size() == 3, "word length " + std::to_string(it->second.size()));
      for (Element e : it->second) word += (word.empty() ? "" : "*") + z.lattice().label(e);
    }
    const ElementFamily f{up_closure(z.lattice(), pc.products)};
    const TheoremReport peps = check_s_peps(z, s_of(z, "(1)"), f, PepsMode::all());
    o.require(peps.status == ReportStatus::Pass, to_tsv(z.lattice(), peps));
    const TheoremReport fp = check_finite_product_zero(z, gens);
    o.require(fp.status == ReportStatus::Pass, to_tsv(z.lattice(), fp));
    if (o.ok) o.detail = "(0) = " + word + ", supplement passes";
    return o;
  });

  const MultLattice z12 = ideal_lattice(12);
  for (const char* id : {"compact-max-prime", "noetherian-iff-primes-compact"}) {
    const TheoremReport r = run_suite_member(z12, id);
    std::printf("INFO %s: %s (%s)\n", id, std::string(to_string(r.status)).c_str(), r.note.c_str());
  }

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
