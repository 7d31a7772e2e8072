#include "mlat/principle.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "mlat/error.hpp"

namespace mlat {

std::string_view to_string(PepVariant variant) {
  switch (variant) {
    case PepVariant::Ako: return "ako";
    case PepVariant::Oka: return "oka";
    case PepVariant::SprOka: return "spr-oka";
  }
  return "unknown";
}

namespace {

NamedCheck chains_bounded() {
  return {"chains-bounded", Verdict::pass("every chain of a finite carrier has an upper bound")};
}

Verdict maxima_avoid_s(const MultLattice& m, const MClosedSet& s, ElementSet maxima) {
  for (Element x : maxima) {
    for (Element t : s.members()) {
      if (m.leq(t, x)) return Verdict::fail("a maximal element of F' contains a member of S", {{"m", x}, {"t", t}});
    }
  }
  return Verdict::pass();
}

// Max(F') within Spec_S(L), vacuous when F' has no maximal element.
Verdict maxima_are_sprime(const MultLattice& m, const MClosedSet& s, ElementSet maxima) {
  if (maxima.empty()) return Verdict::vacuous("F' has no maximal element");
  for (Element x : maxima) {
    Verdict v = is_sprime(m, s, x);
    if (v.failed()) {
      std::vector<Binding> w{{"m", x}};
      w.insert(w.end(), v.witness.begin(), v.witness.end());
      return Verdict::fail("maximal element of F' is not S-prime", std::move(w));
    }
  }
  return Verdict::pass("Max(F') is S-prime", {});
}

Verdict host_is_vlattice(const MultLattice& m) {
  if (m.mult_class() == MultClass::Invalid) return Verdict::fail("multiplication is not a V-lattice multiplication", {});
  return Verdict::pass();
}

Verdict host_is_c_lattice(const MultLattice& m) {
  if (!lattice_class_flags(m).c_lattice) {
    return Verdict::fail(std::string("host is ") + std::string(to_string(m.mult_class())), {});
  }
  return Verdict::pass();
}

Verdict host_is_r_lattice(const MultLattice& m) {
  if (!lattice_class_flags(m).r_lattice) return Verdict::fail("host is not modular and principally generated", {});
  return Verdict::pass();
}

std::vector<Binding> family_binding(ElementSet members, const char* role) {
  std::vector<Binding> out;
  for (Element e : members) out.push_back({role, e});
  return out;
}

std::vector<Binding> prefixed(const std::string& prefix, const std::vector<Binding>& witness) {
  std::vector<Binding> out;
  for (const auto& b : witness) out.push_back({prefix + b.role, b.value});
  return out;
}

// Supplement implication for a semi-filter G:
// (Spec_S within G) subset of F  =>  G subset of F.
Verdict supplement_implication(ElementSet spec, ElementSet family, ElementSet g) {
  const ElementSet primes_outside = (spec & g) - family;
  if (!primes_outside.empty()) {
    return {Outcome::VacuousPass, "an S-prime element of the semi-filter lies outside F", {{"sprime", primes_outside.first()}}};
  }
  const ElementSet escaped = g - family;
  if (!escaped.empty()) return Verdict::fail("semi-filter is not contained in F", {{"element", escaped.first()}});
  return Verdict::pass("semi-filter contained in F");
}

TheoremReport make_report(const MultLattice& m, std::string id) {
  TheoremReport r;
  r.id = std::move(id);
  r.host = m.name();
  return r;
}

}  // namespace

TheoremReport check_s_pep(const MultLattice& m, const MClosedSet& s, const ElementFamily& f, PepVariant variant) {
  TheoremReport r = make_report(m, "s-pep-" + std::string(to_string(variant)));
  r.preconditions.push_back({"v-lattice", host_is_vlattice(m)});
  if (r.preconditions.back().verdict.failed()) {
    settle(r);
    return r;
  }
  switch (variant) {
    case PepVariant::Ako:
      r.preconditions.push_back({"family-s-ako", is_s_ako(m, f, s)});
      break;
    case PepVariant::Oka:
      r.preconditions.push_back({"family-s-oka", is_s_oka(m, f, s)});
      break;
    case PepVariant::SprOka: {
      r.preconditions.push_back({"r-lattice", host_is_r_lattice(m)});
      if (r.preconditions.back().verdict.failed()) break;
      const ElementSet pr = principal_elements(m);
      if (!s.members().subset_of(pr)) {
        r.preconditions.push_back(
            {"s-within-principal", Verdict::fail("S is not within Pr(L)", {{"s", (s.members() - pr).first()}})});
        break;
      }
      if (!pr.subset_of(f.members)) {
        r.preconditions.push_back({"principal-within-family",
                                   Verdict::fail("Pr(L) is not within F", {{"principal", (pr - f.members).first()}})});
        break;
      }
      if (!s.members().subset_of(f.members)) is_s_oka(m, f, s);  // raises SNotContained
      r.preconditions.push_back({"family-spr-oka", is_spr_oka(m, f, s)});
      break;
    }
  }
  const ElementSet maxima = max_complement(m, f);
  r.preconditions.push_back({"max-complement-avoids-s", maxima_avoid_s(m, s, maxima)});
  r.preconditions.push_back(chains_bounded());
  for (const auto& pre : r.preconditions) {
    if (pre.verdict.failed()) {
      settle(r);
      return r;
    }
  }
  r.conclusion = maxima_are_sprime(m, s, maxima);
  settle(r);
  return r;
}

TheoremReport check_converse_failure(const MultLattice& m, const MClosedSet& s, const ElementFamily& f) {
  TheoremReport r = make_report(m, "s-pep-converse");
  r.preconditions.push_back({"v-lattice", host_is_vlattice(m)});
  if (!s.members().subset_of(f.members)) {
    r.preconditions.push_back(
        {"s-contained", Verdict::fail("S is not within F", {{"s", (s.members() - f.members).first()}})});
  }
  for (const auto& pre : r.preconditions) {
    if (pre.verdict.failed()) {
      settle(r);
      return r;
    }
  }
  const ElementSet maxima = max_complement(m, f);
  const Verdict msp = maxima_are_sprime(m, s, maxima);
  if (msp.outcome != Outcome::Pass) {
    r.conclusion = Verdict::fail(msp.is_vacuous() ? "F' has no maximal element" : "F' is not an MSP family", msp.witness);
    settle(r);
    return r;
  }
  const Verdict ako = is_s_ako(m, f, s);
  const Verdict oka = is_s_oka(m, f, s);
  if (ako.passed() || oka.passed()) {
    r.conclusion = Verdict::fail(ako.passed() ? "F is S-Ako" : "F is S-Oka", family_binding(f.members, "F"));
  } else {
    std::vector<Binding> w = family_binding(maxima, "max");
    auto a = prefixed("ako.", ako.witness);
    auto o = prefixed("oka.", oka.witness);
    w.insert(w.end(), a.begin(), a.end());
    w.insert(w.end(), o.begin(), o.end());
    r.conclusion = Verdict::pass("MSP family whose complement is neither S-Ako nor S-Oka", std::move(w));
  }
  settle(r);
  return r;
}

std::vector<ElementFamily> find_converse_failures(const MultLattice& m, const MClosedSet& s) {
  const std::size_t n = m.size();
  if (n > 20) throw Error(ErrorCode::LimitExceeded, "converse search is limited to 20 elements");
  const std::vector<Element> free = s.members().complement(n).to_vector();
  std::vector<ElementFamily> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    ElementFamily f{s.members()};
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((mask >> k) & 1U) f.members.insert(free[k]);
    }
    if (check_converse_failure(m, s, f).status == ReportStatus::Pass) out.push_back(f);
  }
  return out;
}

TheoremReport check_s_peps(const MultLattice& m, const MClosedSet& s, const ElementFamily& f, const PepsMode& mode) {
  TheoremReport r = make_report(m, "s-peps");
  r.preconditions.push_back({"v-lattice", host_is_vlattice(m)});
  if (r.preconditions.back().verdict.failed()) {
    settle(r);
    return r;
  }
  const Verdict ako = is_s_ako(m, f, s);
  const Verdict oka = ako.passed() ? Verdict::pass() : is_s_oka(m, f, s);
  if (ako.passed()) {
    r.preconditions.push_back({"family-s-ako-or-s-oka", Verdict::pass("S-Ako")});
  } else if (oka.passed()) {
    r.preconditions.push_back({"family-s-ako-or-s-oka", Verdict::pass("S-Oka")});
  } else {
    r.preconditions.push_back({"family-s-ako-or-s-oka", Verdict::fail("F is neither S-Ako nor S-Oka", oka.witness)});
  }
  r.preconditions.push_back({"max-complement-avoids-s", maxima_avoid_s(m, s, max_complement(m, f))});
  r.preconditions.push_back(chains_bounded());

  ElementSet g;
  switch (mode.kind) {
    case PepsMode::Kind::All:
      r.id = "s-peps-all";
      g = m.lattice().elements();
      break;
    case PepsMode::Kind::Above:
      r.id = "s-peps-above";
      g = m.lattice().up_set(mode.above);
      break;
    case PepsMode::Kind::SemiFilter:
      r.id = "s-peps-semifilter";
      g = mode.semifilter;
      if (!is_up_closed(m.lattice(), g)) {
        Element lower = 0;
        Element upper = 0;
        for (Element x : g) {
          const ElementSet out = m.lattice().up_set(x) - g;
          if (!out.empty()) {
            lower = x;
            upper = out.first();
            break;
          }
        }
        r.preconditions.push_back({"semi-filter", Verdict::fail("not upward closed", {{"lower", lower}, {"upper", upper}})});
      } else {
        r.preconditions.push_back({"semi-filter", Verdict::pass()});
      }
      break;
  }
  for (const auto& pre : r.preconditions) {
    if (pre.verdict.failed()) {
      settle(r);
      return r;
    }
  }
  r.conclusion = supplement_implication(spec_s(m, s), f.members, g);
  settle(r);
  return r;
}

TheoremReport check_finite_product_zero(const MultLattice& m, const std::vector<Element>& generators) {
  TheoremReport r = make_report(m, "finite-product-zero");
  r.preconditions.push_back({"c-lattice", host_is_c_lattice(m)});
  if (r.preconditions.back().verdict.failed()) {
    settle(r);
    return r;
  }
  const MClosedSet unit = unit_mclosed(m);
  const ElementFamily f = build_named_family(m, FamilyKind::ProductClosure, FamilyParams{std::nullopt, {}, generators});
  const StructuralFlags flags = structural_flags(m, f);
  r.preconditions.push_back({"family-filter", flags.filter});
  r.preconditions.push_back({"family-m-closed", flags.m_closed});
  r.preconditions.push_back({"family-s-ako", is_s_ako(m, f, unit)});

  // Every prime must contain some generator.
  Verdict covered = Verdict::pass();
  for (Element p : prime_elements(m)) {
    bool hit = false;
    for (Element g : generators) hit = hit || m.leq(g, p);
    if (!hit) {
      covered = Verdict::fail("a prime contains no generator", {{"p", p}});
      break;
    }
  }
  r.preconditions.push_back({"primes-contain-generator", covered});
  r.preconditions.push_back(chains_bounded());
  for (const auto& pre : r.preconditions) {
    if (pre.verdict.failed()) {
      settle(r);
      return r;
    }
  }

  const Verdict principle = maxima_are_sprime(m, unit, max_complement(m, f));
  const Verdict supplement = supplement_implication(prime_elements(m), f.members, m.lattice().elements());
  if (principle.failed()) {
    r.conclusion = principle;
  } else if (supplement.outcome != Outcome::Pass) {
    r.conclusion = Verdict::fail("supplement did not place every element in F", supplement.witness);
  } else {
    const ProductClosure closure = product_closure(m, generators);
    if (!closure.products.contains(m.zero())) {
      r.conclusion = Verdict::fail("no finite product of the generators is zero", {});
    } else {
      std::vector<Binding> w;
      const auto& word = closure.words.at(m.zero());
      for (std::size_t k = 0; k < word.size(); ++k) w.push_back({"factor-" + std::to_string(k + 1), word[k]});
      r.conclusion = Verdict::pass("a finite product of generators is zero", std::move(w));
    }
  }
  settle(r);
  return r;
}

AuditResult exhaustive_audit(const MultLattice& m, const AuditLimits& limits) {
  if (m.mult_class() == MultClass::Invalid) {
    throw Error(ErrorCode::UnsupportedClass, "'" + m.name() + "' does not carry a V-lattice multiplication");
  }
  const std::size_t n = m.size();
  if (n > limits.max_elements) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(n) + " elements exceeds the audit limit of " +
                                              std::to_string(limits.max_elements) + "; use the sampled suite instead");
  }
  const bool r_lattice = lattice_class_flags(m).r_lattice;
  const ElementSet pr = r_lattice ? principal_elements(m) : ElementSet{};

  std::vector<ElementSet> semifilters;
  if (limits.supplement) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const ElementSet g = ElementSet::from_bits(bits);
      if (is_up_closed(m.lattice(), g)) semifilters.push_back(g);
    }
  }

  AuditResult out;
  for (const MClosedSet& s : enumerate_mclosed_sets(m)) {
    const ElementSet spec = spec_s(m, s);
    const std::vector<Element> free = s.members().complement(n).to_vector();
    std::vector<PepVariant> variants{PepVariant::Ako, PepVariant::Oka};
    if (r_lattice && s.members().subset_of(pr)) variants.push_back(PepVariant::SprOka);

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      ElementFamily f{s.members()};
      for (std::size_t k = 0; k < free.size(); ++k) {
        if ((mask >> k) & 1U) f.members.insert(free[k]);
      }
      bool applicable_any = false;
      for (PepVariant v : variants) {
        if (v == PepVariant::SprOka && !pr.subset_of(f.members)) continue;
        TheoremReport r = check_s_pep(m, s, f, v);
        ++out.instances;
        switch (r.status) {
          case ReportStatus::NotApplicable: ++out.not_applicable; break;
          case ReportStatus::VacuousPass: ++out.vacuous; applicable_any = true; break;
          case ReportStatus::Fail: ++out.failures; [[fallthrough]];
          case ReportStatus::Pass:
            applicable_any = true;
            r.preconditions.push_back({"s", Verdict::pass("", family_binding(s.members(), "S"))});
            r.preconditions.push_back({"f", Verdict::pass("", family_binding(f.members, "F"))});
            out.reports.push_back(std::move(r));
            break;
        }
      }
      if (!applicable_any) continue;
      for (ElementSet g : semifilters) {
        ++out.supplement_instances;
        if (supplement_implication(spec, f.members, g).failed()) {
          ++out.supplement_failures;
          TheoremReport r = make_report(m, "s-peps-semifilter");
          r.conclusion = Verdict::fail("semi-filter escapes F", family_binding(g - f.members, "element"));
          settle(r);
          out.reports.push_back(std::move(r));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem registry

namespace {

using FamilyVisitor = std::function<std::optional<Verdict>(const MClosedSet&, const ElementFamily&)>;

// Visits (S, F) with S within F: exhaustively on small carriers, otherwise a
// seeded random sample. Stops at the first failing verdict.
Verdict visit_families(const MultLattice& m, const std::vector<MClosedSet>& sets, const SuiteOptions& options,
                       const FamilyVisitor& visit, std::size_t* visited) {
  const std::size_t n = m.size();
  *visited = 0;
  if (sets.empty()) return Verdict::vacuous("no valid S");
  if (n <= options.exhaustive_limit) {
    for (const MClosedSet& s : sets) {
      const std::vector<Element> free = s.members().complement(n).to_vector();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        ElementFamily f{s.members()};
        for (std::size_t k = 0; k < free.size(); ++k) {
          if ((mask >> k) & 1U) f.members.insert(free[k]);
        }
        ++*visited;
        if (auto v = visit(s, f)) return *v;
      }
    }
    return Verdict::pass();
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const MClosedSet& s = sets[pick(rng)];
    ElementFamily f{(ElementSet::from_bits(rng()) & ElementSet::all(n)) | s.members()};
    // Alternate with up-closed families so the closure hypotheses get exercised.
    if (k % 2 == 1) f.members = up_closure(m.lattice(), f.members);
    ++*visited;
    if (auto v = visit(s, f)) return *v;
  }
  return Verdict::pass();
}

std::vector<Binding> s_and_f(const MClosedSet& s, const ElementFamily& f) {
  auto w = family_binding(s.members(), "S");
  auto fw = family_binding(f.members, "F");
  w.insert(w.end(), fw.begin(), fw.end());
  return w;
}

std::vector<Binding> concat(std::vector<Binding> a, const std::vector<Binding>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool gate(TheoremReport& r, const char* name, Verdict v) {
  r.preconditions.push_back({name, std::move(v)});
  if (r.preconditions.back().verdict.failed()) {
    settle(r);
    return false;
  }
  return true;
}

std::string sample_note(std::size_t visited, const MultLattice& m, const SuiteOptions& o) {
  return std::to_string(visited) + (m.size() <= o.exhaustive_limit ? " families (exhaustive)" : " families (sampled)");
}

// Named-family maxima via the principle with S = {1}.
TheoremReport named_family_maxima(const MultLattice& m, std::string id, FamilyKind kind, PepVariant variant,
                                  bool need_reduced) {
  TheoremReport r = make_report(m, std::move(id));
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  if (need_reduced && !gate(r, "reduced", is_reduced(m))) return r;
  const ElementFamily f = build_named_family(m, kind);
  TheoremReport pep = check_s_pep(m, unit_mclosed(m), f, variant);
  for (auto& pre : pep.preconditions) {
    if (pre.name != "v-lattice") r.preconditions.push_back(std::move(pre));
  }
  r.conclusion = std::move(pep.conclusion);
  r.conclusion.witness = concat(family_binding(max_complement(m, f), "max"), r.conclusion.witness);
  settle(r);
  return r;
}

TheoremReport suite_max_is_prime(const MultLattice& m) {
  TheoremReport r = make_report(m, "max-is-prime");
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  const ElementSet coatoms = maximal_members(m.lattice(), m.lattice().elements() - ElementSet::single(m.one()));
  r.conclusion = Verdict::pass("every maximal element is prime", family_binding(coatoms, "max"));
  for (Element x : coatoms) {
    if (is_prime(m, x).failed()) {
      r.conclusion = Verdict::fail("maximal element is not prime", {{"m", x}});
      break;
    }
  }
  settle(r);
  return r;
}

TheoremReport suite_maximal_avoiding(const MultLattice& m, const std::vector<MClosedSet>& sets) {
  TheoremReport r = make_report(m, "maximal-avoiding-prime");
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  r.conclusion = Verdict::pass();
  for (const MClosedSet& s : sets) {
    for (Element a : avoiding(m, s)) {
      MaximalAvoiding res = maximal_avoiding(m, s, a);
      if (res.maxima.empty()) {
        r.conclusion = Verdict::fail("no maximal S-avoiding element", concat(family_binding(s.members(), "S"), {{"a", a}}));
      } else if (res.all_prime.failed()) {
        r.conclusion = Verdict::fail("maximal S-avoiding element is not prime",
                                     concat(family_binding(s.members(), "S"), res.all_prime.witness));
      }
      if (r.conclusion.failed()) {
        settle(r);
        return r;
      }
    }
  }
  settle(r);
  return r;
}

TheoremReport suite_star_max_prime(const MultLattice& m) {
  TheoremReport r = make_report(m, "star-max-prime");
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  if (!gate(r, "reduced", is_reduced(m))) return r;
  ElementSet stars;
  for (Element a = 0; a < m.size(); ++a) {
    if (m.star(a) != m.one()) stars.insert(m.star(a));
  }
  const ElementSet maxima = maximal_members(m.lattice(), stars);
  r.conclusion = maxima.empty() ? Verdict::vacuous("every star is 1") : Verdict::pass("", family_binding(maxima, "max"));
  for (Element x : maxima) {
    if (is_prime(m, x).failed()) {
      r.conclusion = Verdict::fail("maximal star is not prime", {{"m", x}});
      break;
    }
  }
  settle(r);
  return r;
}

TheoremReport suite_residual_prime(const MultLattice& m, const std::vector<MClosedSet>& sets) {
  TheoremReport r = make_report(m, "residual-prime-equiv");
  if (!gate(r, "multiplicative", m.is_multiplicative() ? Verdict::pass() : Verdict::fail("not multiplicative", {}))) {
    return r;
  }
  std::size_t checked = 0;
  r.conclusion = Verdict::pass();
  for (const MClosedSet& s : sets) {
    for (Element p : avoiding(m, s)) {
      ++checked;
      Verdict v = residual_prime_equiv(m, s, p);
      if (v.failed()) {
        r.conclusion = Verdict::fail(v.reason, concat(family_binding(s.members(), "S"), v.witness));
        settle(r);
        return r;
      }
    }
  }
  r.note = std::to_string(checked) + " (S, p) pairs";
  settle(r);
  return r;
}

TheoremReport suite_filter_families(const MultLattice& m, const std::vector<MClosedSet>& sets, const SuiteOptions& o) {
  TheoremReport r = make_report(m, "filter-mclosed-ako-oka");
  if (!gate(r, "v-lattice", host_is_vlattice(m))) return r;
  std::size_t visited = 0;
  r.conclusion = visit_families(m, sets, o, [&](const MClosedSet& s, const ElementFamily& f) -> std::optional<Verdict> {
    const StructuralFlags flags = structural_flags(m, f);
    const bool semi = flags.semi_filter.passed() && flags.m_closed.passed();
    const bool filt = flags.filter.passed() && flags.m_closed.passed();
    if (semi != filt) return Verdict::fail("semi-filter and filter forms disagree", s_and_f(s, f));
    if (!semi) return std::nullopt;
    if (Verdict v = is_s_ako(m, f, s); v.failed()) return Verdict::fail("not S-Ako", concat(s_and_f(s, f), v.witness));
    if (Verdict v = is_s_oka(m, f, s); v.failed()) return Verdict::fail("not S-Oka", concat(s_and_f(s, f), v.witness));
    return std::nullopt;
  }, &visited);
  r.note = sample_note(visited, m, o);
  settle(r);
  return r;
}

TheoremReport suite_ako_implies_oka(const MultLattice& m, const SuiteOptions& o) {
  TheoremReport r = make_report(m, "ako-implies-oka");
  if (!gate(r, "v-lattice", host_is_vlattice(m))) return r;
  const MClosedSet unit = unit_mclosed(m);
  std::size_t visited = 0;
  SuiteOptions wide = o;
  wide.exhaustive_limit = std::max<std::size_t>(o.exhaustive_limit, 7);
  r.conclusion = visit_families(m, {unit}, wide, [&](const MClosedSet& s, const ElementFamily& f) -> std::optional<Verdict> {
    if (is_s_ako(m, f, s).failed()) return std::nullopt;
    if (Verdict v = is_s_oka(m, f, s); v.failed()) return Verdict::fail("Ako family is not Oka", concat(s_and_f(s, f), v.witness));
    return std::nullopt;
  }, &visited);
  r.note = sample_note(visited, m, wide);
  settle(r);
  return r;
}

TheoremReport suite_avoiding_primes(const MultLattice& m, const std::vector<MClosedSet>& sets, const SuiteOptions& o) {
  TheoremReport r = make_report(m, "avoiding-primes-ako");
  if (!gate(r, "v-lattice", host_is_vlattice(m))) return r;
  std::mt19937_64 rng(o.seed);
  r.conclusion = Verdict::pass();
  for (const MClosedSet& s : sets) {
    const std::vector<Element> spec = spec_s(m, s).to_vector();
    const bool exhaustive = spec.size() <= 10;
    const std::uint64_t total = exhaustive ? (std::uint64_t{1} << spec.size()) : 256;
    for (std::uint64_t k = 0; k < total; ++k) {
      const std::uint64_t mask = exhaustive ? k : rng();
      ElementSet chosen;
      for (std::size_t b = 0; b < spec.size(); ++b) {
        if ((mask >> b) & 1U) chosen.insert(spec[b]);
      }
      const ElementFamily f = build_named_family(m, FamilyKind::AvoidingPrimes, FamilyParams{s, chosen, {}});
      if (Verdict v = is_s_ako(m, f, s); v.failed()) {
        r.conclusion = Verdict::fail("family avoiding S-primes is not S-Ako",
                                     concat(concat(family_binding(s.members(), "S"), family_binding(chosen, "p")), v.witness));
        settle(r);
        return r;
      }
    }
  }
  settle(r);
  return r;
}

TheoremReport suite_named_ako(const MultLattice& m, const std::vector<MClosedSet>& sets, std::string id,
                              FamilyKind kind, bool need_c_lattice) {
  TheoremReport r = make_report(m, std::move(id));
  if (!gate(r, need_c_lattice ? "c-lattice" : "v-lattice", need_c_lattice ? host_is_c_lattice(m) : host_is_vlattice(m))) {
    return r;
  }
  std::size_t applicable = 0;
  r.conclusion = Verdict::pass();
  for (const MClosedSet& s : sets) {
    FamilyParams params;
    params.s = s;
    const ElementFamily f = build_named_family(m, kind, params);
    if (!s.members().subset_of(f.members)) continue;  // hypothesis S within F
    ++applicable;
    if (Verdict v = is_s_ako(m, f, s); v.failed()) {
      r.conclusion = Verdict::fail("constructed family is not S-Ako", concat(s_and_f(s, f), v.witness));
      break;
    }
  }
  if (applicable == 0 && r.conclusion.passed()) r.conclusion = Verdict::vacuous("no S is contained in the family");
  r.note = std::to_string(applicable) + " applicable S";
  settle(r);
  return r;
}

TheoremReport suite_zero_divisors(const MultLattice& m) {
  TheoremReport r = make_report(m, "zero-divisor-max-prime");
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  ElementSet zd;
  for (Element a = 0; a < m.size(); ++a) {
    if (is_zero_divisor(m, a)) zd.insert(a);
  }
  const ElementFamily dense = build_named_family(m, FamilyKind::Dense);
  const ElementSet non_zd = zd.complement(m.size());
  if (!gate(r, "non-zero-divisors-are-dense",
            non_zd == dense.members ? Verdict::pass()
                                    : Verdict::fail("non-zero-divisors differ from dense elements",
                                                    family_binding((non_zd - dense.members) | (dense.members - non_zd), "x")))) {
    return r;
  }
  TheoremReport pep = check_s_pep(m, unit_mclosed(m), dense, PepVariant::Ako);
  for (auto& pre : pep.preconditions) {
    if (pre.name != "v-lattice") r.preconditions.push_back(std::move(pre));
  }
  r.conclusion = pep.conclusion;
  r.conclusion.witness = concat(family_binding(maximal_members(m.lattice(), zd), "max"), r.conclusion.witness);
  settle(r);
  return r;
}

TheoremReport suite_oka_divisor(const MultLattice& m, const std::vector<MClosedSet>& sets, const SuiteOptions& o) {
  TheoremReport r = make_report(m, "oka-divisor-equivalence");
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  std::size_t visited = 0;
  r.conclusion = visit_families(m, sets, o, [&](const MClosedSet& s, const ElementFamily& f) -> std::optional<Verdict> {
    const Verdict cond = oka_divisor_condition(m, f, s);
    const Verdict oka = is_s_oka(m, f, s);
    if (cond.passed() != oka.passed()) {
      return Verdict::fail("divisor condition and S-Oka disagree", concat(s_and_f(s, f), cond.failed() ? cond.witness : oka.witness));
    }
    return std::nullopt;
  }, &visited);
  r.note = sample_note(visited, m, o);
  settle(r);
  return r;
}

TheoremReport suite_meet_principal_product(const MultLattice& m) {
  TheoremReport r = make_report(m, "meet-principal-product");
  if (!gate(r, "multiplicative", m.is_multiplicative() ? Verdict::pass() : Verdict::fail("not multiplicative", {}))) {
    return r;
  }
  const ElementSet mp = meet_principal_elements(m);
  r.conclusion = Verdict::pass("", family_binding(mp, "meet-principal"));
  for (Element a : mp) {
    for (Element b : mp) {
      if (!mp.contains(m.mul(a, b))) {
        r.conclusion = Verdict::fail("product of meet principal elements is not meet principal", {{"a", a}, {"b", b}});
        settle(r);
        return r;
      }
    }
  }
  settle(r);
  return r;
}

TheoremReport suite_meet_principal_residual(const MultLattice& m) {
  TheoremReport r = make_report(m, "meet-principal-residual");
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  r.conclusion = Verdict::pass();
  for (Element j : meet_principal_elements(m)) {
    for (Element i : m.lattice().down_set(j)) {
      if (m.mul(j, m.residual(i, j)) != i) {
        r.conclusion = Verdict::fail("j*(i:j) differs from i", {{"i", i}, {"j", j}});
        settle(r);
        return r;
      }
    }
  }
  settle(r);
  return r;
}

TheoremReport suite_meet_principal_from_primes(const MultLattice& m) {
  TheoremReport r = make_report(m, "meet-principal-from-primes");
  if (!gate(r, "c-lattice", host_is_c_lattice(m))) return r;
  const MClosedSet unit = unit_mclosed(m);
  const ElementFamily f = build_named_family(m, FamilyKind::MeetPrincipal);
  if (!gate(r, "family-m-closed", structural_flags(m, f).m_closed)) return r;
  if (!gate(r, "family-divisor-condition", oka_divisor_condition(m, f, unit))) return r;
  TheoremReport peps = check_s_peps(m, unit, f, PepsMode::all());
  for (auto& pre : peps.preconditions) {
    if (pre.name != "v-lattice") r.preconditions.push_back(std::move(pre));
  }
  r.conclusion = peps.conclusion;
  settle(r);
  return r;
}

TheoremReport suite_minimal_primes_product(const MultLattice& m) {
  if (!m.is_multiplicative()) {
    TheoremReport r = make_report(m, "finite-product-zero");
    gate(r, "c-lattice", host_is_c_lattice(m));
    return r;
  }
  const std::vector<Element> minimal = minimal_members(m.lattice(), prime_elements(m)).to_vector();
  TheoremReport r = check_finite_product_zero(m, minimal);
  r.note = "generators: minimal primes";
  return r;
}

TheoremReport suite_degenerate(const MultLattice& m, std::string id, const char* note) {
  TheoremReport r = make_report(m, std::move(id));
  if (!gate(r, "r-lattice", host_is_r_lattice(m))) return r;
  const MClosedSet unit = unit_mclosed(m);
  const ElementFamily compact = build_named_family(m, FamilyKind::Compact);
  if (!gate(r, "family-spr-oka", is_spr_oka(m, compact, unit))) return r;
  r.conclusion = Verdict::vacuous(note);
  r.note = note;
  settle(r);
  return r;
}

}  // namespace

namespace {

using Member = std::function<TheoremReport(const MultLattice&, const std::vector<MClosedSet>&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, Member>>& registry() {
  static const std::vector<std::pair<std::string, Member>> members{
      {"max-is-prime", [](const MultLattice& m, const auto&, const auto&) { return suite_max_is_prime(m); }},
      {"maximal-avoiding-prime", [](const MultLattice& m, const auto& sets, const auto&) { return suite_maximal_avoiding(m, sets); }},
      {"star-max-prime", [](const MultLattice& m, const auto&, const auto&) { return suite_star_max_prime(m); }},
      {"residual-prime-equiv", [](const MultLattice& m, const auto& sets, const auto&) { return suite_residual_prime(m, sets); }},
      {"filter-mclosed-ako-oka",
       [](const MultLattice& m, const auto& sets, const auto& o) { return suite_filter_families(m, sets, o); }},
      {"ako-implies-oka", [](const MultLattice& m, const auto&, const auto& o) { return suite_ako_implies_oka(m, o); }},
      {"avoiding-primes-ako",
       [](const MultLattice& m, const auto& sets, const auto& o) { return suite_avoiding_primes(m, sets, o); }},
      {"above-s-ako",
       [](const MultLattice& m, const auto& sets, const auto&) {
         return suite_named_ako(m, sets, "above-s-ako", FamilyKind::AboveS, false);
       }},
      {"star-zero-ako",
       [](const MultLattice& m, const auto& sets, const auto&) {
         return suite_named_ako(m, sets, "star-zero-ako", FamilyKind::StarZero, true);
       }},
      {"dense-ako",
       [](const MultLattice& m, const auto& sets, const auto&) {
         return suite_named_ako(m, sets, "dense-ako", FamilyKind::Dense, true);
       }},
      {"dense-max-prime",
       [](const MultLattice& m, const auto&, const auto&) {
         return named_family_maxima(m, "dense-max-prime", FamilyKind::Dense, PepVariant::Ako, false);
       }},
      {"zero-divisor-max-prime", [](const MultLattice& m, const auto&, const auto&) { return suite_zero_divisors(m); }},
      {"annihilator-max-prime",
       [](const MultLattice& m, const auto&, const auto&) {
         return named_family_maxima(m, "annihilator-max-prime", FamilyKind::NonAnnihilator, PepVariant::Oka, false);
       }},
      {"essential-max-prime",
       [](const MultLattice& m, const auto&, const auto&) {
         return named_family_maxima(m, "essential-max-prime", FamilyKind::Essential, PepVariant::Ako, true);
       }},
      {"oka-divisor-equivalence",
       [](const MultLattice& m, const auto& sets, const auto& o) { return suite_oka_divisor(m, sets, o); }},
      {"meet-principal-product", [](const MultLattice& m, const auto&, const auto&) { return suite_meet_principal_product(m); }},
      {"meet-principal-residual", [](const MultLattice& m, const auto&, const auto&) { return suite_meet_principal_residual(m); }},
      {"meet-principal-from-primes",
       [](const MultLattice& m, const auto&, const auto&) { return suite_meet_principal_from_primes(m); }},
      {"finite-product-zero", [](const MultLattice& m, const auto&, const auto&) { return suite_minimal_primes_product(m); }},
      {"compact-max-prime",
       [](const MultLattice& m, const auto&, const auto&) {
         return suite_degenerate(m, "compact-max-prime",
                                 "degenerate: every element of a finite lattice is compact, so F' is empty");
       }},
      {"noetherian-iff-primes-compact",
       [](const MultLattice& m, const auto&, const auto&) {
         return suite_degenerate(m, "noetherian-iff-primes-compact",
                                 "degenerate: a finite lattice is Noetherian and every prime is compact");
       }},
  };
  return members;
}

std::vector<MClosedSet> suite_sets(const MultLattice& m) {
  try {
    return enumerate_mclosed_sets(m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LimitExceeded) throw;
    return {unit_mclosed(m)};
  }
}

TheoremReport invalid_host(const MultLattice& m, std::string id) {
  TheoremReport r = make_report(m, std::move(id));
  gate(r, "v-lattice", host_is_vlattice(m));
  return r;
}

}  // namespace

std::vector<std::string> suite_member_ids() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : registry()) out.push_back(id);
  return out;
}

TheoremReport run_suite_member(const MultLattice& m, std::string_view id, const SuiteOptions& options) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    if (m.mult_class() == MultClass::Invalid) return invalid_host(m, name);
    return fn(m, suite_sets(m), options);
  }
  throw Error(ErrorCode::UnknownName, "unknown suite member '" + std::string(id) + "'");
}

std::vector<TheoremReport> run_theorem_suite(const MultLattice& m, const SuiteOptions& options) {
  if (m.mult_class() == MultClass::Invalid) return {invalid_host(m, "suite")};
  const std::vector<MClosedSet> sets = suite_sets(m);
  std::vector<TheoremReport> out;
  for (const auto& [id, fn] : registry()) out.push_back(fn(m, sets, options));
  return out;
}

}  // namespace mlat
