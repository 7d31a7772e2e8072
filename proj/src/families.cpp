#include "mlat/families.hpp"

#include <array>
#include <deque>

#include "mlat/error.hpp"

namespace mlat {

namespace {

void require_s_contained(const ElementFamily& f, const MClosedSet& s) {
  if (!s.members().subset_of(f.members)) {
    const Element missing = (s.members() - f.members).first();
    throw Error(ErrorCode::SNotContained, "S is not contained in the family", {{"s", missing}});
  }
}

}  // namespace

StructuralFlags structural_flags(const MultLattice& m, const ElementFamily& f) {
  if (!f.contains(m.one())) throw Error(ErrorCode::MissingTop, "family must contain 1");
  const FiniteLattice& l = m.lattice();
  StructuralFlags out{Verdict::pass(), Verdict::pass(), Verdict::pass()};

  for (Element j : f.members) {
    const ElementSet escaped = l.up_set(j) - f.members;
    if (!escaped.empty()) {
      out.semi_filter = Verdict::fail("not upward closed", {{"lower", j}, {"upper", escaped.first()}});
      break;
    }
  }
  auto meet_closed = [&]() -> Verdict {
    for (Element i : f.members) {
      for (Element j : f.members) {
        if (!f.contains(l.meet(i, j))) return Verdict::fail("not meet closed", {{"i", i}, {"j", j}});
      }
    }
    return Verdict::pass();
  };
  out.filter = out.semi_filter.failed() ? out.semi_filter : meet_closed();
  for (Element i : f.members) {
    for (Element j : f.members) {
      if (!f.contains(m.mul(i, j))) {
        out.m_closed = Verdict::fail("not closed under products", {{"i", i}, {"j", j}});
        return out;
      }
    }
  }
  return out;
}

bool violates_s_ako(const MultLattice& m, const ElementFamily& f, Element s, Element i, Element a, Element b) {
  return f.contains(m.join(i, m.mul(s, a))) && f.contains(m.join(i, m.mul(s, b))) &&
         !f.contains(m.join(i, m.mul(a, b)));
}

bool violates_s_oka(const MultLattice& m, const ElementFamily& f, Element s, Element i, Element a) {
  const Element sa = m.mul(s, a);
  return !f.contains(i) && f.contains(m.join(i, sa)) && f.contains(m.residual(i, sa));
}

Verdict is_s_ako(const MultLattice& m, const ElementFamily& f, const MClosedSet& s) {
  require_s_contained(f, s);
  const auto n = static_cast<Element>(m.size());
  for (Element t : s.members()) {
    for (Element i = 0; i < n; ++i) {
      // Only a, b with i v ta in F can take part in a violation.
      ElementSet usable;
      for (Element a = 0; a < n; ++a) {
        if (f.contains(m.join(i, m.mul(t, a)))) usable.insert(a);
      }
      for (Element a : usable) {
        for (Element b : usable) {
          if (!f.contains(m.join(i, m.mul(a, b)))) {
            return Verdict::fail("S-Ako implication fails", {{"s", t}, {"i", i}, {"a", a}, {"b", b}});
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_s_oka(const MultLattice& m, const ElementFamily& f, const MClosedSet& s) {
  require_s_contained(f, s);
  const auto n = static_cast<Element>(m.size());
  for (Element t : s.members()) {
    for (Element i = 0; i < n; ++i) {
      if (f.contains(i)) continue;
      for (Element a = 0; a < n; ++a) {
        if (violates_s_oka(m, f, t, i, a)) {
          return Verdict::fail("S-Oka implication fails",
                               {{"s", t}, {"i", i}, {"a", a}, {"residual", m.residual(i, m.mul(t, a))}});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_spr_oka(const MultLattice& m, const ElementFamily& f, const MClosedSet& s) {
  if (!lattice_class_flags(m).r_lattice) throw Error(ErrorCode::NotRLattice, "'" + m.name() + "' is not an r-lattice");
  const ElementSet pr = principal_elements(m);
  if (!s.members().subset_of(pr)) {
    throw Error(ErrorCode::SNotContained, "S is not contained in Pr(L)", {{"s", (s.members() - pr).first()}});
  }
  if (!pr.subset_of(f.members)) {
    throw Error(ErrorCode::PrNotContained, "Pr(L) is not contained in the family", {{"principal", (pr - f.members).first()}});
  }
  const auto n = static_cast<Element>(m.size());
  for (Element t : s.members()) {
    for (Element i = 0; i < n; ++i) {
      if (f.contains(i)) continue;
      for (Element a : pr) {
        if (violates_s_oka(m, f, t, i, a)) {
          return Verdict::fail("S_pr-Oka implication fails",
                               {{"s", t}, {"i", i}, {"a", a}, {"residual", m.residual(i, m.mul(t, a))}});
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict oka_divisor_condition(const MultLattice& m, const ElementFamily& f, const MClosedSet& s) {
  require_s_contained(f, s);
  const auto n = static_cast<Element>(m.size());
  for (Element t : s.members()) {
    for (Element j = 0; j < n; ++j) {
      const Element tj = m.mul(t, j);
      if (!f.contains(tj)) continue;
      for (Element i : m.lattice().down_set(tj)) {
        if (!f.contains(i) && f.contains(m.residual(i, tj))) {
          return Verdict::fail("divisor condition fails", {{"s", t}, {"i", i}, {"j", j}});
        }
      }
    }
  }
  return Verdict::pass();
}

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 9> kKindNames{{
    {FamilyKind::AvoidingPrimes, "avoiding_primes"},
    {FamilyKind::AboveS, "above_S"},
    {FamilyKind::StarZero, "star_zero"},
    {FamilyKind::Dense, "dense"},
    {FamilyKind::NonAnnihilator, "non_annihilator"},
    {FamilyKind::Essential, "essential"},
    {FamilyKind::MeetPrincipal, "meet_principal"},
    {FamilyKind::Compact, "compact"},
    {FamilyKind::ProductClosure, "product_closure"},
}};

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (const auto& [k, kname] : kKindNames) {
    if (kname == name) return k;
  }
  return std::nullopt;
}

ProductClosure product_closure(const MultLattice& m, const std::vector<Element>& generators) {
  ProductClosure out;
  std::deque<Element> queue;
  for (Element g : generators) {
    if (g >= m.size()) throw Error(ErrorCode::BadParams, "generator outside the carrier");
    if (!out.products.contains(g)) {
      out.products.insert(g);
      out.words[g] = {g};
      queue.push_back(g);
    }
  }
  // Breadth-first by word length, so each recorded word is a shortest one.
  while (!queue.empty()) {
    const Element p = queue.front();
    queue.pop_front();
    for (Element g : generators) {
      const Element q = m.mul(p, g);
      if (out.products.contains(q)) continue;
      out.products.insert(q);
      auto word = out.words[p];
      word.push_back(g);
      out.words[q] = std::move(word);
      queue.push_back(q);
    }
  }
  return out;
}

ElementFamily build_named_family(const MultLattice& m, FamilyKind kind, const FamilyParams& params) {
  const auto n = static_cast<Element>(m.size());
  ElementFamily f;
  switch (kind) {
    case FamilyKind::AvoidingPrimes: {
      if (!params.s) throw Error(ErrorCode::BadParams, "avoiding_primes needs S");
      for (Element p : params.primes) {
        if (p >= n || is_sprime(m, *params.s, p).failed()) {
          throw Error(ErrorCode::BadParams, "avoiding_primes parameter is not S-prime", {{"p", p}});
        }
      }
      for (Element j = 0; j < n; ++j) {
        bool keep = true;
        for (Element t : params.s->members()) {
          for (Element p : params.primes) {
            if (m.leq(m.mul(t, j), p)) keep = false;
          }
        }
        if (keep) f.members.insert(j);
      }
      break;
    }
    case FamilyKind::AboveS:
      if (!params.s) throw Error(ErrorCode::BadParams, "above_S needs S");
      f.members = up_closure(m.lattice(), params.s->members());
      break;
    case FamilyKind::StarZero:
      for (Element j = 0; j < n; ++j) {
        if (m.star(j) == m.zero()) f.members.insert(j);
      }
      break;
    case FamilyKind::Dense:
      for (Element j = 0; j < n; ++j) {
        if (is_dense(m, j)) f.members.insert(j);
      }
      break;
    case FamilyKind::NonAnnihilator:
      for (Element j = 0; j < n; ++j) {
        if (!is_annihilator(m, j)) f.members.insert(j);
      }
      break;
    case FamilyKind::Essential:
      for (Element j = 0; j < n; ++j) {
        if (is_essential(m.lattice(), j)) f.members.insert(j);
      }
      break;
    case FamilyKind::MeetPrincipal:
      f.members = meet_principal_elements(m);
      break;
    case FamilyKind::Compact:
      f.members = m.lattice().elements();
      break;
    case FamilyKind::ProductClosure:
      if (params.generators.empty()) throw Error(ErrorCode::BadParams, "product_closure needs generators");
      f.members = up_closure(m.lattice(), product_closure(m, params.generators).products);
      break;
  }
  return f;
}

ElementSet max_complement(const MultLattice& m, const ElementFamily& f) {
  return maximal_members(m.lattice(), f.members.complement(m.size()));
}

}  // namespace mlat
