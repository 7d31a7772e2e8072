#include "mlat/mult.hpp"

#include "mlat/error.hpp"

namespace mlat {

MultTable::MultTable(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n_ * n_) throw Error(ErrorCode::DimensionMismatch, "multiplication table is not n x n");
  for (Element c : cells_) {
    if (c >= n_) throw Error(ErrorCode::DimensionMismatch, "product index out of range");
  }
}

MultTable MultTable::meet_of(const FiniteLattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<Element> cells(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) cells[a * n + b] = lattice.meet(a, b);
  }
  return MultTable(n, std::move(cells));
}

std::string_view to_string(MultClass c) {
  switch (c) {
    case MultClass::MultiplicativeLattice: return "multiplicative-lattice";
    case MultClass::VLatticeOnly: return "v-lattice-only";
    case MultClass::Invalid: return "invalid";
  }
  return "unknown";
}

namespace {

using Check = std::optional<AxiomViolation>;

Check check_commutative(const FiniteLattice& l, const MultTable& t) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (t.at(a, b) != t.at(b, a)) return AxiomViolation{"commutativity", {{"a", a}, {"b", b}}};
    }
  }
  return std::nullopt;
}

Check check_associative(const FiniteLattice& l, const MultTable& t) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
          return AxiomViolation{"associativity", {{"a", a}, {"b", b}, {"c", c}}};
        }
      }
    }
  }
  return std::nullopt;
}

Check check_identity(const FiniteLattice& l, const MultTable& t) {
  for (Element a = 0; a < l.size(); ++a) {
    if (t.at(a, l.top()) != a) return AxiomViolation{"identity", {{"a", a}}};
  }
  return std::nullopt;
}

Check check_distributive(const FiniteLattice& l, const MultTable& t) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (t.at(a, l.join(x, y)) != l.join(t.at(a, x), t.at(a, y))) {
          return AxiomViolation{"distributivity", {{"a", a}, {"x", x}, {"y", y}}};
        }
      }
    }
  }
  return std::nullopt;
}

Check check_zero(const FiniteLattice& l, const MultTable& t) {
  for (Element a = 0; a < l.size(); ++a) {
    if (t.at(a, l.bottom()) != l.bottom()) return AxiomViolation{"zero", {{"a", a}}};
  }
  return std::nullopt;
}

Check check_monotone(const FiniteLattice& l, const MultTable& t) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b : l.up_set(a)) {
      for (Element c = 0; c < n; ++c) {
        if (!l.leq(t.at(a, c), t.at(b, c))) {
          return AxiomViolation{"monotonicity", {{"a", a}, {"b", b}, {"c", c}}};
        }
      }
    }
  }
  return std::nullopt;
}

Check check_below_meet(const FiniteLattice& l, const MultTable& t) {
  const auto n = static_cast<Element>(l.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!l.leq(t.at(a, b), l.meet(a, b))) return AxiomViolation{"below-meet", {{"a", a}, {"b", b}}};
    }
  }
  return std::nullopt;
}

}  // namespace

MultLattice classify_multiplication(FiniteLattice lattice, MultTable table) {
  if (table.size() != lattice.size()) throw Error(ErrorCode::DimensionMismatch, "table size differs from lattice size");

  MultLattice m;
  Check shared = check_commutative(lattice, table);
  if (!shared) shared = check_associative(lattice, table);
  if (!shared) shared = check_identity(lattice, table);

  if (shared) {
    m.class_ = MultClass::Invalid;
    m.violation_ = std::move(shared);
  } else {
    Check mult = check_distributive(lattice, table);
    if (!mult) mult = check_zero(lattice, table);
    if (!mult) {
      m.class_ = MultClass::MultiplicativeLattice;
    } else {
      Check v = check_monotone(lattice, table);
      if (!v) v = check_below_meet(lattice, table);
      m.class_ = v ? MultClass::Invalid : MultClass::VLatticeOnly;
      m.violation_ = v ? std::move(v) : std::move(mult);
    }
  }

  const std::size_t n = lattice.size();
  m.residual_.resize(n * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element acc = lattice.bottom();
      for (Element x = 0; x < n; ++x) {
        if (lattice.leq(table.at(x, b), a)) acc = lattice.join(acc, x);
      }
      m.residual_[a * n + b] = acc;
    }
  }

  // The power sequence of a finite semigroup element is eventually periodic,
  // so iterating until the first repeat visits every positive power.
  m.powers_.resize(n);
  m.star_.resize(n);
  for (Element a = 0; a < n; ++a) {
    ElementSet powers;
    Element p = a;
    while (!powers.contains(p)) {
      powers.insert(p);
      p = table.at(p, a);
    }
    m.powers_[a] = powers;
    Element acc = lattice.bottom();
    for (Element x = 0; x < n; ++x) {
      for (Element q : powers) {
        if (table.at(q, x) == lattice.bottom()) {
          acc = lattice.join(acc, x);
          break;
        }
      }
    }
    m.star_[a] = acc;
  }

  m.lattice_ = std::move(lattice);
  m.table_ = std::move(table);
  return m;
}

Element residual(const MultLattice& m, Element a, Element b) { return m.residual(a, b); }
Element star(const MultLattice& m, Element a) { return m.star(a); }

bool is_nilpotent(const MultLattice& m, Element a) { return m.powers(a).contains(m.zero()); }

bool is_dense(const MultLattice& m, Element a) { return m.residual(m.zero(), a) == m.zero(); }

bool is_essential(const FiniteLattice& lattice, Element a) {
  for (Element x = 0; x < lattice.size(); ++x) {
    if (x != lattice.bottom() && lattice.meet(a, x) == lattice.bottom()) return false;
  }
  return true;
}

bool is_zero_divisor(const MultLattice& m, Element a) {
  for (Element y = 0; y < m.size(); ++y) {
    if (y != m.zero() && m.mul(a, y) == m.zero()) return true;
  }
  return false;
}

bool is_annihilator(const MultLattice& m, Element a) {
  if (a == m.one()) return false;
  for (Element x = 0; x < m.size(); ++x) {
    if (x != m.zero() && m.residual(m.zero(), x) == a) return true;
  }
  return false;
}

bool is_meet_principal(const MultLattice& m, Element a) {
  const auto n = static_cast<Element>(m.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m.meet(x, m.mul(a, y)) != m.mul(a, m.meet(m.residual(x, a), y))) return false;
    }
  }
  return true;
}

bool is_join_principal(const MultLattice& m, Element a) {
  const auto n = static_cast<Element>(m.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m.join(x, m.residual(y, a)) != m.residual(m.join(m.mul(x, a), y), a)) return false;
    }
  }
  return true;
}

bool is_principal(const MultLattice& m, Element a) { return is_meet_principal(m, a) && is_join_principal(m, a); }

ElementSet principal_elements(const MultLattice& m) {
  ElementSet out;
  for (Element a = 0; a < m.size(); ++a) {
    if (is_principal(m, a)) out.insert(a);
  }
  return out;
}

ElementSet meet_principal_elements(const MultLattice& m) {
  ElementSet out;
  for (Element a = 0; a < m.size(); ++a) {
    if (is_meet_principal(m, a)) out.insert(a);
  }
  return out;
}

namespace {

void require_valid(const MultLattice& m) {
  if (m.mult_class() == MultClass::Invalid) {
    throw Error(ErrorCode::UnsupportedClass, "multiplication on '" + m.name() + "' is not a V-lattice multiplication");
  }
}

}  // namespace

ElementFlags element_predicates(const MultLattice& m, Element a) {
  require_valid(m);
  ElementFlags f;
  f.nilpotent = is_nilpotent(m, a);
  f.dense = is_dense(m, a);
  f.essential = is_essential(m.lattice(), a);
  f.zero_divisor = is_zero_divisor(m, a);
  f.annihilator = is_annihilator(m, a);
  f.compact = true;  // every element of a finite lattice is compact
  f.meet_principal = is_meet_principal(m, a);
  f.join_principal = is_join_principal(m, a);
  f.principal = f.meet_principal && f.join_principal;
  return f;
}

Verdict compact_audit(const MultLattice& m, Element a) {
  const std::size_t n = m.size();
  if (n > 12) throw Error(ErrorCode::LimitExceeded, "compactness audit is limited to 12 elements");
  const FiniteLattice& l = m.lattice();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const ElementSet cover = ElementSet::from_bits(bits);
    const Element j = join_set(l, cover);
    // join_set must return the least upper bound of the cover.
    for (Element x : cover) {
      if (!l.leq(x, j)) return Verdict::fail("join is not an upper bound", {{"subset-member", x}});
    }
    for (Element u = 0; u < n; ++u) {
      if (cover.subset_of(l.down_set(u)) && !l.leq(j, u)) {
        return Verdict::fail("join is not least", {{"upper-bound", u}});
      }
    }
    if (!l.leq(a, j)) continue;
    // Shrink to an irredundant finite subcover.
    ElementSet sub = cover;
    for (Element x : cover) {
      const ElementSet trial = sub - ElementSet::single(x);
      if (l.leq(a, join_set(l, trial))) sub = trial;
    }
    if (!l.leq(a, join_set(l, sub))) return Verdict::fail("no finite subcover", {{"element", a}});
  }
  return Verdict::pass();
}

Verdict is_reduced(const MultLattice& m) {
  require_valid(m);
  for (Element a = 0; a < m.size(); ++a) {
    if (a != m.zero() && is_nilpotent(m, a)) return Verdict::fail("nonzero nilpotent element", {{"nilpotent", a}});
  }
  return Verdict::pass();
}

LatticeClassFlags lattice_class_flags(const MultLattice& m) {
  LatticeClassFlags f;
  // Compact generation and compactness of 1 are automatic on a finite carrier.
  f.c_lattice = m.is_multiplicative();
  if (!f.c_lattice) return f;
  if (is_modular(m.lattice()).failed()) return f;
  const ElementSet pr = principal_elements(m);
  for (Element a = 0; a < m.size(); ++a) {
    // a is a join of principals iff it equals the join of the principals below it.
    if (join_set(m.lattice(), pr & m.lattice().down_set(a)) != a) return f;
  }
  f.r_lattice = true;
  return f;
}

}  // namespace mlat
