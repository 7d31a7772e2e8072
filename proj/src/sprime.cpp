#include "mlat/sprime.hpp"

#include "mlat/error.hpp"

namespace mlat {

namespace {

void require_valid(const MultLattice& m) {
  if (m.mult_class() == MultClass::Invalid) {
    throw Error(ErrorCode::UnsupportedClass, "'" + m.name() + "' does not carry a V-lattice multiplication");
  }
}

void require_multiplicative(const MultLattice& m, const char* what) {
  if (!m.is_multiplicative()) {
    throw Error(ErrorCode::UnsupportedClass, std::string(what) + " requires a multiplicative lattice; '" + m.name() +
                                                 "' is " + std::string(to_string(m.mult_class())));
  }
}

// First (a, b) with a*b <= p, s*a not<= p and s*b not<= p.
std::optional<std::pair<Element, Element>> defeating_pair(const MultLattice& m, Element s, Element p) {
  const auto n = static_cast<Element>(m.size());
  for (Element a = 0; a < n; ++a) {
    if (m.leq(m.mul(s, a), p)) continue;
    for (Element b = 0; b < n; ++b) {
      if (m.leq(m.mul(a, b), p) && !m.leq(m.mul(s, b), p)) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

MClosedSet validate_mclosed(const MultLattice& m, ElementSet members) {
  if (!members.subset_of(m.lattice().elements())) throw Error(ErrorCode::UnknownLabel, "member outside the carrier");
  if (!members.contains(m.one())) throw Error(ErrorCode::MissingOne, "S must contain 1");
  if (members.contains(m.zero())) throw Error(ErrorCode::ContainsZero, "S must not contain 0", {{"zero", m.zero()}});
  for (Element a : members) {
    for (Element b : members) {
      if (!members.contains(m.mul(a, b))) {
        throw Error(ErrorCode::NotClosed,
                    "product " + m.lattice().label(a) + "*" + m.lattice().label(b) + " leaves S",
                    {{"s1", a}, {"s2", b}});
      }
    }
  }
  MClosedSet s;
  s.members_ = members;
  return s;
}

MClosedSet unit_mclosed(const MultLattice& m) { return validate_mclosed(m, ElementSet::single(m.one())); }

std::vector<MClosedSet> enumerate_mclosed_sets(const MultLattice& m, std::size_t max_free) {
  const std::size_t n = m.size();
  if (n < 2) return {};
  if (n - 2 > max_free) {
    throw Error(ErrorCode::LimitExceeded, std::to_string(n) + " elements is too many to enumerate every S");
  }
  std::vector<Element> free;
  for (Element e = 0; e < n; ++e) {
    if (e != m.zero() && e != m.one()) free.push_back(e);
  }
  std::vector<MClosedSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    ElementSet members = ElementSet::single(m.one());
    for (std::size_t k = 0; k < free.size(); ++k) {
      if ((mask >> k) & 1U) members.insert(free[k]);
    }
    bool closed = true;
    for (Element a : members) {
      for (Element b : members) {
        if (!members.contains(m.mul(a, b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(validate_mclosed(m, members));
  }
  return out;
}

Verdict is_prime(const MultLattice& m, Element p) {
  require_valid(m);
  if (p == m.one()) return Verdict::fail("the top element is not prime", {{"p", p}});
  const auto n = static_cast<Element>(m.size());
  for (Element a = 0; a < n; ++a) {
    if (m.leq(a, p)) continue;
    for (Element b = 0; b < n; ++b) {
      if (!m.leq(b, p) && m.leq(m.mul(a, b), p)) return Verdict::fail("a*b <= p with a, b not <= p", {{"a", a}, {"b", b}});
    }
  }
  return Verdict::pass();
}

Verdict is_sprime(const MultLattice& m, const MClosedSet& s, Element p) {
  require_valid(m);
  for (Element t : s.members()) {
    if (m.leq(t, p)) return Verdict::fail("member of S lies below p", {{"t", t}});
  }
  std::vector<Binding> defeats;
  for (Element cand : s.members()) {
    auto pair = defeating_pair(m, cand, p);
    if (!pair) return Verdict::pass("uniform multiplier", {{"s", cand}});
    defeats.push_back({"s", cand});
    defeats.push_back({"a", pair->first});
    defeats.push_back({"b", pair->second});
  }
  return Verdict::fail("no uniform multiplier", std::move(defeats));
}

ElementSet spec_s(const MultLattice& m, const MClosedSet& s) {
  ElementSet out;
  for (Element p = 0; p < m.size(); ++p) {
    if (is_sprime(m, s, p).passed()) out.insert(p);
  }
  return out;
}

ElementSet prime_elements(const MultLattice& m) {
  ElementSet out;
  for (Element p = 0; p < m.size(); ++p) {
    if (is_prime(m, p).passed()) out.insert(p);
  }
  return out;
}

ElementSet avoiding(const MultLattice& m, const MClosedSet& s) {
  ElementSet out;
  for (Element x = 0; x < m.size(); ++x) {
    if (!(s.members() & m.lattice().down_set(x)).empty()) continue;
    out.insert(x);
  }
  return out;
}

Verdict residual_prime_equiv(const MultLattice& m, const MClosedSet& s, Element p) {
  require_multiplicative(m, "residual-prime equivalence");
  for (Element t : s.members()) {
    if (m.leq(t, p)) {
      throw Error(ErrorCode::PreconditionViolated, "member of S lies below p", {{"t", t}, {"p", p}});
    }
  }
  const Verdict sp = is_sprime(m, s, p);
  std::optional<Element> via_residual;
  for (Element t : s.members()) {
    if (is_prime(m, m.residual(p, t)).passed()) {
      via_residual = t;
      break;
    }
  }
  std::vector<Binding> witness;
  if (sp.passed()) witness.push_back({"s-sprime", *sp.get("s")});
  if (via_residual) {
    witness.push_back({"s-residual", *via_residual});
    witness.push_back({"residual", m.residual(p, *via_residual)});
  }
  if (sp.passed() != via_residual.has_value()) {
    witness.push_back({"p", p});
    return Verdict::fail("S-primality and residual primality disagree", std::move(witness));
  }
  return Verdict::pass(sp.passed() ? "both hold" : "neither holds", std::move(witness));
}

MaximalAvoiding maximal_avoiding(const MultLattice& m, const MClosedSet& s, Element a) {
  require_multiplicative(m, "maximal S-avoiding search");
  for (Element t : s.members()) {
    if (m.leq(t, a)) throw Error(ErrorCode::PreconditionViolated, "member of S lies below a", {{"t", t}, {"a", a}});
  }
  MaximalAvoiding out;
  out.maxima = maximal_members(m.lattice(), avoiding(m, s) & m.lattice().up_set(a));
  out.all_prime = Verdict::pass();
  for (Element p : out.maxima) {
    if (is_prime(m, p).failed()) {
      out.all_prime = Verdict::fail("maximal S-avoiding element is not prime", {{"p", p}});
      break;
    }
  }
  return out;
}

}  // namespace mlat
