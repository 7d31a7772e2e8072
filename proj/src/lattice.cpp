#include "mlat/lattice.hpp"

#include <unordered_map>

#include "mlat/error.hpp"

namespace mlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAPoset: return "NotAPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NoBounds: return "NoBounds";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::TooManyElements: return "TooManyElements";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MissingOne: return "MissingOne";
    case ErrorCode::ContainsZero: return "ContainsZero";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnsupportedClass: return "UnsupportedClass";
    case ErrorCode::MissingTop: return "MissingTop";
    case ErrorCode::SNotContained: return "SNotContained";
    case ErrorCode::PrNotContained: return "PrNotContained";
    case ErrorCode::NotRLattice: return "NotRLattice";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::SNotClosed: return "SNotClosed";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::VacuousPass: return "vacuous";
  }
  return "unknown";
}

FiniteLattice FiniteLattice::from_order(std::string name, std::vector<std::string> labels, std::vector<bool> leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorCode::NoBounds, "empty carrier");
  if (n > kMaxElements) {
    throw Error(ErrorCode::TooManyElements, std::to_string(n) + " elements exceeds " + std::to_string(kMaxElements));
  }
  if (leq.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "order relation is not n x n");
  {
    std::unordered_map<std::string, Element> seen;
    for (Element i = 0; i < n; ++i) {
      if (labels[i].empty()) throw Error(ErrorCode::ParseError, "empty label");
      if (!seen.emplace(labels[i], i).second) throw Error(ErrorCode::DuplicateLabel, labels[i]);
    }
  }
  auto rel = [&](Element a, Element b) { return leq[a * n + b]; };

  for (Element a = 0; a < n; ++a) {
    if (!rel(a, a)) throw Error(ErrorCode::NotAPoset, "not reflexive at " + labels[a], {{"x", a}});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (rel(a, b) && rel(b, a)) {
        throw Error(ErrorCode::NotAPoset, "antisymmetry fails for " + labels[a] + ", " + labels[b],
                    {{"x", a}, {"y", b}});
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!rel(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (rel(b, c) && !rel(a, c)) {
          throw Error(ErrorCode::NotAPoset, "transitivity fails", {{"x", a}, {"y", b}, {"z", c}});
        }
      }
    }
  }

  FiniteLattice lat;
  lat.name_ = std::move(name);
  lat.labels_ = std::move(labels);
  lat.up_.resize(n);
  lat.down_.resize(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (rel(a, b)) {
        lat.up_[a].insert(b);
        lat.down_[b].insert(a);
      }
    }
  }

  const ElementSet everything = ElementSet::all(n);
  std::optional<Element> bottom;
  std::optional<Element> top;
  for (Element a = 0; a < n; ++a) {
    if (lat.up_[a] == everything) bottom = a;
    if (lat.down_[a] == everything) top = a;
  }
  if (!bottom || !top) throw Error(ErrorCode::NoBounds, "order lacks a least or greatest element");
  lat.bottom_ = *bottom;
  lat.top_ = *top;

  lat.join_.assign(n * n, 0);
  lat.meet_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      // The lub is the unique common upper bound lying below every other one.
      const ElementSet upper = lat.up_[a] & lat.up_[b];
      const ElementSet lower = lat.down_[a] & lat.down_[b];
      std::optional<Element> lub;
      for (Element u : upper) {
        if (upper.subset_of(lat.up_[u])) lub = u;
      }
      std::optional<Element> glb;
      for (Element l : lower) {
        if (lower.subset_of(lat.down_[l])) glb = l;
      }
      if (!lub || !glb) {
        throw Error(ErrorCode::NotALattice,
                    "no unique " + std::string(!lub ? "join" : "meet") + " for " + lat.labels_[a] + ", " +
                        lat.labels_[b],
                    {{"x", a}, {"y", b}});
      }
      lat.join_[a * n + b] = lat.join_[b * n + a] = *lub;
      lat.meet_[a * n + b] = lat.meet_[b * n + a] = *glb;
    }
  }
  return lat;
}

std::optional<Element> FiniteLattice::find(std::string_view label) const {
  for (Element i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

Element FiniteLattice::at(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::UnknownLabel, "no element named '" + std::string(label) + "'");
}

std::vector<std::pair<Element, Element>> FiniteLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size(); ++a) {
    for (Element b : up_[a]) {
      if (b == a) continue;
      // b covers a iff nothing lies strictly between them.
      const ElementSet between = (up_[a] & down_[b]) - ElementSet{a, b};
      if (between.empty()) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteLattice build_lattice(std::string name, std::vector<std::string> labels,
                            std::span<const std::pair<std::string, std::string>> covers) {
  const std::size_t n = labels.size();
  if (n > kMaxElements) {
    throw Error(ErrorCode::TooManyElements, std::to_string(n) + " elements exceeds " + std::to_string(kMaxElements));
  }
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) throw Error(ErrorCode::DuplicateLabel, labels[i]);
  }
  auto lookup = [&](const std::string& l) {
    auto it = index.find(l);
    if (it == index.end()) throw Error(ErrorCode::UnknownLabel, "cover mentions unknown element '" + l + "'");
    return it->second;
  };

  std::vector<bool> leq(n * n, false);
  for (Element i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [lo, hi] : covers) leq[lookup(lo) * n + lookup(hi)] = true;
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = true;
      }
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        throw Error(ErrorCode::NotAPoset, "cycle through " + labels[i] + " and " + labels[j], {{"x", i}, {"y", j}});
      }
    }
  }
  for (const auto& [lo, hi] : covers) {
    if (lo == hi) throw Error(ErrorCode::NotAPoset, "self-cover at " + lo, {{"x", lookup(lo)}});
  }
  return FiniteLattice::from_order(std::move(name), std::move(labels), std::move(leq));
}

Element join_set(const FiniteLattice& lattice, ElementSet set) {
  Element acc = lattice.bottom();
  for (Element e : set) acc = lattice.join(acc, e);
  return acc;
}

Element meet_set(const FiniteLattice& lattice, ElementSet set) {
  Element acc = lattice.top();
  for (Element e : set) acc = lattice.meet(acc, e);
  return acc;
}

Verdict is_modular(const FiniteLattice& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  for (Element a = 0; a < n; ++a) {
    for (Element c : lattice.up_set(a)) {
      for (Element b = 0; b < n; ++b) {
        const Element lhs = lattice.join(a, lattice.meet(b, c));
        const Element rhs = lattice.meet(lattice.join(a, b), c);
        if (lhs != rhs) return Verdict::fail("modular law", {{"lower", a}, {"upper", c}, {"other", b}});
      }
    }
  }
  return Verdict::pass();
}

ElementSet maximal_members(const FiniteLattice& lattice, ElementSet set) {
  ElementSet out;
  for (Element x : set) {
    if ((lattice.up_set(x) & set) == ElementSet::single(x)) out.insert(x);
  }
  return out;
}

ElementSet minimal_members(const FiniteLattice& lattice, ElementSet set) {
  ElementSet out;
  for (Element x : set) {
    if ((lattice.down_set(x) & set) == ElementSet::single(x)) out.insert(x);
  }
  return out;
}

ElementSet up_closure(const FiniteLattice& lattice, ElementSet set) {
  ElementSet out;
  for (Element x : set) out |= lattice.up_set(x);
  return out;
}

bool is_up_closed(const FiniteLattice& lattice, ElementSet set) { return up_closure(lattice, set) == set; }

ElementSet parse_element_set(const FiniteLattice& lattice, std::span<const std::string> labels) {
  ElementSet out;
  for (const auto& l : labels) out.insert(lattice.at(l));
  return out;
}

std::string format_element_set(const FiniteLattice& lattice, ElementSet set) {
  std::string out;
  for (Element e : set) {
    if (!out.empty()) out += ' ';
    out += lattice.label(e);
  }
  return out;
}

}  // namespace mlat
