#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlat/element_set.hpp"
#include "mlat/verdict.hpp"

namespace mlat {

/// A finite bounded lattice over the indices 0..n-1.
///
/// The order is stored as a full relation matrix and the join/meet tables are
/// precomputed at construction, so every order primitive is a table lookup.
/// A finite bounded lattice is complete, so arbitrary joins reduce to folds.
/// Instances are immutable once built.
class FiniteLattice {
 public:
  /// Validates that `leq` (row-major, n*n) is a partial order forming a
  /// bounded lattice. Throws Error on failure.
  static FiniteLattice from_order(std::string name, std::vector<std::string> labels, std::vector<bool> leq);

  std::size_t size() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_[e]; }

  std::optional<Element> find(std::string_view label) const;
  /// Throws UnknownLabel.
  Element at(std::string_view label) const;

  bool leq(Element a, Element b) const { return up_[a].contains(b); }
  bool lt(Element a, Element b) const { return a != b && leq(a, b); }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  ElementSet elements() const { return ElementSet::all(size()); }
  /// All x with a <= x.
  ElementSet up_set(Element a) const { return up_[a]; }
  /// All x with x <= a.
  ElementSet down_set(Element a) const { return down_[a]; }
  /// Hasse covers (lower, upper), ascending by lower then upper.
  std::vector<std::pair<Element, Element>> covers() const;

  friend bool operator==(const FiniteLattice&, const FiniteLattice&) = default;

 private:
  friend class MultLattice;
  FiniteLattice() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Builds a lattice from a Hasse diagram given as (lower, upper) label pairs.
FiniteLattice build_lattice(std::string name, std::vector<std::string> labels,
                            std::span<const std::pair<std::string, std::string>> covers);

Element join_set(const FiniteLattice& lattice, ElementSet set);
Element meet_set(const FiniteLattice& lattice, ElementSet set);

/// Checks a <= c  =>  a v (b ^ c) = (a v b) ^ c. Witness roles: lower, upper, other.
Verdict is_modular(const FiniteLattice& lattice);

ElementSet maximal_members(const FiniteLattice& lattice, ElementSet set);
ElementSet minimal_members(const FiniteLattice& lattice, ElementSet set);

/// Union of the up-sets of the members.
ElementSet up_closure(const FiniteLattice& lattice, ElementSet set);
bool is_up_closed(const FiniteLattice& lattice, ElementSet set);

/// Resolves labels to a set; throws UnknownLabel.
ElementSet parse_element_set(const FiniteLattice& lattice, std::span<const std::string> labels);
/// Space-separated labels in index order.
std::string format_element_set(const FiniteLattice& lattice, ElementSet set);

}  // namespace mlat
