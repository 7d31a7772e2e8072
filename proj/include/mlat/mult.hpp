#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mlat/lattice.hpp"

namespace mlat {

/// Row-major n x n table of products a*b.
class MultTable {
 public:
  MultTable() = default;
  /// Throws DimensionMismatch if cells is not n*n or holds an out-of-range index.
  MultTable(std::size_t n, std::vector<Element> cells);

  static MultTable meet_of(const FiniteLattice& lattice);

  std::size_t size() const { return n_; }
  Element at(Element a, Element b) const { return cells_[a * n_ + b]; }
  const std::vector<Element>& cells() const { return cells_; }

  friend bool operator==(const MultTable&, const MultTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

enum class MultClass { MultiplicativeLattice, VLatticeOnly, Invalid };

std::string_view to_string(MultClass c);

struct AxiomViolation {
  std::string axiom;
  std::vector<Binding> witness;
};

/// A lattice with a classified multiplication.
///
/// Residuals (a:b) and stars a* are tabulated at classification time. The
/// residual is always the literal join of {x | x*b <= a}; the adjunction
/// x*b <= a <=> x <= (a:b) is only guaranteed for MultiplicativeLattice.
class MultLattice {
 public:
  const FiniteLattice& lattice() const { return lattice_; }
  const MultTable& table() const { return table_; }
  MultClass mult_class() const { return class_; }
  bool is_multiplicative() const { return class_ == MultClass::MultiplicativeLattice; }
  /// For MultiplicativeLattice: none. For VLatticeOnly: the first failing
  /// multiplicative-lattice axiom. For Invalid: the first failing V-lattice axiom.
  const std::optional<AxiomViolation>& violation() const { return violation_; }

  std::size_t size() const { return lattice_.size(); }
  const std::string& name() const { return lattice_.name(); }
  Element zero() const { return lattice_.bottom(); }
  Element one() const { return lattice_.top(); }
  bool leq(Element a, Element b) const { return lattice_.leq(a, b); }
  Element join(Element a, Element b) const { return lattice_.join(a, b); }
  Element meet(Element a, Element b) const { return lattice_.meet(a, b); }
  Element mul(Element a, Element b) const { return table_.at(a, b); }
  Element residual(Element a, Element b) const { return residual_[a * size() + b]; }
  Element star(Element a) const { return star_[a]; }
  /// Distinct positive powers a, a^2, ... up to the first repeat.
  const ElementSet& powers(Element a) const { return powers_[a]; }

  friend MultLattice classify_multiplication(FiniteLattice lattice, MultTable table);

 private:
  MultLattice() = default;

  FiniteLattice lattice_;
  MultTable table_;
  MultClass class_ = MultClass::Invalid;
  std::optional<AxiomViolation> violation_;
  std::vector<Element> residual_;
  std::vector<Element> star_;
  std::vector<ElementSet> powers_;
};

/// Classifies the table against the multiplicative-lattice axioms
/// (commutativity, associativity, identity, binary join distributivity and
/// a*0 = 0) and, failing those, the V-lattice axioms (commutativity,
/// associativity, identity, monotonicity, a*b <= a^b). Binary plus empty-join
/// distributivity gives distributivity over arbitrary joins on a finite carrier.
MultLattice classify_multiplication(FiniteLattice lattice, MultTable table);

Element residual(const MultLattice& m, Element a, Element b);
Element star(const MultLattice& m, Element a);

struct ElementFlags {
  bool nilpotent = false;
  bool dense = false;
  bool essential = false;
  bool zero_divisor = false;
  bool annihilator = false;
  bool compact = true;
  bool meet_principal = false;
  bool join_principal = false;
  bool principal = false;
};

/// Throws UnsupportedClass on Invalid hosts.
ElementFlags element_predicates(const MultLattice& m, Element a);

bool is_nilpotent(const MultLattice& m, Element a);
bool is_dense(const MultLattice& m, Element a);
/// Order-only: no nonzero x has a ^ x = 0.
bool is_essential(const FiniteLattice& lattice, Element a);
bool is_zero_divisor(const MultLattice& m, Element a);
bool is_annihilator(const MultLattice& m, Element a);
/// x ^ (a*y) = a*((x:a) ^ y) for all x, y.
bool is_meet_principal(const MultLattice& m, Element a);
/// x v (y:a) = ((x*a) v y):a for all x, y.
bool is_join_principal(const MultLattice& m, Element a);
bool is_principal(const MultLattice& m, Element a);

ElementSet principal_elements(const MultLattice& m);
ElementSet meet_principal_elements(const MultLattice& m);

/// Definitional compactness audit: every subset whose join lies above `a`
/// contains a finite subfamily already above `a`. Carriers above 12 elements
/// throw LimitExceeded.
Verdict compact_audit(const MultLattice& m, Element a);

/// Reduced: no nonzero nilpotent. Witness role: nilpotent.
Verdict is_reduced(const MultLattice& m);

struct LatticeClassFlags {
  bool c_lattice = false;
  bool r_lattice = false;
};

LatticeClassFlags lattice_class_flags(const MultLattice& m);

}  // namespace mlat
