#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "mlat/sprime.hpp"

namespace mlat {

/// A family F of lattice elements. F' denotes the complement.
struct ElementFamily {
  ElementSet members;

  bool contains(Element e) const { return members.contains(e); }
  friend bool operator==(const ElementFamily&, const ElementFamily&) = default;
};

struct StructuralFlags {
  Verdict semi_filter;  // witness: lower (in F), upper (not in F)
  Verdict filter;       // semi-filter plus meet-closed; witness adds i, j
  Verdict m_closed;     // witness: i, j
};

/// Throws MissingTop when 1 is not in F.
StructuralFlags structural_flags(const MultLattice& m, const ElementFamily& f);

/// For every s in S and i, a, b: i v sa, i v sb in F  =>  i v ab in F.
/// Scans (s, i, a, b) ascending; the first violation is the witness.
/// Throws SNotContained when S is not a subset of F.
Verdict is_s_ako(const MultLattice& m, const ElementFamily& f, const MClosedSet& s);

/// For every s in S and i, a: i v sa, (i : sa) in F  =>  i in F.
Verdict is_s_oka(const MultLattice& m, const ElementFamily& f, const MClosedSet& s);

/// S-Oka restricted to principal a. Requires an r-lattice (NotRLattice),
/// S within Pr(L) (SNotContained) and Pr(L) within F (PrNotContained).
Verdict is_spr_oka(const MultLattice& m, const ElementFamily& f, const MClosedSet& s);

/// True when (s, i, a, b) refutes the S-Ako property of F.
bool violates_s_ako(const MultLattice& m, const ElementFamily& f, Element s, Element i, Element a, Element b);
/// True when (s, i, a) refutes the S-Oka property of F.
bool violates_s_oka(const MultLattice& m, const ElementFamily& f, Element s, Element i, Element a);

/// The divisor form of the Oka property: for every s in S and i, j with
/// i <= sj, sj in F and (i : sj) in F, we get i in F.
Verdict oka_divisor_condition(const MultLattice& m, const ElementFamily& f, const MClosedSet& s);

enum class FamilyKind {
  AvoidingPrimes,
  AboveS,
  StarZero,
  Dense,
  NonAnnihilator,
  Essential,
  MeetPrincipal,
  Compact,
  ProductClosure,
};

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

struct FamilyParams {
  std::optional<MClosedSet> s;      // AvoidingPrimes, AboveS
  ElementSet primes;                // AvoidingPrimes: each must be S-prime
  std::vector<Element> generators;  // ProductClosure
};

/// Throws BadParams when a kind's parameters are missing or invalid.
ElementFamily build_named_family(const MultLattice& m, FamilyKind kind, const FamilyParams& params = {});

/// Multiplicative closure of the generators (repeats allowed), with a
/// shortest factorisation recorded for every reachable product.
struct ProductClosure {
  ElementSet products;
  std::map<Element, std::vector<Element>> words;
};

ProductClosure product_closure(const MultLattice& m, const std::vector<Element>& generators);

/// Max(F').
ElementSet max_complement(const MultLattice& m, const ElementFamily& f);

}  // namespace mlat
