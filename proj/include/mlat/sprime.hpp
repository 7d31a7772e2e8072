#pragma once

#include <vector>

#include "mlat/mult.hpp"

namespace mlat {

/// A validated multiplicatively closed subset S with 1 in S and 0 not in S.
class MClosedSet {
 public:
  ElementSet members() const { return members_; }
  bool contains(Element e) const { return members_.contains(e); }
  std::size_t size() const { return members_.size(); }

  friend MClosedSet validate_mclosed(const MultLattice& m, ElementSet members);
  friend bool operator==(const MClosedSet&, const MClosedSet&) = default;

 private:
  ElementSet members_;
};

/// Throws MissingOne, ContainsZero or NotClosed (witness roles s1, s2).
MClosedSet validate_mclosed(const MultLattice& m, ElementSet members);

/// S = {1}.
MClosedSet unit_mclosed(const MultLattice& m);

/// Every valid S, ascending by bitmask. Throws LimitExceeded when the
/// carrier has more than `max_free + 2` elements.
std::vector<MClosedSet> enumerate_mclosed_sets(const MultLattice& m, std::size_t max_free = 22);

/// p != 1 and a*b <= p => a <= p or b <= p. Witness roles: a, b (or p when p = 1).
Verdict is_prime(const MultLattice& m, Element p);

/// Passing verdicts carry the least multiplier s; failing verdicts carry
/// either the offending t <= p or, for every s, a defeating pair (s, a, b).
Verdict is_sprime(const MultLattice& m, const MClosedSet& s, Element p);

ElementSet spec_s(const MultLattice& m, const MClosedSet& s);
ElementSet prime_elements(const MultLattice& m);

/// Checks: p is S-prime <=> (p:s) is prime for some s in S.
/// Requires a multiplicative lattice (UnsupportedClass) and t not<= p for
/// all t in S (PreconditionViolated). Witness roles: s-sprime (the S-prime
/// multiplier, if any) and s-residual (least s with (p:s) prime, if any).
Verdict residual_prime_equiv(const MultLattice& m, const MClosedSet& s, Element p);

struct MaximalAvoiding {
  ElementSet maxima;
  Verdict all_prime;
};

/// Maximal elements above `a` containing no member of S. Requires a
/// multiplicative lattice (UnsupportedClass) and t not<= a for all t in S.
MaximalAvoiding maximal_avoiding(const MultLattice& m, const MClosedSet& s, Element a);

/// Elements x with t not<= x for every t in S.
ElementSet avoiding(const MultLattice& m, const MClosedSet& s);

}  // namespace mlat
