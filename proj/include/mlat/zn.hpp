#pragma once

#include <cstdint>
#include <vector>

#include "mlat/report.hpp"
#include "mlat/sprime.hpp"

namespace mlat {

/// The ring Z_n and its ideals. Ideal (d) corresponds to the divisor d, with
/// (n) the zero ideal.
struct ZnModel {
  unsigned n = 0;
  std::vector<unsigned> divisors;  // ascending

  /// Throws BadModulus for n < 2.
  explicit ZnModel(unsigned modulus);

  /// Lattice index of (d). Elements run from (0) up to (1), i.e. by
  /// descending divisor.
  Element element_of(unsigned d) const;
  unsigned divisor_of(Element e) const { return divisors[divisors.size() - 1 - e]; }
};

/// Id(Z_n) as a multiplicative lattice with labels "(d)" and "(0)".
/// Throws BadModulus when n < 2 or n has more than 64 divisors.
MultLattice ideal_lattice(unsigned n);

/// Generator of {r | r*(b) within (a)}, found by scanning residues.
unsigned ring_colon(unsigned n, unsigned a, unsigned b);

/// Residues reduced mod n; checks 1 in S, 0 not in S and closure under
/// multiplication mod n. Throws SNotClosed (witness s1, s2 for closure).
std::vector<unsigned> validate_ring_s(unsigned n, std::vector<unsigned> s);

/// S-prime test for the ideal (p) over raw residues. Pass carries the least
/// residue s that works (role s); failures carry either t in S within (p)
/// (role t) or the defeating pair for the first s (roles s, a, b). Throws
/// SNotClosed.
Verdict ring_s_prime(unsigned n, const std::vector<unsigned>& s, unsigned p);

/// Every multiplicatively closed residue set with 1 and without 0, each as
/// an ascending residue list. The order is deterministic. Requires n <= 64.
std::vector<std::vector<unsigned>> enumerate_ring_mclosed(unsigned n);

/// The set S_L = {(s) | s in S} on ideal_lattice(n).
MClosedSet lattice_s(const MultLattice& idzn, unsigned n, const std::vector<unsigned>& s);

struct CrosscheckOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0x5eed;
};

/// Ring against lattice for one S: residual against ring colon on every
/// pair, ring S-prime ideals against Spec_S, and S-Ako/S-Oka verdicts on
/// sampled families containing S_L. Requires n <= 64.
TheoremReport crosscheck(unsigned n, const std::vector<unsigned>& s, const CrosscheckOptions& options = {});

/// The same over every valid S of Z_n. Families are sampled jointly with
/// S, `samples` pairs in total.
TheoremReport crosscheck_all(unsigned n, const CrosscheckOptions& options = {.samples = 1000});

}  // namespace mlat
