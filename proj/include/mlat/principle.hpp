#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/families.hpp"
#include "mlat/report.hpp"

namespace mlat {

enum class PepVariant { Ako, Oka, SprOka };

std::string_view to_string(PepVariant variant);

/// Prime element principle for S: if F is S-Ako (or S-Oka, or S_pr-Oka on an
/// r-lattice) and every maximal element of F' avoids S, then Max(F') consists
/// of S-prime elements. An empty Max(F') yields a vacuous pass.
TheoremReport check_s_pep(const MultLattice& m, const MClosedSet& s, const ElementFamily& f, PepVariant variant);

/// Detects the configuration showing the principle has no converse: Max(F')
/// is non-empty and S-prime, yet F is neither S-Ako nor S-Oka.
TheoremReport check_converse_failure(const MultLattice& m, const MClosedSet& s, const ElementFamily& f);

/// Every family F containing S that exhibits the converse failure.
/// Throws LimitExceeded above 20 elements.
std::vector<ElementFamily> find_converse_failures(const MultLattice& m, const MClosedSet& s);

struct PepsMode {
  enum class Kind { SemiFilter, Above, All };
  Kind kind = Kind::All;
  ElementSet semifilter;
  Element above = 0;

  static PepsMode all() { return {}; }
  static PepsMode above_element(Element j) { return {Kind::Above, {}, j}; }
  static PepsMode within(ElementSet semifilter) { return {Kind::SemiFilter, semifilter, 0}; }
};

/// Supplement to the principle: if every S-prime element of the semi-filter
/// G lies in F then G lies in F. Modes pick G as a given semi-filter, the
/// up-set of j, or the whole carrier. When the antecedent fails the
/// implication holds vacuously.
TheoremReport check_s_peps(const MultLattice& m, const MClosedSet& s, const ElementFamily& f, const PepsMode& mode);

/// Finite-product instance of the supplement: F is the up-closure of the
/// multiplicative closure of `generators`, every prime contains a generator,
/// hence some finite product of generators is zero. The conclusion witness
/// carries the shortest such product as factor-1, factor-2, ...
TheoremReport check_finite_product_zero(const MultLattice& m, const std::vector<Element>& generators);

struct AuditLimits {
  std::size_t max_elements = 7;
  /// Also run the supplement over every semi-filter for each applicable (S, F).
  bool supplement = true;
};

struct AuditResult {
  /// Non-vacuous, applicable principle instances.
  std::vector<TheoremReport> reports;
  std::size_t instances = 0;
  std::size_t vacuous = 0;
  std::size_t not_applicable = 0;
  std::size_t failures = 0;
  std::size_t supplement_instances = 0;
  std::size_t supplement_failures = 0;
};

/// Runs the principle over every valid S and every family F containing S.
/// Invalid hosts throw UnsupportedClass; carriers above the limit throw
/// LimitExceeded. Any failure indicates a defect in this library.
AuditResult exhaustive_audit(const MultLattice& m, const AuditLimits& limits = {});

struct SuiteOptions {
  /// Family-enumerating members are exhaustive up to this carrier size and
  /// sampled above it.
  std::size_t exhaustive_limit = 6;
  std::size_t samples = 2000;
  std::uint64_t seed = 0x5eed;
};

/// Runs the theorem registry. Members whose hypotheses fail on this host
/// are reported as not-applicable with the failed hypothesis named.
std::vector<TheoremReport> run_theorem_suite(const MultLattice& m, const SuiteOptions& options = {});

/// Registry ids in report order.
std::vector<std::string> suite_member_ids();

/// Runs one registry member. Throws UnknownName.
TheoremReport run_suite_member(const MultLattice& m, std::string_view id, const SuiteOptions& options = {});

}  // namespace mlat
