#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mlat/mult.hpp"

namespace mlat {

/// N5 (0 < a < b < 1, 0 < c < 1) with meet as multiplication.
MultLattice n5_meet();
/// 0 < a < b < d < 1, 0 < c < d, with x*y = 0 for x, y != 1.
MultLattice figure3_k();
/// k-element chain 0 < x1 < ... < x(k-2) < 1 with meet. Throws BadParams for k < 2.
MultLattice chain_lattice(std::size_t k);
/// Subsets of k atoms a, b, c, ... with meet; "0" and "1" label the empty
/// and full sets. Throws BadParams unless 1 <= k <= 6.
MultLattice boolean_lattice(std::size_t k);

/// n5_meet, idz12, figure3_K, chain(k), boolean(k) or idzn(n).
/// Throws UnknownName.
MultLattice builtin(std::string_view name);

enum class SearchLevel { Multiplicative, VLattice };

std::string_view to_string(SearchLevel level);
std::optional<SearchLevel> parse_search_level(std::string_view name);

struct SearchOptions {
  SearchLevel level = SearchLevel::Multiplicative;
  /// Node budget; without one, carriers above 7 elements throw LimitExceeded.
  std::optional<std::uint64_t> budget;
  std::size_t max_examples = 3;
  unsigned threads = 1;
};

struct SearchResult {
  /// Exact when complete, otherwise a lower bound.
  std::uint64_t count = 0;
  bool complete = true;
  std::uint64_t nodes = 0;
  std::vector<MultTable> examples;
};

/// Counts the commutative tables with identity 1 on the lattice that
/// satisfy the requested axiom level.
SearchResult search_multiplications(const FiniteLattice& lattice, const SearchOptions& options = {});

}  // namespace mlat
