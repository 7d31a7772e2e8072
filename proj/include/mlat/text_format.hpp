#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/mult.hpp"

namespace mlat {

/// Contents of a lattice file:
///
///   lattice <name>
///   elements: <labels>
///   covers:
///   a < b
///   mult-default: meet
///   mult:
///   a * b = c
///   s: <labels>
///
/// `#` starts a comment. Without `mult-default: meet` every pair must be
/// listed; a file without `mult:` lines carries no table.
struct LatticeFile {
  FiniteLattice lattice;
  std::optional<MultTable> table;
  std::vector<std::string> s_labels;
};

/// Throws ParseError (with the line number in the message) or the lattice
/// construction errors.
LatticeFile parse_lattice_file(std::string_view text);

/// "-" reads standard input.
LatticeFile read_lattice_file(const std::string& path);

/// Classifies the file's table. Throws ParseError when there is none.
MultLattice load_mult_lattice(const LatticeFile& file);

/// Writes covers in index order, `mult-default: meet` and only the products
/// (x <= y by index) that differ from the meet.
std::string write_lattice_file(const FiniteLattice& lattice, const std::optional<MultTable>& table,
                               const std::vector<std::string>& s_labels = {});
std::string write_lattice_file(const MultLattice& m, const std::vector<std::string>& s_labels = {});

/// Splits a label list on commas and whitespace.
std::vector<std::string> split_labels(std::string_view text);

}  // namespace mlat
