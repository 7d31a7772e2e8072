#pragma once

#include <string>
#include <vector>

#include "mlat/families.hpp"
#include "mlat/text_format.hpp"

namespace testing {

inline mlat::ElementSet set_of(const mlat::MultLattice& m, const std::string& labels) {
  return mlat::parse_element_set(m.lattice(), mlat::split_labels(labels));
}

inline mlat::MClosedSet s_of(const mlat::MultLattice& m, const std::string& labels) {
  return mlat::validate_mclosed(m, set_of(m, labels));
}

inline mlat::ElementFamily family_of(const mlat::MultLattice& m, const std::string& labels) {
  return {set_of(m, labels)};
}

inline std::string labels_of(const mlat::MultLattice& m, mlat::ElementSet set) {
  return mlat::format_element_set(m.lattice(), set);
}

inline std::string label(const mlat::MultLattice& m, mlat::Element e) { return m.lattice().label(e); }

// Witness as "role=label" pairs separated by spaces.
inline std::string witness(const mlat::MultLattice& m, const mlat::Verdict& v) {
  std::string out;
  for (const auto& b : v.witness) out += (out.empty() ? "" : " ") + b.role + "=" + m.lattice().label(b.value);
  return out;
}

}  // namespace testing
