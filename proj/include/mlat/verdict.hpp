#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlat/element_set.hpp"

namespace mlat {

/// One named slot of a witness, e.g. {"s", 5} or {"a", 2}.
struct Binding {
  std::string role;
  Element value;

  friend bool operator==(const Binding&, const Binding&) = default;
};

enum class Outcome { Pass, Fail, VacuousPass };

std::string_view to_string(Outcome outcome);

/// Result of a predicate or theorem check. Failing verdicts always carry a
/// witness; passing verdicts may carry one (e.g. the S-prime multiplier).
struct Verdict {
  Outcome outcome = Outcome::Pass;
  std::string reason;
  std::vector<Binding> witness;

  static Verdict pass(std::string reason = {}, std::vector<Binding> witness = {}) {
    return {Outcome::Pass, std::move(reason), std::move(witness)};
  }
  static Verdict vacuous(std::string reason) { return {Outcome::VacuousPass, std::move(reason), {}}; }
  static Verdict fail(std::string reason, std::vector<Binding> witness) {
    return {Outcome::Fail, std::move(reason), std::move(witness)};
  }

  bool passed() const { return outcome != Outcome::Fail; }
  bool failed() const { return outcome == Outcome::Fail; }
  bool is_vacuous() const { return outcome == Outcome::VacuousPass; }

  /// First binding with the given role.
  std::optional<Element> get(std::string_view role) const {
    for (const auto& b : witness) {
      if (b.role == role) return b.value;
    }
    return std::nullopt;
  }
};

}  // namespace mlat
