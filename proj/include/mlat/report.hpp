#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mlat/lattice.hpp"
#include "mlat/verdict.hpp"

namespace mlat {

enum class ReportStatus { Pass, VacuousPass, Fail, NotApplicable };

std::string_view to_string(ReportStatus status);

struct NamedCheck {
  std::string name;
  Verdict verdict;
};

/// Outcome of one theorem instance. The conclusion is only evaluated once
/// every precondition passes; otherwise the status is NotApplicable.
struct TheoremReport {
  std::string id;
  std::string host;
  std::vector<NamedCheck> preconditions;
  Verdict conclusion;
  ReportStatus status = ReportStatus::NotApplicable;
  std::string note;

  bool failed() const { return status == ReportStatus::Fail; }
};

/// Sets status from the preconditions and conclusion.
void settle(TheoremReport& report);

/// `<id>\t<status>\t<role=label>...` with the first failing precondition's
/// witness for not-applicable reports.
std::string to_tsv(const FiniteLattice& lattice, const TheoremReport& report);

/// One JSON object per report; witnesses are rendered as label tuples.
std::string to_json(const FiniteLattice& lattice, const std::vector<TheoremReport>& reports);

std::string format_witness(const FiniteLattice& lattice, const std::vector<Binding>& witness);

}  // namespace mlat
