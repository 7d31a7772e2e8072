#include "mlat/report.hpp"

#include <json.hpp>

namespace mlat {

std::string_view to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::VacuousPass: return "vacuous";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

void settle(TheoremReport& report) {
  for (const auto& pre : report.preconditions) {
    if (pre.verdict.failed()) {
      report.status = ReportStatus::NotApplicable;
      return;
    }
  }
  switch (report.conclusion.outcome) {
    case Outcome::Pass: report.status = ReportStatus::Pass; break;
    case Outcome::VacuousPass: report.status = ReportStatus::VacuousPass; break;
    case Outcome::Fail: report.status = ReportStatus::Fail; break;
  }
}

std::string format_witness(const FiniteLattice& lattice, const std::vector<Binding>& witness) {
  std::string out;
  for (const auto& b : witness) {
    if (!out.empty()) out += '\t';
    out += b.role + "=" + (b.value < lattice.size() ? lattice.label(b.value) : std::to_string(b.value));
  }
  return out;
}

namespace {

const NamedCheck* first_failed(const TheoremReport& r) {
  for (const auto& pre : r.preconditions) {
    if (pre.verdict.failed()) return &pre;
  }
  return nullptr;
}

nlohmann::json witness_json(const FiniteLattice& lattice, const std::vector<Binding>& witness) {
  auto arr = nlohmann::json::array();
  for (const auto& b : witness) {
    arr.push_back({b.role, b.value < lattice.size() ? lattice.label(b.value) : std::to_string(b.value)});
  }
  return arr;
}

}  // namespace

std::string to_tsv(const FiniteLattice& lattice, const TheoremReport& report) {
  std::string line = report.id + "\t" + std::string(to_string(report.status));
  const std::vector<Binding>* witness = &report.conclusion.witness;
  if (report.status == ReportStatus::NotApplicable) {
    if (const auto* pre = first_failed(report)) {
      line += "\tunmet=" + pre->name;
      witness = &pre->verdict.witness;
    }
  }
  const std::string w = format_witness(lattice, *witness);
  if (!w.empty()) line += "\t" + w;
  return line;
}

std::string to_json(const FiniteLattice& lattice, const std::vector<TheoremReport>& reports) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json pre = nlohmann::json::array();
    for (const auto& p : r.preconditions) {
      pre.push_back({{"name", p.name},
                     {"verdict", to_string(p.verdict.outcome)},
                     {"reason", p.verdict.reason},
                     {"witness", witness_json(lattice, p.verdict.witness)}});
    }
    nlohmann::json obj = {{"theorem", r.id},
                          {"host", r.host},
                          {"verdict", to_string(r.status)},
                          {"preconditions", pre},
                          {"conclusion",
                           {{"verdict", to_string(r.conclusion.outcome)},
                            {"reason", r.conclusion.reason},
                            {"witness", witness_json(lattice, r.conclusion.witness)}}}};
    if (!r.note.empty()) obj["note"] = r.note;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2);
}

}  // namespace mlat
