#include <doctest.h>

#include "helpers.hpp"
#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/principle.hpp"
#include "mlat/zn.hpp"

using namespace mlat;
using namespace testing;

namespace {

const TheoremReport* find(const std::vector<TheoremReport>& reports, const std::string& id) {
  for (const auto& r : reports) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("principle on the Id(Z12) example family") {
  const MultLattice z12 = ideal_lattice(12);
  const TheoremReport r = check_s_pep(z12, s_of(z12, "(1) (4)"), family_of(z12, "(1) (2) (4)"), PepVariant::Ako);
  CHECK(r.status == ReportStatus::Pass);

  const TheoremReport oka = check_s_pep(z12, s_of(z12, "(1)"), family_of(z12, "(1) (6)"), PepVariant::Oka);
  CHECK(oka.status == ReportStatus::Pass);
  const TheoremReport ako = check_s_pep(z12, s_of(z12, "(1)"), family_of(z12, "(1) (6)"), PepVariant::Ako);
  CHECK(ako.status == ReportStatus::NotApplicable);
  CHECK(to_tsv(z12.lattice(), ako) == "s-pep-ako\tnot-applicable\tunmet=family-s-ako\ts=(1)\ti=(0)\ta=(6)\tb=(6)");
}

TEST_CASE("an empty Max(F') is vacuous") {
  const MultLattice z12 = ideal_lattice(12);
  const TheoremReport r = check_s_pep(z12, s_of(z12, "(1)"), {z12.lattice().elements()}, PepVariant::Ako);
  CHECK(r.status == ReportStatus::VacuousPass);
}

TEST_CASE("converse failure") {
  const MultLattice z12 = ideal_lattice(12);
  const MClosedSet s = s_of(z12, "(1)");
  const TheoremReport r = check_converse_failure(z12, s, family_of(z12, "(4) (6) (2) (1)"));
  CHECK(r.status == ReportStatus::Pass);
  CHECK(to_tsv(z12.lattice(), r) ==
        "s-pep-converse\tpass\tmax=(3)\tako.s=(1)\tako.i=(0)\tako.a=(6)\tako.b=(6)\toka.s=(1)\toka.i=(0)\toka.a=(6)\toka.residual=(2)");
  const auto all = find_converse_failures(z12, s);
  CHECK_FALSE(all.empty());
  CHECK(std::find(all.begin(), all.end(), family_of(z12, "(4) (6) (2) (1)")) != all.end());
}

TEST_CASE("supplement and finite products") {
  const MultLattice z12 = ideal_lattice(12);
  const MClosedSet s = s_of(z12, "(1)");
  const ElementFamily mp = build_named_family(z12, FamilyKind::MeetPrincipal);
  CHECK(check_s_peps(z12, s, mp, PepsMode::all()).status == ReportStatus::Pass);

  const std::vector<Element> gens{z12.lattice().at("(2)"), z12.lattice().at("(3)")};
  const TheoremReport r = check_finite_product_zero(z12, gens);
  CHECK(r.status == ReportStatus::Pass);
  CHECK(r.conclusion.witness.size() == 3);
  Element product = z12.one();
  for (const auto& b : r.conclusion.witness) product = z12.mul(product, b.value);
  CHECK(product == z12.zero());

  const ElementFamily f = build_named_family(z12, FamilyKind::ProductClosure, FamilyParams{std::nullopt, {}, gens});
  CHECK(check_s_peps(z12, s, f, PepsMode::all()).status == ReportStatus::Pass);
  CHECK(check_s_peps(z12, s, f, PepsMode::within(set_of(z12, "(6)"))).status == ReportStatus::NotApplicable);
}

TEST_CASE("exhaustive audit of Id(Z12)") {
  const AuditResult a = exhaustive_audit(ideal_lattice(12));
  CHECK(a.failures == 0);
  CHECK(a.supplement_failures == 0);
  CHECK(a.vacuous >= 1);
  CHECK_THROWS_AS(exhaustive_audit(ideal_lattice(60)), Error);
}

TEST_CASE("audits of the small catalog") {
  for (const MultLattice& m : {n5_meet(), chain_lattice(4), chain_lattice(6), boolean_lattice(2), figure3_k(),
                               ideal_lattice(8), ideal_lattice(9)}) {
    CAPTURE(m.name());
    const AuditResult a = exhaustive_audit(m);
    CHECK(a.failures == 0);
    CHECK(a.supplement_failures == 0);
  }
}

TEST_CASE("suite on Id(Z30) and Id(Z12)") {
  const MultLattice z30 = ideal_lattice(30);
  const auto r30 = run_theorem_suite(z30);
  const TheoremReport* ess = find(r30, "essential-max-prime");
  REQUIRE(ess != nullptr);
  CHECK(ess->status == ReportStatus::Pass);
  CHECK(to_tsv(z30.lattice(), *ess) == "essential-max-prime\tpass\tmax=(5)\tmax=(3)\tmax=(2)");
  for (const auto& r : r30) CHECK_MESSAGE(!r.failed(), r.id);

  const MultLattice z12 = ideal_lattice(12);
  const auto r12 = run_theorem_suite(z12);
  const TheoremReport* ess12 = find(r12, "essential-max-prime");
  REQUIRE(ess12 != nullptr);
  CHECK(to_tsv(z12.lattice(), *ess12) == "essential-max-prime\tnot-applicable\tunmet=reduced\tnilpotent=(6)");
  for (const auto& r : r12) CHECK_MESSAGE(!r.failed(), r.id);
}

TEST_CASE("annihilator member on K") {
  const MultLattice k = figure3_k();
  const TheoremReport* r = nullptr;
  const auto reports = run_theorem_suite(k);
  r = find(reports, "annihilator-max-prime");
  REQUIRE(r != nullptr);
  CHECK(r->status == ReportStatus::Pass);
  CHECK(to_tsv(k.lattice(), *r) == "annihilator-max-prime\tpass\tmax=d");
}

TEST_CASE("filter lemmas fail on N5 with meet") {
  const MultLattice n5 = n5_meet();
  const auto reports = run_theorem_suite(n5);
  const TheoremReport* filter = find(reports, "filter-mclosed-ako-oka");
  REQUIRE(filter != nullptr);
  CHECK(filter->status == ReportStatus::Fail);
  CHECK(to_tsv(n5.lattice(), *filter) == "filter-mclosed-ako-oka\tfail\tS=1\tF=b\tF=1\ts=1\ti=a\ta=b\tb=c");
  const ElementFamily f = family_of(n5, "b 1");
  const StructuralFlags flags = structural_flags(n5, f);
  CHECK(flags.filter.passed());
  CHECK(flags.m_closed.passed());
  CHECK(violates_s_ako(n5, f, n5.one(), n5.lattice().at("a"), n5.lattice().at("b"), n5.lattice().at("c")));
  CHECK(find(reports, "ako-implies-oka")->status == ReportStatus::Pass);
}

TEST_CASE("suite members on invalid hosts") {
  const FiniteLattice l = chain_lattice(3).lattice();
  std::vector<Element> cells = MultTable::meet_of(l).cells();
  cells[1 * 3 + 1] = 2;
  const MultLattice bad = classify_multiplication(l, MultTable(3, cells));
  const auto reports = run_theorem_suite(bad);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].status == ReportStatus::NotApplicable);
  CHECK_THROWS_AS(exhaustive_audit(bad), Error);
}
