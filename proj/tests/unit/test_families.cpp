#include <doctest.h>

#include "helpers.hpp"
#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/zn.hpp"

using namespace mlat;
using namespace testing;

TEST_CASE("structural flags on Id(Z12)") {
  const MultLattice z12 = ideal_lattice(12);
  const StructuralFlags f = structural_flags(z12, family_of(z12, "(1) (2) (4)"));
  CHECK(f.semi_filter.passed());
  CHECK(f.filter.passed());
  CHECK(f.m_closed.passed());
  const StructuralFlags g = structural_flags(z12, family_of(z12, "(1) (6)"));
  CHECK(g.semi_filter.failed());
  CHECK(witness(z12, g.semi_filter) == "lower=(6) upper=(3)");
  CHECK_THROWS_AS(structural_flags(z12, family_of(z12, "(2)")), Error);
}

TEST_CASE("S-Ako and S-Oka examples on Id(Z12)") {
  const MultLattice z12 = ideal_lattice(12);
  const ElementFamily f = family_of(z12, "(1) (2) (4)");
  CHECK(is_s_ako(z12, f, s_of(z12, "(1) (4)")).passed());
  CHECK(is_s_oka(z12, f, s_of(z12, "(1) (4)")).passed());

  const ElementFamily g = family_of(z12, "(1) (6)");
  const Verdict ako = is_s_ako(z12, g, s_of(z12, "(1)"));
  CHECK(ako.failed());
  CHECK(witness(z12, ako) == "s=(1) i=(0) a=(6) b=(6)");
  CHECK(is_s_oka(z12, g, s_of(z12, "(1)")).passed());
}

TEST_CASE("the family of a converse failure") {
  const MultLattice z12 = ideal_lattice(12);
  const ElementFamily f = family_of(z12, "(4) (6) (2) (1)");
  const MClosedSet s = s_of(z12, "(1)");
  CHECK(labels_of(z12, max_complement(z12, f)) == "(3)");
  const Verdict oka = is_s_oka(z12, f, s);
  CHECK(witness(z12, oka) == "s=(1) i=(0) a=(6) residual=(2)");
  const Verdict ako = is_s_ako(z12, f, s);
  CHECK(witness(z12, ako) == "s=(1) i=(0) a=(6) b=(6)");
}

TEST_CASE("non-annihilator family of K") {
  const MultLattice k = figure3_k();
  const MClosedSet s = s_of(k, "1");
  const ElementFamily f = build_named_family(k, FamilyKind::NonAnnihilator);
  CHECK(labels_of(k, f.members) == "a b c 1");
  const Verdict ako = is_s_ako(k, f, s);
  CHECK(ako.failed());
  CHECK(label(k, *ako.get("i")) == "0");
  CHECK(violates_s_ako(k, f, k.one(), k.lattice().at("0"), k.lattice().at("a"), k.lattice().at("b")));
  CHECK(is_s_oka(k, f, s).passed());
  CHECK(labels_of(k, max_complement(k, f)) == "d");
  CHECK(is_prime(k, k.lattice().at("d")).passed());
}

TEST_CASE("S must lie in the family") {
  const MultLattice z12 = ideal_lattice(12);
  CHECK_THROWS_AS(is_s_ako(z12, family_of(z12, "(1)"), s_of(z12, "(1) (4)")), Error);
  CHECK_THROWS_AS(is_s_oka(z12, family_of(z12, "(1)"), s_of(z12, "(1) (4)")), Error);
}

TEST_CASE("S_pr-Oka needs an r-lattice and principal elements in F") {
  const MultLattice z12 = ideal_lattice(12);
  CHECK(is_spr_oka(z12, {z12.lattice().elements()}, s_of(z12, "(1)")).passed());
  CHECK_THROWS_AS(is_spr_oka(z12, family_of(z12, "(1) (2)"), s_of(z12, "(1)")), Error);
  CHECK_THROWS_AS(is_spr_oka(figure3_k(), {figure3_k().lattice().elements()}, s_of(figure3_k(), "1")), Error);
}

TEST_CASE("divisor condition agrees with S-Oka on every family") {
  for (const MultLattice& m : {ideal_lattice(12), figure3_k(), boolean_lattice(2)}) {
    for (const MClosedSet& s : enumerate_mclosed_sets(m)) {
      const std::vector<Element> free = s.members().complement(m.size()).to_vector();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        ElementFamily f{s.members()};
        for (std::size_t k = 0; k < free.size(); ++k) {
          if ((mask >> k) & 1U) f.members.insert(free[k]);
        }
        CHECK(oka_divisor_condition(m, f, s).passed() == is_s_oka(m, f, s).passed());
      }
    }
  }
}

TEST_CASE("named families") {
  const MultLattice z12 = ideal_lattice(12);
  FamilyParams params;
  params.s = s_of(z12, "(1) (4)");
  CHECK(labels_of(z12, build_named_family(z12, FamilyKind::AboveS, params).members) == "(4) (2) (1)");
  CHECK(labels_of(ideal_lattice(30), build_named_family(ideal_lattice(30), FamilyKind::Dense).members) == "(1)");

  params.generators = {z12.lattice().at("(2)"), z12.lattice().at("(3)")};
  const ProductClosure closure = product_closure(z12, params.generators);
  CHECK(labels_of(z12, closure.products) == "(0) (6) (4) (3) (2)");
  CHECK(closure.words.at(z12.zero()).size() == 3);
  CHECK(build_named_family(z12, FamilyKind::ProductClosure, params).members == z12.lattice().elements());

  params.primes = set_of(z12, "(2)");
  CHECK_THROWS_AS(build_named_family(z12, FamilyKind::AvoidingPrimes, params), Error);
  CHECK_THROWS_AS(build_named_family(z12, FamilyKind::ProductClosure, FamilyParams{}), Error);
  CHECK(parse_family_kind("star_zero") == FamilyKind::StarZero);
  CHECK_FALSE(parse_family_kind("nope").has_value());
}
