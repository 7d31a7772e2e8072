#include <doctest.h>

#include <chrono>

#include "../oracle.hpp"
#include "helpers.hpp"
#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/zn.hpp"

using namespace mlat;
using namespace testing;

TEST_CASE("ideal lattices") {
  const MultLattice z12 = ideal_lattice(12);
  CHECK(z12.lattice().labels() == std::vector<std::string>{"(0)", "(6)", "(4)", "(3)", "(2)", "(1)"});
  const MultLattice z7 = ideal_lattice(7);
  CHECK(z7.lattice().labels() == std::vector<std::string>{"(0)", "(1)"});
  const MultLattice z30 = ideal_lattice(30);
  CHECK(z30.size() == 8);
  CHECK(is_reduced(z30).passed());
  CHECK_THROWS_AS(ideal_lattice(1), Error);
  CHECK(ZnModel(12).divisors == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("ring colon") {
  CHECK(ring_colon(12, 12, 6) == 2);
  CHECK(ring_colon(12, 6, 4) == 3);
  for (unsigned n : {12u, 30u, 36u}) {
    for (unsigned a : oracle::divisors(n)) {
      CHECK(ring_colon(n, a, 1) == a);
      for (unsigned b : oracle::divisors(n)) CHECK(ring_colon(n, a, b) == oracle::ideal_colon(a, b));
    }
  }
}

TEST_CASE("ring S-prime ideals") {
  CHECK(ring_s_prime(12, {1, 4}, 6).passed());
  CHECK(ring_s_prime(12, {1, 4}, 2).failed());
  CHECK(ring_s_prime(12, {1}, 3).passed());
  CHECK_THROWS_AS(ring_s_prime(12, {1, 2}, 3), Error);
  CHECK_THROWS_AS(ring_s_prime(12, {2}, 3), Error);
  CHECK_THROWS_AS(ring_s_prime(12, {0, 1}, 3), Error);
}

TEST_CASE("valid residue sets are counted exactly") {
  for (unsigned n : {2u, 6u, 8u, 12u}) {
    CAPTURE(n);
    CHECK(enumerate_ring_mclosed(n).size() == oracle::ring_mclosed_count(n));
  }
  CHECK(enumerate_ring_mclosed(60).size() == 30356);
}

TEST_CASE("S_L from residues") {
  const MultLattice z12 = ideal_lattice(12);
  CHECK(labels_of(z12, lattice_s(z12, 12, {1, 4}).members()) == "(4) (1)");
  CHECK(labels_of(z12, lattice_s(z12, 12, {1, 5, 7, 11}).members()) == "(1)");
}

TEST_CASE("crosschecks") {
  CHECK(crosscheck(12, {1, 4}).status == ReportStatus::Pass);
  CHECK(crosscheck(12, {1}).status == ReportStatus::Pass);
  CHECK(crosscheck(30, {1, 6}).status == ReportStatus::Pass);
  for (unsigned n : {6u, 12u, 24u, 30u, 36u}) {
    const TheoremReport r = crosscheck_all(n);
    CHECK_MESSAGE(r.status == ReportStatus::Pass, r.conclusion.reason);
  }
  CHECK_THROWS_AS(crosscheck(65, {1}), Error);
}
