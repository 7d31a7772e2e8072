#include <doctest.h>

#include "../oracle.hpp"
#include "helpers.hpp"
#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/zn.hpp"

using namespace mlat;
using namespace testing;

TEST_CASE("valid and invalid S") {
  const MultLattice n5 = n5_meet();
  CHECK_NOTHROW(s_of(n5, "1 c"));
  const MultLattice z12 = ideal_lattice(12);
  CHECK_NOTHROW(s_of(z12, "(1) (4)"));
  try {
    s_of(z12, "(1) (2)");
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
    CHECK(witness(z12, Verdict::fail("", e.witness())) == "s1=(2) s2=(2)");
  }
  CHECK_THROWS_AS(s_of(z12, "(4)"), Error);
  CHECK_THROWS_AS(s_of(z12, "(1) (0)"), Error);
}

TEST_CASE("prime elements") {
  const MultLattice n5 = n5_meet();
  CHECK(is_prime(n5, n5.lattice().at("b")).passed());
  const Verdict a = is_prime(n5, n5.lattice().at("a"));
  CHECK(a.failed());
  CHECK(witness(n5, a) == "a=b b=c");

  const MultLattice z12 = ideal_lattice(12);
  CHECK(is_prime(z12, z12.lattice().at("(2)")).passed());
  const Verdict six = is_prime(z12, z12.lattice().at("(6)"));
  CHECK(six.failed());
  // Any witness must be a genuine refutation.
  const Element x = *six.get("a");
  const Element y = *six.get("b");
  CHECK(z12.leq(z12.mul(x, y), z12.lattice().at("(6)")));
  CHECK_FALSE(z12.leq(x, z12.lattice().at("(6)")));
  CHECK_FALSE(z12.leq(y, z12.lattice().at("(6)")));
  CHECK(witness(z12, six) == "a=(4) b=(3)");
  CHECK(labels_of(z12, prime_elements(z12)) == "(3) (2)");
}

TEST_CASE("S-prime elements of N5") {
  const MultLattice n5 = n5_meet();
  CHECK(labels_of(n5, spec_s(n5, s_of(n5, "1"))) == "b c");
  CHECK(labels_of(n5, spec_s(n5, s_of(n5, "1 c"))) == "0 a b");
  CHECK(labels_of(n5, spec_s(n5, s_of(n5, "1 a"))) == "0 c");
  CHECK(is_sprime(n5, s_of(n5, "1 c"), n5.lattice().at("a")).passed());
  const Verdict c = is_sprime(n5, s_of(n5, "1 c"), n5.lattice().at("c"));
  CHECK(c.failed());
  CHECK(witness(n5, c) == "t=c");
}

TEST_CASE("S-prime elements of Id(Z12)") {
  const MultLattice z12 = ideal_lattice(12);
  CHECK(labels_of(z12, spec_s(z12, s_of(z12, "(1) (4)"))) == "(0) (6) (3)");
  CHECK(labels_of(z12, spec_s(z12, s_of(z12, "(1) (3)"))) == "(6) (2)");
  CHECK(labels_of(z12, spec_s(z12, s_of(z12, "(1)"))) == "(3) (2)");
  CHECK(is_sprime(z12, s_of(z12, "(1) (4)"), z12.lattice().at("(6)")).passed());
  CHECK(is_sprime(z12, s_of(z12, "(1) (4)"), z12.lattice().at("(2)")).failed());
}

TEST_CASE("Spec_S on Id(Z_n) matches the ring definition") {
  for (unsigned n : {6u, 12u, 18u, 30u}) {
    const MultLattice m = ideal_lattice(n);
    for (const auto& s : enumerate_ring_mclosed(n)) {
      const MClosedSet sl = lattice_s(m, n, s);
      for (unsigned p : oracle::divisors(n)) {
        CAPTURE(n);
        CAPTURE(p);
        CHECK(is_sprime(m, sl, m.lattice().at(oracle::label(n, p))).passed() == oracle::ring_s_prime(n, s, p));
      }
    }
  }
}

TEST_CASE("primes avoiding S are S-prime") {
  for (const MultLattice& m : {ideal_lattice(12), ideal_lattice(30), figure3_k(), chain_lattice(5), n5_meet()}) {
    for (const MClosedSet& s : enumerate_mclosed_sets(m)) {
      for (Element p : prime_elements(m) & avoiding(m, s)) CHECK(is_sprime(m, s, p).passed());
    }
  }
}

TEST_CASE("S-prime through a prime residual") {
  const MultLattice z12 = ideal_lattice(12);
  const MClosedSet s = s_of(z12, "(1) (4)");
  const Verdict six = residual_prime_equiv(z12, s, z12.lattice().at("(6)"));
  CHECK(six.passed());
  CHECK(six.get("s-sprime").has_value());
  CHECK(label(z12, *six.get("residual")) == "(3)");
  CHECK_THROWS_AS(residual_prime_equiv(z12, s, z12.lattice().at("(2)")), Error);
  CHECK_THROWS_AS(residual_prime_equiv(z12, s, z12.lattice().at("(4)")), Error);
  CHECK_THROWS_AS(residual_prime_equiv(n5_meet(), s_of(n5_meet(), "1"), 0), Error);
}

TEST_CASE("maximal elements avoiding S") {
  const MultLattice z12 = ideal_lattice(12);
  auto r = maximal_avoiding(z12, s_of(z12, "(1) (3)"), z12.lattice().at("(0)"));
  CHECK(labels_of(z12, r.maxima) == "(2)");
  CHECK(r.all_prime.passed());
  r = maximal_avoiding(z12, s_of(z12, "(1)"), z12.lattice().at("(4)"));
  CHECK(labels_of(z12, r.maxima) == "(2)");
}

TEST_CASE("enumerated S are exactly the closed subsets") {
  for (const MultLattice& m : {ideal_lattice(12), n5_meet(), boolean_lattice(3)}) {
    std::size_t brute = 0;
    const std::size_t n = m.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const ElementSet s = ElementSet::from_bits(bits);
      if (!s.contains(m.one()) || s.contains(m.zero())) continue;
      bool closed = true;
      for (Element a : s) {
        for (Element b : s) closed = closed && s.contains(m.mul(a, b));
      }
      brute += closed ? 1 : 0;
    }
    CHECK(enumerate_mclosed_sets(m).size() == brute);
  }
}
