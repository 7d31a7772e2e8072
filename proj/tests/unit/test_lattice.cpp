#include <doctest.h>

#include "helpers.hpp"
#include "mlat/catalog.hpp"
#include "mlat/error.hpp"
#include "mlat/zn.hpp"

using namespace mlat;
using namespace testing;

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("N5 from its Hasse diagram") {
  const Covers covers{{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}};
  const FiniteLattice l = build_lattice("N5", {"0", "a", "b", "c", "1"}, covers);
  CHECK(l.size() == 5);
  CHECK(l.label(l.bottom()) == "0");
  CHECK(l.label(l.top()) == "1");
  CHECK(l.leq(l.at("a"), l.at("b")));
  CHECK_FALSE(l.leq(l.at("c"), l.at("b")));
  CHECK(l.label(l.join(l.at("a"), l.at("c"))) == "1");
  CHECK(l.label(l.meet(l.at("b"), l.at("c"))) == "0");
  CHECK(l.label(join_set(l, {l.at("a"), l.at("c")})) == "1");
  CHECK(l.label(join_set(l, {})) == "0");
  CHECK(l.label(meet_set(l, {})) == "1");
  CHECK(is_modular(l).failed());
  CHECK(l.covers().size() == 5);
}

TEST_CASE("lattice construction errors") {
  CHECK(code_of([] { build_lattice("x", {"0", "a", "1"}, Covers{{"0", "a"}, {"a", "0"}, {"a", "1"}}); }) ==
        ErrorCode::NotAPoset);
  CHECK(code_of([] { build_lattice("x", {"0", "a", "b"}, Covers{{"0", "a"}, {"0", "b"}}); }) == ErrorCode::NoBounds);
  // Two incomparable upper bounds of {a, b} below 1.
  CHECK(code_of([] {
          build_lattice("x", {"0", "a", "b", "c", "d", "1"},
                        Covers{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
        }) == ErrorCode::NotALattice);
  CHECK(code_of([] { build_lattice("x", {"0", "0"}, Covers{}); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { build_lattice("x", {"0", "1"}, Covers{{"0", "z"}}); }) == ErrorCode::UnknownLabel);
}

TEST_CASE("joins and maximal members on Id(Z12)") {
  const MultLattice m = ideal_lattice(12);
  const FiniteLattice& l = m.lattice();
  CHECK(l.label(join_set(l, set_of(m, "(4) (6)"))) == "(2)");
  CHECK(is_modular(l).passed());
  CHECK(labels_of(m, maximal_members(l, set_of(m, "(0) (3)"))) == "(3)");
  CHECK(labels_of(m, minimal_members(l, set_of(m, "(2) (3) (6)"))) == "(6)");
  CHECK(labels_of(m, up_closure(l, set_of(m, "(4)"))) == "(4) (2) (1)");
}

TEST_CASE("maximal members on N5") {
  const MultLattice m = n5_meet();
  CHECK(labels_of(m, maximal_members(m.lattice(), set_of(m, "0 a c"))) == "a c");
}

TEST_CASE("element sets") {
  ElementSet s{1, 3, 5};
  CHECK(s.size() == 3);
  CHECK(s.first() == 1);
  CHECK(s.complement(6) == ElementSet{0, 2, 4});
  CHECK(ElementSet::all(64).size() == 64);
  CHECK((s - ElementSet{3}).to_vector() == std::vector<Element>{1, 5});
}
