#include <doctest.h>

#include "skein/diagram.hpp"
#include "skein/table.hpp"

#include <set>

using namespace skein;

namespace {
const char* kTrefoilDoc =
    R"({"format":"pdcode-v1","components":1,"zero_crossing_components":0,"crossings":[)"
    R"({"id":0,"kind":"neg","ends":[1,4,2,5]},{"id":1,"kind":"neg","ends":[3,6,4,1]},)"
    R"({"id":2,"kind":"neg","ends":[5,2,6,3]}]})";
}

TEST_CASE("parse the empty unknot document") {
  const Diagram d = parse_pd(
      R"({"format":"pdcode-v1","components":1,"zero_crossing_components":1,"crossings":[]})");
  CHECK(d.order() == 0);
  CHECK(count_components(d) == 1);
  CHECK(validate(d).ok);
  CHECK(planarity_genus(d) == 0);
  CHECK(writhe(d) == 0);
}

TEST_CASE("parse the trefoil document") {
  const Diagram d = parse_pd(kTrefoilDoc);
  CHECK(d.crossings.size() == 3);
  CHECK(count_components(d) == 1);
  CHECK(validate(d).ok);
  CHECK(planarity_genus(d) == 0);
  CHECK(writhe(d) == -3);
  // canonical round trip, byte for byte
  CHECK(serialize(parse_pd(serialize(d))) == serialize(d));
  CHECK(serialize(d) == kTrefoilDoc);
}

TEST_CASE("parse errors carry the offending element") {
  CHECK_THROWS_WITH_AS(parse_pd("{"), doctest::Contains("JSON"), SkeinError);
  CHECK_THROWS_AS(parse_pd(R"({"format":"pdcode-v1"})"), SkeinError);
  // arc 7 used once
  try {
    parse_pd(
        R"({"format":"pdcode-v1","components":1,"zero_crossing_components":0,"crossings":[)"
        R"({"id":0,"kind":"neg","ends":[1,4,2,5]},{"id":1,"kind":"neg","ends":[3,6,4,1]},)"
        R"({"id":2,"kind":"neg","ends":[5,2,7,3]}]})");
    CHECK(false);
  } catch (const SkeinError& e) {
    CHECK(e.code() == "unpaired_arc");
  }
}

TEST_CASE("validate flags a scrambled ends tuple") {
  Diagram d = parse_pd(kTrefoilDoc);
  // cyclic scramble of one crossing breaks the succession
  auto& ends = d.crossings[0].ends;
  ends = {ends[1], ends[2], ends[3], ends[0]};
  const Report r = validate(d);
  CHECK_FALSE(r.ok);
}

TEST_CASE("validate flags wrong sign against orientation") {
  // the same trefoil with one crossing stored as positive cannot pair arcs
  Diagram d = parse_pd(kTrefoilDoc);
  d.crossings[0].kind = CrossingKind::positive;
  CHECK_FALSE(validate(d).ok);
}

TEST_CASE("component counts") {
  CHECK(count_components(hopf_positive()) == 2);
  CHECK(count_components(trefoil_left()) == 1);
  CHECK(count_components(whitehead()) == 2);
  CHECK(validate(whitehead()).ok);
}

TEST_CASE("writhe of table diagrams") {
  CHECK(writhe(trefoil_left()) == -3);
  CHECK(writhe(hopf_positive()) == 2);
  CHECK(writhe(figure_eight()) == 0);
  CHECK(writhe(torus_5_1()) == -5);
}

TEST_CASE("genus of a virtual-style code is positive") {
  // two loops crossing once cannot be drawn in the plane
  const Diagram d = parse_pd(
      R"({"format":"pdcode-v1","components":2,"zero_crossing_components":0,"crossings":[)"
      R"({"id":0,"kind":"pos","ends":[1,2,1,2]}]})");
  CHECK(planarity_genus(d) == 1);
  // interleaved two-crossing Gauss code, virtual-trefoil style
  const Diagram v = parse_pd(
      R"({"format":"pdcode-v1","components":1,"zero_crossing_components":0,"crossings":[)"
      R"({"id":0,"kind":"pos","ends":[3,2,4,1]},{"id":1,"kind":"pos","ends":[4,3,1,2]}]})");
  CHECK(count_components(v) == 1);
  CHECK(validate(v).ok);
  CHECK(planarity_genus(v) == 1);
}

TEST_CASE("whitehead linking number is zero") {
  const Diagram w = whitehead();
  CombMap m(w);
  const auto orbits = m.orbits();
  REQUIRE(orbits.size() == 2);
  std::set<int> comp0(orbits[0].begin(), orbits[0].end());
  int lk2 = 0;
  int self = 0;
  for (const auto& c : w.crossings) {
    const bool u_in0 = comp0.count(c.ends[0]) > 0;
    const bool o_in0 = comp0.count(c.kind == CrossingKind::positive ? c.ends[3] : c.ends[1]) > 0;
    if (u_in0 != o_in0)
      lk2 += c.kind == CrossingKind::positive ? 1 : -1;
    else
      ++self;
  }
  CHECK(lk2 == 0);
  CHECK(self == 1);
}

TEST_CASE("mirror flips writhe and validates") {
  for (const auto& d : {trefoil_left(), figure_eight(), knot_5_2(), hopf_positive()}) {
    const Diagram md = mirror(d);
    CHECK(validate(md).ok);
    CHECK(writhe(md) == -writhe(d));
    CHECK(count_components(md) == count_components(d));
  }
}

TEST_CASE("iso string quotients relabeling") {
  // the same trefoil written with a rotated arc numbering
  const Diagram a = trefoil_left();
  const Diagram b = parse_pd(
      R"({"format":"pdcode-v1","components":1,"zero_crossing_components":0,"crossings":[)"
      R"({"id":7,"kind":"neg","ends":[3,6,4,1]},{"id":8,"kind":"neg","ends":[5,2,6,3]},)"
      R"({"id":9,"kind":"neg","ends":[1,4,2,5]}]})");
  CHECK(iso_canonical_string(a) == iso_canonical_string(b));
  CHECK(iso_canonical_string(a) != iso_canonical_string(mirror(a)));
}
