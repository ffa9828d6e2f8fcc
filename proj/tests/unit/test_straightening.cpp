#include <doctest.h>

#include "afftl/checks.hpp"
#include "afftl/error.hpp"
#include "afftl/straighten.hpp"
#include "support.hpp"

using namespace afftl;

TEST_CASE("stack") {
  GroupConfig four(4);
  ProductResult r = stack(four, {2, 1, 3, 2});
  CHECK(r.contractible_loops == 0);
  CHECK(descent_arcs(r.diagram, Side::top) == GeneratorSet{2});
  CHECK(descent_arcs(r.diagram, Side::bottom) == GeneratorSet{2});

  ProductResult sq = stack(four, {1, 1});
  CHECK(sq.contractible_loops == 1);
  CHECK(sq.diagram == AffineDiagram::generator(4, 1));

  ProductResult empty = stack(four, {});
  CHECK(empty.contractible_loops == 0);
  CHECK(empty.diagram == AffineDiagram::identity(4));
  CHECK_THROWS_AS(stack(four, {5}), Error);
}

TEST_CASE("is_straight") {
  GroupConfig four(4);
  CHECK(is_straight(stack(four, {1, 3}).diagram) == GeneratorSet{1, 3});
  CHECK_FALSE(is_straight(stack(four, {2, 1, 3, 2}).diagram).has_value());
  CHECK(is_straight(AffineDiagram::identity(5)) == GeneratorSet{});
  CHECK_FALSE(is_straight(stack(four, {1, 2}).diagram).has_value());
}

TEST_CASE("congruence classes of the worked example") {
  GroupConfig four(4);
  AffineDiagram d = stack(four, {2, 1, 3, 2}).diagram;
  auto all = congruence_classes(d);
  REQUIRE(all.size() == 2);
  CHECK(all[0].cls == 2);
  CHECK(all[0].kind == CongruenceKind::t1);
  CHECK(all[1].cls == 2);
  CHECK(all[1].kind == CongruenceKind::b1);
  CongruenceFinding f = find_distinguished(d);
  CHECK(f.cls == 2);
  CHECK(f.kind == CongruenceKind::t1);
  CHECK(f.cover.has_value());

  AffineDiagram e = stack(four, {2, 1}).diagram;
  CongruenceFinding g = find_distinguished(e);
  CHECK(g.cls == 1);
  CHECK(g.kind == CongruenceKind::t2);
  CHECK(std::string(to_string(g.kind)) == "2T");

  CHECK_THROWS_AS(find_distinguished(stack(four, {1, 3}).diagram), Error);
}

TEST_CASE("peel") {
  GroupConfig four(4);
  AffineDiagram d = stack(four, {2, 1, 3, 2}).diagram;
  Peel p = peel(d, find_distinguished(d));
  CHECK(p.letter == 2);
  CHECK(p.end == End::left);
  CHECK(p.rest == stack(four, {1, 3, 2}).diagram);
  ProductResult back = multiply(AffineDiagram::generator(4, 2), p.rest);
  CHECK(back.diagram == d);
  CHECK(back.contractible_loops == 0);

  AffineDiagram e = stack(four, {2, 1}).diagram;
  Peel q = peel(e, find_distinguished(e));
  CHECK(q.letter == 2);
  CHECK(q.end == End::left);
  CHECK(q.rest == AffineDiagram::generator(4, 1));
}

TEST_CASE("loop case of type 1") {
  GroupConfig four(4);
  AffineDiagram d = multiply(stack(four, {1, 3}).diagram, stack(four, {2, 4}).diagram).diagram;
  CongruenceFinding f = find_distinguished(d);
  CHECK(f.kind == CongruenceKind::t1);
  CHECK(f.via_loop);
  Peel p = peel(d, f);
  CHECK(p.rest.loops() == 0);
  CHECK(length(p.rest) == 3);
}

TEST_CASE("straighten") {
  GroupConfig four(4);
  CHECK(straighten(AffineDiagram::identity(4)).word.empty());
  StraightWord s = straighten(stack(four, {2, 1, 3, 2}).diagram);
  CHECK(s.word == Word{2, 1, 3, 2});
  CHECK(s.core == GeneratorSet{1, 3});
  CHECK(s.trace.size() == 3);

  AffineDiagram looped = multiply(stack(four, {1, 3}).diagram, stack(four, {2, 4}).diagram).diagram;
  StraightWord t = straighten(looped);
  CHECK(t.word == Word{1, 3, 2, 4});
  ProductResult back = stack(four, t.word);
  CHECK(back.diagram == looped);
  CHECK(back.contractible_loops == 0);

  RawDiagram rot{4, {}, {}, 0};
  for (int i = 1; i <= 4; ++i) {
    rot.top.push_back({Side::bottom, i + 1});
    rot.bottom.push_back({Side::top, i - 1});
  }
  CHECK_THROWS_AS(straighten(AffineDiagram::from_raw(rot)), Error);
}

TEST_CASE("property: round trip and bookkeeping") {
  for (int n = 3; n <= 6; ++n) {
    CheckContext ctx(GroupConfig(n), n <= 4 ? 12 : 9, 1);
    auto r = check_straighten_round_trip(ctx);
    INFO(n, testing::first_failure(r));
    CHECK(r.passed);
  }
}
