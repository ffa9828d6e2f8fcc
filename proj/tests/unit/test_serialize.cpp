#include <doctest.h>

#include <functional>
#include <optional>

#include "afftl/error.hpp"
#include "afftl/serialize.hpp"
#include "support.hpp"

using namespace afftl;

namespace {

std::optional<ErrorKind> kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("words and polynomials") {
  CHECK(word_to_json({1, 3, 2}).dump() == "[1,3,2]");
  CHECK(word_from_json(Json::parse("[2,4]")) == Word{2, 4});
  CHECK(kind_of([] { word_from_json(Json::parse("[1,\"a\"]")); }) == ErrorKind::parse);
  CHECK(kind_of([] { word_from_json(Json::parse("{}")); }) == ErrorKind::parse);

  LaurentPoly d = LaurentPoly::delta();
  CHECK(laurent_to_json(d).dump() == R"([{"exp":-1,"c":1},{"exp":1,"c":1}])");
  CHECK(laurent_from_json(laurent_to_json(d * d)) == d * d);
  CHECK(laurent_from_json(Json::parse(R"([{"exp":0,"c":2},{"exp":0,"c":-2}])")).is_zero());
  CHECK(kind_of([] { laurent_from_json(Json::parse(R"([{"exp":0}])")); }) == ErrorKind::parse);
}

TEST_CASE("diagrams") {
  AffineDiagram g = AffineDiagram::generator(4, 4);
  Json j = diagram_to_json(g);
  CHECK(j["n"] == 4);
  CHECK(j["top"][3] == Json::parse(R"({"side":"T","pos":5})"));
  CHECK(diagram_from_json(j) == g);
  CHECK(diagram_from_json(Json::parse(j.dump())) == g);

  Json bad = j;
  bad["top"][0] = Json::parse(R"({"side":"T","pos":1})");
  CHECK(kind_of([&] { diagram_from_json(bad); }) == ErrorKind::invalid_diagram);
  bad["top"][0] = Json::parse(R"({"side":"X","pos":1})");
  CHECK(kind_of([&] { diagram_from_json(bad); }) == ErrorKind::parse);
  Json missing = j;
  missing.erase("loops");
  CHECK(kind_of([&] { diagram_from_json(missing); }) == ErrorKind::parse);
}

TEST_CASE("algebra elements") {
  GroupConfig four(4);
  AlgebraElement e = AlgebraElement::monomial(four, {1}) + AlgebraElement::monomial(four, {2, 1}).scaled(3);
  CHECK(element_from_json(element_to_json(e)) == e);

  Json sq = Json::parse(R"({"n":4,"terms":[{"coeff":[{"exp":0,"c":1}],"word":[1,1]}]})");
  CHECK(element_from_json(sq) == AlgebraElement::monomial(four, {1}).scaled(LaurentPoly::delta()));
  Json empty = Json::parse(R"({"n":4,"terms":[]})");
  CHECK(element_from_json(empty).is_zero());
  Json bad = Json::parse(R"({"n":4,"terms":[{"coeff":[{"exp":0,"c":1}],"word":[7]}]})");
  CHECK_THROWS_AS(element_from_json(bad), Error);
}

TEST_CASE("labels") {
  CellLabels l = labels(GroupConfig(4), {1, 3, 2, 4});
  Json j = labels_to_json(l);
  CHECK(j["two_sided"]["text"] == "MElem(M1,2)");
  CHECK(j["two_sided"]["start"] == "M1");
  CHECK(labels_from_json(j) == l);
  CHECK(label_from_json(label_to_json(TwoSidedLabel::small(2))) == TwoSidedLabel::small(2));
  CHECK(kind_of([] { label_from_json(Json::parse(R"({"kind":"big"})")); }) == ErrorKind::parse);

  Json inv = involution_to_json(involution_decompose(GroupConfig(4), {2, 1, 3, 2}));
  CHECK(inv.dump() == R"({"x":[2],"T":[1,3]})");
  Json st = straighten_to_json(straighten(stack(GroupConfig(4), {2, 1, 3, 2}).diagram));
  CHECK(st.dump() == R"({"word":[2,1,3,2],"straight_core":[1,3]})");
}

TEST_CASE("records") {
  for (const auto& r : testing::records(4, 6)) {
    Json j = record_to_json(r);
    EnumerationRecord back = record_from_json(Json::parse(j.dump()));
    CHECK(back.word == r.word);
    CHECK(back.key == r.key);
    CHECK(back.diagram == r.diagram);
    CHECK(back.labels == r.labels);
    CHECK(back.is_involution == r.is_involution);
  }
  Json j = record_to_json(testing::records(4, 6)[3]);
  j["key"] = "4|nonsense";
  CHECK(kind_of([&] { record_from_json(j); }) == ErrorKind::parse);
}
