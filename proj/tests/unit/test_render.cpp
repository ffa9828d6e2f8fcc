#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "afftl/render.hpp"
#include "afftl/straighten.hpp"

using namespace afftl;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

AffineDiagram of(int n, const Word& w) { return stack(GroupConfig(n), w).diagram; }

}  // namespace

TEST_CASE("ascii identity") {
  auto l = lines(render(AffineDiagram::identity(4), RenderFormat::ascii));
  REQUIRE(l.size() >= 5);
  CHECK(l[0] == "    1   2   3   4");
  CHECK(l[1] == "T   o   o   o   o");
  CHECK(l[2] == "    |   |   |   |");
  CHECK(l[4] == "B   o   o   o   o");
  CHECK(l.back() == "loops: 0");
  for (int i = 1; i <= 4; ++i) CHECK(count(l[5 + i - 1], "T" + std::to_string(i) + "-B" + std::to_string(i)) == 1);
}

TEST_CASE("ascii arcs, wraps and loops") {
  std::string g1 = render(AffineDiagram::generator(4, 1), RenderFormat::ascii);
  auto l = lines(g1);
  CHECK(l[2] == "    +---+   |   |");
  CHECK(count(g1, "T1-T2") == 1);
  CHECK(count(g1, "B1-B2") == 1);

  std::string g4 = render(AffineDiagram::generator(4, 4), RenderFormat::ascii);
  CHECK(count(g4, "T4-T5 (wraps)") == 1);
  CHECK(count(g4, " <--+") == 2);
  CHECK(count(g4, "+->") == 2);

  std::string looped = render(of(4, {1, 3, 2, 4}), RenderFormat::ascii);
  CHECK(count(looped, "<================>") == 1);
  CHECK(count(looped, "loops: 1") == 1);

  std::string slanted = render(of(4, {2, 1}), RenderFormat::ascii);
  CHECK(count(slanted, "T1-B3 [a]") == 1);
  CHECK(count(slanted, "a") == 3);
}

TEST_CASE("edge list covers every node once") {
  for (const Word& w : std::vector<Word>{{}, {1, 3}, {2, 1, 3, 2}, {1, 2, 3, 4, 5}, {5, 1, 2}}) {
    AffineDiagram d = of(5, w);
    std::string s = render(d, RenderFormat::ascii);
    int edges = 0;
    for (const auto& line : lines(s)) {
      if (!line.empty() && (line[0] == 'T' || line[0] == 'B') && line.find('-') != std::string::npos) ++edges;
    }
    CHECK(edges == 5);
  }
}

TEST_CASE("svg") {
  std::string s = render(of(4, {1, 3, 2, 4}), RenderFormat::svg);
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(count(s, "data-node=") == 8);
  // The wrapping arc is drawn on both sides of the cut.
  CHECK(count(s, "<path ") == 5);
  CHECK(count(s, "data-from=\"B4\" data-to=\"B5\"") == 2);
  CHECK(count(s, "data-from=\"T1\" data-to=\"T2\"") == 1);
  CHECK(count(s, "class=\"loop\"") == 1);
}
