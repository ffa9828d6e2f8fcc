#include "afftl/straighten.hpp"

#include <algorithm>
#include <stdexcept>

#include "afftl/error.hpp"

namespace afftl {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

int wrap(int pos, int n) { return pos - n * floor_div(pos - 1, n); }

void set_arc(RawDiagram& raw, Side side, int a, int b) {
  auto& row = side == Side::top ? raw.top : raw.bottom;
  int ra = wrap(a, raw.n);
  int rb = wrap(b, raw.n);
  row[static_cast<std::size_t>(ra - 1)] = {side, b - (a - ra)};
  row[static_cast<std::size_t>(rb - 1)] = {side, a - (b - rb)};
}

bool minimal_top_arc(const AffineDiagram& d, int k) {
  return d.partner({Side::top, k}) == NodeRef{Side::top, k + 1};
}

// Type 1 on the top row: minimal arc (k, k+1) plus a covering arc, or no
// cover and a long horizontal edge.
std::vector<CongruenceFinding> type1_top(const AffineDiagram& d,
                                         CongruenceKind kind) {
  const int n = d.n();
  std::vector<CongruenceFinding> out;
  for (int k = 1; k <= n; ++k) {
    if (!minimal_top_arc(d, k)) continue;
    std::optional<std::pair<int, int>> inner;
    for (int p = 1; p <= n; ++p) {
      NodeRef q = d.partner({Side::top, p});
      if (q.side != Side::top || q.pos <= p) continue;
      // Translates with p + mn < k and q + mn > k + 1.
      int lo = ceil_div(k + 2 - q.pos, n);
      int hi = floor_div(k - 1 - p, n);
      for (int m = lo; m <= hi; ++m) {
        std::pair<int, int> arc{p + m * n, q.pos + m * n};
        if (!inner || arc.first > inner->first) inner = arc;
      }
    }
    if (inner) {
      out.push_back({k, kind, inner, false});
    } else if (d.loops() > 0) {
      out.push_back({k, kind, std::nullopt, true});
    }
  }
  return out;
}

// Type 2 on the top row, reported at class k-1: minimal arc (k, k+1) and top
// node k-1 joined to a bottom node at or beyond k+1.
std::vector<CongruenceFinding> type2_top(const AffineDiagram& d,
                                         CongruenceKind kind) {
  const int n = d.n();
  std::vector<CongruenceFinding> out;
  for (int k = 1; k <= n; ++k) {
    if (!minimal_top_arc(d, k)) continue;
    NodeRef x = d.partner({Side::top, k - 1});
    if (x.side == Side::bottom && x.pos >= k + 1) {
      out.push_back({wrap(k - 1, n), kind, std::nullopt, false});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.cls < b.cls; });
  return out;
}

int short_edge_count(const AffineDiagram& d) {
  return static_cast<int>(short_arcs(d, Side::top).size() +
                          short_arcs(d, Side::bottom).size());
}

void check_peel(const AffineDiagram& d, const Peel& p) {
  const AffineDiagram g = AffineDiagram::generator(d.n(), p.letter);
  ProductResult back =
      p.end == End::left ? multiply(g, p.rest) : multiply(p.rest, g);
  if (back.contractible_loops != 0 || !(back.diagram == d)) {
    throw std::logic_error("peel does not restack to the original diagram");
  }
  if (!is_admissible(p.rest) || length(p.rest) != length(d) - 1) {
    throw std::logic_error("peel did not shorten the diagram by one");
  }
  if (short_edge_count(p.rest) != short_edge_count(d)) {
    throw std::logic_error("peel changed the number of short horizontal edges");
  }
}

Peel peel_type1_top(const AffineDiagram& d, const CongruenceFinding& f) {
  RawDiagram raw = d.raw();
  const int k = f.cls;
  if (f.cover) {
    auto [i0, j0] = *f.cover;
    set_arc(raw, Side::top, i0, k);
    set_arc(raw, Side::top, k + 1, j0);
  } else {
    set_arc(raw, Side::top, k + 1, k + d.n());
    raw.loops -= 1;
  }
  return {k, End::left, AffineDiagram::from_raw(std::move(raw))};
}

}  // namespace

const char* to_string(CongruenceKind k) noexcept {
  switch (k) {
    case CongruenceKind::t1: return "1T";
    case CongruenceKind::b1: return "1B";
    case CongruenceKind::t2: return "2T";
    case CongruenceKind::b2: return "2B";
  }
  return "?";
}

ProductResult stack(const GroupConfig& cfg, const Word& w) {
  cfg.check_word(w);
  AffineDiagram acc = AffineDiagram::identity(cfg.n());
  int loops = 0;
  for (int s : w) {
    ProductResult r = multiply(acc, AffineDiagram::generator(cfg.n(), s));
    loops += r.contractible_loops;
    acc = std::move(r.diagram);
  }
  return {std::move(acc), loops};
}

std::optional<GeneratorSet> is_straight(const AffineDiagram& d) {
  if (d.loops() != 0) return std::nullopt;
  GeneratorSet s;
  for (int i = 1; i <= d.n(); ++i) {
    if (minimal_top_arc(d, i)) s.insert(i);
  }
  GroupConfig cfg(d.n());
  if (!cfg.is_independent(s)) return std::nullopt;
  ProductResult r = stack(cfg, iota(s));
  if (r.contractible_loops != 0 || !(r.diagram == d)) return std::nullopt;
  return s;
}

std::vector<CongruenceFinding> congruence_classes(const AffineDiagram& d) {
  const AffineDiagram f = flip(d);
  std::vector<CongruenceFinding> out = type1_top(d, CongruenceKind::t1);
  auto b1 = type1_top(f, CongruenceKind::b1);
  auto t2 = type2_top(d, CongruenceKind::t2);
  auto b2 = type2_top(f, CongruenceKind::b2);
  out.insert(out.end(), b1.begin(), b1.end());
  out.insert(out.end(), t2.begin(), t2.end());
  out.insert(out.end(), b2.begin(), b2.end());
  return out;
}

CongruenceFinding find_distinguished(const AffineDiagram& d) {
  if (!is_admissible(d)) {
    throw Error(ErrorKind::inadmissible, "cannot straighten an inadmissible diagram");
  }
  if (is_straight(d)) {
    throw Error(ErrorKind::precondition, "diagram is already straight");
  }
  auto all = congruence_classes(d);
  if (all.empty()) {
    throw std::logic_error("admissible non-straight diagram without a congruence class");
  }
  // congruence_classes lists kinds in priority order, classes ascending.
  return all.front();
}

Peel peel(const AffineDiagram& d, const CongruenceFinding& f) {
  const int n = d.n();
  Peel p{0, End::left, d};
  switch (f.kind) {
    case CongruenceKind::t1:
      p = peel_type1_top(d, f);
      break;
    case CongruenceKind::b1: {
      Peel mirrored = peel_type1_top(flip(d), {f.cls, CongruenceKind::t1, f.cover, f.via_loop});
      p = {mirrored.letter, End::right, flip(mirrored.rest)};
      break;
    }
    case CongruenceKind::t2: {
      ProductResult r = multiply(AffineDiagram::generator(n, f.cls), d);
      if (r.contractible_loops != 0) throw std::logic_error("type 2T peel closed a loop");
      p = {wrap(f.cls + 1, n), End::left, std::move(r.diagram)};
      break;
    }
    case CongruenceKind::b2: {
      ProductResult r = multiply(d, AffineDiagram::generator(n, f.cls));
      if (r.contractible_loops != 0) throw std::logic_error("type 2B peel closed a loop");
      p = {wrap(f.cls + 1, n), End::right, std::move(r.diagram)};
      break;
    }
  }
  check_peel(d, p);
  return p;
}

StraightWord straighten(const AffineDiagram& d) {
  if (!is_admissible(d)) {
    throw Error(ErrorKind::inadmissible, "cannot straighten an inadmissible diagram");
  }
  StraightWord out;
  Word left, right;
  AffineDiagram cur = d;
  out.trace.push_back(cur);
  for (;;) {
    if (auto s = is_straight(cur)) {
      out.core = *s;
      break;
    }
    Peel p = peel(cur, find_distinguished(cur));
    (p.end == End::left ? left : right).push_back(p.letter);
    cur = p.rest;
    out.trace.push_back(cur);
  }
  out.word = left;
  for (int s : out.core) out.word.push_back(s);
  out.word.insert(out.word.end(), right.rbegin(), right.rend());
  return out;
}

}  // namespace afftl
