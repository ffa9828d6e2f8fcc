#include "afftl/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "afftl/error.hpp"
#include "diagram_builder.hpp"

namespace afftl {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int wrap(int pos, int n) { return pos - n * floor_div(pos - 1, n); }

// Count of x with x = k (mod n) and lo <= x <= hi.
int count_congruent(int lo, int hi, int k, int n) {
  if (hi < lo) return 0;
  return floor_div(hi - k, n) - floor_div(lo - 1 - k, n);
}

// Position of a node on the boundary of the strip, read along the top row
// left to right and then along the bottom row right to left. Two edges cross
// exactly when their endpoints interleave in this order.
std::pair<int, int> boundary_order(NodeRef x) {
  return x.side == Side::top ? std::pair{0, x.pos} : std::pair{1, -x.pos};
}

struct Edge {
  NodeRef a, b;  // boundary_order(a) < boundary_order(b)
};

Edge make_edge(NodeRef x, NodeRef y) {
  if (boundary_order(y) < boundary_order(x)) std::swap(x, y);
  return {x, y};
}

bool interleave(const Edge& e, const Edge& f) {
  auto a = boundary_order(e.a), b = boundary_order(e.b);
  auto c = boundary_order(f.a), d = boundary_order(f.b);
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

std::vector<NodeRef> window_nodes(int n) {
  std::vector<NodeRef> v;
  for (int i = 1; i <= n; ++i) v.push_back({Side::top, i});
  for (int i = 1; i <= n; ++i) v.push_back({Side::bottom, i});
  return v;
}

std::string describe(NodeRef x) {
  return std::string(x.side == Side::top ? "T" : "B") + std::to_string(x.pos);
}

}  // namespace

NodeRef raw_partner(const RawDiagram& d, NodeRef x) noexcept {
  int r = wrap(x.pos, d.n);
  const auto& row = x.side == Side::top ? d.top : d.bottom;
  return row[static_cast<std::size_t>(r - 1)].shifted(x.pos - r);
}

const char* to_string(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::bad_rank: return "bad_rank";
    case ViolationKind::bad_size: return "bad_size";
    case ViolationKind::negative_loops: return "negative_loops";
    case ViolationKind::not_involution: return "not_involution";
    case ViolationKind::fixed_point: return "fixed_point";
    case ViolationKind::crossing: return "crossing";
    case ViolationKind::loops_with_vertical: return "loops_with_vertical";
  }
  return "unknown";
}

std::vector<Violation> validate(const RawDiagram& d) {
  std::vector<Violation> out;
  if (d.n < 3) {
    out.push_back({ViolationKind::bad_rank, "n must be at least 3"});
    return out;
  }
  const auto n = static_cast<std::size_t>(d.n);
  if (d.top.size() != n || d.bottom.size() != n) {
    out.push_back({ViolationKind::bad_size, "partner arrays must have n entries"});
    return out;
  }
  if (d.loops < 0) out.push_back({ViolationKind::negative_loops, "loops < 0"});

  bool involution_ok = true;
  bool has_vertical = false;
  int max_span = 0;
  std::vector<Edge> edges;
  for (NodeRef x : window_nodes(d.n)) {
    NodeRef p = raw_partner(d, x);
    if (p == x) {
      out.push_back({ViolationKind::fixed_point, describe(x) + " is its own partner"});
      involution_ok = false;
      continue;
    }
    if (raw_partner(d, p) != x) {
      out.push_back({ViolationKind::not_involution,
                     describe(x) + " -> " + describe(p) + " -> " +
                         describe(raw_partner(d, p))});
      involution_ok = false;
      continue;
    }
    if (p.side != x.side) has_vertical = true;
    max_span = std::max(max_span, std::abs(p.pos - x.pos));
    edges.push_back(make_edge(x, p));
  }
  if (d.loops > 0 && has_vertical) {
    out.push_back({ViolationKind::loops_with_vertical,
                   "a long horizontal edge cannot coexist with vertical edges"});
  }
  if (!involution_ok) return out;

  // Translates further apart than the combined spans cannot interleave.
  const int reach = 2 * ((max_span + d.n - 1) / d.n) + 2;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i; j < edges.size(); ++j) {
      for (int m = -reach; m <= reach; ++m) {
        Edge f = make_edge(edges[j].a.shifted(m * d.n), edges[j].b.shifted(m * d.n));
        if (interleave(edges[i], f)) {
          out.push_back({ViolationKind::crossing,
                         describe(edges[i].a) + "-" + describe(edges[i].b) +
                             " crosses " + describe(f.a) + "-" + describe(f.b)});
          return out;
        }
      }
    }
  }
  return out;
}

AffineDiagram AffineDiagram::from_raw(RawDiagram raw) {
  auto v = validate(raw);
  if (!v.empty()) {
    std::string msg = "invalid diagram:";
    for (const auto& x : v) msg += std::string(" [") + to_string(x.kind) + ": " + x.detail + "]";
    throw Error(ErrorKind::invalid_diagram, msg);
  }
  return AffineDiagram(std::move(raw));
}

AffineDiagram AffineDiagram::identity(int n) {
  if (n < 3) throw Error(ErrorKind::invalid_config, "n must be at least 3");
  RawDiagram r{n, {}, {}, 0};
  for (int i = 1; i <= n; ++i) {
    r.top.push_back({Side::bottom, i});
    r.bottom.push_back({Side::top, i});
  }
  return AffineDiagram(std::move(r));
}

AffineDiagram AffineDiagram::generator(int n, int i) {
  GroupConfig cfg(n);
  cfg.check_generator(i);
  RawDiagram r = identity(n).data_;
  auto join = [&](std::vector<NodeRef>& row, Side side) {
    row[static_cast<std::size_t>(i - 1)] = {side, i + 1};
    if (i < n) {
      row[static_cast<std::size_t>(i)] = {side, i};
    } else {
      row[0] = {side, 0};
    }
  };
  join(r.top, Side::top);
  join(r.bottom, Side::bottom);
  return AffineDiagram(std::move(r));
}

NodeRef AffineDiagram::partner(NodeRef x) const noexcept {
  return raw_partner(data_, x);
}

ProductResult multiply(const AffineDiagram& a, const AffineDiagram& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::mismatched_rank, "cannot multiply diagrams with n " +
                                                std::to_string(a.n()) + " and " +
                                                std::to_string(b.n()));
  }
  const int n = a.n();
  const int guard = 2 * n + 4;
  std::vector<bool> middle_seen(static_cast<std::size_t>(n) + 1, false);
  auto mark = [&](int pos) { middle_seen[static_cast<std::size_t>(wrap(pos, n))] = true; };

  RawDiagram c{n, std::vector<NodeRef>(static_cast<std::size_t>(n)),
               std::vector<NodeRef>(static_cast<std::size_t>(n)), 0};

  // Paths entering the middle row from a's top row.
  for (int p = 1; p <= n; ++p) {
    NodeRef cur = a.partner({Side::top, p});
    NodeRef end{};
    if (cur.side == Side::top) {
      end = cur;
    } else {
      for (int step = 0;; ++step) {
        if (step > guard) throw std::logic_error("runaway path in multiply");
        mark(cur.pos);
        NodeRef nxt = b.partner({Side::top, cur.pos});
        if (nxt.side == Side::bottom) {
          end = nxt;
          break;
        }
        mark(nxt.pos);
        NodeRef back = a.partner({Side::bottom, nxt.pos});
        if (back.side == Side::top) {
          end = back;
          break;
        }
        cur = back;
      }
    }
    c.top[static_cast<std::size_t>(p - 1)] = end;
  }

  // Paths entering the middle row from b's bottom row.
  for (int q = 1; q <= n; ++q) {
    NodeRef cur = b.partner({Side::bottom, q});
    NodeRef end{};
    if (cur.side == Side::bottom) {
      end = cur;
    } else {
      for (int step = 0;; ++step) {
        if (step > guard) throw std::logic_error("runaway path in multiply");
        mark(cur.pos);
        NodeRef nxt = a.partner({Side::bottom, cur.pos});
        if (nxt.side == Side::top) {
          end = nxt;
          break;
        }
        mark(nxt.pos);
        NodeRef back = b.partner({Side::top, nxt.pos});
        if (back.side == Side::bottom) {
          end = back;
          break;
        }
        cur = back;
      }
    }
    c.bottom[static_cast<std::size_t>(q - 1)] = end;
  }

  // Remaining middle nodes lie on closed cycles.
  int contractible = 0;
  int wrapped = 0;
  for (int start = 1; start <= n; ++start) {
    if (middle_seen[static_cast<std::size_t>(start)]) continue;
    std::vector<bool> on_cycle(static_cast<std::size_t>(n) + 1, false);
    int x = start;
    for (int step = 0;; ++step) {
      if (step > guard) throw std::logic_error("runaway cycle in multiply");
      NodeRef y = a.partner({Side::bottom, x});
      if (y.side != Side::bottom) throw std::logic_error("cycle escaped through a's top row");
      NodeRef z = b.partner({Side::top, y.pos});
      if (z.side != Side::top) throw std::logic_error("cycle escaped through b's bottom row");
      on_cycle[static_cast<std::size_t>(wrap(x, n))] = true;
      mark(x);
      if (on_cycle[static_cast<std::size_t>(wrap(y.pos, n))]) {
        throw std::logic_error("middle cycle closed on the wrong phase");
      }
      on_cycle[static_cast<std::size_t>(wrap(y.pos, n))] = true;
      mark(y.pos);
      if (wrap(z.pos, n) == start) {
        int offset = z.pos - start;
        if (offset == 0) {
          ++contractible;
        } else if (offset == n || offset == -n) {
          ++wrapped;
        } else {
          throw std::logic_error("middle cycle winds more than once");
        }
        break;
      }
      if (on_cycle[static_cast<std::size_t>(wrap(z.pos, n))]) {
        throw std::logic_error("middle cycle re-entered a visited class");
      }
      x = z.pos;
    }
  }

  c.loops = a.loops() + b.loops() + wrapped;
  if (wrapped > 0) {
    for (const NodeRef& x : c.top) {
      if (x.side == Side::bottom) {
        throw std::logic_error("non-contractible loop alongside a vertical edge");
      }
    }
  }
  return {DiagramBuilder::make(std::move(c)), contractible};
}

AffineDiagram flip(const AffineDiagram& d) {
  RawDiagram r = d.raw();
  std::swap(r.top, r.bottom);
  for (auto* row : {&r.top, &r.bottom}) {
    for (NodeRef& x : *row) x.side = opposite(x.side);
  }
  return DiagramBuilder::make(std::move(r));
}

int nu(const AffineDiagram& d, int k) {
  const int n = d.n();
  if (k < 1 || k > n) {
    throw Error(ErrorKind::out_of_range, "nu: class " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  int twice = 0;
  for (NodeRef x : window_nodes(n)) {
    NodeRef p = d.partner(x);
    int lo = std::min(x.pos, p.pos);
    int hi = std::max(x.pos, p.pos);
    twice += count_congruent(lo, hi - 1, k, n);
  }
  return twice / 2 + d.loops();
}

bool is_admissible(const AffineDiagram& d) {
  if (d == AffineDiagram::identity(d.n())) return true;
  bool horizontal = d.loops() > 0;
  for (int i = 1; i <= d.n() && !horizontal; ++i) {
    if (d.partner({Side::top, i}).side == Side::top) horizontal = true;
  }
  if (!horizontal) return false;
  for (int k = 1; k <= d.n(); ++k) {
    if (nu(d, k) % 2 != 0) return false;
  }
  return true;
}

int length(const AffineDiagram& d) {
  if (!is_admissible(d)) throw Error(ErrorKind::inadmissible, "length of an inadmissible diagram");
  int total = 0;
  for (int k = 1; k <= d.n(); ++k) total += nu(d, k);
  return total / 2;
}

GeneratorSet descent_arcs(const AffineDiagram& d, Side side) {
  if (!is_admissible(d)) throw Error(ErrorKind::inadmissible, "descent arcs of an inadmissible diagram");
  GeneratorSet s;
  for (int i = 1; i <= d.n(); ++i) {
    if (d.partner({side, i}) == NodeRef{side, i + 1}) s.insert(i);
  }
  return s;
}

std::vector<std::pair<int, int>> short_arcs(const AffineDiagram& d, Side side) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 1; i <= d.n(); ++i) {
    NodeRef p = d.partner({side, i});
    if (p.side == side && p.pos > i) arcs.emplace_back(i, p.pos);
  }
  return arcs;
}

int vertical_edge_count(const AffineDiagram& d) {
  int c = 0;
  for (int i = 1; i <= d.n(); ++i) {
    if (d.partner({Side::top, i}).side == Side::bottom) ++c;
  }
  return c;
}

std::string canonical_key(const AffineDiagram& d) {
  std::ostringstream os;
  os << d.n() << '|';
  for (const auto* row : {&d.raw().top, &d.raw().bottom}) {
    for (const NodeRef& x : *row) os << (x.side == Side::top ? 'T' : 'B') << x.pos << ',';
    os << '|';
  }
  os << d.loops();
  return os.str();
}

}  // namespace afftl
