#include "afftl/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace afftl {

namespace {

struct Arc {
  int p, q;  // lift with 1 <= p <= n, p < q
  int depth = 1;
};

struct Strand {
  int top, bottom;  // top in 1..n, bottom anywhere
  char tag = '|';
};

struct Layout {
  int n;
  std::vector<Arc> top_arcs, bottom_arcs;
  std::vector<Strand> strands;
  int loops;
};

int wrap(int pos, int n) { return ((pos - 1) % n + n) % n + 1; }

// Depth 1 for innermost arcs; translates by one period are enough since
// every arc spans less than n.
void assign_depths(std::vector<Arc>& arcs, int n) {
  std::sort(arcs.begin(), arcs.end(),
            [](const Arc& a, const Arc& b) { return a.q - a.p < b.q - b.p; });
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (int k = -1; k <= 1; ++k) {
        if (arcs[j].p + k * n > arcs[i].p && arcs[j].q + k * n < arcs[i].q) {
          arcs[i].depth = std::max(arcs[i].depth, arcs[j].depth + 1);
        }
      }
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.p < b.p; });
}

char tag_for(int k) {
  if (k < 26) return static_cast<char>('a' + k);
  if (k < 52) return static_cast<char>('A' + k - 26);
  return '*';
}

Layout layout(const AffineDiagram& d) {
  Layout l{d.n(), {}, {}, {}, d.loops()};
  for (auto [p, q] : short_arcs(d, Side::top)) l.top_arcs.push_back({p, q});
  for (auto [p, q] : short_arcs(d, Side::bottom)) l.bottom_arcs.push_back({p, q});
  assign_depths(l.top_arcs, l.n);
  assign_depths(l.bottom_arcs, l.n);
  int tagged = 0;
  for (int i = 1; i <= l.n; ++i) {
    NodeRef p = d.partner({Side::top, i});
    if (p.side != Side::bottom) continue;
    Strand s{i, p.pos};
    if (p.pos != i) s.tag = tag_for(tagged++);
    l.strands.push_back(s);
  }
  return l;
}

int max_depth(const std::vector<Arc>& arcs) {
  int m = 0;
  for (const Arc& a : arcs) m = std::max(m, a.depth);
  return m;
}

std::string node(Side side, int pos) {
  return (side == Side::top ? "T" : "B") + std::to_string(pos);
}

std::string edge_list(const Layout& l) {
  std::ostringstream os;
  for (const Arc& a : l.top_arcs) {
    os << node(Side::top, a.p) << '-' << node(Side::top, a.q) << (a.q > l.n ? " (wraps)" : "")
       << '\n';
  }
  for (const Arc& a : l.bottom_arcs) {
    os << node(Side::bottom, a.p) << '-' << node(Side::bottom, a.q)
       << (a.q > l.n ? " (wraps)" : "") << '\n';
  }
  for (const Strand& s : l.strands) {
    os << node(Side::top, s.top) << '-' << node(Side::bottom, s.bottom);
    if (s.tag != '|') os << " [" << s.tag << ']';
    if (s.bottom < 1 || s.bottom > l.n) os << " (wraps)";
    os << '\n';
  }
  os << "loops: " << l.loops << '\n';
  return os.str();
}

class Canvas {
 public:
  Canvas(int rows, int cols) : grid_(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(cols), ' ')) {}
  void put(int r, int c, char ch) { grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ch; }
  void hline(int r, int c0, int c1, char ch) {
    for (int c = c0; c <= c1; ++c) put(r, c, ch);
  }
  void vline(int c, int r0, int r1) {
    for (int r = std::min(r0, r1); r <= std::max(r0, r1); ++r) put(r, c, '|');
  }
  std::string str() const {
    std::string out;
    for (std::string row : grid_) {
      row.erase(row.find_last_not_of(' ') + 1);
      out += row + '\n';
    }
    return out;
  }

 private:
  std::vector<std::string> grid_;
};

std::string ascii(const Layout& l) {
  const int n = l.n;
  const int right_cut = 4 * n + 2;
  auto col = [](int i) { return 4 * i; };
  const int dt = max_depth(l.top_arcs), db = max_depth(l.bottom_arcs);
  const int top_row = 1;
  const int mid_top = top_row + dt + 1;
  const int mid_bottom = mid_top + 1 + l.loops;
  const int bottom_row = mid_bottom + db + 1;
  Canvas c(bottom_row + 1, right_cut + 1);

  for (int i = 1; i <= n; ++i) {
    std::string label = std::to_string(i);
    for (std::size_t k = 0; k < label.size(); ++k) c.put(0, col(i) + static_cast<int>(k), label[k]);
    c.put(top_row, col(i), 'o');
    c.put(bottom_row, col(i), 'o');
  }
  c.put(top_row, 0, 'T');
  c.put(bottom_row, 0, 'B');

  auto draw_arc = [&](const Arc& a, int node_row, int dir) {
    const int row = node_row + dir * a.depth;
    c.vline(col(a.p), node_row + dir, row);
    if (a.q <= n) {
      c.vline(col(a.q), node_row + dir, row);
      c.hline(row, col(a.p) + 1, col(a.q) - 1, '-');
      c.put(row, col(a.q), '+');
    } else {
      const int other = a.q - n;
      c.vline(col(other), node_row + dir, row);
      c.hline(row, col(a.p) + 1, right_cut - 1, '-');
      c.put(row, right_cut, '>');
      c.hline(row, 2, col(other) - 1, '-');
      c.put(row, 1, '<');
      c.put(row, col(other), '+');
    }
    c.put(row, col(a.p), '+');
  };
  for (const Arc& a : l.top_arcs) draw_arc(a, top_row, 1);
  for (const Arc& a : l.bottom_arcs) draw_arc(a, bottom_row, -1);

  for (const Strand& s : l.strands) {
    if (s.tag == '|') {
      c.vline(col(s.top), top_row + 1, bottom_row - 1);
      continue;
    }
    const int b = wrap(s.bottom, n);
    c.vline(col(s.top), top_row + 1, mid_top - 1);
    c.put(mid_top, col(s.top), s.tag);
    c.put(mid_bottom, col(b), s.tag);
    c.vline(col(b), mid_bottom + 1, bottom_row - 1);
    if (s.bottom > n) c.put(mid_bottom, col(b) - 1, '>');
    if (s.bottom < 1) c.put(mid_bottom, col(b) - 1, '<');
  }

  for (int k = 0; k < l.loops; ++k) {
    const int row = mid_top + 1 + k;
    c.put(row, 1, '<');
    c.hline(row, 2, right_cut - 1, '=');
    c.put(row, right_cut, '>');
  }
  return c.str() + edge_list(l);
}

std::string svg(const Layout& l) {
  const int n = l.n;
  const double step = 40, margin = 30;
  const double width = 2 * margin + step * (n - 1) + step;
  const double cut_left = margin - step / 2, cut_right = cut_left + step * n;
  const double y_top = 30, y_bottom = 30 + 40.0 * (3 + l.loops);
  const double height = y_bottom + 30;
  auto x = [&](double pos) { return margin + step * (pos - 1); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<defs><clipPath id=\"strip\"><rect x=\"" << cut_left << "\" y=\"0\" width=\""
     << cut_right - cut_left << "\" height=\"" << height << "\"/></clipPath></defs>\n";
  for (double cx : {cut_left, cut_right}) {
    os << "<line class=\"cut\" x1=\"" << cx << "\" y1=\"0\" x2=\"" << cx << "\" y2=\"" << height
       << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  }
  os << "<g clip-path=\"url(#strip)\" fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  auto arc_path = [&](const Arc& a, Side side) {
    const double y = side == Side::top ? y_top : y_bottom;
    const double bulge = (side == Side::top ? 1 : -1) * 18.0 * a.depth;
    for (int shift : {0, -n}) {
      if (shift != 0 && a.q <= n) continue;
      os << "<path data-from=\"" << node(side, a.p) << "\" data-to=\"" << node(side, a.q)
         << "\" d=\"M " << x(a.p + shift) << ' ' << y << " C " << x(a.p + shift) << ' '
         << y + bulge << ' ' << x(a.q + shift) << ' ' << y + bulge << ' ' << x(a.q + shift)
         << ' ' << y << "\"/>\n";
    }
  };
  for (const Arc& a : l.top_arcs) arc_path(a, Side::top);
  for (const Arc& a : l.bottom_arcs) arc_path(a, Side::bottom);
  for (const Strand& s : l.strands) {
    const int shifts[] = {0, s.bottom > n ? -n : (s.bottom < 1 ? n : 0)};
    for (int k = 0; k < 2; ++k) {
      if (k == 1 && shifts[1] == 0) continue;
      const double x0 = x(s.top + shifts[k]), x1 = x(s.bottom + shifts[k]);
      const double ym = (y_top + y_bottom) / 2;
      os << "<path data-from=\"" << node(Side::top, s.top) << "\" data-to=\""
         << node(Side::bottom, s.bottom) << "\" d=\"M " << x0 << ' ' << y_top << " C " << x0
         << ' ' << ym << ' ' << x1 << ' ' << ym << ' ' << x1 << ' ' << y_bottom << "\"/>\n";
    }
  }
  for (int k = 0; k < l.loops; ++k) {
    const double y = y_top + 40.0 * (2 + k);
    os << "<line class=\"loop\" x1=\"" << cut_left << "\" y1=\"" << y << "\" x2=\"" << cut_right
       << "\" y2=\"" << y << "\"/>\n";
  }
  os << "</g>\n";
  for (int i = 1; i <= n; ++i) {
    for (auto [side, y] : {std::pair{Side::top, y_top}, std::pair{Side::bottom, y_bottom}}) {
      os << "<circle class=\"node\" data-node=\"" << node(side, i) << "\" cx=\"" << x(i)
         << "\" cy=\"" << y << "\" r=\"4\"/>\n";
      const double ty = side == Side::top ? y - 10 : y + 20;
      os << "<text x=\"" << x(i) << "\" y=\"" << ty
         << "\" text-anchor=\"middle\" font-size=\"12\">" << i << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render(const AffineDiagram& d, RenderFormat format) {
  Layout l = layout(d);
  return format == RenderFormat::ascii ? ascii(l) : svg(l);
}

}  // namespace afftl
