#include "afftl/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "afftl/enumerate.hpp"
#include "afftl/error.hpp"

namespace afftl {

namespace {

void require_fc(const GroupConfig& cfg, const Word& w) {
  cfg.check_word(w);
  if (!is_fully_commutative(cfg, w)) {
    throw Error(ErrorKind::precondition, "expected a reduced word of a fully commutative element");
  }
}

AffineDiagram diagram_of(const GroupConfig& cfg, const Word& w) {
  return stack(cfg, w).diagram;
}

// w with its descent s removed from the given end.
std::optional<Word> drop_descent(const GroupConfig& cfg, const Word& w, int s, End side) {
  if (side == End::left) {
    auto f = greedy_front(cfg, w, s);
    if (!f) return std::nullopt;
    return Word(f->begin() + 1, f->end());
  }
  auto b = greedy_back(cfg, w, s);
  if (!b) return std::nullopt;
  return Word(b->begin(), b->end() - 1);
}

bool is_iota(const GroupConfig& cfg, const Word& w) {
  GeneratorSet t = support(w);
  return t.size() == w.size() && cfg.is_independent(t);
}

std::vector<Cancellation> available_cancellations(const GroupConfig& cfg, const Word& w,
                                                  bool first_only) {
  std::vector<Cancellation> out;
  for (End side : {End::left, End::right}) {
    GeneratorSet ds = side == End::left ? left_descents(cfg, w) : right_descents(cfg, w);
    for (int s : ds) {
      if (auto t = cancellable(cfg, w, s, side)) {
        out.push_back({side, s, *t});
        if (first_only) return out;
      }
    }
  }
  return out;
}

template <class Choose>
QReduction reduce_with(const GroupConfig& cfg, const Word& w, bool first_only, Choose choose) {
  require_fc(cfg, w);
  QReduction r{w, {}};
  for (;;) {
    auto options = available_cancellations(cfg, r.q, first_only);
    if (options.empty()) return r;
    Cancellation c = choose(options);
    r.q = *drop_descent(cfg, r.q, c.s, c.side);
    r.trace.push_back(c);
  }
}

}  // namespace

std::string TwoSidedLabel::to_string() const {
  if (kind == Kind::small) return "Small(" + std::to_string(k) + ")";
  return std::string("MElem(") + (start == MStart::m1 ? "M1" : "M2") + "," +
         std::to_string(factors) + ")";
}

int a_value(const GroupConfig& cfg, const Word& w) {
  require_fc(cfg, w);
  return static_cast<int>(short_arcs(diagram_of(cfg, w), Side::top).size());
}

int a_bruteforce(const GroupConfig& cfg, const Word& w, int bound, FactorReading reading) {
  if (static_cast<int>(w.size()) > bound) {
    throw Error(ErrorKind::bound_exceeded, "a_bruteforce: word longer than " + std::to_string(bound));
  }
  require_fc(cfg, w);
  if (reading == FactorReading::subword) {
    // Every ordering of the support occurs, so only independence matters.
    std::vector<int> supp = iota(support(w));
    int best = 0;
    const std::size_t m = supp.size();
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
      GeneratorSet u;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (1UL << i)) u.insert(supp[i]);
      }
      if (cfg.is_independent(u)) best = std::max(best, static_cast<int>(u.size()));
    }
    return best;
  }
  int best = 0;
  for (const Word& u : commutation_class(cfg, w)) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      std::size_t j = i;
      while (j < u.size()) {
        bool ok = true;
        for (std::size_t p = i; p < j; ++p) {
          if (!cfg.commute(u[p], u[j])) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        ++j;
      }
      best = std::max(best, static_cast<int>(j - i));
    }
  }
  return best;
}

std::optional<int> cancellable(const GroupConfig& cfg, const Word& w, int s, End side) {
  require_fc(cfg, w);
  cfg.check_generator(s);
  auto shorter = drop_descent(cfg, w, s, side);
  if (!shorter) {
    throw Error(ErrorKind::precondition, "generator " + std::to_string(s) + " is not a " +
                                             (side == End::left ? "left" : "right") + " descent");
  }
  const AffineDiagram d = diagram_of(cfg, w);
  const std::string target = canonical_key(diagram_of(cfg, *shorter));
  for (int t = 1; t <= cfg.n(); ++t) {
    if (!cfg.adjacent(s, t)) continue;
    const AffineDiagram g = AffineDiagram::generator(cfg.n(), t);
    ProductResult r = side == End::left ? multiply(g, d) : multiply(d, g);
    if (r.contractible_loops == 0 && canonical_key(r.diagram) == target) return t;
  }
  return std::nullopt;
}

QReduction reduce_to_q(const GroupConfig& cfg, const Word& w) {
  return reduce_with(cfg, w, true, [](const auto& opts) { return opts.front(); });
}

QReduction reduce_to_q(const GroupConfig& cfg, const Word& w, std::mt19937_64& rng) {
  return reduce_with(cfg, w, false, [&](const auto& opts) {
    std::uniform_int_distribution<std::size_t> pick(0, opts.size() - 1);
    return opts[pick(rng)];
  });
}

bool q_membership(const GroupConfig& cfg, const Word& w) {
  require_fc(cfg, w);
  return available_cancellations(cfg, w, true).empty();
}

Word m_element_word(const GroupConfig& cfg, MStart start, int factors) {
  if (cfg.n() % 2 != 0) throw Error(ErrorKind::precondition, "M elements need even n");
  if (factors < 1) throw Error(ErrorKind::precondition, "M elements have at least one factor");
  Word w;
  bool first = start == MStart::m1;
  for (int f = 0; f < factors; ++f) {
    Word block = iota(first ? cfg.m1() : cfg.m2());
    w.insert(w.end(), block.begin(), block.end());
    first = !first;
  }
  return w;
}

TwoSidedLabel classify_q(const GroupConfig& cfg, const Word& q) {
  require_fc(cfg, q);
  const int n = cfg.n();
  if (is_iota(cfg, q)) {
    int k = static_cast<int>(q.size());
    if (2 * k < n) return TwoSidedLabel::small(k);
    return TwoSidedLabel::m_elem(support(q) == cfg.m1() ? MStart::m1 : MStart::m2, 1);
  }
  if (n % 2 == 0) {
    LeftDecomposition dec = left_decomposition(cfg, q);
    const GeneratorSet m1 = cfg.m1(), m2 = cfg.m2();
    bool alternating = true;
    for (std::size_t k = 0; k < dec.groups.size() && alternating; ++k) {
      const auto& g = dec.groups[k];
      alternating = (g == m1 || g == m2) && (k == 0 || g != dec.groups[k - 1]);
    }
    if (alternating) {
      return TwoSidedLabel::m_elem(dec.groups.front() == m1 ? MStart::m1 : MStart::m2,
                                   static_cast<int>(dec.groups.size()));
    }
  }
  throw Error(ErrorKind::precondition, "element is not in Q");
}

std::vector<Word> q_elements(const GroupConfig& cfg, int max_len) {
  const int n = cfg.n();
  std::vector<Word> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    GeneratorSet t;
    for (int i = 0; i < n; ++i) {
      if (mask & (1UL << i)) t.insert(i + 1);
    }
    if (static_cast<int>(t.size()) <= max_len && cfg.is_independent(t)) out.push_back(iota(t));
  }
  if (n % 2 == 0) {
    for (int f = 2; f * (n / 2) <= max_len; ++f) {
      out.push_back(m_element_word(cfg, MStart::m1, f));
      out.push_back(m_element_word(cfg, MStart::m2, f));
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<std::pair<int, Word>> neighbours(const GroupConfig& cfg, const Word& q) {
  if (!q_membership(cfg, q)) throw Error(ErrorKind::precondition, "neighbours: element is not in Q");
  const std::string target = canonical_key(diagram_of(cfg, q));
  std::vector<std::pair<int, Word>> out;
  for (const Word& cand : q_elements(cfg, static_cast<int>(q.size()) + 2)) {
    for (int s = 1; s <= cfg.n(); ++s) {
      Word sws;
      sws.push_back(s);
      sws.insert(sws.end(), cand.begin(), cand.end());
      sws.push_back(s);
      ProductResult r = stack(cfg, sws);
      if (r.contractible_loops == 0 && canonical_key(r.diagram) == target) out.emplace_back(s, cand);
    }
  }
  return out;
}

CellLabels labels(const GroupConfig& cfg, const Word& w) {
  require_fc(cfg, w);
  const AffineDiagram d = diagram_of(cfg, w);
  return {classify_q(cfg, reduce_to_q(cfg, w).q), short_arcs(d, Side::bottom),
          short_arcs(d, Side::top), d.loops()};
}

InvolutionDecomposition involution_decompose(const GroupConfig& cfg, const Word& d,
                                             std::mt19937_64* rng) {
  require_fc(cfg, d);
  if (!to_affine_permutation(cfg, d).is_involution()) {
    throw Error(ErrorKind::precondition, "element is not an involution");
  }
  Word cur = d;
  Word x;
  while (!cfg.is_independent(support(cur))) {
    // s in L(cur) with l(s cur s) = l(cur) - 2.
    std::vector<std::pair<int, Word>> options;
    for (int s : left_descents(cfg, cur)) {
      Word inner = *drop_descent(cfg, cur, s, End::left);
      if (auto core = drop_descent(cfg, inner, s, End::right)) options.emplace_back(s, *core);
    }
    if (options.empty()) throw std::logic_error("involution without a conjugating descent");
    std::size_t pick = 0;
    if (rng != nullptr) pick = std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(*rng);
    x.push_back(options[pick].first);
    cur = std::move(options[pick].second);
  }
  GeneratorSet t = support(cur);
  if (t.size() != cur.size()) throw std::logic_error("involution core is not iota(T)");

  Word whole = concat(concat(x, iota(t)), reversed(x));
  if (to_affine_permutation(cfg, whole) != to_affine_permutation(cfg, d) ||
      word_length(cfg, whole) != static_cast<long>(whole.size())) {
    throw std::logic_error("canonical decomposition does not reproduce the involution");
  }
  Word canonical = x.empty() ? Word{} : straighten(diagram_of(cfg, x)).word;
  return {std::move(canonical), std::move(t)};
}

RightCellInvolution right_cell_involution(const GroupConfig& cfg, const Word& w) {
  const CellLabels target = labels(cfg, w);
  if (target.two_sided.is_m_nonsquare()) return {true, {}};

  // Right-cancel down to x with no right-cancellable descent.
  Word x = w;
  for (bool again = true; again;) {
    again = false;
    for (int s : right_descents(cfg, x)) {
      if (cancellable(cfg, x, s, End::right)) {
        x = *drop_descent(cfg, x, s, End::right);
        again = true;
        break;
      }
    }
  }

  // x = y q' reduced: q' = iota(R(x)) in the Small case, the M element itself
  // otherwise.
  Word qprime = target.two_sided.is_m()
                    ? m_element_word(cfg, target.two_sided.start, target.two_sided.factors)
                    : iota(right_descents(cfg, x));
  std::optional<Word> y = x;
  for (auto it = qprime.rbegin(); it != qprime.rend() && y; ++it) {
    y = drop_descent(cfg, *y, *it, End::right);
  }
  if (!y && target.two_sided.is_m()) {
    // The cell's M element may sit with its mirror start at the right end.
    MStart other = target.two_sided.start == MStart::m1 ? MStart::m2 : MStart::m1;
    qprime = m_element_word(cfg, other, target.two_sided.factors);
    y = x;
    for (auto it = qprime.rbegin(); it != qprime.rend() && y; ++it) {
      y = drop_descent(cfg, *y, *it, End::right);
    }
  }
  if (!y) throw std::logic_error("right-cancelled element does not end in q'");

  Word d = concat(concat(*y, qprime), reversed(*y));
  if (!is_fully_commutative(cfg, d) || !to_affine_permutation(cfg, d).is_involution()) {
    throw std::logic_error("y q' y^-1 is not a reduced FC involution");
  }
  CellLabels got = labels(cfg, d);
  if (!(got.two_sided == target.two_sided) || got.right_pattern != target.right_pattern) {
    throw std::logic_error("involution lies in a different right cell");
  }
  return {false, straighten(diagram_of(cfg, d)).word};
}

std::vector<CensusRow> census(const GroupConfig& cfg, int max_len, int workers) {
  struct Acc {
    std::set<ArcPattern> left, right;
    int seen = 0;
  };
  std::map<TwoSidedLabel, Acc> acc;
  EnumerationOptions opts;
  opts.workers = workers;
  opts.with_labels = true;
  enumerate(cfg, max_len, opts, [&](const EnumerationRecord& r) {
    Acc& a = acc[r.labels->two_sided];
    a.left.insert(r.labels->left_pattern);
    a.right.insert(r.labels->right_pattern);
    ++a.seen;
  });
  std::vector<CensusRow> rows;
  for (const auto& [label, a] : acc) {
    rows.push_back({label, static_cast<int>(a.left.size()), static_cast<int>(a.right.size()), a.seen});
  }
  return rows;
}

}  // namespace afftl
