#include "afftl/checks.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "afftl/algebra.hpp"
#include "afftl/cells.hpp"
#include "afftl/serialize.hpp"
#include "afftl/straighten.hpp"

namespace afftl {

namespace {

constexpr std::size_t kMaxFailures = 5;

std::string show(const Word& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ']';
  return os.str();
}

std::string show(const GeneratorSet& s) {
  return show(iota(s));
}

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& what) {
    ++r_.cases;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < kMaxFailures) r_.failures.push_back(what());
  }

  void fail(const std::string& what) {
    r_.passed = false;
    if (r_.failures.size() < kMaxFailures) r_.failures.push_back(what);
  }

  CheckResult take() { return std::move(r_); }

 private:
  CheckResult r_;
};

// Runs body, turning an escaped exception into a failure.
CheckResult guarded(const std::string& name, const std::function<void(Recorder&)>& body) {
  Recorder rec(name);
  try {
    body(rec);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  return rec.take();
}

std::vector<const EnumerationRecord*> up_to(const CheckContext& ctx, int len) {
  std::vector<const EnumerationRecord*> out;
  for (const auto& r : ctx.records()) {
    if (r.length <= len) out.push_back(&r);
  }
  return out;
}

int count_letter(const Word& w, int k) {
  return static_cast<int>(std::count(w.begin(), w.end(), k));
}

}  // namespace

CheckContext::CheckContext(const GroupConfig& cfg, int max_len, std::uint64_t seed)
    : cfg_(cfg), max_len_(max_len), seed_(seed) {}

const std::vector<EnumerationRecord>& CheckContext::records() const {
  if (!enumerated_) {
    EnumerationOptions opts;
    opts.with_labels = true;
    records_ = enumerate(cfg_, max_len_, opts);
    enumerated_ = true;
  }
  return records_;
}

CheckResult check_presentation(const GroupConfig& cfg) {
  return guarded("presentation", [&](Recorder& rec) {
    const int n = cfg.n();
    for (int i = 1; i <= n; ++i) {
      const AffineDiagram ei = AffineDiagram::generator(n, i);
      ProductResult sq = multiply(ei, ei);
      rec.expect(sq.diagram == ei && sq.contractible_loops == 1,
                 [&] { return "E_" + std::to_string(i) + "^2 != [2] E_" + std::to_string(i); });
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const AffineDiagram ej = AffineDiagram::generator(n, j);
        if (cfg.adjacent(i, j)) {
          ProductResult r = multiply(multiply(ei, ej).diagram, ei);
          int x = multiply(ei, ej).contractible_loops + r.contractible_loops;
          rec.expect(r.diagram == ei && x == 0, [&] {
            return "E_" + std::to_string(i) + " E_" + std::to_string(j) + " E_" +
                   std::to_string(i) + " != E_" + std::to_string(i);
          });
        } else {
          ProductResult a = multiply(ei, ej), b = multiply(ej, ei);
          rec.expect(a.diagram == b.diagram && a.contractible_loops == 0 &&
                         b.contractible_loops == 0,
                     [&] { return std::to_string(i) + " and " + std::to_string(j) + " do not commute"; });
        }
      }
    }
  });
}

CheckResult check_unit_and_associativity(const CheckContext& ctx, int samples) {
  return guarded("unit laws and associativity", [&](Recorder& rec) {
    auto pool = up_to(ctx, std::min(ctx.max_len(), 6));
    const AffineDiagram id = AffineDiagram::identity(ctx.config().n());
    for (const auto* r : pool) {
      ProductResult a = multiply(id, r->diagram), b = multiply(r->diagram, id);
      rec.expect(a.diagram == r->diagram && b.diagram == r->diagram &&
                     a.contractible_loops == 0 && b.contractible_loops == 0,
                 [&] { return "unit law fails for " + show(r->word); });
    }
    std::mt19937_64 rng(ctx.seed());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 0; k < samples; ++k) {
      const auto *x = pool[pick(rng)], *y = pool[pick(rng)], *z = pool[pick(rng)];
      ProductResult xy = multiply(x->diagram, y->diagram);
      ProductResult left = multiply(xy.diagram, z->diagram);
      ProductResult yz = multiply(y->diagram, z->diagram);
      ProductResult right = multiply(x->diagram, yz.diagram);
      rec.expect(left.diagram == right.diagram &&
                     xy.contractible_loops + left.contractible_loops ==
                         yz.contractible_loops + right.contractible_loops,
                 [&] { return "associativity fails for " + show(x->word) + show(y->word) + show(z->word); });
      rec.expect(is_admissible(left.diagram), [&] { return "product not admissible"; });
    }
  });
}

CheckResult check_faithfulness(const CheckContext& ctx) {
  return guarded("faithfulness", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    std::map<AffinePermutation, std::string> by_perm;
    std::vector<std::size_t> counts(static_cast<std::size_t>(ctx.max_len()) + 1, 0);
    for (const auto& r : ctx.records()) {
      ++counts[static_cast<std::size_t>(r.length)];
      rec.expect(is_fully_commutative(cfg, r.word) && static_cast<int>(r.word.size()) == r.length,
                 [&] { return show(r.word) + " is not a reduced FC word of length " + std::to_string(r.length); });
      ProductResult s = stack(cfg, r.word);
      rec.expect(s.contractible_loops == 0 && canonical_key(s.diagram) == r.key,
                 [&] { return show(r.word) + " does not stack to its key"; });
      auto [it, fresh] = by_perm.emplace(to_affine_permutation(cfg, r.word), r.key);
      rec.expect(fresh, [&] { return "two diagrams for the element " + show(r.word); });
    }
    std::vector<std::size_t> oracle = oracle_length_counts(cfg, ctx.max_len());
    rec.expect(oracle == counts, [&] {
      std::ostringstream os;
      os << "per-length counts differ:";
      for (std::size_t i = 0; i < counts.size(); ++i) os << ' ' << counts[i] << '/' << oracle[i];
      return os.str();
    });
  });
}

CheckResult check_straighten_round_trip(const CheckContext& ctx) {
  return guarded("straightening round trip", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    for (const auto& r : ctx.records()) {
      StraightWord sw = straighten(r.diagram);
      ProductResult s = stack(cfg, sw.word);
      rec.expect(s.diagram == r.diagram && s.contractible_loops == 0 &&
                     static_cast<int>(sw.word.size()) == r.length,
                 [&] { return "round trip fails for " + r.key; });
      const std::size_t arcs = short_arcs(r.diagram, Side::top).size();
      for (std::size_t k = 0; k + 1 < sw.trace.size(); ++k) {
        rec.expect(length(sw.trace[k + 1]) == length(sw.trace[k]) - 1 &&
                       short_arcs(sw.trace[k + 1], Side::top).size() == arcs,
                   [&] { return "peel " + std::to_string(k) + " of " + show(sw.word) + " breaks bookkeeping"; });
      }
      auto core = is_straight(sw.trace.back());
      rec.expect(core && *core == sw.core && cfg.is_independent(sw.core),
                 [&] { return "terminal diagram of " + show(sw.word) + " is not straight"; });
      rec.expect(straighten(AffineDiagram::from_raw(r.diagram.raw())).word == sw.word,
                 [&] { return "straighten is not deterministic on " + r.key; });
    }
  });
}

CheckResult check_nu(const CheckContext& ctx) {
  return guarded("crossing numbers", [&](Recorder& rec) {
    const int n = ctx.config().n();
    for (const auto& r : ctx.records()) {
      bool all_even = true;
      for (int k = 1; k <= n; ++k) {
        int v = nu(r.diagram, k);
        all_even = all_even && v % 2 == 0;
        rec.expect(v == 2 * count_letter(r.word, k), [&] {
          return "nu(" + show(r.word) + ", " + std::to_string(k) + ") = " + std::to_string(v);
        });
      }
      rec.expect(all_even && is_admissible(r.diagram) && length(r.diagram) == r.length,
                 [&] { return show(r.word) + " has an odd crossing number"; });
    }
  });
}

CheckResult check_descents(const CheckContext& ctx) {
  return guarded("descents and minimal arcs", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    for (const auto& r : ctx.records()) {
      rec.expect(left_descents(cfg, r.word) == descent_arcs(r.diagram, Side::top),
                 [&] { return "left descents of " + show(r.word); });
      rec.expect(right_descents(cfg, r.word) == descent_arcs(r.diagram, Side::bottom),
                 [&] { return "right descents of " + show(r.word); });
      for (int s = 1; s <= cfg.n(); ++s) {
        Word sw{s};
        sw.insert(sw.end(), r.word.begin(), r.word.end());
        bool descent = word_length(cfg, sw) < r.length;
        rec.expect(descent == greedy_front(cfg, r.word, s).has_value(),
                   [&] { return "greedy_front disagrees with length at " + show(r.word); });
      }
    }
  });
}

CheckResult check_permutation_relations(const CheckContext& ctx, int samples) {
  return guarded("affine permutation relations", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    const int n = cfg.n();
    std::mt19937_64 rng(ctx.seed() ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> letter(1, n), len(0, 12);
    for (int k = 0; k < samples; ++k) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (int& x : w) x = letter(rng);
      std::vector<Word> moved;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (cfg.commute(w[i], w[i + 1])) {
          Word u = w;
          std::swap(u[i], u[i + 1]);
          moved.push_back(u);
        }
        if (i + 2 < w.size() && w[i] == w[i + 2] && cfg.adjacent(w[i], w[i + 1])) {
          Word u = w;
          u[i] = u[i + 2] = w[i + 1];
          u[i + 1] = w[i];
          moved.push_back(u);
        }
      }
      const AffinePermutation p = to_affine_permutation(cfg, w);
      for (const Word& u : moved) {
        rec.expect(to_affine_permutation(cfg, u) == p,
                   [&] { return show(w) + " and " + show(u) + " differ"; });
      }
      Word ss = w;
      int s = letter(rng);
      ss.push_back(s);
      ss.push_back(s);
      rec.expect(to_affine_permutation(cfg, ss) == p, [&] { return "s^2 != 1 after " + show(w); });
      rec.expect(p.inverse().compose(p) == AffinePermutation::identity(n),
                 [&] { return "inverse fails for " + show(w); });
    }
  });
}

CheckResult check_property_r(const CheckContext& ctx, int max_len) {
  return guarded("property R", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    for (const auto* r : up_to(ctx, max_len)) {
      for (int t = 1; t <= cfg.n(); ++t) {
        Word wt = r->word;
        wt.push_back(t);
        if (word_length(cfg, wt) < r->length || is_fully_commutative(cfg, wt)) continue;
        PropertyRWitness pw = property_r_witness(cfg, r->word, t);
        Word spelled = pw.w1;
        spelled.push_back(t);
        spelled.push_back(pw.s);
        spelled.insert(spelled.end(), pw.w2.begin(), pw.w2.end());
        bool tail = std::all_of(pw.w2.begin(), pw.w2.end(), [&](int x) { return cfg.commute(t, x); });
        rec.expect(to_affine_permutation(cfg, spelled) == to_affine_permutation(cfg, r->word) &&
                       is_reduced(cfg, spelled) && cfg.adjacent(t, pw.s) && tail,
                   [&] { return "bad witness for " + show(r->word) + " t=" + std::to_string(t); });
        for (const PropertyRWitness& other : all_property_r_witnesses(cfg, r->word, t)) {
          rec.expect(other.s == pw.s, [&] {
            return "witnesses disagree on s for " + show(r->word) + " t=" + std::to_string(t);
          });
        }
      }
    }
  });
}

CheckResult check_left_decomposition(const CheckContext& ctx) {
  return guarded("left and right decompositions", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    for (const auto& r : ctx.records()) {
      for (bool left : {true, false}) {
        LeftDecomposition dec = left ? left_decomposition(cfg, r.word) : right_decomposition(cfg, r.word);
        Word spelled;
        for (const GeneratorSet& g : dec.groups) {
          rec.expect(!g.empty() && cfg.is_independent(g), [&] { return "group " + show(g) + " not in P"; });
          Word block = iota(g);
          spelled.insert(spelled.end(), block.begin(), block.end());
        }
        rec.expect(to_affine_permutation(cfg, spelled) == to_affine_permutation(cfg, r.word) &&
                       static_cast<int>(spelled.size()) == r.length,
                   [&] { return "decomposition does not spell " + show(r.word); });
        for (std::size_t k = 0; k + 2 < dec.groups.size(); ++k) {
          for (int s : dec.groups[k]) {
            if (dec.groups[k + 2].count(s) == 0) continue;
            bool both = dec.groups[k + 1].count(cfg.wrap(s - 1)) && dec.groups[k + 1].count(cfg.wrap(s + 1));
            rec.expect(both, [&] { return "neighbours of " + std::to_string(s) + " missing in " + show(r.word); });
          }
        }
      }
    }
  });
}

CheckResult check_engine_agreement(const CheckContext& ctx, int max_len) {
  return guarded("engine agreement", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    auto pool = up_to(ctx, max_len);
    for (const auto* x : pool) {
      for (const auto* y : pool) {
        ProductResult d = multiply(x->diagram, y->diagram);
        RewriteResult w{0, x->word};
        for (int s : y->word) {
          RewriteResult step = rewrite_mul_basis(cfg, w.word, s);
          w.exponent += step.exponent;
          w.word = std::move(step.word);
        }
        Word from_diagram = straighten(d.diagram).word;
        rec.expect(w.exponent == d.contractible_loops &&
                       to_affine_permutation(cfg, w.word) == to_affine_permutation(cfg, from_diagram),
                   [&] { return "engines disagree on " + show(x->word) + " * " + show(y->word); });
      }
    }
  });
}

CheckResult check_algebra_laws(const CheckContext& ctx, int samples) {
  return guarded("algebra laws", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    auto pool = up_to(ctx, std::min(ctx.max_len(), 5));
    std::mt19937_64 rng(ctx.seed() + 17);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> terms(1, 4), expo(-2, 2), coef(-3, 3);
    auto random_element = [&] {
      AlgebraElement e(cfg);
      for (int k = terms(rng); k > 0; --k) {
        const auto* r = pool[pick(rng)];
        e.add(basis_element(r->diagram), LaurentPoly::monomial(expo(rng), coef(rng)));
      }
      return e;
    };
    for (int k = 0; k < samples; ++k) {
      AlgebraElement a = random_element(), b = random_element(), c = random_element();
      rec.expect((a * b) * c == a * (b * c), [] { return "mul is not associative"; });
      rec.expect(a * (b + c) == a * b + a * c, [] { return "mul does not distribute on the left"; });
      rec.expect((a + b) * c == a * c + b * c, [] { return "mul does not distribute on the right"; });
      rec.expect(AlgebraElement::one(cfg) * a == a, [] { return "one is not a unit"; });
    }
  });
}

CheckResult check_a_function(const CheckContext& ctx, int brute_max_len, int samples) {
  return guarded("a-function", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    for (const auto* r : up_to(ctx, brute_max_len)) {
      int a = a_value(cfg, r->word);
      rec.expect(a == a_bruteforce(cfg, r->word, brute_max_len),
                 [&] { return "a_value differs from brute force at " + show(r->word); });
    }
    for (const Word& q : q_elements(cfg, cfg.n())) {
      GeneratorSet u = support(q);
      if (u.size() != q.size() || !cfg.is_independent(u)) continue;
      rec.expect(a_value(cfg, q) == static_cast<int>(u.size()),
                 [&] { return "a(iota(" + show(u) + ")) != #U"; });
    }
    const auto& all = ctx.records();
    std::mt19937_64 rng(ctx.seed() + 31);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> letter(1, cfg.n());
    for (int k = 0; k < samples; ++k) {
      const auto& r = all[pick(rng)];
      Word ws = r.word;
      ws.push_back(letter(rng));
      Evaluation ev = fc_evaluate(cfg, ws);
      rec.expect(a_value(cfg, ev.element.word) >= a_value(cfg, r.word),
                 [&] { return "a decreases from " + show(r.word) + " to " + show(ev.element.word); });
    }
  });
}

CheckResult check_q_and_labels(const CheckContext& ctx, int samples) {
  return guarded("Q and cell labels", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    std::set<std::string> listed;
    for (const Word& q : q_elements(cfg, ctx.max_len())) listed.insert(canonical_key(stack(cfg, q).diagram));
    std::map<TwoSidedLabel, int> a_of_label;
    for (const auto& r : ctx.records()) {
      rec.expect(q_membership(cfg, r.word) == (listed.count(r.key) != 0),
                 [&] { return "Q membership of " + show(r.word); });
      const CellLabels& l = *r.labels;
      int a = a_value(cfg, r.word);
      auto [it, fresh] = a_of_label.emplace(l.two_sided, a);
      rec.expect(fresh || it->second == a,
                 [&] { return "a not constant on " + l.two_sided.to_string(); });
      rec.expect(l.left_pattern.size() == l.right_pattern.size() &&
                     static_cast<int>(l.right_pattern.size()) == a,
                 [&] { return "short-arc counts differ at " + show(r.word); });
    }
    const auto& all = ctx.records();
    std::mt19937_64 rng(ctx.seed() + 47);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < samples; ++k) {
      const auto& r = all[pick(rng)];
      QReduction red = reduce_to_q(cfg, r.word, rng);
      rec.expect(classify_q(cfg, red.q) == r.labels->two_sided,
                 [&] { return "cancellation order changes the label of " + show(r.word); });
    }
  });
}

CheckResult check_neighbours(const CheckContext& ctx) {
  return guarded("neighbour classes", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    const int n = cfg.n();
    std::vector<Word> qs = q_elements(cfg, std::max(n, 2 * n));
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < qs.size(); ++i) index[canonical_key(stack(cfg, qs[i]).diagram)] = i;
    std::vector<std::size_t> parent(qs.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    std::vector<std::set<std::size_t>> adj(qs.size());
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (const auto& [s, q2] : neighbours(cfg, qs[i])) {
        auto it = index.find(canonical_key(stack(cfg, q2).diagram));
        if (it == index.end()) {
          rec.fail("neighbour " + show(q2) + " of " + show(qs[i]) + " outside the list");
          continue;
        }
        adj[i].insert(it->second);
        parent[find(i)] = find(it->second);
      }
    }
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::size_t j : adj[i]) {
        rec.expect(adj[j].count(i) != 0, [&] { return "neighbour relation not symmetric at " + show(qs[i]); });
      }
    }
    // Expected classes: all iota(T) with #T = k for 2k < n together; every
    // M element alone.
    for (std::size_t i = 0; i < qs.size(); ++i) {
      for (std::size_t j = i + 1; j < qs.size(); ++j) {
        TwoSidedLabel li = classify_q(cfg, qs[i]), lj = classify_q(cfg, qs[j]);
        bool same_expected = !li.is_m() && li == lj;
        rec.expect((find(i) == find(j)) == same_expected,
                   [&] { return "class of " + show(qs[i]) + " vs " + show(qs[j]); });
      }
      if (classify_q(cfg, qs[i]).is_m()) {
        rec.expect(adj[i].empty(), [&] { return "M element " + show(qs[i]) + " has neighbours"; });
      }
    }
  });
}

CheckResult check_involutions(const CheckContext& ctx, int orders) {
  return guarded("involutions", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    std::mt19937_64 rng(ctx.seed() + 59);
    GeneratorSet full;
    for (int i = 1; i <= cfg.n(); ++i) full.insert(i);
    for (const auto& r : ctx.records()) {
      if (!r.is_involution) continue;
      InvolutionDecomposition dec = involution_decompose(cfg, r.word);
      for (int k = 0; k < orders; ++k) {
        InvolutionDecomposition again = involution_decompose(cfg, r.word, &rng);
        rec.expect(again.x == dec.x && again.t == dec.t,
                   [&] { return "decomposition of " + show(r.word) + " depends on peel order"; });
      }
      rec.expect(a_value(cfg, r.word) == static_cast<int>(dec.t.size()),
                 [&] { return "a(d) != #T for " + show(r.word); });
      const bool full_support = support(r.word) == full;
      if (cfg.n() % 2 == 1) {
        rec.expect(!full_support, [&] { return show(r.word) + " has full support"; });
      }
      Word xt = concat(dec.x, iota(dec.t));
      if (full_support) {
        bool maximal = true;
        for (int s = 1; s <= cfg.n(); ++s) {
          GeneratorSet bigger = dec.t;
          if (bigger.insert(s).second && cfg.is_independent(bigger)) maximal = false;
        }
        rec.expect(maximal, [&] { return "T is not maximal for " + show(r.word); });
      } else {
        CellLabels lx = labels(cfg, xt);
        rec.expect(lx.two_sided == r.labels->two_sided && lx.right_pattern == r.labels->right_pattern,
                   [&] { return show(r.word) + " and x iota(T) have different right labels"; });
      }
      for (int s : right_descents(cfg, xt)) {
        rec.expect(!cancellable(cfg, xt, s, End::right).has_value(),
                   [&] { return std::to_string(s) + " right-cancellable in " + show(xt); });
      }
    }
  });
}

CheckResult check_right_cell_involutions(const CheckContext& ctx) {
  return guarded("one involution per right cell", [&](Recorder& rec) {
    const GroupConfig& cfg = ctx.config();
    struct Cell {
      const EnumerationRecord* first = nullptr;
      std::vector<const EnumerationRecord*> involutions;
    };
    std::map<std::pair<TwoSidedLabel, ArcPattern>, Cell> cells;
    for (const auto& r : ctx.records()) {
      Cell& c = cells[{r.labels->two_sided, r.labels->right_pattern}];
      if (c.first == nullptr) c.first = &r;
      if (r.is_involution) c.involutions.push_back(&r);
    }
    for (const auto& [label, c] : cells) {
      if (label.first.is_m_nonsquare()) {
        rec.expect(c.involutions.empty() && right_cell_involution(cfg, c.first->word).m_nonsquare,
                   [&] { return "involution in the M cell " + label.first.to_string(); });
        continue;
      }
      RightCellInvolution inv = right_cell_involution(cfg, c.first->word);
      const bool visible = static_cast<int>(inv.involution.size()) <= ctx.max_len();
      rec.expect(!inv.m_nonsquare && c.involutions.size() == (visible ? 1U : 0U), [&] {
        return std::to_string(c.involutions.size()) + " involutions in the right cell of " +
               show(c.first->word);
      });
      if (visible && c.involutions.size() == 1) {
        rec.expect(c.involutions.front()->word == inv.involution,
                   [&] { return "wrong involution for the right cell of " + show(c.first->word); });
      }
    }
  });
}

CheckResult check_serialization(const CheckContext& ctx) {
  return guarded("JSON round trip", [&](Recorder& rec) {
    for (const auto& r : ctx.records()) {
      EnumerationRecord back = record_from_json(Json::parse(record_to_json(r).dump()));
      rec.expect(back.word == r.word && back.key == r.key && back.diagram == r.diagram &&
                     back.length == r.length && back.is_involution == r.is_involution &&
                     back.labels == r.labels,
                 [&] { return "record " + show(r.word) + " does not round-trip"; });
    }
  });
}

CheckResult check_enumeration_order(const CheckContext& ctx, int workers) {
  return guarded("enumeration independent of workers", [&](Recorder& rec) {
    EnumerationOptions opts;
    opts.workers = workers;
    std::vector<std::string> sharded;
    for (const auto& r : enumerate(ctx.config(), ctx.max_len(), opts)) sharded.push_back(r.key);
    std::vector<std::string> serial;
    for (const auto& r : ctx.records()) serial.push_back(r.key);
    std::sort(sharded.begin(), sharded.end());
    std::sort(serial.begin(), serial.end());
    rec.expect(sharded == serial, [] { return "key sets differ"; });
  });
}

std::vector<CheckResult> run_checks(const GroupConfig& cfg, int max_len, std::uint64_t seed) {
  CheckContext ctx(cfg, max_len, seed);
  std::vector<CheckResult> out;
  out.push_back(check_presentation(cfg));
  out.push_back(check_unit_and_associativity(ctx));
  out.push_back(check_faithfulness(ctx));
  out.push_back(check_straighten_round_trip(ctx));
  out.push_back(check_nu(ctx));
  out.push_back(check_descents(ctx));
  out.push_back(check_permutation_relations(ctx));
  out.push_back(check_property_r(ctx, std::min(max_len, 10)));
  out.push_back(check_left_decomposition(ctx));
  out.push_back(check_engine_agreement(ctx, std::min(max_len, 4)));
  out.push_back(check_algebra_laws(ctx));
  out.push_back(check_a_function(ctx, std::min(max_len, 10), 2000));
  out.push_back(check_q_and_labels(ctx, 2000));
  out.push_back(check_neighbours(ctx));
  out.push_back(check_involutions(ctx));
  out.push_back(check_right_cell_involutions(ctx));
  out.push_back(check_serialization(ctx));
  out.push_back(check_enumeration_order(ctx));
  return out;
}

}  // namespace afftl
