#include "afftl/coxeter_words.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "afftl/error.hpp"

namespace afftl {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace

GroupConfig::GroupConfig(int n) : n_(n) {
  if (n < 3) {
    throw Error(ErrorKind::invalid_config,
                "n must be at least 3, got " + std::to_string(n));
  }
}

int GroupConfig::wrap(int i) const noexcept {
  return static_cast<int>(floor_mod(i - 1, n_)) + 1;
}

void GroupConfig::check_generator(int i) const {
  if (i < 1 || i > n_) {
    throw Error(ErrorKind::out_of_range, "generator " + std::to_string(i) +
                                             " outside 1.." +
                                             std::to_string(n_));
  }
}

void GroupConfig::check_word(const Word& w) const {
  for (int s : w) check_generator(s);
}

bool GroupConfig::adjacent(int i, int j) const {
  check_generator(i);
  check_generator(j);
  int d = static_cast<int>(floor_mod(i - j, n_));
  return d == 1 || d == n_ - 1;
}

bool GroupConfig::commute(int i, int j) const {
  return i != j && !adjacent(i, j);
}

bool GroupConfig::is_independent(const GeneratorSet& s) const {
  for (int i : s) check_generator(i);
  for (auto a = s.begin(); a != s.end(); ++a) {
    for (auto b = std::next(a); b != s.end(); ++b) {
      if (adjacent(*a, *b)) return false;
    }
  }
  return true;
}

GeneratorSet GroupConfig::m1() const {
  GeneratorSet s;
  for (int i = 1; i <= n_; i += 2) s.insert(i);
  return s;
}

GeneratorSet GroupConfig::m2() const {
  GeneratorSet s;
  for (int i = 2; i <= n_; i += 2) s.insert(i);
  return s;
}

bool adjacent(const GroupConfig& cfg, int i, int j) {
  return cfg.adjacent(i, j);
}

GeneratorSet support(const Word& w) { return {w.begin(), w.end()}; }

Word iota(const GeneratorSet& s) { return {s.begin(), s.end()}; }

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

std::optional<Word> greedy_front(const GroupConfig& cfg, const Word& w,
                                 int s) {
  cfg.check_generator(s);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == s) {
      Word r;
      r.reserve(w.size());
      r.push_back(s);
      r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(i));
      r.insert(r.end(), w.begin() + static_cast<long>(i) + 1, w.end());
      return r;
    }
    if (!cfg.commute(w[i], s)) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Word> greedy_back(const GroupConfig& cfg, const Word& w,
                                int s) {
  auto r = greedy_front(cfg, reversed(w), s);
  if (!r) return std::nullopt;
  return reversed(std::move(*r));
}

std::vector<Word> commutation_class(const GroupConfig& cfg, const Word& w,
                                    std::size_t limit) {
  cfg.check_word(w);
  std::set<Word> seen{w};
  std::vector<Word> order{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Word cur = order[head];
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!cfg.commute(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) {
        if (order.size() >= limit) {
          throw Error(ErrorKind::bound_exceeded,
                      "commutation class exceeds " + std::to_string(limit));
        }
        order.push_back(std::move(next));
      }
    }
  }
  return order;
}

namespace {

void check_property_r_precondition(const GroupConfig& cfg, const Word& w,
                                   int t) {
  cfg.check_word(w);
  cfg.check_generator(t);
  if (!is_fully_commutative(cfg, w)) {
    throw Error(ErrorKind::precondition,
                "property R needs a reduced fully commutative word");
  }
  Word wt = w;
  wt.push_back(t);
  if (is_fully_commutative(cfg, wt)) {
    throw Error(ErrorKind::precondition,
                "w.t is fully commutative; no Property R witness exists");
  }
  if (!is_reduced(cfg, wt)) {
    throw Error(ErrorKind::precondition,
                "t is a right descent of w; w.t is fully commutative");
  }
}

// Witnesses visible in one word of the class.
void collect_witnesses(const GroupConfig& cfg, const Word& u, int t,
                       std::vector<PropertyRWitness>& out, bool first_only) {
  for (std::size_t p = 0; p + 1 < u.size(); ++p) {
    if (u[p] != t || !cfg.adjacent(t, u[p + 1])) continue;
    bool tail_commutes = true;
    for (std::size_t q = p + 2; q < u.size(); ++q) {
      if (!cfg.commute(t, u[q])) {
        tail_commutes = false;
        break;
      }
    }
    if (!tail_commutes) continue;
    out.push_back({Word(u.begin(), u.begin() + static_cast<long>(p)), u[p + 1],
                   Word(u.begin() + static_cast<long>(p) + 2, u.end())});
    if (first_only) return;
  }
}

}  // namespace

PropertyRWitness property_r_witness(const GroupConfig& cfg, const Word& w,
                                    int t) {
  check_property_r_precondition(cfg, w, t);
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  std::vector<PropertyRWitness> found;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    collect_witnesses(cfg, cur, t, found, true);
    if (!found.empty()) return found.front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (!cfg.commute(cur[i], cur[i + 1])) continue;
      Word next = cur;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  throw std::logic_error("property R witness not found in commutation class");
}

std::vector<PropertyRWitness> all_property_r_witnesses(const GroupConfig& cfg,
                                                       const Word& w, int t) {
  check_property_r_precondition(cfg, w, t);
  std::vector<PropertyRWitness> found;
  for (const Word& u : commutation_class(cfg, w)) {
    collect_witnesses(cfg, u, t, found, false);
  }
  return found;
}

PropertyRWitness property_r_witness_dual(const GroupConfig& cfg,
                                         const Word& w, int t) {
  PropertyRWitness m = property_r_witness(cfg, reversed(w), t);
  return {reversed(m.w2), m.s, reversed(m.w1)};
}

// ---------------------------------------------------------------------------
// Affine permutations

AffinePermutation::AffinePermutation(std::vector<long> window)
    : window_(std::move(window)) {
  const long n = static_cast<long>(window_.size());
  if (n < 1) throw Error(ErrorKind::invalid_config, "empty window");
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  long drift = 0;
  for (long i = 0; i < n; ++i) {
    long r = floor_mod(window_[static_cast<std::size_t>(i)], n);
    if (hit[static_cast<std::size_t>(r)]) {
      throw Error(ErrorKind::invalid_config,
                  "window entries repeat modulo n");
    }
    hit[static_cast<std::size_t>(r)] = true;
    drift += window_[static_cast<std::size_t>(i)] - (i + 1);
  }
  if (drift != 0) {
    throw Error(ErrorKind::invalid_config,
                "window displacement does not sum to zero");
  }
}

AffinePermutation AffinePermutation::identity(int n) {
  AffinePermutation p;
  p.window_.resize(static_cast<std::size_t>(n));
  std::iota(p.window_.begin(), p.window_.end(), 1L);
  return p;
}

long AffinePermutation::operator()(long i) const {
  const long n = this->n();
  long r = floor_mod(i - 1, n);
  return window_[static_cast<std::size_t>(r)] + (i - 1 - r);
}

AffinePermutation AffinePermutation::times_generator(int i) const {
  const long n = this->n();
  AffinePermutation p = *this;
  if (i < n) {
    std::swap(p.window_[static_cast<std::size_t>(i - 1)],
              p.window_[static_cast<std::size_t>(i)]);
  } else {
    long last = window_.back();
    p.window_.back() = window_.front() + n;
    p.window_.front() = last - n;
  }
  return p;
}

AffinePermutation AffinePermutation::generator_times(int i) const {
  const long n = this->n();
  AffinePermutation p = *this;
  for (long& v : p.window_) {
    long r = floor_mod(v - 1, n) + 1;
    if (r == i) {
      v += 1;
    } else if (r == floor_mod(i, n) + 1) {
      v -= 1;
    }
  }
  return p;
}

AffinePermutation AffinePermutation::compose(
    const AffinePermutation& other) const {
  AffinePermutation p;
  p.window_.reserve(window_.size());
  for (long v : other.window_) p.window_.push_back((*this)(v));
  return p;
}

AffinePermutation AffinePermutation::inverse() const {
  const long n = this->n();
  AffinePermutation p;
  p.window_.assign(window_.size(), 0);
  for (long i = 1; i <= n; ++i) {
    long v = window_[static_cast<std::size_t>(i - 1)];
    long r = floor_mod(v - 1, n) + 1;
    // sigma(i) = v, so sigma^{-1}(r) = i - (v - r).
    p.window_[static_cast<std::size_t>(r - 1)] = i - (v - r);
  }
  return p;
}

long AffinePermutation::length() const {
  const long n = this->n();
  long len = 0;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      long d = window_[static_cast<std::size_t>(j)] -
               window_[static_cast<std::size_t>(i)];
      len += std::abs(floor_div(d, n));
    }
  }
  return len;
}

bool AffinePermutation::is_involution() const {
  return compose(*this) == identity(n());
}

AffinePermutation to_affine_permutation(const GroupConfig& cfg, const Word& w) {
  cfg.check_word(w);
  AffinePermutation p = AffinePermutation::identity(cfg.n());
  for (int s : w) p = p.times_generator(s);
  return p;
}

long word_length(const GroupConfig& cfg, const Word& w) {
  return to_affine_permutation(cfg, w).length();
}

bool is_reduced(const GroupConfig& cfg, const Word& w) {
  return word_length(cfg, w) == static_cast<long>(w.size());
}

bool is_fully_commutative(const GroupConfig& cfg, const Word& w) {
  if (!is_reduced(cfg, w)) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int blockers = 0;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j] == w[i]) {
        if (blockers < 2) return false;
        break;
      }
      if (cfg.adjacent(w[i], w[j])) ++blockers;
    }
  }
  return true;
}

GeneratorSet left_descents(const GroupConfig& cfg, const Word& w) {
  GeneratorSet g;
  for (int s = 1; s <= cfg.n(); ++s) {
    if (greedy_front(cfg, w, s)) g.insert(s);
  }
  return g;
}

GeneratorSet right_descents(const GroupConfig& cfg, const Word& w) {
  return left_descents(cfg, reversed(w));
}

namespace {

InducedGraph induced(const GroupConfig& cfg, const GeneratorSet& a,
                     const GeneratorSet& b) {
  InducedGraph g;
  g.nodes = a;
  g.nodes.insert(b.begin(), b.end());
  for (auto x = g.nodes.begin(); x != g.nodes.end(); ++x) {
    for (auto y = std::next(x); y != g.nodes.end(); ++y) {
      if (cfg.adjacent(*x, *y)) g.edges.emplace_back(*x, *y);
    }
  }
  return g;
}

}  // namespace

LeftDecomposition left_decomposition(const GroupConfig& cfg, const Word& w) {
  cfg.check_word(w);
  LeftDecomposition d;
  Word rest = w;
  while (!rest.empty()) {
    GeneratorSet g = left_descents(cfg, rest);
    if (g.empty()) throw std::logic_error("nonempty word without descents");
    for (int s : g) {
      Word moved = *greedy_front(cfg, rest, s);
      rest.assign(moved.begin() + 1, moved.end());
    }
    d.groups.push_back(std::move(g));
  }
  for (std::size_t k = 0; k + 1 < d.groups.size(); ++k) {
    d.graphs.push_back(induced(cfg, d.groups[k], d.groups[k + 1]));
  }
  return d;
}

LeftDecomposition right_decomposition(const GroupConfig& cfg, const Word& w) {
  LeftDecomposition d = left_decomposition(cfg, reversed(w));
  std::reverse(d.groups.begin(), d.groups.end());
  std::reverse(d.graphs.begin(), d.graphs.end());
  return d;
}

}  // namespace afftl
