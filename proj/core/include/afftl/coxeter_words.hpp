#pragma once

// Word-level machinery for the affine Coxeter group of type A_{n-1}~.
//
// Generators are numbered 1..n around the cycle; s_n links n and 1. Nothing
// in this header touches diagrams, so AffinePermutation serves as an oracle
// that is independent of the diagram engine.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace afftl {

using Word = std::vector<int>;
using GeneratorSet = std::set<int>;

class GroupConfig {
 public:
  // Throws Error(invalid_config) when n < 3.
  explicit GroupConfig(int n);

  int n() const noexcept { return n_; }

  // Class of an arbitrary integer in 1..n.
  int wrap(int i) const noexcept;

  // i and j are joined in the Coxeter graph. Throws on out-of-range indices.
  bool adjacent(int i, int j) const;
  // Distinct and not joined, i.e. s_i s_j = s_j s_i with i != j.
  bool commute(int i, int j) const;

  void check_generator(int i) const;
  void check_word(const Word& w) const;

  // Set of pairwise non-adjacent generators (a member of P).
  bool is_independent(const GeneratorSet& s) const;

  // The two maximal independent sets for even n: odd and even generators.
  GeneratorSet m1() const;
  GeneratorSet m2() const;

  friend bool operator==(const GroupConfig&, const GroupConfig&) = default;

 private:
  int n_;
};

bool adjacent(const GroupConfig& cfg, int i, int j);

GeneratorSet support(const Word& w);

// Product of the generators in s, in increasing order.
Word iota(const GeneratorSet& s);

Word reversed(Word w);
Word concat(const Word& a, const Word& b);

// Realizes s in L(w) for a reduced FC word: moves the first occurrence of s
// that is preceded only by letters commuting with s to the front.
std::optional<Word> greedy_front(const GroupConfig& cfg, const Word& w, int s);
// Mirror of greedy_front: a word ending in s, when s is in R(w).
std::optional<Word> greedy_back(const GroupConfig& cfg, const Word& w, int s);

// Commutation class of a word, breadth-first from w. Throws
// Error(bound_exceeded) past `limit` words.
std::vector<Word> commutation_class(const GroupConfig& cfg, const Word& w,
                                    std::size_t limit = 2'000'000);

// w = w1 . t . s . w2 reduced, (st)^3 = 1, t commutes with supp(w2).
struct PropertyRWitness {
  Word w1;
  int s;
  Word w2;

  friend bool operator==(const PropertyRWitness&,
                         const PropertyRWitness&) = default;
};

// Precondition: w reduced FC and w.t reduced but not FC; otherwise throws
// Error(precondition). Searches the commutation class breadth-first.
PropertyRWitness property_r_witness(const GroupConfig& cfg, const Word& w,
                                    int t);

// Every witness in the commutation class (test support for the uniqueness
// clause of Property R).
std::vector<PropertyRWitness> all_property_r_witnesses(const GroupConfig& cfg,
                                                       const Word& w, int t);

// Dual form, w = w2 . s . t . w1 with t commuting with supp(w2) and t.w not
// FC; obtained by mirroring words.
PropertyRWitness property_r_witness_dual(const GroupConfig& cfg,
                                         const Word& w, int t);

// Window notation: entry i-1 is sigma(i), with sigma(i + n) = sigma(i) + n.
class AffinePermutation {
 public:
  // Throws Error(invalid_config) unless the window is a valid affine
  // permutation (distinct residues, sum condition).
  explicit AffinePermutation(std::vector<long> window);

  static AffinePermutation identity(int n);

  int n() const noexcept { return static_cast<int>(window_.size()); }
  const std::vector<long>& window() const noexcept { return window_; }

  long operator()(long i) const;

  // this * s_i: swaps positions i and i+1.
  AffinePermutation times_generator(int i) const;
  // s_i * this: swaps values i and i+1 (mod n).
  AffinePermutation generator_times(int i) const;
  // (this * other)(i) = this(other(i)).
  AffinePermutation compose(const AffinePermutation& other) const;
  AffinePermutation inverse() const;

  // Number of affine inversions, the Coxeter length.
  long length() const;
  bool is_involution() const;

  friend auto operator<=>(const AffinePermutation&,
                          const AffinePermutation&) = default;

 private:
  AffinePermutation() = default;
  std::vector<long> window_;
};

AffinePermutation to_affine_permutation(const GroupConfig& cfg, const Word& w);

// Coxeter length of the element spelled by w.
long word_length(const GroupConfig& cfg, const Word& w);
bool is_reduced(const GroupConfig& cfg, const Word& w);

// Reduced and fully commutative. For a reduced word this is the heap
// criterion: any two consecutive occurrences of a generator are separated by
// at least two letters that do not commute with it.
bool is_fully_commutative(const GroupConfig& cfg, const Word& w);

struct InducedGraph {
  GeneratorSet nodes;
  std::vector<std::pair<int, int>> edges;
};

struct LeftDecomposition {
  std::vector<GeneratorSet> groups;
  std::vector<InducedGraph> graphs;  // graphs[k] spans groups[k], groups[k+1]
};

// Left descent set of a reduced FC word, read off by greedy_front.
GeneratorSet left_descents(const GroupConfig& cfg, const Word& w);
GeneratorSet right_descents(const GroupConfig& cfg, const Word& w);

// w = iota(G_1) ... iota(G_m), G_k the left descents of what remains.
LeftDecomposition left_decomposition(const GroupConfig& cfg, const Word& w);
// Mirror image: groups listed left to right, the last one is R(w).
LeftDecomposition right_decomposition(const GroupConfig& cfg, const Word& w);

}  // namespace afftl
