#pragma once

// Cell structure of the monomial basis: the a-function, cancellation down to
// the set Q, two-sided/left/right cell labels, and involutions.
//
// Elements are passed as reduced words of fully commutative elements;
// operations throw Error(precondition) otherwise.

#include <compare>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "afftl/coxeter_words.hpp"
#include "afftl/diagram.hpp"
#include "afftl/straighten.hpp"

namespace afftl {

enum class MStart { m1, m2 };

// Small(k): the class {iota(T) : #T = k}, 2k < n.
// MElem(start, f): the alternating product of f factors iota(M_a) iota(M_b)
// ... beginning with M_start (n even only).
struct TwoSidedLabel {
  enum class Kind { small, m_elem };

  Kind kind = Kind::small;
  int k = 0;
  MStart start = MStart::m1;
  int factors = 0;

  static TwoSidedLabel small(int k) { return {Kind::small, k, MStart::m1, 0}; }
  static TwoSidedLabel m_elem(MStart start, int factors) {
    return {Kind::m_elem, 0, start, factors};
  }

  bool is_m() const noexcept { return kind == Kind::m_elem; }
  // M elements with an odd number of factors are palindromes, hence
  // involutions.
  bool is_m_nonsquare() const noexcept { return is_m() && factors % 2 == 0; }

  std::string to_string() const;

  friend auto operator<=>(const TwoSidedLabel&, const TwoSidedLabel&) = default;
};

using ArcPattern = std::vector<std::pair<int, int>>;

struct CellLabels {
  TwoSidedLabel two_sided;
  ArcPattern left_pattern;   // bottom short arcs
  ArcPattern right_pattern;  // top short arcs
  int loops = 0;

  friend bool operator==(const CellLabels&, const CellLabels&) = default;
};

// Number of top short arcs of E'_w.
int a_value(const GroupConfig& cfg, const Word& w);

enum class FactorReading { contiguous, subword };

// Largest #U, U in P, with iota(U) a factor of some reduced expression of w.
// Throws Error(bound_exceeded) when |w| > bound.
int a_bruteforce(const GroupConfig& cfg, const Word& w, int bound = 12,
                 FactorReading reading = FactorReading::contiguous);

// The t adjacent to s with E_t E_w = E_{sw} (left) or E_w E_t = E_{ws}
// (right); smallest such t. Throws Error(precondition) unless s is a descent
// on that side.
std::optional<int> cancellable(const GroupConfig& cfg, const Word& w, int s,
                               End side);

struct Cancellation {
  End side;
  int s;
  int t;

  friend bool operator==(const Cancellation&, const Cancellation&) = default;
};

struct QReduction {
  Word q;
  std::vector<Cancellation> trace;
};

// Cancels left descents first, smallest generator first, until none is
// cancellable on either side.
QReduction reduce_to_q(const GroupConfig& cfg, const Word& w);
// Same, choosing uniformly among all available cancellations.
QReduction reduce_to_q(const GroupConfig& cfg, const Word& w,
                       std::mt19937_64& rng);

bool q_membership(const GroupConfig& cfg, const Word& w);

// Throws Error(precondition) for elements outside Q.
TwoSidedLabel classify_q(const GroupConfig& cfg, const Word& q);

Word m_element_word(const GroupConfig& cfg, MStart start, int factors);

// All iota(T), T in P, and the M elements, of length at most max_len.
std::vector<Word> q_elements(const GroupConfig& cfg, int max_len);

// Pairs (s, q') with E_q = E_s E_q' E_s, q' ranging over Q up to length
// l(q) + 2. Throws Error(precondition) for q outside Q.
std::vector<std::pair<int, Word>> neighbours(const GroupConfig& cfg,
                                             const Word& q);

CellLabels labels(const GroupConfig& cfg, const Word& w);

struct InvolutionDecomposition {
  Word x;  // canonical word
  GeneratorSet t;
};

// d = x iota(T) x^-1 reduced. Conjugating generators are picked smallest
// first, or at random when rng is given. Throws Error(precondition) unless d
// is an involution.
InvolutionDecomposition involution_decompose(const GroupConfig& cfg,
                                             const Word& d,
                                             std::mt19937_64* rng = nullptr);

struct RightCellInvolution {
  bool m_nonsquare = false;  // cell of a non-involution M element
  Word involution;           // canonical word, empty when m_nonsquare
};

RightCellInvolution right_cell_involution(const GroupConfig& cfg,
                                          const Word& w);

struct CensusRow {
  TwoSidedLabel two_sided;
  int left_cells = 0;
  int right_cells = 0;
  int elements_seen = 0;
};

// Enumerates W_c up to max_len and counts distinct left/right labels per
// two-sided label.
std::vector<CensusRow> census(const GroupConfig& cfg, int max_len,
                              int workers = 1);

}  // namespace afftl
