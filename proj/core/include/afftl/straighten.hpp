#pragma once

// Conversion between words and diagrams: stacking generators, and the
// straightening procedure that peels one generator at a time off an
// admissible diagram until a straight core E'_{iota(S)} remains.

#include <optional>
#include <utility>
#include <vector>

#include "afftl/coxeter_words.hpp"
#include "afftl/diagram.hpp"

namespace afftl {

// Left-to-right fold of generator diagrams; the first letter ends up on top.
ProductResult stack(const GroupConfig& cfg, const Word& w);

// S when d == E'_{iota(S)} for an independent set S (identity gives {}).
std::optional<GeneratorSet> is_straight(const AffineDiagram& d);

// Listed in priority order.
enum class CongruenceKind { t1, b1, t2, b2 };

const char* to_string(CongruenceKind k) noexcept;

struct CongruenceFinding {
  int cls;  // 1..n
  CongruenceKind kind;
  // Innermost arc over the minimal arc (types 1T/1B, covered case), as
  // universal-cover positions on the relevant row.
  std::optional<std::pair<int, int>> cover;
  // Types 1T/1B where no arc covers and a long horizontal edge is used.
  bool via_loop = false;

  friend bool operator==(const CongruenceFinding&,
                         const CongruenceFinding&) = default;
};

// Every congruence class of each type, in class order (diagnostics and
// tests; find_distinguished picks from this).
std::vector<CongruenceFinding> congruence_classes(const AffineDiagram& d);

// Highest-priority type present; smallest class within that type. Throws
// Error(precondition) for straight diagrams and Error(inadmissible).
CongruenceFinding find_distinguished(const AffineDiagram& d);

enum class End { left, right };

struct Peel {
  int letter;
  End end;
  AffineDiagram rest;
};

// One step of the straightening rule. The result is checked by restacking:
// letter on the recorded end times rest gives d with no loop factor, the
// length drops by one and the short-arc count is preserved. A failed check
// throws std::logic_error.
Peel peel(const AffineDiagram& d, const CongruenceFinding& f);

struct StraightWord {
  Word word;
  GeneratorSet core;
  std::vector<AffineDiagram> trace;  // d, then the rest after each peel
};

// Throws Error(inadmissible).
StraightWord straighten(const AffineDiagram& d);

}  // namespace afftl
