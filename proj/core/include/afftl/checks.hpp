#pragma once

// Property suites shared by the `verify` command and the test binaries.
// Each check enumerates what it needs up to the context's horizon and
// reports the number of cases examined and the first few counterexamples.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "afftl/coxeter_words.hpp"
#include "afftl/enumerate.hpp"

namespace afftl {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // at most a handful
};

class CheckContext {
 public:
  CheckContext(const GroupConfig& cfg, int max_len, std::uint64_t seed);

  const GroupConfig& config() const noexcept { return cfg_; }
  int max_len() const noexcept { return max_len_; }
  std::uint64_t seed() const noexcept { return seed_; }
  // Records with labels, enumerated once on first use.
  const std::vector<EnumerationRecord>& records() const;

 private:
  GroupConfig cfg_;
  int max_len_;
  std::uint64_t seed_;
  mutable std::vector<EnumerationRecord> records_;
  mutable bool enumerated_ = false;
};

// Defining relations of the generators in the diagram engine.
CheckResult check_presentation(const GroupConfig& cfg);
// Unit laws and associativity on random admissible triples.
CheckResult check_unit_and_associativity(const CheckContext& ctx, int samples = 300);
// No key collisions among distinct words; per-length counts equal the
// affine-permutation oracle.
CheckResult check_faithfulness(const CheckContext& ctx);
// stack(straighten(d)) = (d, 0), one unit of length per peel, short arcs kept.
CheckResult check_straighten_round_trip(const CheckContext& ctx);
// nu(E'_w, k) = 2 * occurrences of s_k; parity of stacked diagrams.
CheckResult check_nu(const CheckContext& ctx);
// Descent sets from words against minimal arcs of the diagram.
CheckResult check_descents(const CheckContext& ctx);
// Commutation and braid moves preserve the affine permutation.
CheckResult check_permutation_relations(const CheckContext& ctx, int samples = 2000);
// Property R witnesses satisfy their conditions and agree on s.
CheckResult check_property_r(const CheckContext& ctx, int max_len = 10);
// Groups lie in P, the concatenation spells w, and s in G_1 and G_3 forces
// both neighbours of s into G_2.
CheckResult check_left_decomposition(const CheckContext& ctx);
// Diagram multiplication against the Property R rewriting engine on all
// basis pairs up to max_len.
CheckResult check_engine_agreement(const CheckContext& ctx, int max_len = 5);
// Associativity and distributivity of mul on random linear combinations.
CheckResult check_algebra_laws(const CheckContext& ctx, int samples = 100);
// a_value = a_bruteforce, a(iota(U)) = #U, monotonicity under right
// multiplication.
CheckResult check_a_function(const CheckContext& ctx, int brute_max_len = 10,
                             int samples = 10000);
// Q membership against the explicit list, randomized cancellation order,
// a constant on two-sided labels, equal short-arc counts on both rows.
CheckResult check_q_and_labels(const CheckContext& ctx, int samples = 10000);
// Symmetry of the neighbour relation and its classes on Q.
CheckResult check_neighbours(const CheckContext& ctx);
// Involution decomposition: uniqueness under random peel order, a(d) = #T,
// no full support for odd n and a maximal T under full support, no
// right-cancellable descent of x iota(T), and otherwise d and x iota(T)
// share a right label.
CheckResult check_involutions(const CheckContext& ctx, int orders = 3);
// Exactly one involution per right label outside non-involution M cells.
CheckResult check_right_cell_involutions(const CheckContext& ctx);
// Records survive a JSON round trip.
CheckResult check_serialization(const CheckContext& ctx);
// Sorted keys are identical for 1 and several workers.
CheckResult check_enumeration_order(const CheckContext& ctx, int workers = 4);

std::vector<CheckResult> run_checks(const GroupConfig& cfg, int max_len, std::uint64_t seed);

}  // namespace afftl
