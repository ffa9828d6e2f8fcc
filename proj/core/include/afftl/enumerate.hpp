#pragma once

// Breadth-first enumeration of the fully commutative elements, keyed by
// diagram, and an independent count over affine permutations.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "afftl/cells.hpp"
#include "afftl/coxeter_words.hpp"
#include "afftl/diagram.hpp"

namespace afftl {

// 10^7 unless AFFTL_MAX_ELEMENTS holds a positive integer.
std::size_t default_element_cap();

struct EnumerationOptions {
  std::size_t max_elements = default_element_cap();
  int workers = 1;
  bool with_labels = false;
};

struct EnumerationRecord {
  Word word;  // canonical straightened word
  std::string key;
  AffineDiagram diagram;
  int length = 0;
  bool is_involution = false;
  std::optional<CellLabels> labels;
};

// Records in order of length, then canonical key. Throws
// Error(bound_exceeded) past options.max_elements.
std::vector<EnumerationRecord> enumerate(const GroupConfig& cfg, int max_len,
                                         const EnumerationOptions& options = {});

// Streaming form: each length layer is handed out as soon as it is complete.
void enumerate(const GroupConfig& cfg, int max_len,
               const EnumerationOptions& options,
               const std::function<void(const EnumerationRecord&)>& sink);

// Number of fully commutative elements of each length 0..max_len, counted
// over affine permutations with the heap criterion; no diagrams involved.
std::vector<std::size_t> oracle_length_counts(const GroupConfig& cfg,
                                              int max_len);

}  // namespace afftl
