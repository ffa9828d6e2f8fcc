#pragma once

#include <random>
#include <string>
#include <vector>

#include "afftl/checks.hpp"
#include "afftl/coxeter_words.hpp"
#include "afftl/enumerate.hpp"

namespace afftl::testing {

inline Word random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, n);
  Word w(static_cast<std::size_t>(len(rng)));
  for (int& x : w) x = letter(rng);
  return w;
}

// Random reduced FC word: extend on the right while the heap criterion holds.
inline Word random_fc_word(std::mt19937_64& rng, const GroupConfig& cfg, int max_len) {
  std::uniform_int_distribution<int> letter(1, cfg.n());
  Word w;
  for (int tries = 0; static_cast<int>(w.size()) < max_len && tries < 8 * max_len; ++tries) {
    w.push_back(letter(rng));
    if (!is_fully_commutative(cfg, w)) w.pop_back();
  }
  return w;
}

inline std::string first_failure(const CheckResult& r) {
  return r.failures.empty() ? std::string() : r.failures.front();
}

inline const std::vector<EnumerationRecord>& records(int n, int max_len) {
  static std::vector<std::vector<std::vector<EnumerationRecord>>> cache(16, std::vector<std::vector<EnumerationRecord>>(16));
  auto& slot = cache[static_cast<std::size_t>(n)][static_cast<std::size_t>(max_len)];
  if (slot.empty()) {
    EnumerationOptions opts;
    opts.with_labels = true;
    slot = enumerate(GroupConfig(n), max_len, opts);
  }
  return slot;
}

}  // namespace afftl::testing
