#include "afftl/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "afftl/error.hpp"
#include "afftl/straighten.hpp"

namespace afftl {

std::size_t default_element_cap() {
  constexpr std::size_t fallback = 10'000'000;
  const char* env = std::getenv("AFFTL_MAX_ELEMENTS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return fallback;
  return static_cast<std::size_t>(v);
}

namespace {

using Layer = std::map<std::string, AffineDiagram>;

// Extensions of one slice of the frontier by every generator on the right.
Layer extend(const std::vector<const AffineDiagram*>& slice, int n,
             int next_len) {
  Layer out;
  for (const AffineDiagram* d : slice) {
    for (int s = 1; s <= n; ++s) {
      ProductResult r = multiply(*d, AffineDiagram::generator(n, s));
      if (r.contractible_loops != 0 || length(r.diagram) != next_len) continue;
      std::string key = canonical_key(r.diagram);
      out.try_emplace(std::move(key), std::move(r.diagram));
    }
  }
  return out;
}

Layer next_layer(const Layer& frontier, int n, int next_len, int workers) {
  std::vector<const AffineDiagram*> all;
  all.reserve(frontier.size());
  for (const auto& [k, d] : frontier) all.push_back(&d);
  const auto shards = static_cast<std::size_t>(std::max(1, workers));
  if (shards == 1 || all.size() < 2 * shards) return extend(all, n, next_len);

  std::vector<std::vector<const AffineDiagram*>> slices(shards);
  for (std::size_t i = 0; i < all.size(); ++i) slices[i % shards].push_back(all[i]);
  std::vector<Layer> partial(shards);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < shards; ++i) {
      pool.emplace_back([&, i] { partial[i] = extend(slices[i], n, next_len); });
    }
  }
  Layer merged;
  for (auto& p : partial) merged.merge(p);
  return merged;
}

EnumerationRecord make_record(const GroupConfig& cfg, const std::string& key,
                              const AffineDiagram& d, int len, bool with_labels) {
  EnumerationRecord rec{straighten(d).word, key, d, len, false, std::nullopt};
  rec.is_involution = to_affine_permutation(cfg, rec.word).is_involution();
  if (with_labels) rec.labels = labels(cfg, rec.word);
  return rec;
}

}  // namespace

void enumerate(const GroupConfig& cfg, int max_len,
               const EnumerationOptions& options,
               const std::function<void(const EnumerationRecord&)>& sink) {
  if (max_len < 0) throw Error(ErrorKind::precondition, "max_len must be non-negative");
  const int n = cfg.n();
  Layer layer;
  AffineDiagram id = AffineDiagram::identity(n);
  layer.emplace(canonical_key(id), id);
  std::size_t total = 0;
  for (int len = 0;; ++len) {
    total += layer.size();
    if (total > options.max_elements) {
      throw Error(ErrorKind::bound_exceeded,
                  "enumeration exceeds " + std::to_string(options.max_elements) + " elements");
    }
    for (const auto& [key, d] : layer) sink(make_record(cfg, key, d, len, options.with_labels));
    if (len == max_len) break;
    layer = next_layer(layer, n, len + 1, options.workers);
  }
}

std::vector<EnumerationRecord> enumerate(const GroupConfig& cfg, int max_len,
                                         const EnumerationOptions& options) {
  std::vector<EnumerationRecord> out;
  enumerate(cfg, max_len, options, [&](const EnumerationRecord& r) { out.push_back(r); });
  return out;
}

std::vector<std::size_t> oracle_length_counts(const GroupConfig& cfg, int max_len) {
  if (max_len < 0) throw Error(ErrorKind::precondition, "max_len must be non-negative");
  std::map<AffinePermutation, Word> layer{{AffinePermutation::identity(cfg.n()), {}}};
  std::vector<std::size_t> counts{1};
  for (int len = 1; len <= max_len; ++len) {
    std::map<AffinePermutation, Word> next;
    for (const auto& [perm, word] : layer) {
      for (int s = 1; s <= cfg.n(); ++s) {
        AffinePermutation p = perm.times_generator(s);
        if (p.length() != len || next.count(p) != 0) continue;
        Word w = word;
        w.push_back(s);
        if (is_fully_commutative(cfg, w)) next.emplace(std::move(p), std::move(w));
      }
    }
    counts.push_back(next.size());
    layer = std::move(next);
  }
  return counts;
}

}  // namespace afftl
