#include <doctest.h>

#include <cstdlib>

#include "afftl/enumerate.hpp"
#include "afftl/error.hpp"

using namespace afftl;

namespace {

std::vector<std::size_t> layer_counts(const std::vector<EnumerationRecord>& recs, int max_len) {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_len) + 1, 0);
  for (const auto& r : recs) ++out[static_cast<std::size_t>(r.length)];
  return out;
}

}  // namespace

TEST_CASE("small enumerations") {
  auto recs = enumerate(GroupConfig(3), 1);
  REQUIRE(recs.size() == 4);
  CHECK(recs[0].word.empty());
  CHECK(recs[0].is_involution);
  for (std::size_t i = 1; i < 4; ++i) CHECK(recs[i].length == 1);

  CHECK(layer_counts(enumerate(GroupConfig(4), 2), 2) == std::vector<std::size_t>{1, 4, 10});
}

TEST_CASE("enumeration matches the permutation count") {
  for (int n = 3; n <= 5; ++n) {
    GroupConfig cfg(n);
    const int max_len = 8;
    CHECK(layer_counts(enumerate(cfg, max_len), max_len) == oracle_length_counts(cfg, max_len));
  }
  CHECK(oracle_length_counts(GroupConfig(4), 6) == std::vector<std::size_t>{1, 4, 10, 16, 18, 16, 18});
  CHECK(oracle_length_counts(GroupConfig(3), 5) == std::vector<std::size_t>{1, 3, 6, 6, 6, 6});
}

TEST_CASE("records are keyed consistently") {
  GroupConfig cfg(5);
  for (const auto& r : enumerate(cfg, 6)) {
    CHECK(canonical_key(r.diagram) == r.key);
    CHECK(length(r.diagram) == r.length);
    CHECK(static_cast<int>(r.word.size()) == r.length);
    CHECK(r.is_involution == to_affine_permutation(cfg, r.word).is_involution());
    CHECK_FALSE(r.labels.has_value());
  }
}

TEST_CASE("worker count does not change the output") {
  GroupConfig cfg(5);
  EnumerationOptions one, four;
  one.with_labels = four.with_labels = true;
  four.workers = 4;
  auto a = enumerate(cfg, 8, one);
  auto b = enumerate(cfg, 8, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].key == b[i].key);
    CHECK(a[i].word == b[i].word);
    CHECK(a[i].labels == b[i].labels);
  }
}

TEST_CASE("streaming matches the batch form") {
  GroupConfig cfg(4);
  std::vector<std::string> keys;
  enumerate(cfg, 7, {}, [&](const EnumerationRecord& r) { keys.push_back(r.key); });
  auto batch = enumerate(cfg, 7);
  REQUIRE(keys.size() == batch.size());
  for (std::size_t i = 0; i < keys.size(); ++i) CHECK(keys[i] == batch[i].key);
}

TEST_CASE("element cap") {
  EnumerationOptions opts;
  opts.max_elements = 10;
  CHECK_THROWS_AS(enumerate(GroupConfig(4), 3, opts), Error);
  try {
    enumerate(GroupConfig(4), 3, opts);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bound_exceeded);
  }
  opts.max_elements = 15;
  CHECK(enumerate(GroupConfig(4), 2, opts).size() == 15);

  ::setenv("AFFTL_MAX_ELEMENTS", "7", 1);
  CHECK(default_element_cap() == 7);
  ::setenv("AFFTL_MAX_ELEMENTS", "junk", 1);
  CHECK(default_element_cap() == 10000000);
  ::unsetenv("AFFTL_MAX_ELEMENTS");
  CHECK(default_element_cap() == 10000000);
}
