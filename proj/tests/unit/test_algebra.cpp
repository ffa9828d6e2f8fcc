#include <doctest.h>

#include <algorithm>
#include <random>

#include "afftl/algebra.hpp"
#include "afftl/cells.hpp"
#include "afftl/checks.hpp"
#include "afftl/error.hpp"
#include "afftl/straighten.hpp"
#include "support.hpp"

using namespace afftl;

TEST_CASE("fc_evaluate") {
  GroupConfig four(4), five(5);
  Evaluation a = fc_evaluate(four, {1, 2, 1});
  CHECK(a.exponent == 0);
  CHECK(a.element.word == Word{1});
  Evaluation b = fc_evaluate(four, {1, 1});
  CHECK(b.exponent == 1);
  CHECK(b.element.word == Word{1});
  Evaluation c = fc_evaluate(five, {1, 3});
  CHECK(c.exponent == 0);
  CHECK(length(c.element.diagram) == 2);
  CHECK_THROWS_AS(fc_evaluate(four, {0}), Error);

  CHECK(is_reduced_fc_word(four, {2, 1, 3, 2}));
  CHECK_FALSE(is_reduced_fc_word(four, {1, 2, 1}));
  CHECK_FALSE(is_reduced_fc_word(four, {1, 1}));
}

TEST_CASE("mul") {
  GroupConfig four(4);
  AlgebraElement e1 = AlgebraElement::monomial(four, {1});
  AlgebraElement e2 = AlgebraElement::monomial(four, {2});
  AlgebraElement sq = e1 * e1;
  CHECK(sq == e1.scaled(LaurentPoly::delta()));

  AlgebraElement sum = (e1 + e2) * e1;
  AlgebraElement expected = e1.scaled(LaurentPoly::delta()) + AlgebraElement::monomial(four, {2, 1});
  CHECK(sum == expected);
  CHECK(sum.terms().size() == 2);

  AlgebraElement one = AlgebraElement::one(four);
  CHECK(one * sum == sum);
  CHECK(sum * one == sum);

  AlgebraElement zero = e1 + e1.scaled(-1);
  CHECK(zero.is_zero());
  CHECK((zero * e2).is_zero());

  AlgebraElement other = AlgebraElement::monomial(GroupConfig(5), {1});
  CHECK_THROWS_AS(mul(e1, other), Error);
  CHECK_THROWS_AS(e1 += other, Error);
}

TEST_CASE("monomials of non-reduced words carry powers of [2]") {
  GroupConfig four(4);
  AlgebraElement m = AlgebraElement::monomial(four, {1, 1, 1});
  BasisElement b = basis_element(AffineDiagram::generator(4, 1));
  CHECK(m.coeff(b) == LaurentPoly::delta_power(2));
}

TEST_CASE("rewrite_mul_basis") {
  GroupConfig four(4), five(5);
  RewriteResult a = rewrite_mul_basis(four, {1}, 1);
  CHECK(a.exponent == 1);
  CHECK(a.word == Word{1});
  RewriteResult b = rewrite_mul_basis(four, {1, 2}, 1);
  CHECK(b.exponent == 0);
  CHECK(b.word == Word{1});
  RewriteResult c = rewrite_mul_basis(five, {1, 3}, 2);
  CHECK(c.exponent == 0);
  CHECK(c.word == Word{1, 3, 2});
  CHECK_THROWS_AS(rewrite_mul_basis(four, {1, 2, 1}, 3), Error);
  CHECK_THROWS_AS(rewrite_mul_basis(four, {1}, 7), Error);

  RewriteResult d = rewrite_evaluate(four, {1, 2, 1, 1});
  CHECK(d.exponent == 1);
  CHECK(d.word == Word{1});
}

TEST_CASE("property: rewrite engine agrees with diagrams on random words") {
  std::mt19937_64 rng(21);
  for (int n = 3; n <= 6; ++n) {
    GroupConfig cfg(n);
    for (int k = 0; k < 300; ++k) {
      Word w = testing::random_word(rng, n, 9);
      RewriteResult r = rewrite_evaluate(cfg, w);
      Evaluation e = fc_evaluate(cfg, w);
      CHECK(r.exponent == e.exponent);
      CHECK(to_affine_permutation(cfg, r.word) == to_affine_permutation(cfg, e.element.word));
      CHECK(is_fully_commutative(cfg, r.word));
    }
  }
}

TEST_CASE("property: engine agreement on basis pairs") {
  for (int n = 3; n <= 5; ++n) {
    CheckContext ctx(GroupConfig(n), 4, 1);
    auto r = check_engine_agreement(ctx, 4);
    INFO(n, testing::first_failure(r));
    CHECK(r.passed);
  }
}

TEST_CASE("property: associativity and distributivity") {
  for (int n = 3; n <= 5; ++n) {
    CheckContext ctx(GroupConfig(n), 5, 77);
    auto r = check_algebra_laws(ctx, 150);
    INFO(n, testing::first_failure(r));
    CHECK(r.passed);
  }
}

TEST_CASE("property: products of basis elements are single powers of [2]") {
  GroupConfig cfg(5);
  const auto& recs = testing::records(5, 4);
  for (std::size_t i = 0; i < recs.size(); i += 3) {
    for (std::size_t j = 0; j < recs.size(); j += 5) {
      AlgebraElement p = AlgebraElement::basis(cfg, basis_element(recs[i].diagram)) *
                         AlgebraElement::basis(cfg, basis_element(recs[j].diagram));
      REQUIRE(p.terms().size() == 1);
      const LaurentPoly& c = p.terms().begin()->second.coeff;
      ProductResult r = multiply(recs[i].diagram, recs[j].diagram);
      CHECK(c == LaurentPoly::delta_power(r.contractible_loops));
    }
  }
}

TEST_CASE("property: products keep a factor equivalent to q") {
  std::mt19937_64 rng(4);
  for (int n = 4; n <= 5; ++n) {
    GroupConfig cfg(n);
    for (const Word& q : q_elements(cfg, n)) {
      const TwoSidedLabel lq = classify_q(cfg, q);
      const int room = std::max(0, 8 - static_cast<int>(q.size()));
      for (int k = 0; k < 40; ++k) {
        Word head = testing::random_word(rng, n, room / 2);
        Word tail = testing::random_word(rng, n, room - static_cast<int>(head.size()));

        // Some reduced expression of the product contains q' ~ q as a factor.
        const Word w = fc_evaluate(cfg, concat(concat(head, q), tail)).element.word;
        bool found = false;
        for (const Word& u : commutation_class(cfg, w)) {
          for (const Word& q2 : q_elements(cfg, static_cast<int>(u.size()))) {
            if (!(classify_q(cfg, q2) == lq)) continue;
            if (q2.empty() || std::search(u.begin(), u.end(), q2.begin(), q2.end()) != u.end()) found = true;
          }
          if (found) break;
        }
        CHECK(found);

        // Right multiplication only: w' = q x reduced and a does not drop.
        const Word right = fc_evaluate(cfg, concat(q, tail)).element.word;
        CHECK(word_length(cfg, concat(reversed(q), right)) ==
              static_cast<long>(right.size() - q.size()));
        CHECK(a_value(cfg, right) >= a_value(cfg, q));
      }
    }
  }
}
