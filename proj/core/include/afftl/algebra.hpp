#pragma once

// Exact arithmetic in the affine Temperley-Lieb algebra over Z[v, v^-1],
// in the monomial basis E_w (w fully commutative). Products go through the
// diagram engine; rewrite_mul_basis is a second, word-level engine built only
// from the defining relations and Property R.

#include <map>
#include <string>

#include "afftl/coxeter_words.hpp"
#include "afftl/diagram.hpp"
#include "afftl/laurent.hpp"

namespace afftl {

// E_w, keyed by its diagram. `word` is the straightened canonical word.
struct BasisElement {
  AffineDiagram diagram;
  Word word;
  std::string key;

  friend bool operator==(const BasisElement& a, const BasisElement& b) {
    return a.key == b.key;
  }
};

// Throws Error(inadmissible).
BasisElement basis_element(const AffineDiagram& d);

struct Evaluation {
  int exponent;  // E_{w_1} ... E_{w_k} = [2]^exponent E_w
  BasisElement element;
};

Evaluation fc_evaluate(const GroupConfig& cfg, const Word& word);

// True iff `word` is a reduced expression of a fully commutative element,
// decided by the diagram engine.
bool is_reduced_fc_word(const GroupConfig& cfg, const Word& word);

class AlgebraElement {
 public:
  struct Term {
    BasisElement basis;
    LaurentPoly coeff;
  };

  explicit AlgebraElement(const GroupConfig& cfg) : cfg_(cfg) {}

  static AlgebraElement one(const GroupConfig& cfg);
  static AlgebraElement basis(const GroupConfig& cfg, const BasisElement& b,
                              const LaurentPoly& coeff = 1);
  // The monomial E_{w_1} ... E_{w_k} for an arbitrary word.
  static AlgebraElement monomial(const GroupConfig& cfg, const Word& w);

  const GroupConfig& config() const noexcept { return cfg_; }
  int n() const noexcept { return cfg_.n(); }
  const std::map<std::string, Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  LaurentPoly coeff(const BasisElement& b) const;

  void add(const BasisElement& b, const LaurentPoly& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement scaled(const LaurentPoly& c) const;

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

 private:
  GroupConfig cfg_;
  std::map<std::string, Term> terms_;  // no zero coefficients
};

// Bilinear extension of diagram multiplication. Throws
// Error(mismatched_rank).
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

struct RewriteResult {
  int exponent;
  Word word;  // reduced FC word of the resulting basis element
};

// E_w E_s from the relations alone:
//   l(ws) < l(w)        -> [2] E_w
//   ws reduced and FC   -> E_{ws}
//   otherwise           -> w = w1 s t w2 by Property R and
//                          E_w E_s = E_{w1} E_s E_{w2}, evaluated recursively.
// Lengths come from the affine permutation model, never from diagrams.
RewriteResult rewrite_mul_basis(const GroupConfig& cfg, const Word& w, int s);

// Folds rewrite_mul_basis over an arbitrary word, starting from E_1.
RewriteResult rewrite_evaluate(const GroupConfig& cfg, const Word& letters);

}  // namespace afftl
