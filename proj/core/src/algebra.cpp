#include "afftl/algebra.hpp"

#include <stdexcept>

#include "afftl/error.hpp"
#include "afftl/straighten.hpp"

namespace afftl {

BasisElement basis_element(const AffineDiagram& d) {
  StraightWord sw = straighten(d);
  return {d, std::move(sw.word), canonical_key(d)};
}

Evaluation fc_evaluate(const GroupConfig& cfg, const Word& word) {
  ProductResult r = stack(cfg, word);
  return {r.contractible_loops, basis_element(r.diagram)};
}

bool is_reduced_fc_word(const GroupConfig& cfg, const Word& word) {
  ProductResult r = stack(cfg, word);
  return r.contractible_loops == 0 &&
         length(r.diagram) == static_cast<int>(word.size());
}

AlgebraElement AlgebraElement::one(const GroupConfig& cfg) {
  return basis(cfg, basis_element(AffineDiagram::identity(cfg.n())));
}

AlgebraElement AlgebraElement::basis(const GroupConfig& cfg,
                                     const BasisElement& b,
                                     const LaurentPoly& coeff) {
  AlgebraElement e(cfg);
  e.add(b, coeff);
  return e;
}

AlgebraElement AlgebraElement::monomial(const GroupConfig& cfg, const Word& w) {
  Evaluation ev = fc_evaluate(cfg, w);
  return basis(cfg, ev.element, LaurentPoly::delta_power(ev.exponent));
}

LaurentPoly AlgebraElement::coeff(const BasisElement& b) const {
  auto it = terms_.find(b.key);
  return it == terms_.end() ? LaurentPoly{} : it->second.coeff;
}

void AlgebraElement::add(const BasisElement& b, const LaurentPoly& c) {
  if (b.diagram.n() != cfg_.n()) {
    throw Error(ErrorKind::mismatched_rank, "basis element has the wrong n");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b.key, Term{b, c});
  if (!inserted) {
    it->second.coeff += c;
    if (it->second.coeff.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.n() != n()) throw Error(ErrorKind::mismatched_rank, "adding elements with different n");
  for (const auto& [key, t] : o.terms_) add(t.basis, t.coeff);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const LaurentPoly& c) const {
  AlgebraElement r(cfg_);
  for (const auto& [key, t] : terms_) r.add(t.basis, t.coeff * c);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n() || a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [key, t] : a.terms_) {
    auto it = b.terms_.find(key);
    if (it == b.terms_.end() || !(it->second.coeff == t.coeff)) return false;
  }
  return true;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.n() != b.n()) {
    throw Error(ErrorKind::mismatched_rank, "multiplying elements with different n");
  }
  AlgebraElement out(a.config());
  for (const auto& [ka, ta] : a.terms()) {
    for (const auto& [kb, tb] : b.terms()) {
      ProductResult r = multiply(ta.basis.diagram, tb.basis.diagram);
      if (!is_admissible(r.diagram)) {
        throw std::logic_error("product of basis diagrams is not admissible");
      }
      LaurentPoly c = ta.coeff * tb.coeff * LaurentPoly::delta_power(r.contractible_loops);
      out.add(basis_element(r.diagram), c);
    }
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return mul(a, b);
}

RewriteResult rewrite_mul_basis(const GroupConfig& cfg, const Word& w, int s) {
  cfg.check_generator(s);
  if (!is_fully_commutative(cfg, w)) {
    throw Error(ErrorKind::precondition, "rewrite_mul_basis needs a reduced FC word");
  }
  Word ws = w;
  ws.push_back(s);
  if (word_length(cfg, ws) < static_cast<long>(w.size())) return {1, w};
  if (is_fully_commutative(cfg, ws)) return {0, ws};
  PropertyRWitness pr = property_r_witness(cfg, w, s);
  Word shorter = pr.w1;
  shorter.push_back(s);
  shorter.insert(shorter.end(), pr.w2.begin(), pr.w2.end());
  return rewrite_evaluate(cfg, shorter);
}

RewriteResult rewrite_evaluate(const GroupConfig& cfg, const Word& letters) {
  cfg.check_word(letters);
  RewriteResult acc{0, {}};
  for (int s : letters) {
    RewriteResult r = rewrite_mul_basis(cfg, acc.word, s);
    acc.exponent += r.exponent;
    acc.word = std::move(r.word);
  }
  return acc;
}

}  // namespace afftl
