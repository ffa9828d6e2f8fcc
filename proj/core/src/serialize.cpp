#include "afftl/serialize.hpp"

#include "afftl/error.hpp"

namespace afftl {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::parse, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::parse, std::string(what) + " must be an integer");
  return j.get<int>();
}

Json arcs_to_json(const ArcPattern& arcs) {
  Json out = Json::array();
  for (auto [p, q] : arcs) out.push_back({p, q});
  return out;
}

ArcPattern arcs_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "arc pattern must be an array");
  ArcPattern out;
  for (const Json& a : j) {
    if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::parse, "arc must be [p,q]");
    out.emplace_back(as_int(a[0], "arc end"), as_int(a[1], "arc end"));
  }
  return out;
}

Json row_to_json(const std::vector<NodeRef>& row) {
  Json out = Json::array();
  for (const NodeRef& x : row) {
    out.push_back({{"side", x.side == Side::top ? "T" : "B"}, {"pos", x.pos}});
  }
  return out;
}

std::vector<NodeRef> row_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "diagram row must be an array");
  std::vector<NodeRef> out;
  for (const Json& e : j) {
    const Json& side = field(e, "side");
    if (side != "T" && side != "B") throw Error(ErrorKind::parse, "side must be \"T\" or \"B\"");
    out.push_back({side == "T" ? Side::top : Side::bottom, as_int(field(e, "pos"), "pos")});
  }
  return out;
}

}  // namespace

Json word_to_json(const Word& w) { return Json(w); }

Word word_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "word must be an array of integers");
  Word w;
  for (const Json& x : j) w.push_back(as_int(x, "word letter"));
  return w;
}

Json diagram_to_json(const AffineDiagram& d) {
  return {{"n", d.n()},
          {"top", row_to_json(d.raw().top)},
          {"bottom", row_to_json(d.raw().bottom)},
          {"loops", d.loops()}};
}

RawDiagram raw_diagram_from_json(const Json& j) {
  return {as_int(field(j, "n"), "n"), row_from_json(field(j, "top")),
          row_from_json(field(j, "bottom")), as_int(field(j, "loops"), "loops")};
}

AffineDiagram diagram_from_json(const Json& j) {
  return AffineDiagram::from_raw(raw_diagram_from_json(j));
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (auto [e, c] : p.terms()) out.push_back({{"exp", e}, {"c", c}});
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "coefficient must be an array of terms");
  LaurentPoly p;
  for (const Json& t : j) {
    const Json& c = field(t, "c");
    if (!c.is_number_integer()) throw Error(ErrorKind::parse, "c must be an integer");
    p += LaurentPoly::monomial(as_int(field(t, "exp"), "exp"), c.get<LaurentPoly::Coeff>());
  }
  return p;
}

Json element_to_json(const AlgebraElement& e) {
  Json terms = Json::array();
  for (const auto& [key, t] : e.terms()) {
    terms.push_back({{"coeff", laurent_to_json(t.coeff)}, {"word", word_to_json(t.basis.word)}});
  }
  return {{"n", e.n()}, {"terms", terms}};
}

AlgebraElement element_from_json(const Json& j) {
  GroupConfig cfg(as_int(field(j, "n"), "n"));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw Error(ErrorKind::parse, "terms must be an array");
  AlgebraElement e(cfg);
  for (const Json& t : terms) {
    LaurentPoly c = laurent_from_json(field(t, "coeff"));
    Word w = word_from_json(field(t, "word"));
    cfg.check_word(w);
    Evaluation ev = fc_evaluate(cfg, w);
    e.add(ev.element, c * LaurentPoly::delta_power(ev.exponent));
  }
  return e;
}

Json label_to_json(const TwoSidedLabel& l) {
  if (l.kind == TwoSidedLabel::Kind::small) {
    return {{"kind", "small"}, {"k", l.k}, {"text", l.to_string()}};
  }
  return {{"kind", "m_elem"},
          {"start", l.start == MStart::m1 ? "M1" : "M2"},
          {"factors", l.factors},
          {"text", l.to_string()}};
}

TwoSidedLabel label_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "small") return TwoSidedLabel::small(as_int(field(j, "k"), "k"));
  if (kind == "m_elem") {
    const Json& start = field(j, "start");
    if (start != "M1" && start != "M2") throw Error(ErrorKind::parse, "start must be M1 or M2");
    return TwoSidedLabel::m_elem(start == "M1" ? MStart::m1 : MStart::m2,
                                 as_int(field(j, "factors"), "factors"));
  }
  throw Error(ErrorKind::parse, "unknown label kind");
}

Json labels_to_json(const CellLabels& l) {
  return {{"two_sided", label_to_json(l.two_sided)},
          {"left", arcs_to_json(l.left_pattern)},
          {"right", arcs_to_json(l.right_pattern)},
          {"loops", l.loops}};
}

CellLabels labels_from_json(const Json& j) {
  return {label_from_json(field(j, "two_sided")), arcs_from_json(field(j, "left")),
          arcs_from_json(field(j, "right")), as_int(field(j, "loops"), "loops")};
}

Json census_row_to_json(const CensusRow& r) {
  return {{"two_sided", label_to_json(r.two_sided)},
          {"left_cells", r.left_cells},
          {"right_cells", r.right_cells},
          {"elements_seen", r.elements_seen}};
}

Json involution_to_json(const InvolutionDecomposition& d) {
  return {{"x", word_to_json(d.x)}, {"T", word_to_json(iota(d.t))}};
}

Json straighten_to_json(const StraightWord& s) {
  return {{"word", word_to_json(s.word)}, {"straight_core", word_to_json(iota(s.core))}};
}

Json record_to_json(const EnumerationRecord& r) {
  Json j = {{"word", word_to_json(r.word)},
            {"key", r.key},
            {"length", r.length},
            {"is_involution", r.is_involution},
            {"diagram", diagram_to_json(r.diagram)}};
  if (r.labels) j["labels"] = labels_to_json(*r.labels);
  return j;
}

EnumerationRecord record_from_json(const Json& j) {
  const Json& inv = field(j, "is_involution");
  const Json& key = field(j, "key");
  if (!inv.is_boolean() || !key.is_string()) throw Error(ErrorKind::parse, "bad record fields");
  EnumerationRecord r{word_from_json(field(j, "word")), key.get<std::string>(),
                      diagram_from_json(field(j, "diagram")), as_int(field(j, "length"), "length"),
                      inv.get<bool>(), std::nullopt};
  if (canonical_key(r.diagram) != r.key) throw Error(ErrorKind::parse, "key does not match diagram");
  if (j.contains("labels")) r.labels = labels_from_json(j.at("labels"));
  return r;
}

}  // namespace afftl
