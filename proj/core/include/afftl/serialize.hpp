#pragma once

// JSON forms of words, diagrams, algebra elements and cell data. Loaders
// throw Error(parse) for malformed input and validate what they load.

#include <nlohmann/json.hpp>

#include "afftl/algebra.hpp"
#include "afftl/cells.hpp"
#include "afftl/diagram.hpp"
#include "afftl/enumerate.hpp"
#include "afftl/laurent.hpp"
#include "afftl/straighten.hpp"

namespace afftl {

using Json = nlohmann::ordered_json;

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

// {"n":4,"top":[{"side":"T","pos":2},...],"bottom":[...],"loops":0}
Json diagram_to_json(const AffineDiagram& d);
RawDiagram raw_diagram_from_json(const Json& j);
// Throws Error(invalid_diagram) when the data fail validate().
AffineDiagram diagram_from_json(const Json& j);

// [{"exp":-1,"c":1},{"exp":1,"c":1}]
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"n":4,"terms":[{"coeff":[...],"word":[...]}]}. The loader evaluates each
// word, so a non-canonical or non-reduced word contributes its scalar too.
Json element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const Json& j);

Json label_to_json(const TwoSidedLabel& l);
TwoSidedLabel label_from_json(const Json& j);
Json labels_to_json(const CellLabels& l);
CellLabels labels_from_json(const Json& j);

Json census_row_to_json(const CensusRow& r);
Json involution_to_json(const InvolutionDecomposition& d);
// {"word":[...],"straight_core":[...]}
Json straighten_to_json(const StraightWord& s);

Json record_to_json(const EnumerationRecord& r);
EnumerationRecord record_from_json(const Json& j);

}  // namespace afftl
