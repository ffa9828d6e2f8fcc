#pragma once

#include "afftl/diagram.hpp"

namespace afftl {

// Library-internal construction that skips validate(); callers guarantee
// validity (checked by the test suites).
struct DiagramBuilder {
  static AffineDiagram make(RawDiagram raw) { return AffineDiagram(std::move(raw)); }
};

NodeRef raw_partner(const RawDiagram& d, NodeRef x) noexcept;

}  // namespace afftl
