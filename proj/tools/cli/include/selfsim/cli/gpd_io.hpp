#pragma once

#include <string>

#include "selfsim/finitegpd.hpp"

namespace selfsim::cli {

// Plain-text finite groupoid:
//
//   # pair groupoid on two points
//   elements: (1,1) (1,2) (2,1) (2,2)
//   units: (1,1) (2,2)
//   d: (1,1) (2,2) (1,1) (2,2)
//   t: (1,1) (1,1) (2,2) (2,2)
//   product (1,2) (2,1) = (1,1)
//   ...
//
// d and t list one unit per element, in element order. Every pair g h with
// d(g) = t(h) needs a product line. Names are whitespace-free tokens.
// Throws ParseError, DuplicateIdentifier, UnknownIdentifier, InvalidGroupoid.
FiniteGroupoid parse_gpd(const std::string& text);
FiniteGroupoid load_gpd(const std::string& path);
std::string emit_gpd(const FiniteGroupoid& G);

}  // namespace selfsim::cli
