#pragma once

#include <string>
#include <vector>

#include "selfsim/finitegpd.hpp"

namespace selfsim::cli {

struct SimilarityDemo {
  std::string name;
  std::string description;
  SimilarityData data;
};

// Built-in instances for both canonical similarities:
//   hg-trivial      Z/2 acting trivially on the pair groupoid on 2 points
//   hg-flip         Z/2 swapping the two points of the pair groupoid
//   hg-unit-space   pair(3) x Z/2 acting on its own unit space
//   rho-zero        Z/2 with the zero cocycle into Z/2
//   rho-identity    Z/2 with the identity cocycle
//   rho-projection  pair(3) x Z/2 projected onto Z/2
std::vector<std::string> demo_names();
// Throws UnknownIdentifier.
SimilarityDemo make_demo(const std::string& name);
// Multiplies theta1 at the first unit where it is possible by a non-unit
// isotropy element. Returns false when no such element exists.
bool corrupt_theta(SimilarityData& s);

}  // namespace selfsim::cli
