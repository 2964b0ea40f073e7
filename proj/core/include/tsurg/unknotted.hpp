#pragma once

// Classification of surgeries on the unknotted torus and on twisted spun
// tori, the even-matrix direction reduction, and the Montesinos extension
// test for gluing maps over the standard twin.

#include <cstdint>
#include <string_view>

#include "tsurg/intlat.hpp"
#include "tsurg/surgery.hpp"

namespace tsurg {

enum class ManifoldName {
  S4,
  S1xS3ConnSumS2xS2,
  S1xS3ConnSumS2xTwistS2,
  HomotopyS4,
  S2xS2,
  S2xTwistS2,
  Unclassified,
};

// Stable snake_case tag used in serialized output.
std::string_view manifold_tag(ManifoldName name) noexcept;

// A 2x2 unimodular matrix with even entry sum taking the designated vector
// to (a, b): the designated vector is (1, 1) when ab is odd and (1, 0) when
// ab is even. Requires gcd(a, b) = 1.
IntMatrix even_matrix_for_direction(std::int64_t a, std::int64_t b);

// Gluing maps with third row (0, 0, 1) whose upper-left 2x2 block has even
// entry sum extend over the exterior of the unknotted torus. Requires a 3x3
// unimodular matrix (NotUnimodular otherwise).
bool montesinos_extends(const IntMatrix& m);

// Surgery on the unknotted torus: multiplicity +-1 gives S^4; multiplicity 0
// gives S^1 x S^3 # S^2 x S^2 for ab even and the twisted bundle sum for ab
// odd. Higher multiplicities are not classified here.
ManifoldName classify_unknotted_surgery(const SurgeryDescriptor& d);

// Surgery on a twisted spun torus: every (1, 0, b) surgery gives S^4, for
// every knot. Anything else is left unclassified.
ManifoldName classify_twisted_spun_surgery(const SurgeryDescriptor& d);

}  // namespace tsurg
