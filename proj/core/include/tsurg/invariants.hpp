#pragma once

// Homology and spin invariants of torus surgery results, fundamental-group
// presentations of surgeries, abelianization, and presentation deficiency.

#include <array>
#include <cstdint>

#include "tsurg/intlat.hpp"
#include "tsurg/presentation.hpp"
#include "tsurg/surgery.hpp"

namespace tsurg {

// Homology of a closed connected orientable 4-manifold. Valid tables have
// H0 = H4 = Z, H3 torsion-free with rank b1, and torsion(H2) = torsion(H1).
struct ClosedFourManifoldHomology {
  AbelianGroup h0;
  AbelianGroup h1;
  AbelianGroup h2;
  AbelianGroup h3;
  AbelianGroup h4;

  bool operator==(const ClosedFourManifoldHomology& other) const = default;
};

std::int64_t euler_characteristic(const ClosedFourManifoldHomology& h);
bool satisfies_closed_duality(const ClosedFourManifoldHomology& h);

// H_n of a torus exterior in the 4-sphere, indexed 0..4: [Z, Z, Z^2, 0, 0].
// H1 is generated by a meridian and H2 by the two rim tori.
std::array<AbelianGroup, 5> exterior_homology();

// Homology of the surgered 4-sphere: for p != 0 the table
// [Z, Z_|p|, Z_|p|, 0, Z], and for p = 0 the homology of
// S^1 x S^3 # S^2 x S^2, namely [Z, Z, Z^2, Z, Z].
ClosedFourManifoldHomology surgery_homology(const SurgeryDescriptor& d);

// Rebuild a full table from H1 and the Euler characteristic using Poincare
// duality: b2 = chi - 2 + 2 b1. Throws InfeasibleBettiNumbers if b2 < 0.
ClosedFourManifoldHomology homology_from_h1_and_chi(const AbelianGroup& h1,
                                                    std::int64_t chi);

// Spin criterion: odd multiplicity always yields a spin manifold; for even
// multiplicity the result is spin iff the quadratic form vanishes on the
// surgery direction, which for a spin-embedded torus means ab = 0 (mod 2).
bool is_spin(const FramedTorus& t, const SurgeryDescriptor& d);

// Fundamental group of the surgery: the exterior presentation extended by
// one relator m^p alpha^a beta^b for the attaching circle of the 2-handle.
// Requires exterior data (MissingPresentation otherwise).
GroupPresentation pi1_of_surgery(const FramedTorus& t, const SurgeryDescriptor& d);

// Cokernel of the relator exponent-sum matrix.
AbelianGroup abelianization(const GroupPresentation& g);

// Generators minus relators, for this presentation (not the group maximum).
std::int64_t deficiency(const GroupPresentation& g);

}  // namespace tsurg
