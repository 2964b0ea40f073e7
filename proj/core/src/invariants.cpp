#include "tsurg/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace tsurg {

std::int64_t euler_characteristic(const ClosedFourManifoldHomology& h) {
  const auto b = [](const AbelianGroup& g) {
    return static_cast<std::int64_t>(g.free_rank());
  };
  return b(h.h0) - b(h.h1) + b(h.h2) - b(h.h3) + b(h.h4);
}

bool satisfies_closed_duality(const ClosedFourManifoldHomology& h) {
  const AbelianGroup z = AbelianGroup::free_of_rank(1);
  return h.h0 == z && h.h4 == z && h.h3.is_torsion_free() &&
         h.h3.free_rank() == h.h1.free_rank() &&
         h.h2.invariant_factors() == h.h1.invariant_factors();
}

std::array<AbelianGroup, 5> exterior_homology() {
  return {AbelianGroup::free_of_rank(1), AbelianGroup::free_of_rank(1),
          AbelianGroup::free_of_rank(2), AbelianGroup(), AbelianGroup()};
}

ClosedFourManifoldHomology surgery_homology(const SurgeryDescriptor& d) {
  require_primitive(d);
  ClosedFourManifoldHomology h;
  h.h0 = AbelianGroup::free_of_rank(1);
  h.h4 = AbelianGroup::free_of_rank(1);
  if (d.p == 0) {
    h.h1 = AbelianGroup::free_of_rank(1);
    h.h2 = AbelianGroup::free_of_rank(2);
    h.h3 = AbelianGroup::free_of_rank(1);
  } else {
    const AbelianGroup zp = AbelianGroup::cyclic(Int(d.p));
    h.h1 = zp;
    h.h2 = zp;
    h.h3 = AbelianGroup();
  }
  return h;
}

ClosedFourManifoldHomology homology_from_h1_and_chi(const AbelianGroup& h1,
                                                    std::int64_t chi) {
  const std::int64_t b1 = static_cast<std::int64_t>(h1.free_rank());
  const std::int64_t b2 = chi - 2 + 2 * b1;
  if (b2 < 0) {
    std::ostringstream os;
    os << "chi = " << chi << " with b1 = " << b1 << " would force b2 = " << b2;
    raise(ErrorCode::InfeasibleBettiNumbers, os.str());
  }
  ClosedFourManifoldHomology h;
  h.h0 = AbelianGroup::free_of_rank(1);
  h.h1 = h1;
  h.h2 = AbelianGroup(static_cast<std::size_t>(b2), h1.invariant_factors());
  h.h3 = AbelianGroup::free_of_rank(static_cast<std::size_t>(b1));
  h.h4 = AbelianGroup::free_of_rank(1);
  return h;
}

bool is_spin(const FramedTorus& t, const SurgeryDescriptor& d) {
  if (!validate_q_profile(t.q_alpha, t.q_beta))
    raise(ErrorCode::InvalidProfile,
          "profile (1, 1) is impossible for a torus in the 4-sphere");
  if (d.p & 1) return true;  // unique spin structure for odd multiplicity
  return rokhlin_q(t, d.a, d.b) == 0;
}

GroupPresentation pi1_of_surgery(const FramedTorus& t, const SurgeryDescriptor& d) {
  require_primitive(d);
  if (!t.exterior)
    raise(ErrorCode::MissingPresentation,
          "torus \"" + t.label + "\" carries no exterior presentation");
  const ExteriorPresentation& ext = *t.exterior;
  GroupPresentation g = ext.group;
  // The attaching circle of the 2-handle, in the normalized ordering.
  Word relator = word_power(ext.meridian, d.p);
  Word alpha_part = word_power(ext.alpha, d.a);
  Word beta_part = word_power(ext.beta, d.b);
  relator.insert(relator.end(), alpha_part.begin(), alpha_part.end());
  relator.insert(relator.end(), beta_part.begin(), beta_part.end());
  g.relators.push_back(std::move(relator));
  return g;
}

AbelianGroup abelianization(const GroupPresentation& g) {
  if (!well_formed(g))
    throw std::invalid_argument("relator references an unknown generator");
  IntMatrix m(g.relators.size(), g.generators.size());
  for (std::size_t r = 0; r < g.relators.size(); ++r)
    for (std::int32_t letter : g.relators[r]) {
      const std::size_t j = static_cast<std::size_t>(letter < 0 ? -letter : letter) - 1;
      m(r, j) += letter < 0 ? -1 : 1;
    }
  return abelian_group_from_presentation_matrix(m, g.generators.size());
}

std::int64_t deficiency(const GroupPresentation& g) {
  return static_cast<std::int64_t>(g.generators.size()) -
         static_cast<std::int64_t>(g.relators.size());
}

}  // namespace tsurg
