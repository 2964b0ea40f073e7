#pragma once

// Dehn surgery homology via linking-matrix presentations, homology-sphere
// detection, embedding targets for surgered 3-manifolds, ribbon/slice 1/n
// embedding certificates, the spin construction translating Dehn data to
// torus-surgery data, and the round-handle surgery planner for finitely
// presented groups.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsurg/intlat.hpp"
#include "tsurg/invariants.hpp"
#include "tsurg/presentation.hpp"
#include "tsurg/surgery.hpp"
#include "tsurg/unknotted.hpp"

namespace tsurg {

// One p/q surgery coefficient; (1, 0) is the trivial filling, (0, 0) is not
// a filling at all.
struct DehnCoefficient {
  std::int64_t p = 1;
  std::int64_t q = 0;

  bool operator==(const DehnCoefficient& other) const = default;
};

// Dehn surgery data for an n-component link: pairwise linking numbers in a
// symmetric zero-diagonal matrix and one coefficient per component.
struct DehnSurgeryLink {
  std::size_t components = 0;
  IntMatrix linking;
  std::vector<DehnCoefficient> coefficients;

  bool operator==(const DehnSurgeryLink& other) const = default;
};

void validate_link(const DehnSurgeryLink& l);  // throws InvalidLink

DehnSurgeryLink make_link(std::initializer_list<std::initializer_list<long>> linking,
                          std::initializer_list<DehnCoefficient> coefficients);

// Presentation matrix of H1 of the surgered 3-manifold: row i is
// p_i mu_i + q_i sum_j lk(i, j) mu_j.
IntMatrix dehn_presentation_matrix(const DehnSurgeryLink& l);

AbelianGroup dehn_h1(const DehnSurgeryLink& l);

// True iff H1 vanishes, equivalently |det| = 1 for the presentation matrix.
bool is_integral_homology_sphere(const DehnSurgeryLink& l);

// The 4-manifolds a surgered 3-manifold is certified to embed in, with the
// hypotheses that were actually checked.
struct EmbeddingCertificate {
  ManifoldName target = ManifoldName::Unclassified;
  std::optional<ManifoldName> punctured_target;
  std::vector<std::string> hypotheses;

  bool operator==(const EmbeddingCertificate& other) const = default;
};

// p/q surgery on a knot embeds in S^1 x S^3 # S^2 x S^2 for pq even and in
// the twisted bundle sum for pq odd; puncturing removes the S^1 x S^3
// summand. Requires gcd(p, q) = 1 (which excludes (0, 0)).
EmbeddingCertificate embedding_target(std::int64_t p, std::int64_t q);

enum class LinkKind { Ribbon, Slice };

// Surgery with coefficients 1/n on a ribbon link embeds in S^4. For a slice
// link the target is a homotopy 4-sphere, or S^4 again if every coefficient
// is 1/(2n). Coefficients must have p = 1 and the linking matrix must vanish
// (a necessary condition for ribbon/slice links).
EmbeddingCertificate ribbon_embedding_certificate(const DehnSurgeryLink& l,
                                                  LinkKind kind);

// Torus surgery data for spin(M): component i of the link maps to the
// descriptor (p_i, q_i, 0) in the basis (alpha = longitude direction,
// beta = spin circle), since the gluing maps are S^1 times the Dehn maps.
std::vector<SurgeryDescriptor> spin_construction_plan(const DehnSurgeryLink& l);

// A surgery plan on a link of tori realizing a group: one torus per
// generator, words for the attaching circles, and integral descriptors.
struct SurgeryPlan {
  std::size_t torus_count = 0;
  std::vector<Word> relator_words;
  std::vector<SurgeryDescriptor> descriptors;
  std::string narrative;

  bool operator==(const SurgeryPlan& other) const = default;
};

// Realize a finitely presented group of deficiency >= 0 as the fundamental
// group of an integral surgery on a link of tori: m round 2-handles, with
// the n relator curves and m - n nullhomotopic curves as attaching circles.
// Throws NegativeDeficiency if the presentation has more relators than
// generators.
SurgeryPlan torus_link_plan_from_group(const GroupPresentation& g);

}  // namespace tsurg
