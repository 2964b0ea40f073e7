#pragma once

// Torus surgery descriptors and their normal forms, gluing matrices, and the
// mod-2 Rokhlin quadratic form on framed tori.

#include <cstdint>
#include <optional>
#include <string>

#include "tsurg/intlat.hpp"
#include "tsurg/presentation.hpp"

namespace tsurg {

// Surgery data (p, a, b): the surgery curve represents p[m] + a[alpha] +
// b[beta] in the boundary 3-torus, relative to the canonical framing.
// p is the multiplicity of the surgery.
struct SurgeryDescriptor {
  std::int64_t p = 1;
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const SurgeryDescriptor& other) const = default;
};

// The curve class is primitive iff gcd(p, a, b) = 1; only primitive classes
// are realized by gluing diffeomorphisms.
bool is_primitive(const SurgeryDescriptor& d);
void require_primitive(const SurgeryDescriptor& d);  // throws NonPrimitiveCurve

// Primitive direction class, sign-normalized: a > 0, or a = 0 and b > 0.
struct Direction {
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const Direction& other) const = default;
};

struct NormalizedSurgery {
  std::int64_t multiplicity = 0;
  std::int64_t auxiliary = 0;          // gcd(|a|, |b|) >= 0; coprime to p
  std::optional<Direction> direction;  // present iff auxiliary > 0

  bool operator==(const NormalizedSurgery& other) const = default;
};

// Multiplicity / auxiliary multiplicity / direction normal form of a
// descriptor; this data determines the diffeomorphism type of the surgery.
NormalizedSurgery normalize(const SurgeryDescriptor& d);

// The trivial surgery (1, 0, 0) returns the pair (S^4, T) unchanged.
bool is_trivial_surgery(const SurgeryDescriptor& d);

// Integral surgeries (auxiliary multiplicity <= 1) are the ones realized by
// round 2-handles.
bool is_integral(const SurgeryDescriptor& d);

// A 3x3 unimodular gluing matrix whose last column is (a, b, p).
IntMatrix gluing_matrix(const SurgeryDescriptor& d);

// The normal form [[1,0,0],[0,c,q],[0,d,p]] with c*p - d*q = 1, where (c, d)
// is fixed by 0 <= d < |p| for p != 0 and by c = 0 for p = 0.
IntMatrix normal_form_gluing(std::int64_t p, std::int64_t q);

// Exterior fundamental-group data: a presentation together with words for
// the meridian and for the canonical-framing pushoffs of alpha and beta.
struct ExteriorPresentation {
  GroupPresentation group;
  Word meridian;
  Word alpha;
  Word beta;

  bool operator==(const ExteriorPresentation& other) const = default;
};

// A torus embedding with its mod-2 quadratic-form profile. The profile is
// carried as given data; (q_alpha, q_beta) = (1, 1) never occurs for tori in
// the 4-sphere and is rejected.
struct FramedTorus {
  std::string label;
  int q_alpha = 0;
  int q_beta = 0;
  std::optional<ExteriorPresentation> exterior;

  // The unknotted torus: exterior group Z generated by the meridian, with
  // both pushoffs nullhomotopic and a spin-embedded profile.
  static FramedTorus unknotted();

  // Spun and twisted spun tori of a knot K. The exterior group is the knot
  // group; alpha is the (nullhomologous) knot longitude and beta, the spin
  // circle, bounds a disk in the exterior, so its word is empty.
  static FramedTorus spun(const std::string& knot, GroupPresentation knot_group,
                          Word meridian, Word longitude);
  static FramedTorus twisted_spun(const std::string& knot, GroupPresentation knot_group,
                                  Word meridian, Word longitude);
};

// Validating constructor shared by the presets and the CLI.
FramedTorus make_framed_torus(std::string label, int q_alpha, int q_beta,
                              std::optional<ExteriorPresentation> exterior);

// Rokhlin quadratic form evaluated on a*alpha + b*beta:
// a^2 q(alpha) + b^2 q(beta) + a*b (mod 2).
int rokhlin_q(const FramedTorus& t, std::int64_t a, std::int64_t b);

// Exactly one of q(alpha), q(beta), q(alpha + beta) equals 1 for a torus in
// the 4-sphere (the Arf invariant vanishes); (1, 1) is the profile this
// rules out.
bool validate_q_profile(int q_alpha, int q_beta);

// A unimodular change of basis B with (alpha', beta') = B (alpha, beta) and
// q(alpha') = q(beta') = 0. Throws InvalidProfile for (1, 1).
IntMatrix spin_normalize_basis(int q_alpha, int q_beta);

}  // namespace tsurg
