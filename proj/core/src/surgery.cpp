#include "tsurg/surgery.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace tsurg {

namespace {

Int gcd3(std::int64_t x, std::int64_t y, std::int64_t z) {
  Int g = gcd(Int(x), Int(y));
  return gcd(g, Int(z));
}

int bit(std::int64_t x) { return static_cast<int>(x & 1); }

}  // namespace

bool is_primitive(const SurgeryDescriptor& d) { return gcd3(d.p, d.a, d.b) == 1; }

void require_primitive(const SurgeryDescriptor& d) {
  Int g = gcd3(d.p, d.a, d.b);
  if (g != 1) {
    std::ostringstream os;
    os << "surgery curve class (" << d.p << ", " << d.a << ", " << d.b
       << ") is not primitive: gcd = " << g;
    raise(ErrorCode::NonPrimitiveCurve, os.str());
  }
}

NormalizedSurgery normalize(const SurgeryDescriptor& d) {
  require_primitive(d);
  NormalizedSurgery n;
  n.multiplicity = d.p;
  Int q = gcd(Int(d.a), Int(d.b));
  n.auxiliary = q.get_si();
  if (n.auxiliary > 0) {
    Int da = Int(d.a) / q;
    Int db = Int(d.b) / q;
    if (sgn(da) < 0 || (sgn(da) == 0 && sgn(db) < 0)) {
      da = -da;
      db = -db;
    }
    n.direction = Direction{da.get_si(), db.get_si()};
  }
  return n;
}

bool is_trivial_surgery(const SurgeryDescriptor& d) {
  return d.p == 1 && d.a == 0 && d.b == 0;
}

bool is_integral(const SurgeryDescriptor& d) {
  Int q = gcd(Int(d.a), Int(d.b));
  return q <= 1;
}

IntMatrix gluing_matrix(const SurgeryDescriptor& d) {
  require_primitive(d);
  return complete_to_unimodular({Int(d.a), Int(d.b), Int(d.p)});
}

IntMatrix normal_form_gluing(std::int64_t p, std::int64_t q) {
  Int P(p), Q(q);
  if (gcd(P, Q) != 1) {
    std::ostringstream os;
    os << "p = " << p << " and q = " << q << " are not coprime";
    raise(ErrorCode::NotCoprime, os.str());
  }
  Int c, d;
  if (p == 0) {
    // q = +-1; the solution with minimal c.
    c = 0;
    d = -Q;
  } else {
    ExtGcd e = ext_gcd(P, Q);  // x p + y q = 1
    Int absP = abs(P);
    Int d0 = -e.y;
    d = ((d0 % absP) + absP) % absP;  // representative with 0 <= d < |p|
    Int k = (d - d0) / P;
    c = e.x + k * Q;
  }
  IntMatrix m = IntMatrix::identity(3);
  m(1, 1) = c;
  m(1, 2) = Q;
  m(2, 1) = d;
  m(2, 2) = P;
  return m;
}

FramedTorus make_framed_torus(std::string label, int q_alpha, int q_beta,
                              std::optional<ExteriorPresentation> exterior) {
  if (!validate_q_profile(q_alpha, q_beta))
    raise(ErrorCode::InvalidProfile,
          "profile (1, 1) is impossible for a torus in the 4-sphere");
  if (exterior) {
    const std::size_t n = exterior->group.generators.size();
    if (!well_formed(exterior->group) || !well_formed_word(exterior->meridian, n) ||
        !well_formed_word(exterior->alpha, n) || !well_formed_word(exterior->beta, n))
      throw std::invalid_argument("exterior words reference unknown generators");
  }
  FramedTorus t;
  t.label = std::move(label);
  t.q_alpha = q_alpha & 1;
  t.q_beta = q_beta & 1;
  t.exterior = std::move(exterior);
  return t;
}

FramedTorus FramedTorus::unknotted() {
  ExteriorPresentation ext;
  ext.group.generators = {"m"};
  ext.meridian = {1};
  return make_framed_torus("unknotted", 0, 0, std::move(ext));
}

FramedTorus FramedTorus::spun(const std::string& knot, GroupPresentation knot_group,
                              Word meridian, Word longitude) {
  ExteriorPresentation ext{std::move(knot_group), std::move(meridian),
                           std::move(longitude), {}};
  return make_framed_torus("spun(" + knot + ")", 0, 0, std::move(ext));
}

FramedTorus FramedTorus::twisted_spun(const std::string& knot,
                                      GroupPresentation knot_group, Word meridian,
                                      Word longitude) {
  ExteriorPresentation ext{std::move(knot_group), std::move(meridian),
                           std::move(longitude), {}};
  return make_framed_torus("twisted-spun(" + knot + ")", 0, 0, std::move(ext));
}

int rokhlin_q(const FramedTorus& t, std::int64_t a, std::int64_t b) {
  const int pa = bit(a), pb = bit(b);
  return (pa * (t.q_alpha & 1) + pb * (t.q_beta & 1) + pa * pb) & 1;
}

bool validate_q_profile(int q_alpha, int q_beta) {
  const int qa = q_alpha & 1, qb = q_beta & 1;
  // Values on the three nonzero classes alpha, beta, alpha + beta.
  const int ones = qa + qb + ((qa + qb + 1) & 1);
  return ones == 1;
}

IntMatrix spin_normalize_basis(int q_alpha, int q_beta) {
  if (!validate_q_profile(q_alpha, q_beta))
    raise(ErrorCode::InvalidProfile,
          "profile (1, 1) is impossible for a torus in the 4-sphere");
  const int qa = q_alpha & 1, qb = q_beta & 1;
  if (qa == 1) return IntMatrix::from_rows({{1, 1}, {0, 1}});  // alpha' = alpha + beta
  if (qb == 1) return IntMatrix::from_rows({{1, 0}, {1, 1}});  // beta' = alpha + beta
  return IntMatrix::identity(2);
}

}  // namespace tsurg
