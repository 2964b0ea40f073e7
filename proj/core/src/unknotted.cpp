#include "tsurg/unknotted.hpp"

#include <sstream>

namespace tsurg {

std::string_view manifold_tag(ManifoldName name) noexcept {
  switch (name) {
    case ManifoldName::S4: return "s4";
    case ManifoldName::S1xS3ConnSumS2xS2: return "s1xs3_connsum_s2xs2";
    case ManifoldName::S1xS3ConnSumS2xTwistS2: return "s1xs3_connsum_s2xtwists2";
    case ManifoldName::HomotopyS4: return "homotopy_s4";
    case ManifoldName::S2xS2: return "s2xs2";
    case ManifoldName::S2xTwistS2: return "s2xtwists2";
    case ManifoldName::Unclassified: return "unclassified";
  }
  return "unclassified";
}

IntMatrix even_matrix_for_direction(std::int64_t a, std::int64_t b) {
  Int A(a), B(b);
  if (gcd(A, B) != 1) {
    std::ostringstream os;
    os << "direction (" << a << ", " << b << ") is not a coprime pair";
    raise(ErrorCode::NotCoprime, os.str());
  }
  IntMatrix m(2, 2);
  if ((a & 1) && (b & 1)) {
    // ab odd: columns (c, e) and (a-c, b-e) with c b - e a = 1; the entry sum
    // a + b is automatically even.
    ExtGcd g = ext_gcd(B, A);  // x b + y a = 1
    Int c = g.x, e = -g.y;
    m(0, 0) = c;
    m(0, 1) = A - c;
    m(1, 0) = e;
    m(1, 1) = B - e;
  } else {
    // ab even: first column (a, b), second (-d, c) with a c + b d = 1. The
    // Bezout solutions form the family (c + kb, d - ka); a, b have opposite
    // parity, so k in {0, 1} reaches a pair with c - d odd, making the sum
    // a + b + c - d even.
    ExtGcd g = ext_gcd(A, B);
    Int c = g.x, d = g.y;
    if (sgn((c - d) % 2) == 0) {
      c += B;
      d -= A;
    }
    m(0, 0) = A;
    m(0, 1) = -d;
    m(1, 0) = B;
    m(1, 1) = c;
  }
  return m;
}

bool montesinos_extends(const IntMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3 || !is_unimodular(m))
    raise(ErrorCode::NotUnimodular, "expected a 3x3 unimodular gluing matrix");
  if (m(2, 0) != 0 || m(2, 1) != 0 || m(2, 2) != 1) return false;
  Int block_sum = m(0, 0) + m(0, 1) + m(1, 0) + m(1, 1);
  return sgn(block_sum % 2) == 0;
}

ManifoldName classify_unknotted_surgery(const SurgeryDescriptor& d) {
  require_primitive(d);
  if (d.p == 1 || d.p == -1) return ManifoldName::S4;
  if (d.p == 0) {
    return ((d.a & 1) && (d.b & 1)) ? ManifoldName::S1xS3ConnSumS2xTwistS2
                                    : ManifoldName::S1xS3ConnSumS2xS2;
  }
  return ManifoldName::Unclassified;
}

ManifoldName classify_twisted_spun_surgery(const SurgeryDescriptor& d) {
  require_primitive(d);
  if (d.p == 1 && d.a == 0) return ManifoldName::S4;
  return ManifoldName::Unclassified;
}

}  // namespace tsurg
