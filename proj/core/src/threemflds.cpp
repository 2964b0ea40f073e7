#include "tsurg/threemflds.hpp"

#include <sstream>
#include <stdexcept>

namespace tsurg {

void validate_link(const DehnSurgeryLink& l) {
  const std::size_t n = l.components;
  if (l.linking.rows() != n || l.linking.cols() != n)
    raise(ErrorCode::InvalidLink, "linking matrix must be n x n for n components");
  if (l.coefficients.size() != n)
    raise(ErrorCode::InvalidLink, "expected one surgery coefficient per component");
  for (std::size_t i = 0; i < n; ++i) {
    if (l.linking(i, i) != 0)
      raise(ErrorCode::InvalidLink, "linking matrix must have zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j)
      if (l.linking(i, j) != l.linking(j, i))
        raise(ErrorCode::InvalidLink, "linking matrix must be symmetric");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = l.coefficients[i];
    if (c.p == 0 && c.q == 0)
      raise(ErrorCode::InvalidLink, "coefficient 0/0 is not a Dehn filling");
    if (gcd(Int(c.p), Int(c.q)) != 1) {
      std::ostringstream os;
      os << "coefficient " << c.p << "/" << c.q << " on component " << i
         << " is not in lowest terms";
      raise(ErrorCode::InvalidLink, os.str());
    }
  }
}

DehnSurgeryLink make_link(std::initializer_list<std::initializer_list<long>> linking,
                          std::initializer_list<DehnCoefficient> coefficients) {
  DehnSurgeryLink l;
  l.components = coefficients.size();
  l.linking = IntMatrix::from_rows(linking);
  l.coefficients.assign(coefficients.begin(), coefficients.end());
  validate_link(l);
  return l;
}

IntMatrix dehn_presentation_matrix(const DehnSurgeryLink& l) {
  validate_link(l);
  const std::size_t n = l.components;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = l.coefficients[i].p;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) m(i, j) = Int(l.coefficients[i].q) * l.linking(i, j);
  }
  return m;
}

AbelianGroup dehn_h1(const DehnSurgeryLink& l) {
  return abelian_group_from_presentation_matrix(dehn_presentation_matrix(l),
                                                l.components);
}

bool is_integral_homology_sphere(const DehnSurgeryLink& l) {
  return dehn_h1(l).is_trivial();
}

EmbeddingCertificate embedding_target(std::int64_t p, std::int64_t q) {
  if (gcd(Int(p), Int(q)) != 1) {
    std::ostringstream os;
    os << "surgery coefficient " << p << "/" << q << " is not in lowest terms";
    raise(ErrorCode::NotCoprime, os.str());
  }
  const bool odd = (p & 1) && (q & 1);
  EmbeddingCertificate cert;
  cert.hypotheses.push_back("gcd(p, q) = 1");
  cert.hypotheses.push_back(odd ? "pq is odd" : "pq is even");
  cert.target = odd ? ManifoldName::S1xS3ConnSumS2xTwistS2
                    : ManifoldName::S1xS3ConnSumS2xS2;
  cert.punctured_target = odd ? ManifoldName::S2xTwistS2 : ManifoldName::S2xS2;
  return cert;
}

EmbeddingCertificate ribbon_embedding_certificate(const DehnSurgeryLink& l,
                                                  LinkKind kind) {
  validate_link(l);
  for (std::size_t i = 0; i < l.components; ++i)
    if (l.coefficients[i].p != 1) {
      std::ostringstream os;
      os << "coefficient " << l.coefficients[i].p << "/" << l.coefficients[i].q
         << " on component " << i << " is not of the form 1/n";
      raise(ErrorCode::BadCoefficients, os.str());
    }
  for (std::size_t i = 0; i < l.components; ++i)
    for (std::size_t j = 0; j < l.components; ++j)
      if (l.linking(i, j) != 0)
        raise(ErrorCode::NonzeroLinking,
              "ribbon and slice links have vanishing pairwise linking numbers");

  EmbeddingCertificate cert;
  cert.hypotheses.push_back(kind == LinkKind::Ribbon
                                ? "caller asserts the link is ribbon"
                                : "caller asserts the link is slice");
  cert.hypotheses.push_back("all surgery coefficients are of the form 1/n");
  cert.hypotheses.push_back("pairwise linking numbers vanish");
  if (kind == LinkKind::Ribbon) {
    cert.target = ManifoldName::S4;
    return cert;
  }
  bool all_even = true;
  for (const auto& c : l.coefficients)
    if (c.q & 1) all_even = false;
  if (all_even) {
    cert.hypotheses.push_back("all surgery coefficients are of the form 1/(2n)");
    cert.target = ManifoldName::S4;
  } else {
    cert.target = ManifoldName::HomotopyS4;
  }
  return cert;
}

std::vector<SurgeryDescriptor> spin_construction_plan(const DehnSurgeryLink& l) {
  validate_link(l);
  std::vector<SurgeryDescriptor> plan;
  plan.reserve(l.components);
  for (const auto& c : l.coefficients) plan.push_back({c.p, c.q, 0});
  return plan;
}

SurgeryPlan torus_link_plan_from_group(const GroupPresentation& g) {
  if (!well_formed(g))
    throw std::invalid_argument("relator references an unknown generator");
  const std::int64_t def = deficiency(g);
  if (def < 0) {
    std::ostringstream os;
    os << "presentation has deficiency " << def << "; the construction needs >= 0";
    raise(ErrorCode::NegativeDeficiency, os.str());
  }
  const std::size_t m = g.generators.size();
  const std::size_t n = g.relators.size();
  SurgeryPlan plan;
  plan.torus_count = m;
  plan.relator_words = g.relators;
  plan.relator_words.resize(m);  // pad with empty words (nullhomotopic curves)
  plan.descriptors.assign(m, SurgeryDescriptor{0, 1, 0});
  std::ostringstream os;
  os << "attach " << m << " round 2-handles to S^4 x I: " << m
     << " 3-handles give #_" << m << " S^1 x S^3, then 2-handles along " << n
     << " relator curve(s) and " << (m - n) << " nullhomotopic curve(s)";
  plan.narrative = os.str();
  return plan;
}

}  // namespace tsurg
