#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tsurg/threemflds.hpp"

using namespace tsurg;

namespace {

// Independent construction of the surgery presentation matrix, kept in the
// tests so dehn_h1 is checked against a second formulation.
IntMatrix presentation_matrix_oracle(const DehnSurgeryLink& l) {
  const std::size_t n = l.components;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = (i == j) ? Int(l.coefficients[i].p)
                         : Int(l.coefficients[i].q) * l.linking(i, j);
  return m;
}

DehnSurgeryLink random_link(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> comp(1, 4);
  std::uniform_int_distribution<int> lk(-3, 3);
  std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
  const std::size_t n = comp(rng);
  DehnSurgeryLink l;
  l.components = n;
  l.linking = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int v = lk(rng);
      l.linking(i, j) = v;
      l.linking(j, i) = v;
    }
  for (std::size_t i = 0; i < n; ++i) {
    for (;;) {
      std::int64_t p = coeff(rng), q = coeff(rng);
      if ((p == 0 && q == 0) || gcd(Int(p), Int(q)) != 1) continue;
      l.coefficients.push_back({p, q});
      break;
    }
  }
  return l;
}

GroupPresentation random_presentation(std::mt19937_64& rng, bool nonneg_deficiency) {
  std::uniform_int_distribution<std::size_t> gens(1, 4);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  const std::size_t m = gens(rng);
  std::uniform_int_distribution<std::size_t> rels =
      nonneg_deficiency ? std::uniform_int_distribution<std::size_t>(0, m)
                        : std::uniform_int_distribution<std::size_t>(m + 1, m + 3);
  const std::size_t n = rels(rng);
  std::uniform_int_distribution<int> letter(1, static_cast<int>(m));
  std::uniform_int_distribution<int> flip(0, 1);
  GroupPresentation g;
  for (std::size_t i = 0; i < m; ++i) g.generators.push_back("g" + std::to_string(i));
  for (std::size_t r = 0; r < n; ++r) {
    Word w;
    const std::size_t L = len(rng);
    for (std::size_t k = 0; k < L; ++k) {
      int v = letter(rng);
      w.push_back(flip(rng) ? v : -v);
    }
    g.relators.push_back(std::move(w));
  }
  return g;
}

}  // namespace

TEST_SUITE("threemflds") {

TEST_CASE("dehn_h1 worked examples") {
  CHECK(dehn_h1(make_link({{0}}, {DehnCoefficient{3, 1}})) == AbelianGroup::cyclic(3));
  CHECK(dehn_h1(make_link({{0}}, {DehnCoefficient{1, -4}})).is_trivial());
  CHECK(dehn_h1(make_link({{0, 1}, {1, 0}}, {DehnCoefficient{1, 1}, DehnCoefficient{1, 1}})) ==
        AbelianGroup::free_of_rank(1));
}

TEST_CASE("link validation") {
  DehnSurgeryLink l;
  l.components = 1;
  l.linking = IntMatrix(1, 1);
  l.coefficients = {{0, 0}};
  CHECK_THROWS_AS(validate_link(l), DomainError);

  l.coefficients = {{2, 4}};
  CHECK_THROWS_AS(dehn_h1(l), DomainError);

  DehnSurgeryLink asym;
  asym.components = 2;
  asym.linking = IntMatrix::from_rows({{0, 1}, {2, 0}});
  asym.coefficients = {{1, 0}, {1, 0}};
  CHECK_THROWS_AS(dehn_h1(asym), DomainError);

  DehnSurgeryLink diag;
  diag.components = 1;
  diag.linking = IntMatrix::from_rows({{3}});
  diag.coefficients = {{1, 0}};
  CHECK_THROWS_AS(dehn_h1(diag), DomainError);

  DehnSurgeryLink shape;
  shape.components = 2;
  shape.linking = IntMatrix(1, 1);
  shape.coefficients = {{1, 0}, {1, 0}};
  CHECK_THROWS_AS(dehn_h1(shape), DomainError);
}

TEST_CASE("lens space homology for p/1 surgeries") {
  for (std::int64_t p = 1; p <= 30; ++p)
    CHECK(dehn_h1(make_link({{0}}, {DehnCoefficient{p, 1}})) == AbelianGroup::cyclic(p));
}

TEST_CASE("homology sphere detection matches the determinant oracle") {
  CHECK(is_integral_homology_sphere(DehnSurgeryLink{}));  // empty link: S^3
  CHECK(is_integral_homology_sphere(make_link(
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
      {DehnCoefficient{1, 2}, DehnCoefficient{1, -1}, DehnCoefficient{1, 5}})));
  CHECK_FALSE(is_integral_homology_sphere(
      make_link({{0, 1}, {1, 0}}, {DehnCoefficient{1, 1}, DehnCoefficient{1, 1}})));

  std::mt19937_64 rng(5150);
  for (int k = 0; k < 500; ++k) {
    DehnSurgeryLink l = random_link(rng);
    Int det = oracle::cofactor_determinant(presentation_matrix_oracle(l));
    const bool unit_det = (det == 1 || det == -1);
    const bool trivial = dehn_h1(l).is_trivial();
    const bool sphere = is_integral_homology_sphere(l);
    if (unit_det != trivial || trivial != sphere) {
      CAPTURE(k);
      REQUIRE(unit_det == trivial);
      REQUIRE(trivial == sphere);
    }
  }
}

TEST_CASE("zero-linking 1/n surgeries always give homology spheres") {
  for (std::int64_t q1 = -10; q1 <= 10; ++q1) {
    CHECK(is_integral_homology_sphere(make_link({{0}}, {DehnCoefficient{1, q1}})));
    for (std::int64_t q2 = -10; q2 <= 10; ++q2) {
      CHECK(is_integral_homology_sphere(
          make_link({{0, 0}, {0, 0}}, {DehnCoefficient{1, q1}, DehnCoefficient{1, q2}})));
      for (std::int64_t q3 = -10; q3 <= 10; ++q3)
        CHECK(is_integral_homology_sphere(
            make_link({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
                      {DehnCoefficient{1, q1}, DehnCoefficient{1, q2},
                       DehnCoefficient{1, q3}})));
    }
  }
}

TEST_CASE("embedding_target parity table") {
  EmbeddingCertificate c = embedding_target(3, 2);
  CHECK(c.target == ManifoldName::S1xS3ConnSumS2xS2);
  CHECK(c.punctured_target == ManifoldName::S2xS2);
  CHECK_FALSE(c.hypotheses.empty());

  c = embedding_target(3, 1);
  CHECK(c.target == ManifoldName::S1xS3ConnSumS2xTwistS2);
  CHECK(c.punctured_target == ManifoldName::S2xTwistS2);

  c = embedding_target(0, 1);
  CHECK(c.target == ManifoldName::S1xS3ConnSumS2xS2);

  CHECK_THROWS_AS(embedding_target(2, 4), DomainError);
  CHECK_THROWS_AS(embedding_target(0, 0), DomainError);
}

TEST_CASE("embedding_target depends only on parities") {
  for (std::int64_t p = -9; p <= 9; ++p)
    for (std::int64_t q = -9; q <= 9; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      EmbeddingCertificate c = embedding_target(p, q);
      // (p mod 2, q mod 2) is one of the coprime pairs (0,1), (1,0), (1,1),
      // so the residues themselves represent the parity class.
      EmbeddingCertificate rep = embedding_target(p & 1, q & 1);
      CHECK(c.target == rep.target);
      CHECK(c.punctured_target == rep.punctured_target);
    }
}

TEST_CASE("ribbon and slice embedding certificates") {
  DehnSurgeryLink ribbon = make_link({{0, 0}, {0, 0}},
                                     {DehnCoefficient{1, 1}, DehnCoefficient{1, -2}});
  EmbeddingCertificate c = ribbon_embedding_certificate(ribbon, LinkKind::Ribbon);
  CHECK(c.target == ManifoldName::S4);
  CHECK_FALSE(c.punctured_target.has_value());
  CHECK_FALSE(c.hypotheses.empty());

  DehnSurgeryLink even = make_link({{0, 0}, {0, 0}},
                                   {DehnCoefficient{1, 2}, DehnCoefficient{1, 4}});
  c = ribbon_embedding_certificate(even, LinkKind::Slice);
  CHECK(c.target == ManifoldName::S4);

  DehnSurgeryLink odd = make_link({{0}}, {DehnCoefficient{1, 1}});
  c = ribbon_embedding_certificate(odd, LinkKind::Slice);
  CHECK(c.target == ManifoldName::HomotopyS4);

  DehnSurgeryLink bad_coeff = make_link({{0}}, {DehnCoefficient{2, 3}});
  try {
    ribbon_embedding_certificate(bad_coeff, LinkKind::Ribbon);
    FAIL("expected BadCoefficients");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::BadCoefficients);
  }

  DehnSurgeryLink linked = make_link({{0, 1}, {1, 0}},
                                     {DehnCoefficient{1, 1}, DehnCoefficient{1, 1}});
  try {
    ribbon_embedding_certificate(linked, LinkKind::Slice);
    FAIL("expected NonzeroLinking");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NonzeroLinking);
  }
}

TEST_CASE("spin_construction_plan translates coefficients to descriptors") {
  auto plan = spin_construction_plan(make_link({{0}}, {DehnCoefficient{3, 1}}));
  REQUIRE(plan.size() == 1);
  CHECK(plan[0] == SurgeryDescriptor{3, 1, 0});

  plan = spin_construction_plan(make_link({{0}}, {DehnCoefficient{1, 0}}));
  CHECK(plan[0] == SurgeryDescriptor{1, 0, 0});
  CHECK(is_trivial_surgery(plan[0]));

  plan = spin_construction_plan(make_link({{0}}, {DehnCoefficient{0, 1}}));
  CHECK(plan[0] == SurgeryDescriptor{0, 1, 0});

  std::mt19937_64 rng(1234);
  for (int k = 0; k < 200; ++k) {
    DehnSurgeryLink l = random_link(rng);
    auto p = spin_construction_plan(l);
    CHECK(p.size() == l.components);
    for (const auto& d : p) CHECK(is_primitive(d));
  }
}

TEST_CASE("torus_link_plan_from_group worked examples") {
  GroupPresentation z;
  z.generators = {"g"};
  SurgeryPlan plan = torus_link_plan_from_group(z);
  CHECK(plan.torus_count == 1);
  REQUIRE(plan.relator_words.size() == 1);
  CHECK(plan.relator_words[0].empty());
  CHECK(plan.descriptors.size() == 1);
  GroupPresentation plan_group{z.generators, plan.relator_words};
  CHECK(abelianization(plan_group) == AbelianGroup::free_of_rank(1));

  GroupPresentation trivial;
  trivial.generators = {"g"};
  trivial.relators = {{1}};
  plan = torus_link_plan_from_group(trivial);
  CHECK(plan.torus_count == 1);
  CHECK(plan.relator_words == std::vector<Word>{{1}});
  CHECK(abelianization({trivial.generators, plan.relator_words}).is_trivial());

  GroupPresentation z2;
  z2.generators = {"a", "b"};
  z2.relators = {{1, 2, -1, -2}};
  plan = torus_link_plan_from_group(z2);
  CHECK(plan.torus_count == 2);
  REQUIRE(plan.relator_words.size() == 2);
  CHECK(plan.relator_words[0] == Word{1, 2, -1, -2});
  CHECK(plan.relator_words[1].empty());
  CHECK(abelianization({z2.generators, plan.relator_words}) ==
        AbelianGroup::free_of_rank(2));

  GroupPresentation neg;
  neg.generators = {"x"};
  neg.relators = {{1}, {1, 1}};
  try {
    torus_link_plan_from_group(neg);
    FAIL("expected NegativeDeficiency");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NegativeDeficiency);
  }
}

TEST_CASE("plans preserve the abelianization for random presentations") {
  std::mt19937_64 rng(987654);
  for (int k = 0; k < 50; ++k) {
    GroupPresentation g = random_presentation(rng, true);
    SurgeryPlan plan = torus_link_plan_from_group(g);
    CHECK(plan.torus_count == g.generators.size());
    CHECK(plan.descriptors.size() == plan.torus_count);
    for (const auto& d : plan.descriptors) {
      CHECK(is_integral(d));
      CHECK(is_primitive(d));
    }
    CHECK(abelianization({g.generators, plan.relator_words}) == abelianization(g));
  }
  for (int k = 0; k < 50; ++k) {
    GroupPresentation g = random_presentation(rng, false);
    CHECK_THROWS_AS(torus_link_plan_from_group(g), DomainError);
  }
}

}  // TEST_SUITE
