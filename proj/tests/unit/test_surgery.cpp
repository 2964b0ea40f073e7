#include <random>

#include "doctest.h"
#include "tsurg/surgery.hpp"

using namespace tsurg;

TEST_SUITE("surgery") {

TEST_CASE("normalize computes multiplicity, auxiliary, and direction") {
  NormalizedSurgery n = normalize({1, 0, 0});
  CHECK(n.multiplicity == 1);
  CHECK(n.auxiliary == 0);
  CHECK_FALSE(n.direction.has_value());

  n = normalize({3, 4, 6});
  CHECK(n.multiplicity == 3);
  CHECK(n.auxiliary == 2);
  REQUIRE(n.direction.has_value());
  CHECK(*n.direction == Direction{2, 3});

  CHECK_THROWS_AS(normalize({2, 4, 0}), DomainError);
  try {
    normalize({2, 4, 0});
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NonPrimitiveCurve);
  }
}

TEST_CASE("normalize sign convention and idempotence") {
  // First nonzero coordinate of the direction is positive.
  NormalizedSurgery n = normalize({3, -4, 6});
  CHECK(*n.direction == Direction{2, -3});
  n = normalize({1, 0, -5});
  CHECK(*n.direction == Direction{0, 1});

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> small(-25, 25);
  int done = 0;
  while (done < 500) {
    SurgeryDescriptor d{small(rng), small(rng), small(rng)};
    if (!is_primitive(d)) continue;
    ++done;
    NormalizedSurgery n1 = normalize(d);
    SurgeryDescriptor rebuilt{n1.multiplicity, 0, 0};
    if (n1.direction) {
      rebuilt.a = n1.auxiliary * n1.direction->a;
      rebuilt.b = n1.auxiliary * n1.direction->b;
    }
    CHECK(normalize(rebuilt) == n1);
    // gcd(p, q) = 1 comes with primitivity of the curve class.
    CHECK(gcd(Int(n1.multiplicity), Int(n1.auxiliary)) == 1);
  }
}

TEST_CASE("gluing_matrix examples") {
  CHECK(gluing_matrix({1, 0, 0}) == IntMatrix::identity(3));

  IntMatrix m = gluing_matrix({0, 1, 0});
  CHECK(is_unimodular(m));
  CHECK(m(0, 2) == 1);
  CHECK(m(1, 2) == 0);
  CHECK(m(2, 2) == 0);

  m = gluing_matrix({5, 2, 3});
  CHECK(is_unimodular(m));
  CHECK(m(0, 2) == 2);
  CHECK(m(1, 2) == 3);
  CHECK(m(2, 2) == 5);

  CHECK_THROWS_AS(gluing_matrix({2, 4, 6}), DomainError);
}

TEST_CASE("gluing_matrix is unimodular with last column (a, b, p) for all small descriptors") {
  for (std::int64_t p = -20; p <= 20; ++p)
    for (std::int64_t a = -20; a <= 20; ++a)
      for (std::int64_t b = -20; b <= 20; ++b) {
        SurgeryDescriptor d{p, a, b};
        if (!is_primitive(d)) continue;
        IntMatrix m = gluing_matrix(d);
        const bool ok = is_unimodular(m) && m(0, 2) == a && m(1, 2) == b &&
                        m(2, 2) == p;
        if (!ok) {
          CAPTURE(p);
          CAPTURE(a);
          CAPTURE(b);
          REQUIRE(ok);
        }
      }
}

TEST_CASE("normal_form_gluing") {
  SUBCASE("frozen examples") {
    IntMatrix m = normal_form_gluing(1, 0);
    CHECK(m == IntMatrix::identity(3));  // c = 1, d = 0

    m = normal_form_gluing(3, 2);
    CHECK(m(1, 1) == 1);  // c
    CHECK(m(2, 1) == 1);  // d
    CHECK(m(1, 2) == 2);
    CHECK(m(2, 2) == 3);

    m = normal_form_gluing(0, 1);
    CHECK(m(1, 1) == 0);
    CHECK(m(2, 1) == -1);
  }
  SUBCASE("coprimality is required") {
    CHECK_THROWS_AS(normal_form_gluing(4, 2), DomainError);
    try {
      normal_form_gluing(4, 2);
    } catch (const DomainError& e) {
      CHECK(e.code() == ErrorCode::NotCoprime);
    }
  }
  SUBCASE("structure and residue condition over a coprime grid") {
    for (std::int64_t p = -30; p <= 30; ++p)
      for (std::int64_t q = -30; q <= 30; ++q) {
        if (gcd(Int(p), Int(q)) != 1) continue;
        IntMatrix m = normal_form_gluing(p, q);
        CHECK(is_unimodular(m));
        const Int& c = m(1, 1);
        const Int& d = m(2, 1);
        CHECK(c * p - d * q == 1);
        if (p != 0) {
          CHECK(d >= 0);
          CHECK(d < abs(Int(p)));
        } else {
          CHECK(c == 0);
        }
      }
  }
}

TEST_CASE("is_trivial_surgery") {
  CHECK(is_trivial_surgery({1, 0, 0}));
  CHECK_FALSE(is_trivial_surgery({1, 0, 1}));
  CHECK_FALSE(is_trivial_surgery({0, 1, 0}));
  CHECK_FALSE(is_trivial_surgery({-1, 0, 0}));
}

TEST_CASE("rokhlin_q evaluates the quadratic form") {
  FramedTorus spin_embedded = make_framed_torus("t", 0, 0, std::nullopt);
  CHECK(rokhlin_q(spin_embedded, 1, 1) == 1);  // the cross term ab
  CHECK(rokhlin_q(spin_embedded, 2, 2) == 0);

  FramedTorus qa1 = make_framed_torus("t", 1, 0, std::nullopt);
  CHECK(rokhlin_q(qa1, 1, 0) == 1);
  CHECK(rokhlin_q(qa1, 2, 2) == 0);
}

TEST_CASE("rokhlin_q satisfies the quadratic refinement law") {
  for (int qa = 0; qa <= 1; ++qa)
    for (int qb = 0; qb <= 1; ++qb) {
      FramedTorus t;
      t.q_alpha = qa;
      t.q_beta = qb;
      for (std::int64_t a = -4; a <= 4; ++a)
        for (std::int64_t b = -4; b <= 4; ++b)
          for (std::int64_t c = -4; c <= 4; ++c)
            for (std::int64_t d = -4; d <= 4; ++d) {
              const int lhs = rokhlin_q(t, a + c, b + d);
              const int rhs =
                  (rokhlin_q(t, a, b) + rokhlin_q(t, c, d) + (a * d - b * c)) & 1;
              if (lhs != rhs) {
                CAPTURE(qa);
                CAPTURE(qb);
                CAPTURE(a);
                CAPTURE(b);
                CAPTURE(c);
                CAPTURE(d);
                REQUIRE(lhs == rhs);
              }
            }
    }
}

TEST_CASE("validate_q_profile rules out exactly (1, 1)") {
  CHECK(validate_q_profile(0, 0));
  CHECK(validate_q_profile(1, 0));
  CHECK(validate_q_profile(0, 1));
  CHECK_FALSE(validate_q_profile(1, 1));
}

TEST_CASE("spin_normalize_basis produces a spin basis") {
  CHECK(spin_normalize_basis(0, 0) == IntMatrix::identity(2));
  CHECK(spin_normalize_basis(1, 0) == IntMatrix::from_rows({{1, 1}, {0, 1}}));
  CHECK(spin_normalize_basis(0, 1) == IntMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK_THROWS_AS(spin_normalize_basis(1, 1), DomainError);

  // Verify through the quadratic form that the new basis is spin.
  for (auto [qa, qb] : {std::pair<int, int>{0, 0}, {1, 0}, {0, 1}}) {
    FramedTorus t;
    t.q_alpha = qa;
    t.q_beta = qb;
    IntMatrix basis = spin_normalize_basis(qa, qb);
    CHECK(is_unimodular(basis));
    const int q_alpha_new =
        rokhlin_q(t, basis(0, 0).get_si(), basis(0, 1).get_si());
    const int q_beta_new =
        rokhlin_q(t, basis(1, 0).get_si(), basis(1, 1).get_si());
    CHECK(q_alpha_new == 0);
    CHECK(q_beta_new == 0);
  }
}

TEST_CASE("framed torus construction validates the profile and words") {
  CHECK_THROWS_AS(make_framed_torus("bad", 1, 1, std::nullopt), DomainError);

  FramedTorus u = FramedTorus::unknotted();
  CHECK(u.q_alpha == 0);
  CHECK(u.q_beta == 0);
  REQUIRE(u.exterior.has_value());
  CHECK(u.exterior->group.generators.size() == 1);
  CHECK(u.exterior->group.relators.empty());
  CHECK(u.exterior->meridian == Word{1});
  CHECK(u.exterior->alpha.empty());
  CHECK(u.exterior->beta.empty());

  GroupPresentation knot;
  knot.generators = {"x", "y"};
  knot.relators = {{1, 2, 1, -2, -1, -2}};
  FramedTorus s = FramedTorus::spun("3_1", knot, {1}, {2, -1});
  CHECK(s.label == "spun(3_1)");
  CHECK(s.exterior->beta.empty());

  ExteriorPresentation bad;
  bad.group.generators = {"x"};
  bad.meridian = {2};  // unknown generator
  CHECK_THROWS_AS(make_framed_torus("t", 0, 0, bad), std::invalid_argument);
}

}  // TEST_SUITE
