#include "support.hpp"

#include "qsuper/classify.hpp"

using namespace qsuper;

TEST_SUITE("classify") {
  TEST_CASE("Gram conditions") {
    Groupoid g = enumerate_groupoid(2, 1);
    CHECK(gram_condition(g, PhiKind::Scale, 1, 1));
    CHECK_FALSE(gram_condition(g, PhiKind::Reverse, 1, 1));
    CHECK(gram_condition(g, PhiKind::Reverse, 3, 3));
    CHECK_FALSE(iso_condition(g, 1, 3).has_value());
    CHECK(iso_condition(g, 1, 5).has_value());
    for (int d = 1; d <= 6; ++d) CHECK_FALSE(gram_condition(g, PhiKind::Swap, d, d));
  }

  TEST_CASE("witnesses") {
    std::vector<CycScalar> ones(2, Algebra::get(2, 1, 3, 1)->scalar(1));
    IsoWitness id = build_phi(PhiKind::Scale, ones, 2, 1, 3, 1, 1);
    CHECK_REPORT(id.verification);
    CHECK(is_identity_on_generators(id.map));
    auto w15 = hopf_iso_exists(2, 1, 3, 1, 5);
    REQUIRE(w15.has_value());
    CHECK(w15->kind == PhiKind::Reverse);
    CHECK_REPORT(w15->verification);
    CHECK(w15->map.verified());
    CHECK_FALSE(hopf_iso_exists(2, 1, 3, 1, 3).has_value());
    for (int d = 1; d <= 6; ++d) {
      auto w = hopf_iso_exists(2, 1, 3, d, d);
      REQUIRE(w.has_value());
      CHECK_REPORT(w->verification);
    }
    CHECK_THROWS_AS(build_phi(PhiKind::Reverse, ones, 2, 1, 3, 1, 1), std::invalid_argument);
    AlgebraPtr a = Algebra::get(2, 1, 3, 1);
    std::vector<CycScalar> scale{a->q(1), a->scalar(-2)};
    CHECK_REPORT(build_phi(PhiKind::Scale, scale, 2, 1, 3, 1, 1).verification);
    std::vector<CycScalar> zero{a->scalar(0), a->scalar(1)};
    CHECK_THROWS_AS(build_phi(PhiKind::Scale, zero, 2, 1, 3, 1, 1), std::invalid_argument);
  }

  TEST_CASE("the reversal map without its Gram condition is not a morphism") {
    AlgebraMorphism f = phi_generator_map(PhiKind::Reverse, 2, 1, 3, 1, 1);
    CHECK_REPORT_FAILS(verify_isomorphism(f));
  }

  TEST_CASE("partitions") {
    IsoClasses c = enumerate_iso_classes(2, 1, 3);
    CHECK_FALSE(c.diagram_level);
    CHECK(c.classes == std::vector<std::vector<int>>{{1, 2, 5, 6}, {3, 4}});
    IsoClasses mirror = enumerate_iso_classes(1, 2, 3);
    CHECK(mirror.classes.size() == 2);
    IsoClasses big = enumerate_iso_classes(3, 1, 3);
    CHECK(big.diagram_level);
    CHECK(big.classes.size() == 2);
    CHECK_REPORT(verify_classification(2, 1, 3));
  }

  TEST_CASE("automorphisms and orders") {
    for (int d = 1; d <= 6; ++d) {
      AutomorphismDescriptor ad = automorphism_group(2, 1, d);
      bool extended = d == 3 || d == 4;
      CHECK(ad.group == (extended ? "Z/2Z x (Q(q)*)^2" : "(Q(q)*)^2"));
    }
    CHECK(generator_order(phi_generator_map(PhiKind::ReverseSwap, 2, 1, 3, 1, 1), 12) == 6);
    CHECK(generator_order(phi_generator_map(PhiKind::ReverseSwap, 2, 1, 3, 3, 3), 12) == 2);
    CHECK(generator_order(AlgebraMorphism::identity(Algebra::get(2, 1, 3, 1)), 4) == 1);
  }

  TEST_CASE("Dynkin orbits") {
    Groupoid g = enumerate_groupoid(2, 1);
    CHECK(dynkin_orbit(g, 1) == std::vector<int>{1, 2, 5, 6});
    CHECK(dynkin_orbit(g, 3) == std::vector<int>{3, 4});
    for (int d = 1; d <= 6; ++d)
      for (int x : dynkin_orbit(g, d)) CHECK(dynkin_orbit(g, x) == dynkin_orbit(g, d));
  }
}
