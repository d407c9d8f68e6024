#include "support.hpp"

#include "qsuper/algebra.hpp"
#include "qsuper/cyclotomic.hpp"
#include "qsuper/expr.hpp"
#include "qsuper/random.hpp"

using namespace qsuper;

TEST_SUITE("scalars") {
  TEST_CASE("field arithmetic examples") {
    for (int p : {3, 5, 7}) {
      const CyclotomicField& f = CyclotomicField::get(p);
      CycScalar z = CycScalar::zeta_power(f, 1);
      CHECK((z + (-z)).is_zero());
      CHECK((CycScalar::zeta_power(f, p - 1) * z).is_one());
      CHECK(q_power(f, 0).is_one());
      CHECK(q_power(f, p).is_one());
      CHECK(q_power(f, -1) == CycScalar::zeta_power(f, p - 1));
      CHECK(z.inverse() == CycScalar::zeta_power(f, p - 1));
      CHECK(CycScalar(f, 1).inverse().is_one());
      CHECK(f.degree() == euler_phi(p));
    }
    const CyclotomicField& f3 = CyclotomicField::get(3);
    CycScalar z = CycScalar::zeta_power(f3, 1);
    CHECK(z * z == CycScalar(f3, -1) - z);
    CycScalar qq = q_power(f3, 1) - q_power(f3, -1);
    CHECK((qq.inverse() * qq).is_one());
  }

  TEST_CASE("q-integers, factorials, binomials") {
    for (int p : {3, 5}) {
      const CyclotomicField& f = CyclotomicField::get(p);
      CycScalar q = q_power(f, 1);
      CHECK(q_int(f, 0).is_zero());
      CHECK(q_int(f, 1).is_one());
      CHECK(q_int(f, 2) == q + q.inverse());
      CHECK(q_int(f, p).is_zero());
      CHECK(q_paren_factorial(f, 0).is_one());
      CHECK(q_paren_factorial(f, 1).is_one());
      CHECK(q_paren_factorial(f, 2) == CycScalar(f, 1) + q);
      CHECK(q_binomial(3, 0, q).is_one());
      CHECK(q_binomial(1, 1, q) == q + q.inverse());
      CHECK(q_binomial(0, 1, q).is_one());
      // (n)_t! with n >= p contains (p)_q = 0
      CHECK(q_paren_factorial(f, p).is_zero());
      CHECK_THROWS_AS(q_paren_factorial(f, p).inverse(), DivisionByZero);
    }
  }

  TEST_CASE("errors") {
    const CyclotomicField& f3 = CyclotomicField::get(3);
    const CyclotomicField& f5 = CyclotomicField::get(5);
    CHECK_THROWS_AS(CycScalar(f3, 0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(CycScalar(f3, 1) + CycScalar(f5, 1), ContextError);
    CHECK_THROWS_AS(CyclotomicField::get(4), ContextError);
    CHECK_THROWS_AS(CycScalar::zeta_power(f3, 1).galois(3), ContextError);
  }

  TEST_CASE("field axioms on seeded samples") {
    for (int p : {3, 5}) {
      AlgebraPtr a = Algebra::get(2, 1, p, 1);
      Sampler s(1000 + p);
      for (int t = 0; t < 200; ++t) {
        CycScalar x = s.scalar(*a) + s.scalar(*a), y = s.scalar(*a), z = s.scalar(*a) - s.scalar(*a);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        CHECK(x.pow(3) == x * x * x);
        // Galois action is a ring map
        CHECK((x * y).galois(2) == x.galois(2) * y.galois(2));
        CHECK(cyc_add(x, cyc_neg(x)).is_zero());
        CHECK(cyc_mul(x, y) == x * y);
      }
    }
  }

  TEST_CASE("rendering parses back") {
    for (int p : {3, 5}) {
      AlgebraPtr a = Algebra::get(2, 1, p, 1);
      Sampler s(77 + p);
      for (int t = 0; t < 100; ++t) {
        CycScalar x = s.scalar(*a) * a->scalar(Rational(1, s.uniform(1, 7))) + s.scalar(*a);
        Element back = eval_text(x.to_string(), *a);
        INFO(x.to_string());
        CHECK(back == a->one() * x);
      }
    }
  }
}
