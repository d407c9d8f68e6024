#include "support.hpp"

#include "qsuper/algebra.hpp"
#include "qsuper/random.hpp"

using namespace qsuper;

namespace {

Element gen(const Algebra& a, char k, int i, long e = 1) { return a.element_from_generator(k, i, e); }

}  // namespace

TEST_SUITE("uqsuper") {
  TEST_CASE("letters and root order") {
    AlgebraPtr a = Algebra::get(2, 1, 3, 1);
    CHECK(a->pos_roots().size() == 3);
    CHECK(a->pos_roots()[0].coords == std::vector<int>{1, 0});
    CHECK(a->pos_roots()[1].coords == std::vector<int>{1, 1});
    CHECK(a->pos_roots()[2].coords == std::vector<int>{0, 1});
    AlgebraPtr a3 = Algebra::get(2, 1, 3, 3);
    CHECK(a3->simple_parity(0) == 1);
    CHECK(a3->simple_parity(1) == 1);
    CHECK(a3->power(gen(*a3, 'e', 1), 2).is_zero());
    CHECK(a3->power(gen(*a3, 'e', 2), 2).is_zero());
    CHECK_THROWS_AS(Algebra::get(2, 2, 3, 1), UnsupportedConfiguration);
  }

  TEST_CASE("normal form examples") {
    for (int p : {3, 5}) {
      AlgebraPtr ap = Algebra::get(2, 1, p, 1);
      const Algebra& a = *ap;
      Element e1 = gen(a, 'e', 1), e2 = gen(a, 'e', 2), f1 = gen(a, 'f', 1), k1 = gen(a, 'k', 1);
      Element k1inv = gen(a, 'k', 1, -1);
      CHECK(k1inv == gen(a, 'k', 1, p - 1));
      CHECK(e1 * k1 == k1 * e1 * a.q(-2));
      CHECK(e1 * f1 == f1 * e1 + (k1 - k1inv) * a.inv_q_minus_qinv());
      CHECK((e2 * e2).is_zero());
      CHECK(gen(a, 'e', 2, 2).is_zero());
      Element e3 = a.letter(a.e_letter(1));
      CHECK(e2 * e1 == (e1 * e2 - e3) * a.q(1));
      CHECK(e3 == a.qbracket(e1, e2, -1));
      CHECK(a.one() * e1 == e1);
      CHECK((k1 * k1inv) == a.one());
      CHECK(a.power(k1, p) == a.one());
      CHECK(a.power(e1, p).is_zero());
      CHECK(a.normal_form({{a.k_letter(0), -1}}, a.scalar(1)) == k1inv);
    }
  }

  TEST_CASE("pbw validation and dimension") {
    for (int p : {3, 5})
      for (int d = 1; d <= 6; ++d) {
        AlgebraPtr a = Algebra::get(2, 1, p, d);
        CHECK_REPORT(verify_pbw(*a));
        CHECK(a->pbw_basis().size() == static_cast<std::size_t>(16 * p * p * p * p));
        CHECK(a->pbw_dimension_formula() == static_cast<std::size_t>(16 * p * p * p * p));
      }
    for (int d = 1; d <= 6; ++d) CHECK_REPORT(verify_pbw(*Algebra::get(1, 2, 3, d)));
  }

  TEST_CASE("a wrong sign in a straightening rule is detected") {
    AlgebraPtr a = Algebra::build_edited(2, 1, 3, 1, [](const Algebra& alg, RuleTable& rules) {
      for (auto& [key, rhs] : rules) {
        LetterKind x = alg.letters()[key.first].kind, y = alg.letters()[key.second].kind;
        if (x != y && x != LetterKind::K && y != LetterKind::K) {
          rhs = -rhs;
          return;
        }
      }
    });
    CHECK_REPORT_FAILS(verify_pbw(*a));
  }

  TEST_CASE("ideal membership oracle") {
    AlgebraPtr a = Algebra::get(2, 1, 3, 3);
    std::vector<FreePoly> rels = a->positive_relations(true);
    int e1 = a->generator_letter('e', 0), e2 = a->generator_letter('e', 1);
    FreePoly in{"e1 e1 e2", {{a->scalar(1), {e1, e1, e2}}}};
    CHECK(ideal_member(in, rels, a->field()));
    FreePoly out{"e1 e2", {{a->scalar(1), {e1, e2}}}};
    CHECK_FALSE(ideal_member(out, rels, a->field()));
  }

  TEST_CASE("strategy independence on seeded words") {
    for (int d = 1; d <= 6; ++d) {
      AlgebraPtr ap = Algebra::get(2, 1, 3, d);
      const Algebra& a = *ap;
      Sampler s(500 + d);
      for (int t = 0; t < 60; ++t) {
        std::vector<int> w = s.word(a, 8);
        CycScalar c = s.scalar(a);
        Element left = reduce_word(a, w, c, DescentStrategy::Leftmost);
        Element right = reduce_word(a, w, c, DescentStrategy::Rightmost);
        LetterWord lw;
        for (int l : w) lw.push_back({l, 1});
        CHECK(left == right);
        CHECK(left == a.normal_form(lw, c));
      }
    }
  }

  TEST_CASE("associativity and gradings on seeded elements") {
    for (int d : {1, 3}) {
      AlgebraPtr ap = Algebra::get(2, 1, 3, d);
      const Algebra& a = *ap;
      Sampler s(900 + d);
      for (int t = 0; t < 40; ++t) {
        Element x = s.element(a, 3, 4), y = s.element(a, 3, 4), z = s.element(a, 3, 4);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        Monomial m1 = s.monomial(a, 4), m2 = s.monomial(a, 4);
        Element prod = a.mul_monomials(m1, m2);
        std::vector<int> wsum = a.monomial_weight(m1);
        std::vector<int> w2 = a.monomial_weight(m2);
        for (std::size_t i = 0; i < wsum.size(); ++i) wsum[i] += w2[i];
        for (const auto& [m, c] : prod.terms()) {
          CHECK(a.monomial_weight(m) == wsum);
          CHECK(a.monomial_parity(m) == (a.monomial_parity(m1) + a.monomial_parity(m2)) % 2);
        }
      }
    }
  }
}
