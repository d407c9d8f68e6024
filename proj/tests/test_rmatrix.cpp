#include "support.hpp"

#include "qsuper/hopf.hpp"
#include "qsuper/rmatrix.hpp"
#include "qsuper/tensor.hpp"

using namespace qsuper;

namespace {

Element gen(const Algebra& a, char k, int i, long e = 1) { return a.element_from_generator(k, i, e); }

Monomial kmono(const Algebra& a, int i1, int i2) {
  Monomial m;
  m.e[a.k_letter(0)] = static_cast<std::uint8_t>(i1);
  m.e[a.k_letter(1)] = static_cast<std::uint8_t>(i2);
  return m;
}

// K with the sign of the j1 i2 exponent flipped
Tensor2 wrong_k(const Algebra& a) {
  const int p = a.p();
  Tensor2 k(&a);
  CycScalar norm = a.scalar(Rational(1, p * p));
  for (int i1 = 0; i1 < p; ++i1)
    for (int j1 = 0; j1 < p; ++j1)
      for (int i2 = 0; i2 < p; ++i2)
        for (int j2 = 0; j2 < p; ++j2)
          k.add_term(kmono(a, i2, j2), kmono(a, i1, j1), norm * a.q(i1 * (2 * i2 - j2) + j1 * i2));
  return k;
}

}  // namespace

TEST_SUITE("rmatrix") {
  TEST_CASE("the Cartan part K") {
    AlgebraPtr ap = Algebra::get(2, 1, 3, 1);
    const Algebra& a = *ap;
    HopfStructure h = HopfStructure::standard(ap);
    Tensor2 k = build_k(3);
    CHECK(k.size() == 81);
    for (const auto& [mm, c] : k.terms()) {
      CycScalar scaled = c * Rational(9);
      bool root_of_unity = false;
      for (int t = 0; t < 3; ++t) root_of_unity = root_of_unity || scaled == a.q(t);
      CHECK(root_of_unity);
    }
    CHECK(k * build_k_inverse(3) == Tensor2::one(a));
    auto eps = [&h](const Monomial& m) { return h.counit_monomial(m); };
    CHECK(contract_left(k, eps) == a.one());
    CHECK(contract_right(k, eps) == a.one());
    for (int x = 1; x <= 2; ++x)
      for (int y = 1; y <= 2; ++y) {
        Tensor2 kk = Tensor2::pure(gen(a, 'k', x), gen(a, 'k', y));
        CHECK(kk * k == k * kk);
      }
  }

  TEST_CASE("exponential factors") {
    AlgebraPtr ap = Algebra::get(2, 1, 3, 1);
    const Algebra& a = *ap;
    std::vector<Tensor2> fs = rtilde_factors(3);
    REQUIRE(fs.size() == 4);
    CycScalar c = a.q(1) - a.q(-1);
    CHECK(fs[1] == Tensor2::one(a) + Tensor2::pure(gen(a, 'e', 2), gen(a, 'f', 2)) * c);
    Tensor2 x = Tensor2::pure(gen(a, 'e', 1), gen(a, 'f', 1)) * (-c);
    QExp e = q_exp_factor(x, a.q(2));
    CHECK(e.order == 3);
    CHECK(e.value * e.inverse == Tensor2::one(a));
    CHECK(e.inverse * e.value == Tensor2::one(a));
  }

  TEST_CASE("fundamental representations") {
    AlgebraPtr a1 = Algebra::get(2, 1, 3, 1);
    MatrixRep rep = MatrixRep::fundamental(a1);
    CHECK(rep.dim() == 3);
    CHECK(rep.grading() == std::vector<int>{0, 0, 1});
    Matrix k1 = rep.element(gen(*a1, 'k', 1));
    Matrix expect(3, a1->field());
    expect.at(0, 0) = a1->q(1);
    expect.at(1, 1) = a1->q(-1);
    expect.at(2, 2) = a1->scalar(1);
    CHECK(k1 == expect);
    Matrix e2 = rep.element(gen(*a1, 'e', 2));
    CHECK((e2 * e2).is_zero());
    CHECK_REPORT(rep.verify_relations());
    MatrixRep rep3 = MatrixRep::fundamental(Algebra::get(2, 1, 3, 3));
    CHECK_REPORT(rep3.verify_relations());
    CHECK(rep3.f_signs() != rep.f_signs());
  }

  TEST_CASE("identity R is a sanity floor") {
    AlgebraPtr ap = Algebra::get(2, 1, 3, 1);
    RMatrix one{Tensor2::one(*ap), Tensor2::one(*ap), 1, "identity"};
    CHECK_REPORT(verify_ybe_in_rep(one, MatrixRep::fundamental(ap)));
    CHECK_REPORT(verify_r_basic(one, HopfStructure::standard(ap)));
    // the standard coproduct is not cocommutative
    CHECK_REPORT_FAILS(verify_quasi_cocommutativity(one, HopfStructure::standard(ap)));
  }

  TEST_CASE("one wrong exponent in K breaks quasi-cocommutativity") {
    AlgebraPtr ap = Algebra::get(2, 1, 3, 1);
    std::vector<Tensor2> fs = rtilde_factors(3);
    Tensor2 rt = fs[0] * fs[1] * fs[2] * fs[3];
    Tensor2 kw = wrong_k(*ap);
    CHECK_FALSE(kw == build_k(3));
    RMatrix bad{rt * kw, Tensor2(ap.get()), 1, "wrong K"};
    CHECK_REPORT_FAILS(verify_quasi_cocommutativity(bad, HopfStructure::standard(ap)));
  }
}
