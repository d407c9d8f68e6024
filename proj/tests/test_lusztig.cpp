#include "support.hpp"

#include "qsuper/lusztig.hpp"

using namespace qsuper;

TEST_SUITE("lusztig") {
  TEST_CASE("T-map images on the edge (2, 1)") {
    AlgebraMorphism t = t_map(2, 1, 3, 2, 1, TVariant::T);
    const Algebra& b = *t.target();
    const Algebra& a = *t.source();
    CHECK(b.d() == 3);
    auto e = [&b](char k, int i, long x = 1) { return b.element_from_generator(k, i, x); };
    CHECK(t.image(a.generator_letter('k', 1)) == e('k', 2, 2));
    CHECK(t.image(a.generator_letter('e', 1)) == -(e('f', 2) * e('k', 2, -1)));
    CHECK(t.image(a.generator_letter('e', 0)) == -b.qbracket(e('e', 2), e('e', 1), -1));
    // image of a defining relation
    Element e1 = a.element_from_generator('e', 1, 1), f1 = a.element_from_generator('f', 1, 1);
    Element k1 = a.element_from_generator('k', 1, 1), k1i = a.element_from_generator('k', 1, -1);
    Element tk = t.apply(k1), tki = t.apply(k1i);
    CHECK(t.apply(e1 * f1 - f1 * e1) == (tk - tki) * b.inv_q_minus_qinv());
    CHECK(t.apply(a.element_from_generator('e', 2, 2)).is_zero());
    AlgebraMorphism id = AlgebraMorphism::identity(t.source());
    CHECK(id.apply(e1 * f1) == e1 * f1);
  }

  TEST_CASE("every arrow gives an isomorphism") {
    Groupoid g = enumerate_groupoid(2, 1);
    for (const GroupoidEdge& edge : g.edges) {
      AlgebraMorphism t = t_map(2, 1, 3, edge.index, edge.source, TVariant::T);
      AlgebraMorphism ti = t_map(2, 1, 3, edge.index, edge.source, TVariant::TInverse);
      CHECK(t.target()->d() == edge.target);
      CHECK_REPORT(verify_isomorphism(t, &ti));
      CHECK(is_identity_on_generators(compose(ti, t)));
      CHECK(is_identity_on_generators(compose(t, ti)));
      CHECK_REPORT(verify_isomorphism(t_map(2, 1, 3, edge.index, edge.source, TVariant::TMinus)));
    }
  }

  TEST_CASE("flipping b breaks the ef relation") {
    AlgebraMorphism t = t_map(2, 1, 3, 2, 1, TVariant::T);
    const Algebra& a = *t.source();
    const Algebra& b = *t.target();
    std::vector<Element> imgs(a.letter_count());
    for (int l = 0; l < a.letter_count(); ++l)
      if (a.letters()[l].simple >= 0) imgs[l] = t.image(l);
    imgs[a.generator_letter('e', 1)] = -(b.element_from_generator('f', 2, 1) * b.element_from_generator('k', 2, 1));
    AlgebraMorphism bad(t.source(), t.target(), imgs, "T with b flipped");
    CHECK_REPORT_FAILS(verify_isomorphism(bad));
  }

  TEST_CASE("braid relations of the functor") { CHECK_REPORT(verify_braid(2, 1, 3)); }

  TEST_CASE("functor along words") {
    Groupoid g = enumerate_groupoid(2, 1);
    AlgebraMorphism empty = functor_apply(2, 1, 3, GroupoidWord{1, {}});
    CHECK(is_identity_on_generators(empty));
    for (const GroupoidEdge& e : g.edges) {
      AlgebraMorphism back = functor_apply(2, 1, 3, GroupoidWord{e.source, {e.index, e.index}});
      std::string w;
      INFO("edge " << e.source << " i=" << e.index);
      CHECK(is_identity_on_generators(back, &w));
    }
    AlgebraMorphism two = functor_apply(2, 1, 3, GroupoidWord{1, {2, 1}});
    AlgebraMorphism stepwise = compose(functor_edge(2, 1, 3, 1, 3), functor_edge(2, 1, 3, 2, 1));
    CHECK(same_on_generators(two, stepwise));
    Element e1 = two.source()->element_from_generator('e', 1, 1);
    CHECK(two.apply(e1) == functor_edge(2, 1, 3, 1, 3).apply(functor_edge(2, 1, 3, 2, 1).apply(e1)));
  }
}
