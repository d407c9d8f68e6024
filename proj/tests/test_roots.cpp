#include "support.hpp"

#include "qsuper/roots.hpp"

#include <algorithm>

using namespace qsuper;

namespace {

const SuperDims kDims{2, 1};
Weight w(int a, int b) { return Weight::root(3, a, b); }

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("bilinear form and Cartan integers") {
    CHECK(bilinear_form(kDims, w(1, 2), w(1, 2)) == 2);
    CHECK(bilinear_form(kDims, w(2, 3), w(2, 3)) == 0);
    CHECK(bilinear_form(kDims, w(1, 2), w(2, 3)) == -1);
    std::vector<Weight> delta = all_roots(kDims);
    CHECK(delta.size() == 6);
    CHECK(cartan_integer(w(1, 2), w(1, 2), delta) == 2);
    CHECK(cartan_integer(w(2, 3), w(1, 2), delta) == -1);
    CHECK(cartan_integer(w(1, 2), w(2, 3), delta) == -1);
    CHECK(root_parity(kDims, w(1, 2)) == 0);
    CHECK(root_parity(kDims, w(2, 3)) == 1);
  }

  TEST_CASE("reflections follow the groupoid arrows") {
    Groupoid g = enumerate_groupoid(2, 1);
    std::vector<Weight> delta = all_roots(kDims);
    DynkinDiagram r = reflect(kDims, g.diagram(1), 2, delta);
    CHECK(r.tau == std::vector<Weight>{w(1, 3), w(3, 2)});
    CHECK(g.find(r.perm) == 3);
    DynkinDiagram r1 = reflect(kDims, g.diagram(1), 1, delta);
    CHECK(r1.tau == std::vector<Weight>{w(2, 1), w(1, 3)});
    CHECK(g.find(r1.perm) == 2);
    for (const GroupoidEdge& e : g.edges) {
      DynkinDiagram there = reflect(kDims, g.diagram(e.source), e.index, delta);
      DynkinDiagram back = reflect(kDims, there, e.index, delta);
      CHECK(back.tau == g.diagram(e.source).tau);
    }
  }

  TEST_CASE("enumeration sizes and colourings") {
    Groupoid g = enumerate_groupoid(2, 1);
    CHECK(g.count() == 6);
    CHECK(g.edges.size() == 12);
    for (int d = 1; d <= 6; ++d) {
      bool two_grey = d == 3 || d == 4;
      CHECK(g.diagram(d).grey_nodes() == (two_grey ? 2 : 1));
      CHECK(g.diagram(d).white_nodes() == (two_grey ? 0 : 1));
    }
    CHECK(enumerate_groupoid(1, 2).count() == 6);
    CHECK(enumerate_groupoid(3, 1).count() == 24);
    CHECK_THROWS_AS(enumerate_groupoid(2, 2), UnsupportedConfiguration);
    CHECK_THROWS_AS(enumerate_groupoid(1, 1), UnsupportedConfiguration);
  }

  TEST_CASE("axioms and braid relations") {
    for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{3, 1}}) {
      Groupoid g = enumerate_groupoid(m, n);
      CHECK_REPORT(verify_cartan_scheme(g));
      CHECK_REPORT(verify_root_system(g));
      CHECK_REPORT(verify_braid_relations(g));
    }
  }

  TEST_CASE("negative controls") {
    Groupoid g = enumerate_groupoid(2, 1);
    Groupoid cut = g;
    cut.edges.pop_back();
    CHECK_REPORT_FAILS(verify_cartan_scheme(cut));
    std::vector<Weight> missing;
    for (const Weight& r : all_roots(kDims))
      if (!(r == w(1, 3))) missing.push_back(r);
    CHECK_REPORT_FAILS(verify_root_system(g, missing));
  }

  TEST_CASE("graph isomorphism of diagrams") {
    Groupoid g = enumerate_groupoid(2, 1);
    CHECK(diagram_graph_iso(g.diagram(1), g.diagram(5)));
    CHECK_FALSE(diagram_graph_iso(g.diagram(1), g.diagram(3)));
    for (int d = 1; d <= 6; ++d) CHECK(diagram_graph_iso(g.diagram(d), g.diagram(d)));
  }

  TEST_CASE("words and paths") {
    Groupoid g = enumerate_groupoid(2, 1);
    CHECK(word_target(g, parse_word("2,1", 1)) == 5);
    CHECK(word_target(g, parse_word("", 4)) == 4);
    CHECK_THROWS(parse_word("1;2", 1));
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b) CHECK(word_target(g, bfs_path(g, a, b)) == b);
    // sigma sigma = id along any edge and back
    for (const GroupoidEdge& e : g.edges) {
      GroupoidWord there{e.source, {e.index, e.index}};
      CHECK(word_target(g, there) == e.source);
      std::vector<Weight> lin = word_linear_map(g, GroupoidWord{1, {}});
      CHECK(lin == g.diagram(1).tau);
    }
    std::string dot = to_dot(g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') >= 12);
  }
}
