// Acceptance suite: one PASS/FAIL line per criterion. Arguments select criteria
// (default: all ten); the exit code is 1 if any selected criterion fails.

#include "qsuper/algebra.hpp"
#include "qsuper/classical.hpp"
#include "qsuper/classify.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/lusztig.hpp"
#include "qsuper/random.hpp"
#include "qsuper/rmatrix.hpp"
#include "qsuper/roots.hpp"
#include "qsuper/tensor.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

using namespace qsuper;

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

std::string str(int x) { return std::to_string(x); }

// reference Weyl groupoid of sl(2|1): simple roots as (a, b) for eps_bar_a - eps_bar_b, and arrows (source, index, target)
const std::map<int, std::vector<std::pair<int, int>>> kReferenceTau = {
    {1, {{1, 2}, {2, 3}}}, {2, {{2, 1}, {1, 3}}}, {3, {{1, 3}, {3, 2}}},
    {4, {{2, 3}, {3, 1}}}, {5, {{3, 1}, {1, 2}}}, {6, {{3, 2}, {2, 1}}}};
const std::set<std::tuple<int, int, int>> kReferenceEdges = {
    {1, 1, 2}, {2, 1, 1}, {1, 2, 3}, {3, 2, 1}, {3, 1, 5}, {5, 1, 3},
    {2, 2, 4}, {4, 2, 2}, {4, 1, 6}, {6, 1, 4}, {5, 2, 6}, {6, 2, 5}};

Report criterion_groupoid() {
  Report r{"groupoid shape", {}};
  Groupoid g = enumerate_groupoid(2, 1);
  r.add("6 diagrams", g.count() == 6, "got " + str(g.count()));
  r.add("12 arrows", g.edges.size() == 12, "got " + str(static_cast<int>(g.edges.size())));
  for (const auto& [d, tau] : kReferenceTau) {
    if (d > g.count()) break;
    std::vector<Weight> expect;
    for (auto [a, b] : tau) expect.push_back(Weight::root(3, a, b));
    const DynkinDiagram& dd = g.diagram(d);
    r.add("simple roots match the reference groupoid", dd.tau == expect, dd.to_string(g.dims), {{"d", str(d)}});
    bool two_grey = d == 3 || d == 4;
    r.add("node colouring", dd.grey_nodes() == (two_grey ? 2 : 1) && dd.white_nodes() == (two_grey ? 0 : 1),
          dd.to_string(g.dims), {{"d", str(d)}});
  }
  std::set<std::tuple<int, int, int>> edges;
  for (const GroupoidEdge& e : g.edges) edges.insert({e.source, e.index, e.target});
  r.add("arrows match the reference groupoid", edges == kReferenceEdges);
  r.append(verify_cartan_scheme(g));
  r.append(verify_root_system(g));
  return r;
}

Report criterion_pbw() {
  Report r{"pbw", {}};
  for (int p : {3, 5})
    for (int d = 1; d <= 6; ++d) {
      AlgebraPtr a = Algebra::get(2, 1, p, d);
      r.append(verify_pbw(*a));
      std::size_t n = a->pbw_basis().size();
      r.add("PBW monomials = 16 p^4", n == static_cast<std::size_t>(16 * p * p * p * p), "got " + std::to_string(n),
            {{"p", str(p)}, {"d", str(d)}});
    }
  return r;
}

Report criterion_normal_forms() {
  Report r{"normal-form robustness", {}};
  const int p = 3;
  Sampler s(20240601);
  int words = 0, triples = 0;
  std::optional<std::string> word_fail, assoc_fail;
  for (int t = 0; t < 1000; ++t, ++words) {
    AlgebraPtr ap = Algebra::get(2, 1, p, 1 + t % 6);
    const Algebra& a = *ap;
    std::vector<int> w = s.word(a, 8);
    CycScalar c = s.scalar(a);
    Element left = reduce_word(a, w, c, DescentStrategy::Leftmost);
    Element right = reduce_word(a, w, c, DescentStrategy::Rightmost);
    LetterWord lw;
    for (int l : w) lw.push_back({l, 1});
    Element engine = a.normal_form(lw, c);
    if (!(left == right) || !(left == engine)) {
      std::string text;
      for (int l : w) text += a.letters()[l].name + " ";
      if (!word_fail) word_fail = "d=" + str(a.d()) + " word " + text + ": " + a.render(left) + " vs " + a.render(right);
    }
  }
  r.add("leftmost and rightmost descent agree (and match the engine)", !word_fail, word_fail,
        {{"words", str(words)}, {"max_length", "8"}});
  for (int t = 0; t < 500; ++t, ++triples) {
    AlgebraPtr ap = Algebra::get(2, 1, p, 1 + t % 6);
    const Algebra& a = *ap;
    Element x = s.element(a, s.uniform(1, 5), 4), y = s.element(a, s.uniform(1, 5), 4),
            z = s.element(a, s.uniform(1, 5), 4);
    if (!((x * y) * z == x * (y * z)) && !assoc_fail)
      assoc_fail = "d=" + str(a.d()) + " x=" + a.render(x) + " y=" + a.render(y) + " z=" + a.render(z);
  }
  r.add("(xy)z = x(yz)", !assoc_fail, assoc_fail, {{"triples", str(triples)}});
  return r;
}

Report criterion_lusztig() {
  Report r{"lusztig", {}};
  Groupoid g = enumerate_groupoid(2, 1);
  for (const GroupoidEdge& e : g.edges) {
    AlgebraMorphism t = t_map(2, 1, 3, e.index, e.source, TVariant::T);
    AlgebraMorphism ti = t_map(2, 1, 3, e.index, e.source, TVariant::TInverse);
    r.append(verify_isomorphism(t, &ti));
  }
  Report braid = verify_braid(2, 1, 3);
  int br5 = 0;
  for (const auto& c : braid.checks)
    if (c.check.find("br5") != std::string::npos) ++br5;
  r.add("br5 checked from every diagram", br5 >= 6, "br5 checks: " + str(br5));
  r.append(braid);
  return r;
}

Report criterion_hopf() {
  Report r{"hopf", {}};
  const int p = 3;
  for (int d = 1; d <= 6; ++d) {
    AlgebraPtr ap = Algebra::get(2, 1, p, d);
    const Algebra& a = *ap;
    HopfStructure h = HopfStructure::standard(ap);
    r.append(verify_hopf(h, 50, 20240601 + d));
    r.append(verify_group_likes(h));
    // independent pass over all p^2 k-monomials
    int seen = 0;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j, ++seen) {
        Element g = a.element_from_generator('k', 1, i) * a.element_from_generator('k', 2, j);
        Element ginv = a.element_from_generator('k', 1, -i) * a.element_from_generator('k', 2, -j);
        bool ok = h.coproduct(g) == Tensor2::pure(g, g) && h.counit(g).is_one() && h.antipode(g) == ginv &&
                  g * ginv == a.one();
        r.add("group-like", ok, a.render(g), {{"d", str(d)}, {"g", a.render(g)}});
      }
    r.add("p^2 group-likes", seen == p * p, str(seen), {{"d", str(d)}});
  }
  return r;
}

Report criterion_twist() {
  Report r{"twist", {}};
  Groupoid g = enumerate_groupoid(2, 1);
  for (const GroupoidEdge& e : g.edges) r.append(groupoid_path_twist(2, 1, 3, GroupoidWord{e.source, {e.index}}));
  int two_edge = 0;
  for (int d = 1; d <= 6; ++d)
    for (int i = 1; i <= 2; ++i) {
      int j = 3 - i;
      r.append(groupoid_path_twist(2, 1, 3, GroupoidWord{d, {i, j}}));
      ++two_edge;
    }
  r.add("two-edge paths from every diagram", two_edge == 12, str(two_edge));
  return r;
}

Report criterion_rmatrix() {
  Report r{"rmatrix", {}};
  AlgebraPtr a1 = Algebra::get(2, 1, 3, 1);
  HopfStructure h1 = HopfStructure::standard(a1);
  RMatrix r1 = build_rbar1(3);
  r.append(verify_r_basic(r1, h1));
  r.append(verify_quasi_cocommutativity(r1, h1));
  MatrixRep rep1 = MatrixRep::fundamental(a1);
  r.add("triple representation is 27-dimensional", rep1.dim() * rep1.dim() * rep1.dim() == 27);
  r.append(rep1.verify_relations());
  r.append(verify_ybe_in_rep(r1, rep1));

  TransportedR tr = build_rbar3(3);
  r.append(verify_transport(tr));
  AlgebraPtr a3 = Algebra::get(2, 1, 3, 3);
  HopfStructure h3 = HopfStructure::standard(a3);
  r.add("R3 on diagram 3", tr.rbar3.d == 3 && tr.rbar3.value.algebra() == a3.get());
  r.append(verify_r_basic(tr.rbar3, h3));
  r.append(verify_quasi_cocommutativity(tr.rbar3, h3));
  MatrixRep rep3 = MatrixRep::fundamental(a3);
  r.append(rep3.verify_relations());
  r.append(verify_ybe_in_rep(tr.rbar3, rep3));
  return r;
}

Report criterion_classification() {
  Report r{"classification", {}};
  const std::vector<std::vector<int>> expect = {{1, 2, 5, 6}, {3, 4}};
  IsoClasses cls = enumerate_iso_classes(2, 1, 3);
  r.add("quantum-level witnesses", !cls.diagram_level);
  std::string got;
  for (const auto& c : cls.classes) {
    got += "{";
    for (int d : c) got += str(d) + " ";
    got += "}";
  }
  r.add("classes {1,2,5,6} {3,4}", cls.classes == expect, got);
  r.append(cls.report);
  for (int d1 = 1; d1 <= 6; ++d1)
    for (int d2 = 1; d2 <= 6; ++d2) {
      bool same = false;
      for (const auto& c : expect)
        if (std::count(c.begin(), c.end(), d1) && std::count(c.begin(), c.end(), d2)) same = true;
      auto w = hopf_iso_exists(2, 1, 3, d1, d2);
      Params ps{{"d1", str(d1)}, {"d2", str(d2)}};
      r.add("witness exists iff same class", w.has_value() == same, std::nullopt, ps);
      if (w) r.add("witness passes Hopf-morphism verification", w->verification.ok(), w->verification.summary(), ps);
    }
  Groupoid g = enumerate_groupoid(2, 1);
  for (int d = 1; d <= 6; ++d) {
    bool reversal = gram_condition(g, PhiKind::Reverse, d, d) || gram_condition(g, PhiKind::ReverseSwap, d, d);
    std::string want = reversal ? "Z/2Z x (Q(q)*)^2" : "(Q(q)*)^2";
    AutomorphismDescriptor ad = automorphism_group(2, 1, d);
    r.add("automorphism descriptor", ad.group == want, ad.group + " vs " + want, {{"d", str(d)}});
    if (d == 1) r.add("d=1 is torus-only", ad.group == "(Q(q)*)^2", ad.group);
  }
  int order = generator_order(phi_generator_map(PhiKind::ReverseSwap, 2, 1, 3, 1, 1), 24);
  r.add("order of phi''' = 2p = 6", order == 6, "got " + str(order));
  r.append(verify_classification(2, 1, 3));
  return r;
}

Report criterion_classical() {
  Report r{"classical", {}};
  classical::Sl21 s;
  for (int d = 1; d <= 6; ++d) r.append(s.verify_superbialgebra(d));
  for (const GroupoidEdge& e : s.groupoid().edges)
    for (auto v : {classical::LVariant::L, classical::LVariant::LMinus})
      r.append(s.verify_homomorphism(s.l_map(e.index, e.source, v)));
  r.append(s.verify_l_braid());
  auto ob = s.obstruction(1, 3);
  r.add("obstruction: delta_3(phi(e1)) = 0", ob.lhs.is_zero(), "delta_3(phi(e1)) = " + s.to_string(ob.lhs));
  r.add("obstruction: (phi x phi) delta_1(e1) != 0", !ob.rhs.is_zero(), "(phi x phi) delta_1(e1) = 0");
  auto iso = s.superbialgebra_iso_classes();
  r.append(iso.report);
  r.add("classes {1,2,5,6} {3,4}", iso.classes == std::vector<std::vector<int>>{{1, 2, 5, 6}, {3, 4}});
  return r;
}

Report criterion_skew_primitives() {
  Report r{"skew-primitives", {}};
  AlgebraPtr ap = Algebra::get(2, 1, 3, 1);
  const Algebra& a = *ap;
  HopfStructure h = HopfStructure::standard(ap);
  for (const SkewPrimitiveDims& s : skew_primitive_dimensions(h)) {
    Element g = a.monomial(s.g, a.scalar(1));
    // expected span: 1 - g, plus e_i and g f_i when g = k_i
    std::vector<Element> span{a.one() - g};
    for (int i = 0; i < a.rank(); ++i)
      if (g == a.element_from_generator('k', i + 1, 1)) {
        span.push_back(a.element_from_generator('e', i + 1, 1));
        span.push_back(g * a.element_from_generator('f', i + 1, 1));
      }
    int rank = 0;
    std::set<Monomial> support;
    bool disjoint = true;
    for (const Element& c : span) {
      if (c.is_zero()) continue;
      ++rank;
      for (const auto& [m, x] : c.terms()) disjoint = support.insert(m).second && disjoint;
      bool skew = h.coproduct(c) == Tensor2::pure(c, a.one()) + Tensor2::pure(g, c);
      r.add("expected spanning element is (1,g)-skew-primitive", skew, a.render(c), {{"g", s.g_name}});
    }
    r.add("expected spanning set is independent", disjoint, std::nullopt, {{"g", s.g_name}});
    r.add("dim P_{1,g} matches the expected span", s.dimension == rank,
          "computed " + str(s.dimension) + ", expected " + str(rank), {{"g", s.g_name}, {"dimension", str(s.dimension)}});
  }
  return r;
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;  // 0: no bound asserted
  std::function<Report()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "groupoid shape", 1, criterion_groupoid},
      {2, "PBW bases p = 3, 5", 60, criterion_pbw},
      {3, "normal-form robustness", 60, criterion_normal_forms},
      {4, "Lusztig layer", 120, criterion_lusztig},
      {5, "Hopf layer", 120, criterion_hopf},
      {6, "twist layer", 120, criterion_twist},
      {7, "R-matrix", 600, criterion_rmatrix},
      {8, "classification", 120, criterion_classification},
      {9, "classical layer", 10, criterion_classical},
      {10, "skew-primitive dimensions", 0, criterion_skew_primitives},
  };
  return all;
}

std::string format_params(const Params& ps) {
  std::string s;
  for (const auto& [k, v] : ps) s += (s.empty() ? "" : ", ") + k + "=" + v;
  return s.empty() ? s : " [" + s + "]";
}

bool run_criterion(const Criterion& c) {
  auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r.name = c.title;
    r.add("criterion ran without exceptions", false, e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.budget_seconds > 0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    r.add("runtime within " + std::to_string(static_cast<int>(c.budget_seconds)) + " s", secs < c.budget_seconds, buf);
  }
  bool ok = r.ok();
  std::printf("criterion %d (%s): %s  %zu/%zu checks, %.2f s\n", c.id, c.title.c_str(), ok ? "PASS" : "FAIL",
              r.checks.size() - r.failures(), r.checks.size(), secs);
  for (const CheckResult& f : r.checks)
    if (!f.pass)
      std::printf("    failed: %s%s%s\n", f.check.c_str(), format_params(f.params).c_str(),
                  f.witness ? (" :: " + *f.witness).c_str() : "");
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    try {
      selected.push_back(std::stoi(argv[i]));
    } catch (const std::exception&) {
      std::fprintf(stderr, "usage: %s [criterion ...]  (1-10)\n", argv[0]);
      return 2;
    }
  }
  if (selected.empty())
    for (const Criterion& c : criteria()) selected.push_back(c.id);
  bool all_ok = true;
  for (int id : selected) {
    auto it = std::find_if(criteria().begin(), criteria().end(), [id](const Criterion& c) { return c.id == id; });
    if (it == criteria().end()) {
      std::fprintf(stderr, "unknown criterion %d\n", id);
      return 2;
    }
    all_ok = run_criterion(*it) && all_ok;
  }
  return all_ok ? 0 : 1;
}
