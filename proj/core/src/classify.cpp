#include "qsuper/classify.hpp"

#include "qsuper/hopf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsuper {

std::string phi_kind_name(PhiKind k) {
  switch (k) {
    case PhiKind::Scale: return "phi_a";
    case PhiKind::Reverse: return "phi' o phi_a";
    case PhiKind::Swap: return "phi'' o phi_a";
    case PhiKind::ReverseSwap: return "phi''' o phi_a";
  }
  return "?";
}

namespace {

bool reverses(PhiKind k) { return k == PhiKind::Reverse || k == PhiKind::ReverseSwap; }
bool swaps(PhiKind k) { return k == PhiKind::Swap || k == PhiKind::ReverseSwap; }

// 0-based image of simple index i under the identity or the reversal
int rho(PhiKind k, int rank, int i) { return reverses(k) ? rank - 1 - i : i; }

constexpr PhiKind kKinds[] = {PhiKind::Scale, PhiKind::Reverse, PhiKind::Swap, PhiKind::ReverseSwap};

std::string gram_text(const DynkinDiagram& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.gram.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < d.gram[i].size(); ++j) s += (j ? ", " : "") + std::to_string(d.gram[i][j]);
    s += "]";
  }
  return s + "]";
}

}  // namespace

bool gram_condition(const Groupoid& g, PhiKind k, int d1, int d2) {
  const DynkinDiagram& a = g.diagram(d1);
  const DynkinDiagram& b = g.diagram(d2);
  const int r = g.dims.rank();
  const int sign = swaps(k) ? -1 : 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (a.gram[i][j] != sign * b.gram[rho(k, r, i)][rho(k, r, j)]) return false;
  return true;
}

std::optional<PhiKind> iso_condition(const Groupoid& g, int d1, int d2) {
  if (!diagram_graph_iso(g.diagram(d1), g.diagram(d2))) return std::nullopt;
  for (PhiKind k : kKinds)
    if (gram_condition(g, k, d1, d2)) return k;
  return std::nullopt;
}

AlgebraMorphism phi_generator_map(PhiKind kind, int m, int n, int p, int d1, int d2) {
  AlgebraPtr A = Algebra::get(m, n, p, d1);
  AlgebraPtr B = Algebra::get(m, n, p, d2);
  const int r = A->rank();
  std::vector<Element> imgs(A->letter_count());
  for (int i = 0; i < r; ++i) {
    int j = rho(kind, r, i) + 1;
    imgs[A->k_letter(i)] = B->element_from_generator('k', j, 1);
    if (swaps(kind)) {
      imgs[A->generator_letter('e', i)] = B->element_from_generator('k', j, 1) * B->element_from_generator('f', j, 1);
      imgs[A->generator_letter('f', i)] = B->element_from_generator('e', j, 1) * B->element_from_generator('k', j, -1);
    } else {
      imgs[A->generator_letter('e', i)] = B->element_from_generator('e', j, 1);
      imgs[A->generator_letter('f', i)] = B->element_from_generator('f', j, 1);
    }
  }
  return AlgebraMorphism(A, B, imgs, phi_kind_name(kind));
}

namespace {

// inverse of the unscaled kind map, U^{d2} -> U^{d1}
AlgebraMorphism kind_inverse(PhiKind kind, int m, int n, int p, int d1, int d2) {
  if (!swaps(kind)) return phi_generator_map(kind, m, n, p, d2, d1);
  AlgebraPtr A = Algebra::get(m, n, p, d1);
  AlgebraPtr B = Algebra::get(m, n, p, d2);
  const int r = A->rank();
  std::vector<Element> imgs(B->letter_count());
  for (int i = 0; i < r; ++i) {
    int j = rho(kind, r, i);
    imgs[B->k_letter(j)] = A->element_from_generator('k', i + 1, 1);
    imgs[B->generator_letter('e', j)] = A->element_from_generator('f', i + 1, 1) * A->element_from_generator('k', i + 1, 1);
    imgs[B->generator_letter('f', j)] = A->element_from_generator('k', i + 1, -1) * A->element_from_generator('e', i + 1, 1);
  }
  return AlgebraMorphism(B, A, imgs, phi_kind_name(kind) + " inverse");
}

AlgebraMorphism scale_map(AlgebraPtr A, const std::vector<CycScalar>& a, bool invert) {
  std::vector<Element> imgs(A->letter_count());
  for (int i = 0; i < A->rank(); ++i) {
    CycScalar c = invert ? a[i].inverse() : a[i];
    imgs[A->k_letter(i)] = A->letter(A->k_letter(i));
    imgs[A->generator_letter('e', i)] = A->letter(A->generator_letter('e', i)) * c;
    imgs[A->generator_letter('f', i)] = A->letter(A->generator_letter('f', i)) * c.inverse();
  }
  return AlgebraMorphism(A, A, imgs, invert ? "phi_a inverse" : "phi_a");
}

std::vector<int> simple_letter_ids(const Algebra& a) {
  std::vector<int> out;
  for (int l = 0; l < a.letter_count(); ++l)
    if (a.letters()[l].simple >= 0) out.push_back(l);
  return out;
}

}  // namespace

Report verify_hopf_morphism(const AlgebraMorphism& f, const AlgebraMorphism& inverse) {
  Report r = verify_isomorphism(f, &inverse);
  r.name = "Hopf morphism " + f.label();
  const Algebra& A = *f.source();
  const Algebra& B = *f.target();
  HopfStructure ha = HopfStructure::standard(f.source());
  HopfStructure hb = HopfStructure::standard(f.target());
  auto img = [&f](const Monomial& m) { return f.apply_monomial(m); };
  for (int l : simple_letter_ids(A)) {
    std::vector<std::pair<std::string, std::string>> params = {{"map", f.label()}, {"x", A.letters()[l].name}};
    Element fx = f.image(l);
    Tensor2 lhs = map_tensor(ha.letter_coproduct(l), img, img, B);
    Tensor2 rhs = hb.coproduct(fx);
    r.add("(phi x phi) Delta = Delta phi", lhs == rhs,
          lhs == rhs ? std::nullopt : std::optional<std::string>(lhs.to_string() + " vs " + rhs.to_string()), params);
    CycScalar e1 = ha.letter_counit(l), e2 = hb.counit(fx);
    r.add("eps phi = eps", e1 == e2, e1 == e2 ? std::nullopt : std::optional<std::string>(e1.to_string() + " vs " + e2.to_string()),
          params);
    Element s1 = f.apply(ha.letter_antipode(l)), s2 = hb.antipode(fx);
    r.add("phi S = S phi", s1 == s2,
          s1 == s2 ? std::nullopt : std::optional<std::string>(B.render(s1) + " vs " + B.render(s2)), params);
  }
  return r;
}

IsoWitness build_phi(PhiKind kind, const std::vector<CycScalar>& a, int m, int n, int p, int d1, int d2) {
  AlgebraPtr A = Algebra::get(m, n, p, d1);
  if (static_cast<int>(a.size()) != A->rank()) throw std::invalid_argument("scale vector needs one entry per simple root");
  for (const CycScalar& c : a)
    if (c.is_zero()) throw std::invalid_argument("scale entries must be nonzero");
  if (!gram_condition(A->groupoid(), kind, d1, d2))
    throw std::invalid_argument(phi_kind_name(kind) + " needs its Gram condition between diagrams " +
                                std::to_string(d1) + " and " + std::to_string(d2));
  IsoWitness w;
  w.kind = kind;
  w.d1 = d1;
  w.d2 = d2;
  w.scale = a;
  AlgebraMorphism base = phi_generator_map(kind, m, n, p, d1, d2);
  w.map = compose(base, scale_map(A, a, false));
  w.inverse = compose(scale_map(A, a, true), kind_inverse(kind, m, n, p, d1, d2));
  w.verification = verify_hopf_morphism(w.map, w.inverse);
  w.verification.name = "Hopf morphism " + phi_kind_name(kind) + " " + std::to_string(d1) + "->" + std::to_string(d2);
  w.map.set_verified(w.verification.ok());
  return w;
}

std::optional<IsoWitness> hopf_iso_exists(int m, int n, int p, int d1, int d2) {
  AlgebraPtr A = Algebra::get(m, n, p, d1);
  const Groupoid& g = A->groupoid();
  if (!diagram_graph_iso(g.diagram(d1), g.diagram(d2))) return std::nullopt;
  std::vector<CycScalar> ones(A->rank(), A->scalar(1));
  for (PhiKind k : kKinds) {
    if (!gram_condition(g, k, d1, d2)) continue;
    IsoWitness w = build_phi(k, ones, m, n, p, d1, d2);
    if (w.verification.ok()) return w;
  }
  return std::nullopt;
}

IsoClasses enumerate_iso_classes(int m, int n, int p) {
  SuperDims dims{m, n};
  require_supported(dims);
  Groupoid g = enumerate_groupoid(m, n);
  IsoClasses out;
  out.report.name = "classification";
  out.diagram_level = dims.rank() != 2;
  const int c = g.count();
  std::vector<int> parent(c + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int d1 = 1; d1 <= c; ++d1)
    for (int d2 = 1; d2 <= c; ++d2) {
      bool linked = false;
      if (out.diagram_level) {
        linked = iso_condition(g, d1, d2).has_value();
      } else {
        auto w = hopf_iso_exists(m, n, p, d1, d2);
        linked = w.has_value();
        bool cond = iso_condition(g, d1, d2).has_value();
        if (cond != linked)
          out.report.add("condition holds iff a verified witness exists", false,
                         "condition " + std::string(cond ? "holds" : "fails") + ", witness " +
                             (linked ? "found" : "missing"),
                         {{"d1", std::to_string(d1)}, {"d2", std::to_string(d2)}});
      }
      if (linked) parent[find(d1)] = find(d2);
    }
  std::vector<std::vector<int>> by_root(c + 1);
  for (int d = 1; d <= c; ++d) by_root[find(d)].push_back(d);
  for (auto& cl : by_root)
    if (!cl.empty()) out.classes.push_back(cl);
  std::sort(out.classes.begin(), out.classes.end());
  out.report.add("classes computed", true, std::nullopt,
                 {{"count", std::to_string(out.classes.size())}, {"level", out.diagram_level ? "diagram" : "quantum"}});
  return out;
}

AutomorphismDescriptor automorphism_group(int m, int n, int d) {
  Groupoid g = enumerate_groupoid(m, n);
  const std::string torus = "(Q(q)*)^" + std::to_string(g.dims.rank());
  AutomorphismDescriptor out;
  out.d = d;
  if (gram_condition(g, PhiKind::Reverse, d, d)) {
    out.group = "Z/2Z x " + torus;
    out.extra = PhiKind::Reverse;
  } else if (gram_condition(g, PhiKind::ReverseSwap, d, d)) {
    out.group = "Z/2pZ x " + torus;
    out.extra = PhiKind::ReverseSwap;
  } else {
    out.group = torus;
  }
  return out;
}

int generator_order(const AlgebraMorphism& f, int limit) {
  if (f.source()->d() != f.target()->d()) return 0;
  AlgebraMorphism power = f;
  for (int k = 1; k <= limit; ++k) {
    if (is_identity_on_generators(power)) return k;
    power = compose(f, power);
  }
  return 0;
}

std::vector<int> dynkin_orbit(const Groupoid& g, int d) {
  const int m = g.dims.m, size = g.dims.size();
  const std::vector<int>& perm = g.diagram(d).perm;
  std::vector<int> evens(m), odds(size - m);
  std::iota(evens.begin(), evens.end(), 1);
  std::iota(odds.begin(), odds.end(), m + 1);
  std::vector<int> out;
  std::vector<int> s1 = evens;
  do {
    std::vector<int> s2 = odds;
    do {
      std::vector<int> img;
      for (int slot : perm) img.push_back(slot <= m ? s1[slot - 1] : s2[slot - m - 1]);
      for (int rev = 0; rev < 2; ++rev) {
        int id = g.find(img);
        if (id && std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
        std::reverse(img.begin(), img.end());
      }
    } while (std::next_permutation(s2.begin(), s2.end()));
  } while (std::next_permutation(s1.begin(), s1.end()));
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_classification(int m, int n, int p) {
  Report r{"classification", {}};
  Groupoid g = enumerate_groupoid(m, n);
  const int c = g.count();
  const bool quantum = g.dims.rank() == 2;
  std::vector<std::vector<bool>> rel(c + 1, std::vector<bool>(c + 1, false));
  for (int d1 = 1; d1 <= c; ++d1)
    for (int d2 = 1; d2 <= c; ++d2) {
      if (quantum) {
        auto w = hopf_iso_exists(m, n, p, d1, d2);
        rel[d1][d2] = w.has_value();
        if (w) {
          r.add("witness passes the Hopf-morphism suite", w->verification.ok(),
                w->verification.ok() ? std::nullopt
                                     : std::optional<std::string>(w->verification.first_failure()->check),
                {{"d1", std::to_string(d1)}, {"d2", std::to_string(d2)}, {"kind", phi_kind_name(w->kind)}});
        }
      } else {
        rel[d1][d2] = iso_condition(g, d1, d2).has_value();
      }
    }
  for (int d = 1; d <= c; ++d) r.add("reflexive", rel[d][d], std::nullopt, {{"d", std::to_string(d)}});
  bool sym = true, trans = true;
  std::string ws, wt;
  for (int a = 1; a <= c; ++a)
    for (int b = 1; b <= c; ++b) {
      if (rel[a][b] != rel[b][a] && sym) {
        sym = false;
        ws = std::to_string(a) + "," + std::to_string(b);
      }
      for (int x = 1; x <= c; ++x)
        if (rel[a][b] && rel[b][x] && !rel[a][x] && trans) {
          trans = false;
          wt = std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(x);
        }
    }
  r.add("symmetric", sym, sym ? std::nullopt : std::optional<std::string>(ws));
  r.add("transitive", trans, trans ? std::nullopt : std::optional<std::string>(wt));
  // orbit of every diagram coincides with its class
  for (int d = 1; d <= c; ++d) {
    std::vector<int> orbit = dynkin_orbit(g, d), cls;
    for (int x = 1; x <= c; ++x)
      if (rel[d][x]) cls.push_back(x);
    bool ok = orbit == cls;
    std::string w;
    if (!ok) {
      for (int x : orbit) w += std::to_string(x) + " ";
      w += "vs ";
      for (int x : cls) w += std::to_string(x) + " ";
    }
    r.add("orbit equals isomorphism class", ok, ok ? std::nullopt : std::optional<std::string>(w),
          {{"d", std::to_string(d)}, {"gram", gram_text(g.diagram(d))}});
  }
  return r;
}

}  // namespace qsuper
