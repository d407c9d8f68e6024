#include "qsuper/hopf.hpp"

#include "qsuper/random.hpp"

#include <map>
#include <stdexcept>

namespace qsuper {

namespace {

bool is_simple_letter(const LetterInfo& li) { return li.simple >= 0; }

Element monomial_element(const Algebra& a, const Monomial& m) { return a.monomial(m, a.scalar(1)); }

std::string letter_name(const Algebra& a, int l) { return a.letters()[l].name; }

}  // namespace

// ---------------------------------------------------------------- structure

HopfStructure::HopfStructure(AlgebraPtr a, std::vector<Tensor2> delta, std::vector<CycScalar> eps,
                             std::vector<Element> antipode, std::string provenance)
    : alg_(std::move(a)),
      delta_(std::move(delta)),
      eps_(std::move(eps)),
      s_(std::move(antipode)),
      provenance_(std::move(provenance)) {
  const int n = alg_->letter_count();
  if (static_cast<int>(delta_.size()) != n || static_cast<int>(eps_.size()) != n ||
      static_cast<int>(s_.size()) != n)
    throw std::invalid_argument("Hopf structure needs one image per letter");
  fill_composites();
}

void HopfStructure::fill_composites() {
  const Algebra& a = *alg_;
  for (int l = 0; l < a.letter_count(); ++l) {
    if (is_simple_letter(a.letters()[l])) continue;
    const FreePoly& def = a.letter_definition(l);
    delta_[l] = eval_free_coproduct(def);
    eps_[l] = eval_free_counit(def);
    s_[l] = eval_free_antipode(def);
  }
}

HopfStructure HopfStructure::standard(AlgebraPtr a) {
  const Algebra& A = *a;
  const int n = A.letter_count();
  std::vector<Tensor2> delta(n, Tensor2(&A));
  std::vector<CycScalar> eps(n, A.scalar(0));
  std::vector<Element> s(n, A.zero());
  for (int i = 0; i < A.rank(); ++i) {
    const int K = A.k_letter(i), E = A.generator_letter('e', i), F = A.generator_letter('f', i);
    Element k = A.letter(K), kinv = A.letter(K, A.p() - 1), e = A.letter(E), f = A.letter(F);
    delta[K] = Tensor2::pure(k, k);
    delta[E] = Tensor2::pure(e, A.one()) + Tensor2::pure(k, e);
    delta[F] = Tensor2::pure(f, kinv) + Tensor2::pure(A.one(), f);
    eps[K] = A.scalar(1);
    s[K] = kinv;
    s[E] = -(kinv * e);
    s[F] = -(f * k);
  }
  return HopfStructure(std::move(a), std::move(delta), std::move(eps), std::move(s),
                       "standard d=" + std::to_string(A.d()));
}

const Tensor2& HopfStructure::coproduct_monomial(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->delta.find(m);
    if (it != cache_->delta.end()) return *it->second;
  }
  Tensor2 value(alg_.get());
  if (m.is_one()) {
    value = Tensor2::one(*alg_);
  } else {
    int last = kMaxLetters - 1;
    while (m.e[last] == 0) --last;
    Monomial rest = m;
    --rest.e[last];
    value = coproduct_monomial(rest) * delta_[last];
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, ins] = cache_->delta.try_emplace(m, nullptr);
  if (ins) it->second = std::make_unique<Tensor2>(std::move(value));
  return *it->second;
}

Tensor2 HopfStructure::coproduct(const Element& x) const {
  Tensor2 out(alg_.get());
  for (const auto& [m, c] : x.terms()) out.add_scaled(coproduct_monomial(m), c);
  return out;
}

CycScalar HopfStructure::counit_monomial(const Monomial& m) const {
  CycScalar v = alg_->scalar(1);
  for (int l = 0; l < alg_->letter_count(); ++l)
    if (m.e[l]) v *= eps_[l].pow(m.e[l]);
  return v;
}

CycScalar HopfStructure::counit(const Element& x) const {
  CycScalar v = alg_->scalar(0);
  for (const auto& [m, c] : x.terms()) v += c * counit_monomial(m);
  return v;
}

const Element& HopfStructure::antipode_monomial(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->s.find(m);
    if (it != cache_->s.end()) return *it->second;
  }
  Element value(alg_.get());
  if (m.is_one()) {
    value = alg_->one();
  } else {
    int last = kMaxLetters - 1;
    while (m.e[last] == 0) --last;
    Monomial rest = m;
    --rest.e[last];
    value = s_[last] * antipode_monomial(rest);
    if (alg_->monomial_parity(rest) && alg_->letters()[last].parity) value = -value;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, ins] = cache_->s.try_emplace(m, nullptr);
  if (ins) it->second = std::make_unique<Element>(std::move(value));
  return *it->second;
}

Element HopfStructure::antipode(const Element& x) const {
  Element out(alg_.get());
  for (const auto& [m, c] : x.terms()) out.add_scaled(antipode_monomial(m), c);
  return out;
}

Tensor2 HopfStructure::eval_free_coproduct(const FreePoly& f) const {
  Tensor2 out(alg_.get());
  for (const auto& t : f.terms) {
    Tensor2 prod = Tensor2::one(*alg_);
    for (int l : t.letters) prod = prod * delta_[l];
    out.add_scaled(prod, t.coeff);
  }
  return out;
}

CycScalar HopfStructure::eval_free_counit(const FreePoly& f) const {
  CycScalar v = alg_->scalar(0);
  for (const auto& t : f.terms) {
    CycScalar prod = t.coeff;
    for (int l : t.letters) prod *= eps_[l];
    v += prod;
  }
  return v;
}

Element HopfStructure::eval_free_antipode(const FreePoly& f) const {
  Element out(alg_.get());
  for (const auto& t : f.terms) {
    // S(w l) = (-1)^{|w||l|} S(l) S(w)
    Element prod = alg_->one();
    int parity = 0;
    for (int l : t.letters) {
      const int pl = alg_->letters()[l].parity;
      prod = s_[l] * prod;
      if (parity && pl) prod = -prod;
      parity ^= pl;
    }
    out.add_scaled(prod, t.coeff);
  }
  return out;
}

Element HopfStructure::left_antipode_contract(const Tensor2& t) const {
  Element out(alg_.get());
  for (const auto& [k, c] : t.terms())
    out.add_scaled(alg_->multiply(antipode_monomial(k.first), monomial_element(*alg_, k.second)), c);
  return out;
}

Element HopfStructure::right_antipode_contract(const Tensor2& t) const {
  Element out(alg_.get());
  for (const auto& [k, c] : t.terms())
    out.add_scaled(alg_->multiply(monomial_element(*alg_, k.first), antipode_monomial(k.second)), c);
  return out;
}

// ---------------------------------------------------------------- verification

namespace {

void check_element(const HopfStructure& h, const Element& x, const std::string& label, Report& rep) {
  const Algebra& a = *h.algebra();
  std::vector<std::pair<std::string, std::string>> params{{"x", label}};
  Tensor2 dx = h.coproduct(x);
  auto D = [&h](const Monomial& m) { return h.coproduct_monomial(m); };
  auto eps = [&h](const Monomial& m) { return h.counit_monomial(m); };
  Tensor3 l = map_left(dx, D), r = map_right(dx, D);
  rep.add("coassociativity", l == r, l == r ? "" : "(D x id)D = " + l.to_string() + " ; (id x D)D = " + r.to_string(),
          params);
  Element cl = contract_left(dx, eps), cr = contract_right(dx, eps);
  bool counit_ok = cl == x && cr == x;
  rep.add("counit", counit_ok, counit_ok ? "" : "(eps x id)D = " + a.render(cl) + " ; (id x eps)D = " + a.render(cr),
          params);
  Element unit = a.one() * h.counit(x);
  Element sl = h.left_antipode_contract(dx), sr = h.right_antipode_contract(dx);
  bool s_ok = sl == unit && sr == unit;
  rep.add("antipode", s_ok, s_ok ? "" : "mu(S x id)D = " + a.render(sl) + " ; mu(id x S)D = " + a.render(sr),
          params);
}

}  // namespace

Report verify_hopf(const HopfStructure& h, int samples, std::uint64_t seed) {
  Report rep;
  rep.name = "hopf";
  const Algebra& a = *h.algebra();
  std::vector<FreePoly> rels = a.defining_relations();
  for (auto& r : a.imposed_relations()) rels.push_back(r);
  for (const auto& rel : rels) {
    std::vector<std::pair<std::string, std::string>> params{{"relation", rel.name}};
    Tensor2 dr = h.eval_free_coproduct(rel);
    rep.add("coproduct kills relation", dr.is_zero(), dr.is_zero() ? "" : dr.to_string(), params);
    CycScalar er = h.eval_free_counit(rel);
    rep.add("counit kills relation", er.is_zero(), er.is_zero() ? "" : er.to_string(), params);
    Element sr = h.eval_free_antipode(rel);
    rep.add("antipode kills relation", sr.is_zero(), sr.is_zero() ? "" : a.render(sr), params);
  }
  for (int l = 0; l < a.letter_count(); ++l) check_element(h, a.letter(l), letter_name(a, l), rep);
  Sampler rng(seed);
  for (int s = 0; s < samples; ++s) {
    Element x = rng.element(a, 2, 4), y = rng.element(a, 2, 4);
    check_element(h, x, "sample " + std::to_string(s), rep);
    Tensor2 lhs = h.coproduct(x * y), rhs = h.coproduct(x) * h.coproduct(y);
    rep.add("algebra map", lhs == rhs, lhs == rhs ? "" : a.render(x) + " ; " + a.render(y),
            {{"x", "sample " + std::to_string(s)}});
  }
  return rep;
}

Report compare_structures(const HopfStructure& x, const HopfStructure& y) {
  Report rep;
  rep.name = "compare";
  const Algebra& a = *x.algebra();
  if (x.algebra() != y.algebra()) throw ContextError("structures over different algebras");
  for (int l = 0; l < a.letter_count(); ++l) {
    if (!is_simple_letter(a.letters()[l])) continue;
    std::vector<std::pair<std::string, std::string>> params{{"x", letter_name(a, l)}};
    const Tensor2 &dx = x.letter_coproduct(l), &dy = y.letter_coproduct(l);
    rep.add("coproduct", dx == dy, dx == dy ? "" : dx.to_string() + " vs " + dy.to_string(), params);
    bool e_ok = x.letter_counit(l) == y.letter_counit(l);
    rep.add("counit", e_ok,
            e_ok ? "" : x.letter_counit(l).to_string() + " vs " + y.letter_counit(l).to_string(), params);
    const Element &sx = x.letter_antipode(l), &sy = y.letter_antipode(l);
    rep.add("antipode", sx == sy, sx == sy ? "" : a.render(sx) + " vs " + a.render(sy), params);
  }
  return rep;
}

// ---------------------------------------------------------------- twists

Report twist1_cocycle_check(const Twist& t, const HopfStructure& h) {
  Report rep;
  rep.name = "twist1";
  const Algebra& a = *h.algebra();
  auto D = [&h](const Monomial& m) { return h.coproduct_monomial(m); };
  auto eps = [&h](const Monomial& m) { return h.counit_monomial(m); };
  Tensor3 lhs = map_left(t.j, D) * Tensor3::from12(t.j);
  Tensor3 rhs = map_right(t.j, D) * Tensor3::from23(t.j);
  rep.add("cocycle", lhs == rhs, lhs == rhs ? "" : (lhs - rhs).to_string());
  Element one = a.one();
  Element cl = contract_left(t.j, eps), cr = contract_right(t.j, eps);
  rep.add("counit normalization", cl == one && cr == one,
          cl == one && cr == one ? "" : a.render(cl) + " ; " + a.render(cr));
  Tensor2 p1 = t.j * t.j_inv, p2 = t.j_inv * t.j, unit = Tensor2::one(a);
  rep.add("inverse", p1 == unit && p2 == unit, p1 == unit && p2 == unit ? "" : p1.to_string());
  rep.add("even", t.j.parity() == 0, t.j.parity() == 0 ? "" : "parity " + std::to_string(t.j.parity()));
  return rep;
}

HopfStructure twist1_apply(const Twist& t, const HopfStructure& h) {
  const Algebra& a = *h.algebra();
  const int n = a.letter_count();
  Element u = h.left_antipode_contract(t.j);
  Element u_inv = h.right_antipode_contract(t.j_inv);
  std::vector<Tensor2> delta(n, Tensor2(&a));
  std::vector<CycScalar> eps(n, a.scalar(0));
  std::vector<Element> s(n, a.zero());
  for (int l = 0; l < n; ++l) {
    if (!is_simple_letter(a.letters()[l])) continue;
    delta[l] = t.j_inv * h.letter_coproduct(l) * t.j;
    eps[l] = h.letter_counit(l);
    s[l] = u_inv * h.letter_antipode(l) * u;
  }
  HopfStructure out(h.algebra(), std::move(delta), std::move(eps), std::move(s),
                    h.provenance() + ", twisted by J");
  out.twist_u = u;
  out.twist_u_inv = u_inv;
  return out;
}

HopfStructure twist2_apply(const AlgebraMorphism& chi, const AlgebraMorphism& chi_inv, const HopfStructure& h) {
  if (chi.source() != h.algebra() || chi_inv.target() != h.algebra() || chi_inv.source() != chi.target())
    throw ContextError("transport map does not match the structure");
  const Algebra& w = *chi.target();
  const int n = w.letter_count();
  std::vector<Tensor2> delta(n, Tensor2(&w));
  std::vector<CycScalar> eps(n, w.scalar(0));
  std::vector<Element> s(n, w.zero());
  auto img = [&chi](const Monomial& m) { return chi.apply_monomial(m); };
  for (int l = 0; l < n; ++l) {
    if (!is_simple_letter(w.letters()[l])) continue;
    Element pre = chi_inv.image(l);
    delta[l] = map_tensor(h.coproduct(pre), img, img, w);
    eps[l] = h.counit(pre);
    s[l] = chi.apply(h.antipode(pre));
  }
  return HopfStructure(chi.target(), std::move(delta), std::move(eps), std::move(s),
                       h.provenance() + ", transported by " + chi.label());
}

AlgebraMorphism functor_edge_inverse(int m, int n, int p, int i, int d) {
  AlgebraPtr A = Algebra::get(m, n, p, d);
  const Groupoid& g = A->groupoid();
  if (is_generator_edge(g.diagram(d), i)) return t_map(m, n, p, i, d, TVariant::TInverse);
  auto tgt = g.target(d, i);
  if (!tgt) throw std::invalid_argument("no edge");
  return t_map(m, n, p, i, *tgt, TVariant::T);
}

Twist build_reflection_twist(int m, int n, int p, int i, int d) {
  AlgebraPtr A = Algebra::get(m, n, p, d);
  const Groupoid& g = A->groupoid();
  auto tgt = g.target(d, i);
  if (!tgt) throw std::invalid_argument("no edge");
  if (!is_generator_edge(g.diagram(d), i)) {
    Twist r = build_reflection_twist(m, n, p, i, *tgt);
    AlgebraMorphism tm = t_map(m, n, p, i, d, TVariant::TMinus);
    auto img = [&tm](const Monomial& mo) { return tm.apply_monomial(mo); };
    const Algebra& B = *tm.target();
    return Twist{map_tensor(r.j_inv, img, img, B), map_tensor(r.j, img, img, B)};
  }
  AlgebraMorphism t = t_map(m, n, p, i, d, TVariant::T);
  const Algebra& B = *t.target();
  ReflectionData rd = reflection_data(g, d, i);
  CycScalar qq = B.q(1) - B.q(-1);
  if (rd.parity_i == 1) {
    Tensor2 x = Tensor2::pure(B.element_from_generator('f', i, 1), B.element_from_generator('e', i, 1)) * qq;
    return Twist{Tensor2::one(B) + x, Tensor2::one(B) - x};
  }
  const int xx = bilinear_form(g.dims, rd.x, rd.x);
  CycScalar tq = B.q(-xx);
  Element tf = t.apply(A->element_from_generator('f', i, 1));
  Element te = t.apply(A->element_from_generator('e', i, 1));
  Tensor2 x = Tensor2::pure(tf, te) * qq;
  int order = nilpotency_order(x, p + 1);
  if (order == 0) throw std::logic_error("reflection twist argument is not nilpotent");
  Tensor2 j_inv = q_exp(x, tq, order);
  // sum_n (-1)^n t^{n(n-1)/2} x^n / (n)_t!
  Tensor2 j = Tensor2::one(B), power = Tensor2::one(B);
  CycScalar fact = B.scalar(1);
  for (int k = 1; k < order; ++k) {
    power = power * x;
    fact *= paren_int(tq, k);
    CycScalar c = tq.pow(static_cast<long>(k) * (k - 1) / 2) * fact.inverse();
    if (k % 2) c = -c;
    j.add_scaled(power, c);
  }
  return Twist{j, j_inv};
}

Report groupoid_path_twist(int m, int n, int p, const GroupoidWord& w) {
  Report rep;
  rep.name = "path twist";
  AlgebraPtr A = Algebra::get(m, n, p, w.source);
  std::vector<WordStep> steps = word_steps(A->groupoid(), w);
  HopfStructure h = HopfStructure::standard(A);
  int cur = w.source;
  for (std::size_t k = 0; k < w.indices.size(); ++k) {
    const int i = w.indices[k];
    AlgebraMorphism f = functor_edge(m, n, p, i, cur);
    AlgebraMorphism f_inv = functor_edge_inverse(m, n, p, i, cur);
    HopfStructure moved = twist2_apply(f, f_inv, h);
    Twist j = build_reflection_twist(m, n, p, i, cur);
    std::vector<std::pair<std::string, std::string>> step{
        {"step", std::to_string(k + 1)}, {"edge", std::to_string(cur) + "->" + std::to_string(f.target()->d())},
        {"i", std::to_string(i)}};
    for (auto c : twist1_cocycle_check(j, moved).checks) {
      c.params.insert(c.params.begin(), step.begin(), step.end());
      rep.checks.push_back(std::move(c));
    }
    h = twist1_apply(j, moved);
    cur = f.target()->d();
    HopfStructure target = HopfStructure::standard(f.target());
    for (auto c : compare_structures(h, target).checks) {
      c.check = "matches standard " + c.check;
      c.params.insert(c.params.begin(), step.begin(), step.end());
      rep.checks.push_back(std::move(c));
    }
  }
  if (w.indices.empty()) {
    for (auto c : compare_structures(h, HopfStructure::standard(A)).checks) {
      c.check = "matches standard " + c.check;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

// ---------------------------------------------------------------- group-likes, skew-primitives

namespace {

std::vector<Monomial> k_monomials(const Algebra& a) {
  std::vector<Monomial> out{Monomial{}};
  for (int i = 0; i < a.rank(); ++i) {
    std::vector<Monomial> next;
    for (const auto& m : out)
      for (int e = 0; e < a.p(); ++e) {
        Monomial x = m;
        x.e[a.k_letter(i)] = static_cast<std::uint8_t>(e);
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

// rank of a family of sparse vectors over Q(zeta_p)
template <class Key>
int sparse_rank(std::vector<std::map<Key, CycScalar>> vecs) {
  std::map<Key, std::map<Key, CycScalar>> pivots;
  int rank = 0;
  for (auto& v : vecs) {
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        CycScalar inv = lead->second.inverse();
        for (auto& [k, c] : v) c *= inv;
        pivots.emplace(lead->first, std::move(v));
        ++rank;
        break;
      }
      CycScalar factor = lead->second;
      for (const auto& [k, c] : it->second) {
        auto [slot, ins] = v.try_emplace(k, -(c * factor));
        if (!ins) {
          slot->second -= c * factor;
          if (slot->second.is_zero()) v.erase(slot);
        }
      }
    }
  }
  return rank;
}

}  // namespace

Report verify_group_likes(const HopfStructure& h) {
  Report rep;
  rep.name = "group-likes";
  const Algebra& a = *h.algebra();
  for (const Monomial& g : k_monomials(a)) {
    Element ge = monomial_element(a, g);
    std::vector<std::pair<std::string, std::string>> params{{"g", a.render_monomial(g)}};
    Tensor2 dg = h.coproduct_monomial(g);
    rep.add("coproduct", dg == Tensor2::pure(ge, ge), dg.to_string(), params);
    CycScalar e = h.counit_monomial(g);
    rep.add("counit", e.is_one(), e.to_string(), params);
    Element prod = h.antipode_monomial(g) * ge;
    rep.add("antipode inverse", prod == a.one(), a.render(prod), params);
  }
  return rep;
}

std::vector<SkewPrimitiveDims> skew_primitive_dimensions(const HopfStructure& h) {
  const Algebra& a = *h.algebra();
  std::map<std::vector<int>, std::vector<Monomial>> by_weight;
  for (const Monomial& m : a.pbw_basis()) by_weight[a.monomial_weight(m)].push_back(m);
  std::vector<SkewPrimitiveDims> out;
  for (const Monomial& g : k_monomials(a)) {
    SkewPrimitiveDims res;
    res.g = g;
    res.g_name = a.render_monomial(g);
    // span of 1 - g, plus e_i and g f_i when g = k_i
    int simple = -1, nonzero = 0;
    for (int i = 0; i < a.rank(); ++i) {
      int e = g.e[a.k_letter(i)];
      if (e) {
        ++nonzero;
        if (e == 1) simple = i;
      }
    }
    res.expected = g.is_one() ? 0 : (nonzero == 1 && simple >= 0 ? 3 : 1);
    for (const auto& [wt, basis] : by_weight) {
      std::vector<std::map<MonoPair, CycScalar>> cols;
      cols.reserve(basis.size());
      for (const Monomial& c : basis) {
        Tensor2 v = h.coproduct_monomial(c);
        Element ce = monomial_element(a, c);
        v -= Tensor2::pure(ce, a.one());
        v -= Tensor2::pure(monomial_element(a, g), ce);
        cols.push_back(v.terms());
      }
      int rank = sparse_rank(std::move(cols));
      res.dimension += static_cast<int>(basis.size()) - rank;
    }
    out.push_back(res);
  }
  return out;
}

Report verify_skew_primitives(const HopfStructure& h) {
  Report rep;
  rep.name = "skew-primitives";
  for (const auto& s : skew_primitive_dimensions(h))
    rep.add("dim P_{1,g}", s.dimension == s.expected,
            "dimension " + std::to_string(s.dimension) + ", expected " + std::to_string(s.expected),
            {{"g", s.g_name}, {"dimension", std::to_string(s.dimension)}});
  return rep;
}

}  // namespace qsuper
