#include "qsuper/lusztig.hpp"

#include <stdexcept>

namespace qsuper {

AlgebraMorphism::AlgebraMorphism(AlgebraPtr source, AlgebraPtr target,
                                 const std::vector<Element>& letter_images, std::string label)
    : source_(std::move(source)), target_(std::move(target)), label_(std::move(label)) {
  const Algebra& A = *source_;
  images_.assign(A.letter_count(), target_->zero());
  std::vector<bool> have(A.letter_count(), false);
  for (int l = 0; l < A.letter_count(); ++l) {
    const auto& li = A.letters()[l];
    if (li.kind == LetterKind::K || li.simple >= 0) {
      if (l >= static_cast<int>(letter_images.size()) || !letter_images[l].algebra())
        throw std::invalid_argument("morphism: missing image for " + li.name);
      images_[l] = letter_images[l];
      have[l] = true;
    }
  }
  // composites by increasing height so definitions only use known images
  for (std::size_t h = 2; h <= A.pos_roots().size(); ++h)
    for (int l = 0; l < A.letter_count(); ++l) {
      const auto& li = A.letters()[l];
      if (li.kind == LetterKind::K || li.simple >= 0) continue;
      if (A.pos_roots()[li.root].simple_path.size() != h) continue;
      images_[l] = apply_free(A.letter_definition(l));
      have[l] = true;
    }
}

AlgebraMorphism AlgebraMorphism::identity(AlgebraPtr a) {
  std::vector<Element> imgs;
  for (int l = 0; l < a->letter_count(); ++l) imgs.push_back(a->letter(l));
  return AlgebraMorphism(a, a, imgs, "id");
}

Element AlgebraMorphism::apply_free(const FreePoly& f) const {
  const Algebra& B = *target_;
  Element out = B.zero();
  for (const auto& t : f.terms) {
    Element acc = B.monomial(Monomial{}, t.coeff);
    for (int l : t.letters) {
      acc = B.multiply(acc, images_[l]);
      if (acc.is_zero()) break;
    }
    out += acc;
  }
  return out;
}

Element AlgebraMorphism::apply_monomial(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->map.find(m);
    if (it != cache_->map.end()) return it->second;
  }
  const Algebra& B = *target_;
  Element acc = B.one();
  for (int l : source_->monomial_letters(m)) {
    acc = B.multiply(acc, images_[l]);
    if (acc.is_zero()) break;
  }
  std::lock_guard<std::mutex> lock(cache_->mu);
  cache_->map.emplace(m, acc);
  return acc;
}

Element AlgebraMorphism::apply(const Element& x) const {
  if (x.algebra() && x.algebra() != source_.get())
    throw ContextError("morphism " + label_ + " applied to an element of another algebra");
  Element out = target_->zero();
  for (const auto& [m, c] : x.terms()) out.add_scaled(apply_monomial(m), c);
  return out;
}

AlgebraMorphism compose(const AlgebraMorphism& second, const AlgebraMorphism& first) {
  if (first.target().get() != second.source().get())
    throw std::invalid_argument("compose: " + first.label() + " does not land in the source of " +
                                second.label());
  const Algebra& A = *first.source();
  std::vector<Element> imgs(A.letter_count());
  for (int l = 0; l < A.letter_count(); ++l) {
    const auto& li = A.letters()[l];
    if (li.kind == LetterKind::K || li.simple >= 0) imgs[l] = second.apply(first.image(l));
  }
  AlgebraMorphism out(first.source(), second.target(), imgs, second.label() + " " + first.label());
  out.set_verified(first.verified() && second.verified());
  return out;
}

namespace {

std::vector<int> simple_letters(const Algebra& A) {
  std::vector<int> r;
  for (int i = 0; i < A.rank(); ++i)
    for (char k : {'e', 'f', 'k'}) r.push_back(A.generator_letter(k, i));
  return r;
}

}  // namespace

bool same_on_generators(const AlgebraMorphism& f, const AlgebraMorphism& g, std::string* witness) {
  if (f.source().get() != g.source().get() || f.target().get() != g.target().get()) {
    if (witness) *witness = "different source or target";
    return false;
  }
  for (int l : simple_letters(*f.source()))
    if (!(f.image(l) == g.image(l))) {
      if (witness)
        *witness = f.source()->letters()[l].name + ": " + f.image(l).to_string() + " vs " + g.image(l).to_string();
      return false;
    }
  return true;
}

bool is_identity_on_generators(const AlgebraMorphism& f, std::string* witness) {
  if (f.source().get() != f.target().get()) {
    if (witness) *witness = "source differs from target";
    return false;
  }
  for (int l : simple_letters(*f.source())) {
    Element want = f.source()->letter(l);
    if (!(f.image(l) == want)) {
      if (witness) *witness = f.source()->letters()[l].name + " -> " + f.image(l).to_string();
      return false;
    }
  }
  return true;
}

ReflectionData reflection_data(const Groupoid& g, int d, int i) {
  ReflectionData r;
  auto t = g.target(d, i);
  if (!t) throw std::invalid_argument("no reflection at index " + std::to_string(i));
  const auto& dg = g.diagram(d);
  const int rank = g.dims.rank();
  if (rank != 2) throw UnsupportedConfiguration("Lusztig maps ship for rank 2 only");
  r.source = d;
  r.target = *t;
  r.i = i;
  r.j = 3 - i;
  r.x = apply_reflection(g, d, i, dg.tau[i - 1]);
  r.y = apply_reflection(g, d, i, dg.tau[r.j - 1]);
  r.parity_i = dg.parities[i - 1];
  r.parity_j = dg.parities[r.j - 1];
  r.parity_x = root_parity(g.dims, r.x);
  r.parity_y = root_parity(g.dims, r.y);
  r.b = r.parity_i == 0 ? 1 : -1;
  r.xy = bilinear_form(g.dims, r.x, r.y);
  r.a_ij = dg.gram[i - 1][r.j - 1];
  // x and y must be the simple roots i, j of the target
  const auto& tg = g.diagram(*t);
  if (!(tg.tau[i - 1] == r.x) || !(tg.tau[r.j - 1] == r.y))
    throw std::logic_error("reflected roots are not simple in the target diagram");
  return r;
}

AlgebraMorphism t_map(int m, int n, int p, int i, int d, TVariant v) {
  AlgebraPtr A = Algebra::get(m, n, p, d);
  const auto rd = reflection_data(A->groupoid(), d, i);
  AlgebraPtr B = Algebra::get(m, n, p, rd.target);
  const int i0 = i - 1, j0 = rd.j - 1;
  const int b = rd.b;
  auto sgn = [](int e) { return (e & 1) ? -1L : 1L; };
  auto ind = [](bool c) { return c ? 1 : 0; };

  // images live in `tgt`; generators of the map's source are indexed in `src`
  const Algebra& src = v == TVariant::TInverse ? *B : *A;
  const Algebra& tgt = v == TVariant::TInverse ? *A : *B;
  auto e = [&](int k) { return tgt.letter(tgt.generator_letter('e', k)); };
  auto f = [&](int k) { return tgt.letter(tgt.generator_letter('f', k)); };
  auto kp = [&](int k, long ex) { return tgt.letter(tgt.generator_letter('k', k), ex); };
  auto c = [&](long s) { return tgt.scalar(s); };

  std::vector<Element> imgs(src.letter_count());
  imgs[src.generator_letter('k', i0)] = kp(i0, -1);
  imgs[src.generator_letter('k', j0)] = tgt.multiply(kp(i0, 1), kp(j0, 1));
  const int z = b * rd.xy;
  std::string label;
  switch (v) {
    case TVariant::T:
      label = "T_{" + std::to_string(i) + "," + std::to_string(d) + "}";
      imgs[src.generator_letter('e', i0)] = tgt.multiply(f(i0), kp(i0, b)) * c(sgn(rd.parity_i));
      imgs[src.generator_letter('f', i0)] = tgt.multiply(kp(i0, -b), e(i0));
      imgs[src.generator_letter('e', j0)] = tgt.qbracket(e(i0), e(j0), z) * c(-rd.xy);
      imgs[src.generator_letter('f', j0)] = tgt.qbracket(f(j0), f(i0), -z);
      break;
    case TVariant::TMinus: {
      label = "T^-_{" + std::to_string(i) + "," + std::to_string(d) + "}";
      imgs[src.generator_letter('e', i0)] = tgt.multiply(kp(i0, -b), f(i0));
      imgs[src.generator_letter('f', i0)] = tgt.multiply(e(i0), kp(i0, b)) * c(sgn(rd.parity_x));
      int se = rd.parity_x * (rd.parity_x + rd.parity_y) + ind(b == -1) + ind(z == 1);
      imgs[src.generator_letter('e', j0)] = tgt.qbracket(e(j0), e(i0), z) * c(rd.a_ij * sgn(se));
      int sf = 1 + rd.parity_x * rd.parity_y + ind(b == 1) + ind(z == -1);
      imgs[src.generator_letter('f', j0)] = tgt.qbracket(f(i0), f(j0), -z) * c(sgn(sf));
      break;
    }
    case TVariant::TInverse: {
      label = "T^{-1}_{" + std::to_string(i) + "," + std::to_string(d) + "}";
      const int w = b * rd.a_ij;
      imgs[src.generator_letter('e', i0)] = tgt.multiply(kp(i0, -b), f(i0));
      imgs[src.generator_letter('f', i0)] = tgt.multiply(e(i0), kp(i0, b)) * c(sgn(rd.parity_i));
      int se = rd.parity_i * (rd.parity_i + rd.parity_j) + ind(b == -1) + ind(w == 1);
      imgs[src.generator_letter('e', j0)] = tgt.qbracket(e(j0), e(i0), w) * c(rd.xy * sgn(se));
      int sf = 1 + rd.parity_i * rd.parity_j + ind(b == 1) + ind(w == -1);
      imgs[src.generator_letter('f', j0)] = tgt.qbracket(f(i0), f(j0), -w) * c(sgn(sf));
      break;
    }
  }
  if (v == TVariant::TInverse) return AlgebraMorphism(B, A, imgs, label);
  return AlgebraMorphism(A, B, imgs, label);
}

Report verify_isomorphism(const AlgebraMorphism& f, const AlgebraMorphism* inverse) {
  Report rep;
  rep.name = "isomorphism " + f.label();
  const Algebra& A = *f.source();
  std::vector<std::pair<std::string, std::string>> params = {
      {"map", f.label()}, {"source", std::to_string(A.d())}, {"target", std::to_string(f.target()->d())},
      {"p", std::to_string(A.p())}};
  std::string witness;
  auto rels = A.defining_relations();
  for (auto& r : A.imposed_relations()) rels.push_back(std::move(r));
  for (const auto& r : rels) {
    Element v = f.apply_free(r);
    if (!v.is_zero()) {
      witness = r.name + " -> " + v.to_string();
      break;
    }
  }
  rep.add("relations", witness.empty(), witness, params);
  // parity preservation
  {
    std::string w;
    for (int l : simple_letters(A)) {
      int pi = f.image(l).parity();
      if (pi != A.letters()[l].parity && !f.image(l).is_zero()) {
        w = A.letters()[l].name + " maps to parity " + std::to_string(pi);
        break;
      }
    }
    rep.add("even", w.empty(), w, params);
  }
  if (inverse) {
    std::string w1, w2;
    bool ok1 = is_identity_on_generators(compose(*inverse, f), &w1);
    bool ok2 = is_identity_on_generators(compose(f, *inverse), &w2);
    rep.add("inverse_left", ok1, "inverse after map: " + w1, params);
    rep.add("inverse_right", ok2, "map after inverse: " + w2, params);
  }
  return rep;
}

namespace {

AlgebraMorphism compose_word(int m, int n, int p, int d, const std::vector<int>& idx) {
  AlgebraMorphism acc = AlgebraMorphism::identity(Algebra::get(m, n, p, d));
  int cur = d;
  for (int i : idx) {
    AlgebraMorphism t = functor_edge(m, n, p, i, cur);
    acc = compose(t, acc);
    cur = t.target()->d();
  }
  return acc;
}

}  // namespace

bool is_generator_edge(const DynkinDiagram& d, int i) {
  for (int c : d.tau[i - 1].coords)
    if (c != 0) return c > 0;
  return false;
}

AlgebraMorphism functor_edge(int m, int n, int p, int i, int d) {
  AlgebraPtr A = Algebra::get(m, n, p, d);
  bool gen = is_generator_edge(A->groupoid().diagram(d), i);
  return t_map(m, n, p, i, d, gen ? TVariant::T : TVariant::TMinus);
}

Report verify_braid(int m, int n, int p) {
  Report rep;
  rep.name = "braid";
  AlgebraPtr A = Algebra::get(m, n, p, 1);
  const Groupoid& g = A->groupoid();
  for (const auto& edge : g.edges) {
    auto fwd = t_map(m, n, p, edge.index, edge.source, TVariant::T);
    auto back = t_map(m, n, p, edge.index, edge.target, TVariant::TMinus);
    std::vector<std::pair<std::string, std::string>> params = {
        {"edge", std::to_string(edge.source) + "->" + std::to_string(edge.target)},
        {"i", std::to_string(edge.index)}};
    std::string w1, w2;
    bool ok1 = is_identity_on_generators(compose(back, fwd), &w1);
    bool ok2 = is_identity_on_generators(compose(fwd, back), &w2);
    rep.add("br1 T^- T = id", ok1, w1, params);
    rep.add("br1 T T^- = id", ok2, w2, params);
  }
  for (const auto& dg : g.diagrams) {
    const int d = dg.id;
    for (int i = 1; i <= 2; ++i) {
      int j = 3 - i;
      if (i > j) continue;
      std::vector<int> lhs6{i, j, i, j, i, j}, rhs6{j, i, j, i, j, i};
      std::string w;
      bool ok = same_on_generators(compose_word(m, n, p, d, lhs6), compose_word(m, n, p, d, rhs6), &w);
      rep.add("br5", ok, w, {{"d", std::to_string(d)}});
      if (dg.parities[i - 1] == dg.parities[j - 1]) {
        std::vector<int> lhs3{i, j, i}, rhs3{j, i, j};
        std::string w3;
        bool ok3 = same_on_generators(compose_word(m, n, p, d, lhs3), compose_word(m, n, p, d, rhs3), &w3);
        rep.add("br4", ok3, w3, {{"d", std::to_string(d)}});
      }
    }
  }
  return rep;
}

AlgebraMorphism functor_apply(int m, int n, int p, const GroupoidWord& w) {
  AlgebraPtr A = Algebra::get(m, n, p, w.source);
  word_steps(A->groupoid(), w);  // validates the word
  return compose_word(m, n, p, w.source, w.indices);
}

}  // namespace qsuper
