#include "qsuper/classical.hpp"

#include <numeric>
#include <sstream>

namespace qsuper::classical {

namespace {

constexpr const char* kNames[kDim] = {"h1", "h2", "e1", "f1", "e2", "f2", "e3", "f3"};

Matrix3 zero_matrix() {
  Matrix3 m;
  for (auto& r : m)
    for (auto& c : r) c = 0;
  return m;
}

Matrix3 unit(int a, int b, int coeff = 1) {
  Matrix3 m = zero_matrix();
  m[a - 1][b - 1] = coeff;
  return m;
}

Matrix3 matmul(const Matrix3& x, const Matrix3& y) {
  Matrix3 r = zero_matrix();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (x[i][k] == 0) continue;
      for (int j = 0; j < 3; ++j) r[i][j] += x[i][k] * y[k][j];
    }
  return r;
}

// x y - sign y x
Matrix3 supercommutator(const Matrix3& x, const Matrix3& y, int sign) {
  Matrix3 a = matmul(x, y), b = matmul(y, x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] -= sign * b[i][j];
  return a;
}

std::string coeff_prefix(const Rational& c, bool first) {
  std::ostringstream os;
  if (c < 0)
    os << (first ? "-" : " - ");
  else if (!first)
    os << " + ";
  Rational a = abs(c);
  if (a != 1) os << a.get_str() << "*";
  return os.str();
}

CoTensor add(CoTensor a, const CoTensor& b, const Rational& s = 1) {
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) a.t[i][j] += s * b.t[i][j];
  return a;
}

CoTensor zero_tensor(int d) {
  CoTensor t;
  t.d = d;
  for (auto& r : t.t)
    for (auto& c : r) c = 0;
  return t;
}

LieElement zero_element(int d) {
  LieElement x;
  x.d = d;
  for (auto& c : x.coords) c = 0;
  return x;
}

LieElement scaled(LieElement x, const Rational& s) {
  for (auto& c : x.coords) c *= s;
  return x;
}

LieElement plus(LieElement a, const LieElement& b) {
  for (int k = 0; k < kDim; ++k) a.coords[k] += b.coords[k];
  return a;
}

// outer product x (x) y
CoTensor outer(const LieElement& x, const LieElement& y) {
  CoTensor t = zero_tensor(x.d);
  for (int a = 0; a < kDim; ++a) {
    if (x.coords[a] == 0) continue;
    for (int b = 0; b < kDim; ++b) t.t[a][b] = x.coords[a] * y.coords[b];
  }
  return t;
}

std::pair<std::string, std::string> param(const std::string& k, const std::string& v) {
  return {k, v};
}

int sgn(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

const char* basis_name(int k) { return kNames[k]; }

int LieElement::parity(const std::vector<int>& bp) const {
  int seen = -2;
  for (int k = 0; k < kDim; ++k) {
    if (coords[k] == 0) continue;
    if (seen == -2)
      seen = bp[k];
    else if (seen != bp[k])
      return -1;
  }
  return seen == -2 ? 0 : seen;
}

bool LieElement::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

bool CoTensor::is_zero() const {
  for (const auto& r : t)
    for (const auto& c : r)
      if (c != 0) return false;
  return true;
}

Sl21::Sl21() : g_(enumerate_groupoid(2, 1)) {
  const SuperDims& dims = g_.dims;
  const int nd = g_.count();
  parity_.resize(nd);
  basis_.resize(nd);
  struct_.resize(nd);
  cobr_.resize(nd);
  for (int d = 1; d <= nd; ++d) {
    const auto& dg = g_.diagram(d);
    auto& bp = parity_[d - 1];
    bp = {0, 0, dg.parities[0], dg.parities[0], dg.parities[1], dg.parities[1],
          (dg.parities[0] + dg.parities[1]) % 2, (dg.parities[0] + dg.parities[1]) % 2};
    auto& B = basis_[d - 1];
    for (int k = 0; k < 2; ++k) {
      int a = dg.perm[k], b = dg.perm[k + 1];
      Matrix3 h = zero_matrix();
      h[a - 1][a - 1] = dims.slot_sign(a);
      h[b - 1][b - 1] = -dims.slot_sign(b);
      B[H1 + k] = h;
      B[E1 + 2 * k] = unit(a, b);
      B[F1 + 2 * k] = unit(b, a, dims.slot_sign(a));
    }
    B[E3] = supercommutator(B[E1], B[E2], sgn(bp[E1] * bp[E2]));
    B[F3] = supercommutator(B[F1], B[F2], sgn(bp[F1] * bp[F2]));
  }
  for (int d = 1; d <= nd; ++d) {
    const auto& bp = parity_[d - 1];
    const auto& B = basis_[d - 1];
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b)
        struct_[d - 1][a][b] = from_matrix(d, supercommutator(B[a], B[b], sgn(bp[a] * bp[b])));
    cobr_[d - 1] = cobracket_table(d, CocycleSign::Koszul);
  }
}

LieElement Sl21::basis(int d, int k) const {
  LieElement x = zero_element(d);
  x.coords[k] = 1;
  return x;
}

LieElement Sl21::from_matrix(int d, const Matrix3& m) const {
  // exact Gauss-Jordan on the 9x8 system [B | m]
  const auto& B = basis_[d - 1];
  std::vector<std::vector<Rational>> rows(9, std::vector<Rational>(kDim + 1));
  for (int r = 0; r < 9; ++r) {
    for (int k = 0; k < kDim; ++k) rows[r][k] = B[k][r / 3][r % 3];
    rows[r][kDim] = m[r / 3][r % 3];
  }
  int pr = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < kDim && pr < 9; ++c) {
    int sel = -1;
    for (int r = pr; r < 9; ++r)
      if (rows[r][c] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[pr], rows[sel]);
    Rational inv = 1 / rows[pr][c];
    for (auto& v : rows[pr]) v *= inv;
    for (int r = 0; r < 9; ++r) {
      if (r == pr || rows[r][c] == 0) continue;
      Rational f = rows[r][c];
      for (int k = 0; k <= kDim; ++k) rows[r][k] -= f * rows[pr][k];
    }
    pivot_col.push_back(c);
    ++pr;
  }
  for (int r = pr; r < 9; ++r)
    if (rows[r][kDim] != 0) throw std::logic_error("matrix outside the span of the sl(2|1) basis");
  if (pr != kDim) throw std::logic_error("sl(2|1) basis matrices are dependent");
  LieElement x = zero_element(d);
  for (int r = 0; r < pr; ++r) x.coords[pivot_col[r]] = rows[r][kDim];
  return x;
}

Matrix3 Sl21::to_matrix(const LieElement& x) const {
  Matrix3 m = zero_matrix();
  const auto& B = basis_[x.d - 1];
  for (int k = 0; k < kDim; ++k) {
    if (x.coords[k] == 0) continue;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] += x.coords[k] * B[k][i][j];
  }
  return m;
}

LieElement Sl21::bracket(const LieElement& x, const LieElement& y) const {
  if (x.d != y.d) throw std::invalid_argument("bracket of elements from different diagrams");
  LieElement r = zero_element(x.d);
  for (int a = 0; a < kDim; ++a) {
    if (x.coords[a] == 0) continue;
    for (int b = 0; b < kDim; ++b) {
      if (y.coords[b] == 0) continue;
      r = plus(r, scaled(struct_[x.d - 1][a][b], x.coords[a] * y.coords[b]));
    }
  }
  return r;
}

CoTensor Sl21::cobracket_with(const std::array<CoTensor, kDim>& table, const LieElement& x) const {
  CoTensor r = zero_tensor(x.d);
  for (int k = 0; k < kDim; ++k)
    if (x.coords[k] != 0) r = add(r, table[k], x.coords[k]);
  return r;
}

CoTensor Sl21::cobracket(const LieElement& x) const { return cobracket_with(cobr_[x.d - 1], x); }

CoTensor Sl21::act(int d, int k, const CoTensor& t, CocycleSign s) const {
  const auto& bp = parity_[d - 1];
  CoTensor r = zero_tensor(d);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      const Rational& c = t.t[a][b];
      if (c == 0) continue;
      const auto& xa = struct_[d - 1][k][a].coords;
      const auto& xb = struct_[d - 1][k][b].coords;
      for (int u = 0; u < kDim; ++u)
        if (xa[u] != 0) r.t[u][b] += c * xa[u];
      int sign = s == CocycleSign::Koszul ? sgn(bp[k] * bp[a]) : 1;
      for (int u = 0; u < kDim; ++u)
        if (xb[u] != 0) r.t[a][u] += sign * c * xb[u];
    }
  return r;
}

CoTensor Sl21::flip(const CoTensor& t) const {
  const auto& bp = parity_[t.d - 1];
  CoTensor r = zero_tensor(t.d);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) r.t[b][a] = sgn(bp[a] * bp[b]) * t.t[a][b];
  return r;
}

std::array<CoTensor, kDim> Sl21::cobracket_table(int d, CocycleSign s) const {
  const auto& bp = parity_[d - 1];
  std::array<CoTensor, kDim> table;
  for (auto& t : table) t = zero_tensor(d);
  Rational half(1, 2);
  for (int k = 0; k < 2; ++k) {
    for (int gen : {E1 + 2 * k, F1 + 2 * k}) {
      table[gen].t[H1 + k][gen] = half;
      table[gen].t[gen][H1 + k] = -half;
    }
  }
  // e3 = [e1, e2], f3 = [f1, f2]
  for (auto [c, x, y] : {std::array<int, 3>{E3, E1, E2}, std::array<int, 3>{F3, F1, F2}}) {
    int sign = s == CocycleSign::Koszul ? sgn(bp[x] * bp[y]) : 1;
    table[c] = add(act(d, x, table[y], s), act(d, y, table[x], s), Rational(-sign));
  }
  return table;
}

Report Sl21::verify_superbialgebra(int d) const {
  return verify_superbialgebra(d, cobr_[d - 1], CocycleSign::Koszul);
}

Report Sl21::verify_superbialgebra(int d, const std::array<CoTensor, kDim>& table,
                                   CocycleSign s) const {
  Report rep;
  rep.name = "classical.superbialgebra";
  const auto& bp = parity_[d - 1];
  const std::string dd = std::to_string(d);
  const std::string conv = s == CocycleSign::Koszul ? "koszul" : "literal";

  // supertrace zero on the matrix realization
  {
    std::optional<std::string> w;
    for (int k = 0; k < kDim && !w; ++k) {
      const auto& m = basis_[d - 1][k];
      Rational str = m[0][0] + m[1][1] - m[2][2];
      if (str != 0) w = basis_name(k);
    }
    rep.add("supertrace_zero", !w, w, {param("d", dd)});
  }
  // super-antisymmetry
  {
    std::optional<std::string> w;
    for (int a = 0; a < kDim && !w; ++a)
      for (int b = 0; b < kDim && !w; ++b) {
        LieElement l = struct_[d - 1][a][b];
        LieElement r = scaled(struct_[d - 1][b][a], -sgn(bp[a] * bp[b]));
        if (!(l == r)) w = std::string("(") + basis_name(a) + "," + basis_name(b) + ")";
      }
    rep.add("bracket_antisymmetry", !w, w, {param("d", dd), param("pairs", "64")});
  }
  // super-Jacobi [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
  {
    std::optional<std::string> w;
    for (int a = 0; a < kDim && !w; ++a)
      for (int b = 0; b < kDim && !w; ++b)
        for (int c = 0; c < kDim && !w; ++c) {
          LieElement x = basis(d, a), y = basis(d, b), z = basis(d, c);
          LieElement lhs = bracket(x, bracket(y, z));
          LieElement rhs = plus(bracket(bracket(x, y), z),
                                scaled(bracket(y, bracket(x, z)), sgn(bp[a] * bp[b])));
          if (!(lhs == rhs))
            w = std::string("(") + basis_name(a) + "," + basis_name(b) + "," + basis_name(c) + ")";
        }
    rep.add("super_jacobi", !w, w, {param("d", dd), param("triples", "512")});
  }
  // skew-symmetry and parity preservation of delta
  {
    std::optional<std::string> wskew, wpar;
    for (int k = 0; k < kDim; ++k) {
      const CoTensor& t = table[k];
      if (!wskew && !(flip(t) == add(zero_tensor(d), t, -1))) wskew = basis_name(k);
      for (int a = 0; a < kDim && !wpar; ++a)
        for (int b = 0; b < kDim && !wpar; ++b)
          if (t.t[a][b] != 0 && (bp[a] + bp[b]) % 2 != bp[k]) wpar = basis_name(k);
    }
    rep.add("cobracket_skew", !wskew, wskew, {param("d", dd)});
    rep.add("cobracket_even", !wpar, wpar, {param("d", dd)});
  }
  // cocycle condition on all basis pairs
  {
    std::optional<std::string> w;
    for (int a = 0; a < kDim && !w; ++a)
      for (int b = 0; b < kDim && !w; ++b) {
        CoTensor lhs = cobracket_with(table, struct_[d - 1][a][b]);
        int sign = s == CocycleSign::Koszul ? sgn(bp[a] * bp[b]) : 1;
        CoTensor rhs = add(act(d, a, table[b], s), act(d, b, table[a], s), Rational(-sign));
        if (!(lhs == rhs)) w = std::string("(") + basis_name(a) + "," + basis_name(b) + ")";
      }
    rep.add("cocycle", !w, w, {param("d", dd), param("convention", conv), param("pairs", "64")});
  }
  // co-Jacobi (delta (x) id) delta - (id (x) delta) delta = (id (x) tau)(delta (x) id) delta
  {
    std::optional<std::string> w;
    for (int k = 0; k < kDim && !w; ++k) {
      const CoTensor& t = table[k];
      Tensor8x3 left(kDim * kDim * kDim), right(kDim * kDim * kDim), mid(kDim * kDim * kDim);
      auto idx = [](int a, int b, int c) { return (a * kDim + b) * kDim + c; };
      for (int a = 0; a < kDim; ++a)
        for (int b = 0; b < kDim; ++b) {
          const Rational& c0 = t.t[a][b];
          if (c0 == 0) continue;
          for (int u = 0; u < kDim; ++u)
            for (int v = 0; v < kDim; ++v) {
              const Rational& da = table[a].t[u][v];
              if (da != 0) {
                left[idx(u, v, b)] += c0 * da;
                mid[idx(u, b, v)] += sgn(bp[v] * bp[b]) * c0 * da;
              }
              const Rational& db = table[b].t[u][v];
              if (db != 0) right[idx(a, u, v)] += c0 * db;
            }
        }
      for (std::size_t i = 0; i < left.size() && !w; ++i)
        if (left[i] - right[i] != mid[i]) w = basis_name(k);
    }
    rep.add("co_jacobi", !w, w, {param("d", dd)});
  }
  rep.checks.front().params.push_back(param("e3_decomposition", "[e1,e2]"));
  return rep;
}

LieMap Sl21::l_map(int i, int d, LVariant v) const {
  if (i < 1 || i > 2) throw std::invalid_argument("simple root index must be 1 or 2");
  auto tgt = g_.target(d, i);
  if (!tgt) throw std::invalid_argument("no groupoid edge (" + std::to_string(d) + "," +
                                        std::to_string(i) + ")");
  const SuperDims& dims = g_.dims;
  const int d1 = d, d2 = *tgt;
  const int j = 3 - i;
  const auto& dg1 = g_.diagram(d1);
  Weight ai = dg1.tau[i - 1], aj = dg1.tau[j - 1];
  Weight x = apply_reflection(g_, d1, i, ai), y = apply_reflection(g_, d1, i, aj);
  const int px = root_parity(dims, x), py = root_parity(dims, y);
  const int pi = dg1.parities[i - 1], pj = dg1.parities[j - 1];
  const int b = pi == 0 ? 1 : -1;
  const int xy = bilinear_form(dims, x, y);
  const int aiaj = bilinear_form(dims, ai, aj);
  auto ib = [](bool c) { return c ? 1 : 0; };

  LieMap f;
  const int hi = H1 + (i - 1), hj = H1 + (j - 1);
  const int ei = E1 + 2 * (i - 1), fi = F1 + 2 * (i - 1);
  const int ej = E1 + 2 * (j - 1), fj = F1 + 2 * (j - 1);
  // source and target of the generator table
  const int src = v == LVariant::LInverse ? d2 : d1;
  const int dst = v == LVariant::LInverse ? d1 : d2;
  f.source = src;
  f.target = dst;
  auto B = [&](int k) { return basis(dst, k); };
  f.images[hi] = scaled(B(hi), -1);
  f.images[hj] = plus(B(hi), B(hj));
  switch (v) {
    case LVariant::L:
      f.label = "L_{" + std::to_string(i) + "," + std::to_string(d1) + "}";
      f.images[ei] = scaled(B(fi), sgn(pi));
      f.images[fi] = B(ei);
      f.images[ej] = scaled(bracket(B(ei), B(ej)), -xy);
      f.images[fj] = bracket(B(fj), B(fi));
      break;
    case LVariant::LMinus:
      f.label = "L-_{" + std::to_string(i) + "," + std::to_string(d1) + "}";
      f.images[ei] = B(fi);
      f.images[fi] = scaled(B(ei), sgn(pi));
      f.images[ej] = scaled(bracket(B(ej), B(ei)),
                            aiaj * sgn(px * (px + py) + ib(b == -1) + ib(b * xy == 1)));
      f.images[fj] = scaled(bracket(B(fi), B(fj)),
                            sgn(1 + px * py + ib(b == 1) + ib(b * xy == -1)));
      break;
    case LVariant::LInverse:
      f.label = "L^{-1}_{" + std::to_string(i) + "," + std::to_string(d1) + "}";
      f.images[ei] = B(fi);
      f.images[fi] = scaled(B(ei), sgn(pi));
      f.images[ej] = scaled(bracket(B(ej), B(ei)),
                            xy * sgn(pi * (pi + pj) + ib(b == -1) + ib(b * aiaj == 1)));
      f.images[fj] = scaled(bracket(B(fi), B(fj)),
                            sgn(1 + pi * pj + ib(b == 1) + ib(b * aiaj == -1)));
      break;
  }
  f.images[E3] = bracket(f.images[E1], f.images[E2]);
  f.images[F3] = bracket(f.images[F1], f.images[F2]);
  return f;
}

LieElement Sl21::apply(const LieMap& f, const LieElement& x) const {
  if (x.d != f.source) throw std::invalid_argument("map applied to an element of another diagram");
  LieElement r = zero_element(f.target);
  for (int k = 0; k < kDim; ++k)
    if (x.coords[k] != 0) r = plus(r, scaled(f.images[k], x.coords[k]));
  return r;
}

CoTensor Sl21::apply2(const LieMap& f, const CoTensor& t) const {
  CoTensor r = zero_tensor(f.target);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      if (t.t[a][b] != 0) r = add(r, outer(f.images[a], f.images[b]), t.t[a][b]);
  return r;
}

LieMap Sl21::compose(const LieMap& second, const LieMap& first) const {
  if (first.target != second.source) throw std::invalid_argument("maps are not composable");
  LieMap r;
  r.source = first.source;
  r.target = second.target;
  r.label = second.label + " " + first.label;
  for (int k = 0; k < kDim; ++k) r.images[k] = apply(second, first.images[k]);
  return r;
}

LieMap Sl21::identity(int d) const {
  LieMap r;
  r.source = r.target = d;
  r.label = "id_" + std::to_string(d);
  for (int k = 0; k < kDim; ++k) r.images[k] = basis(d, k);
  return r;
}

bool Sl21::is_identity(const LieMap& f) const {
  if (f.source != f.target) return false;
  for (int k = 0; k < kDim; ++k)
    if (!(f.images[k] == basis(f.source, k))) return false;
  return true;
}

Report Sl21::verify_homomorphism(const LieMap& f) const {
  Report rep;
  rep.name = "classical.homomorphism";
  std::optional<std::string> w;
  for (int a = 0; a < kDim && !w; ++a)
    for (int b = 0; b < kDim && !w; ++b) {
      LieElement lhs = apply(f, struct_[f.source - 1][a][b]);
      LieElement rhs = bracket(f.images[a], f.images[b]);
      if (!(lhs == rhs)) w = std::string("(") + basis_name(a) + "," + basis_name(b) + ")";
    }
  // evenness: images keep parity
  std::optional<std::string> wp;
  for (int k = 0; k < kDim && !wp; ++k)
    if (f.images[k].parity(parity_[f.target - 1]) != parity_[f.source - 1][k]) wp = basis_name(k);
  rep.add("bracket_preserved", !w, w, {param("map", f.label)});
  rep.add("even", !wp, wp, {param("map", f.label)});
  return rep;
}

Report Sl21::verify_bialgebra_morphism(const LieMap& f) const {
  Report rep = verify_homomorphism(f);
  rep.name = "classical.bialgebra_morphism";
  std::optional<std::string> w;
  for (int k = 0; k < kDim && !w; ++k) {
    CoTensor lhs = apply2(f, cobr_[f.source - 1][k]);
    CoTensor rhs = cobracket(f.images[k]);
    if (!(lhs == rhs)) w = basis_name(k);
  }
  rep.add("cobracket_intertwined", !w, w, {param("map", f.label)});
  return rep;
}

Report Sl21::verify_l_braid() const {
  Report rep;
  rep.name = "classical.l_braid";
  const int nd = g_.count();
  for (int d = 1; d <= nd; ++d)
    for (int i = 1; i <= 2; ++i) {
      if (!g_.target(d, i)) continue;
      int d2 = *g_.target(d, i);
      std::vector<std::pair<std::string, std::string>> ps = {param("d", std::to_string(d)),
                                                             param("i", std::to_string(i))};
      LieMap L = l_map(i, d, LVariant::L);
      LieMap Lm = l_map(i, d2, LVariant::LMinus);
      LieMap Linv = l_map(i, d, LVariant::LInverse);
      for (const LieMap* m : {&L, &Lm, &Linv}) {
        Report h = verify_homomorphism(*m);
        rep.add("homomorphism " + m->label, h.ok(),
                h.first_failure() ? h.first_failure()->witness : std::nullopt, ps);
      }
      rep.add("inverse_left", is_identity(compose(Lm, L)),
              std::string("L-_{i,d2} L_{i,d1} != id"), ps);
      rep.add("inverse_right", is_identity(compose(L, Lm)),
              std::string("L_{i,d1} L-_{i,d2} != id"), ps);
      rep.add("remark_inverse", is_identity(compose(Linv, L)) && is_identity(compose(L, Linv)),
              std::string("L^{-1} from the inverse formulas is not two-sided"), ps);
    }
  // braid relations of rank two: 3-fold when both parities agree, 6-fold always
  for (int d = 1; d <= nd; ++d) {
    const auto& dg = g_.diagram(d);
    auto chain = [&](int start, int len) {
      LieMap acc = identity(d);
      int cur = d, idx = start;
      for (int s = 0; s < len; ++s) {
        acc = compose(l_map(idx, cur, LVariant::L), acc);
        cur = *g_.target(cur, idx);
        idx = 3 - idx;
      }
      return acc;
    };
    auto same = [&](const LieMap& a, const LieMap& b) {
      if (a.target != b.target) return false;
      for (int k = 0; k < kDim; ++k)
        if (!(a.images[k] == b.images[k])) return false;
      return true;
    };
    std::vector<std::pair<std::string, std::string>> ps = {param("d", std::to_string(d))};
    if (dg.parities[0] == dg.parities[1])
      rep.add("braid3", same(chain(1, 3), chain(2, 3)), std::string("L1 L2 L1 != L2 L1 L2"), ps);
    rep.add("braid6", same(chain(1, 6), chain(2, 6)), std::string("(L2 L1)^3 != (L1 L2)^3"), ps);
  }
  return rep;
}

std::optional<LieMap> Sl21::generator_map(int d1, int d2, bool reversed) const {
  const auto& a = g_.diagram(d1);
  const auto& b = g_.diagram(d2);
  auto pi = [&](int i) { return reversed ? 1 - i : i; };
  for (int i = 0; i < 2; ++i) {
    if (a.parities[i] != b.parities[pi(i)]) return std::nullopt;
    for (int j = 0; j < 2; ++j)
      if (a.cartan[i][j] != b.cartan[pi(i)][pi(j)]) return std::nullopt;
  }
  LieMap f;
  f.source = d1;
  f.target = d2;
  f.label = "W_{" + std::to_string(d1) + "," + std::to_string(d2) + "}";
  for (int i = 0; i < 2; ++i) {
    f.images[H1 + i] = basis(d2, H1 + pi(i));
    f.images[E1 + 2 * i] = basis(d2, E1 + 2 * pi(i));
    f.images[F1 + 2 * i] = basis(d2, F1 + 2 * pi(i));
  }
  f.images[E3] = bracket(f.images[E1], f.images[E2]);
  f.images[F3] = bracket(f.images[F1], f.images[F2]);
  return f;
}

int Sl21::odd_square_rank(int d) const {
  const auto& bp = parity_[d - 1];
  // rows: projections of delta(b) onto g_1 (x) g_1 for even basis b
  std::vector<std::vector<Rational>> rows;
  for (int k = 0; k < kDim; ++k) {
    if (bp[k] != 0) continue;
    std::vector<Rational> row;
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b)
        row.push_back(bp[a] == 1 && bp[b] == 1 ? cobr_[d - 1][k].t[a][b] : Rational(0));
    rows.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int sel = -1;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        sel = static_cast<int>(r);
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][c] == 0) continue;
      Rational fct = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= fct * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

Sl21::Obstruction Sl21::obstruction(int source, int target) const {
  Obstruction o;
  o.source = source;
  o.target = target;
  GroupoidWord w = bfs_path(g_, source, target);
  LieMap acc = identity(source);
  int cur = source;
  for (int idx : w.indices) {
    acc = compose(l_map(idx, cur, LVariant::L), acc);
    cur = *g_.target(cur, idx);
  }
  o.phi = acc;
  o.lhs = cobracket(acc.images[E1]);
  o.rhs = apply2(acc, cobr_[source - 1][E1]);
  return o;
}

Sl21::IsoResult Sl21::superbialgebra_iso_classes() const {
  IsoResult res;
  res.report.name = "classical.iso_classes";
  const int nd = g_.count();
  std::vector<int> parent(nd + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int d1 = 1; d1 <= nd; ++d1)
    for (int d2 = d1 + 1; d2 <= nd; ++d2) {
      for (bool rev : {false, true}) {
        auto f = generator_map(d1, d2, rev);
        if (!f) continue;
        Report r = verify_bialgebra_morphism(*f);
        res.report.add("isomorphism " + f->label, r.ok(),
                       r.first_failure() ? r.first_failure()->witness : std::nullopt,
                       {param("reversed", rev ? "true" : "false")});
        if (r.ok()) parent[find(d2)] = find(d1);
        break;
      }
    }
  std::vector<std::vector<int>> classes;
  for (int d = 1; d <= nd; ++d) {
    bool placed = false;
    for (auto& c : classes)
      if (find(c.front()) == find(d)) {
        c.push_back(d);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({d});
  }
  // separate classes by the odd-square invariant
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      int da = classes[a].front(), db = classes[b].front();
      int ra = odd_square_rank(da), rb = odd_square_rank(db);
      res.report.add("invariant_separates", ra != rb,
                     std::string("odd-square rank equal (") + std::to_string(ra) + ")",
                     {param("d1", std::to_string(da)), param("d2", std::to_string(db)),
                      param("rank1", std::to_string(ra)), param("rank2", std::to_string(rb))});
    }
  // graph-isomorphism agreement
  bool agree = true;
  for (int d1 = 1; d1 <= nd; ++d1)
    for (int d2 = 1; d2 <= nd; ++d2)
      if ((find(d1) == find(d2)) != diagram_graph_iso(g_.diagram(d1), g_.diagram(d2))) agree = false;
  res.report.add("classes_match_graph_iso", agree, std::string("partition differs from graph classes"));
  res.classes = classes;
  return res;
}

std::string Sl21::to_string(const LieElement& x) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < kDim; ++k) {
    if (x.coords[k] == 0) continue;
    os << coeff_prefix(x.coords[k], first) << basis_name(k);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string Sl21::to_string(const CoTensor& t) const {
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b) {
      if (t.t[a][b] == 0) continue;
      os << coeff_prefix(t.t[a][b], first) << basis_name(a) << "⊗" << basis_name(b);
      first = false;
    }
  return first ? "0" : os.str();
}

}  // namespace qsuper::classical
