#include "qsuper/roots.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace qsuper {

void require_supported(const SuperDims& dims) {
  if (dims.m < 1 || dims.n < 1)
    throw UnsupportedConfiguration("sl(m|n) needs m, n >= 1");
  if (dims.m == dims.n)
    throw UnsupportedConfiguration("sl(m|n) with m == n is not supported (m=" +
                                   std::to_string(dims.m) + ")");
}

Weight Weight::root(int size, int a, int b) {
  Weight w = zero(size);
  w.coords[a - 1] += 1;
  w.coords[b - 1] -= 1;
  return w;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

std::string Weight::to_string(const SuperDims& dims) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < static_cast<int>(coords.size()); ++i) {
    int c = coords[i];
    if (c == 0) continue;
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (c != 1 && c != -1) os << std::abs(c);
    if (i < dims.m)
      os << "e" << (i + 1);
    else
      os << "d" << (i + 1 - dims.m);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

int bilinear_form(const SuperDims& dims, const Weight& a, const Weight& b) {
  int s = 0;
  for (int i = 0; i < dims.size(); ++i) s += dims.slot_sign(i + 1) * a.coords[i] * b.coords[i];
  return s;
}

bool is_root(const Weight& w) {
  int plus = 0, minus = 0;
  for (int c : w.coords) {
    if (c == 1)
      ++plus;
    else if (c == -1)
      ++minus;
    else if (c != 0)
      return false;
  }
  return plus == 1 && minus == 1;
}

int root_parity(const SuperDims& dims, const Weight& root) {
  int deltas = 0;
  for (int i = dims.m; i < dims.size(); ++i)
    if (root.coords[i] != 0) ++deltas;
  return deltas == 1 ? 1 : 0;
}

std::vector<Weight> all_roots(const SuperDims& dims) {
  std::vector<Weight> out;
  for (int a = 1; a <= dims.size(); ++a)
    for (int b = 1; b <= dims.size(); ++b)
      if (a != b) out.push_back(Weight::root(dims.size(), a, b));
  return out;
}

int cartan_integer(const Weight& alpha, const Weight& beta, const std::vector<Weight>& delta) {
  if (alpha == beta) return 2;
  std::set<Weight> roots(delta.begin(), delta.end());
  int k = 0;
  Weight cur = beta;
  while (true) {
    cur += alpha;
    if (!roots.count(cur)) break;
    ++k;
  }
  return -k;
}

int DynkinDiagram::white_nodes() const {
  return static_cast<int>(std::count(parities.begin(), parities.end(), 0));
}

int DynkinDiagram::grey_nodes() const {
  return static_cast<int>(std::count(parities.begin(), parities.end(), 1));
}

std::string DynkinDiagram::to_string(const SuperDims& dims) const {
  std::ostringstream os;
  for (std::size_t k = 0; k < tau.size(); ++k) {
    if (k) os << " ";
    os << tau[k].to_string(dims) << (parities[k] ? "(x)" : "(o)");
  }
  return os.str();
}

DynkinDiagram make_diagram(const SuperDims& dims, const std::vector<int>& perm,
                           const std::vector<Weight>& delta, int id) {
  DynkinDiagram d;
  d.id = id;
  d.perm = perm;
  const int r = dims.rank();
  for (int k = 0; k < r; ++k) d.tau.push_back(Weight::root(dims.size(), perm[k], perm[k + 1]));
  d.gram.assign(r, std::vector<int>(r));
  d.cartan.assign(r, std::vector<int>(r));
  for (int a = 0; a < r; ++a) {
    d.parities.push_back(root_parity(dims, d.tau[a]));
    for (int b = 0; b < r; ++b) {
      d.gram[a][b] = bilinear_form(dims, d.tau[a], d.tau[b]);
      d.cartan[a][b] = cartan_integer(d.tau[a], d.tau[b], delta);
    }
  }
  return d;
}

DynkinDiagram reflect(const SuperDims& dims, const DynkinDiagram& d, int i,
                      const std::vector<Weight>& delta) {
  const int r = dims.rank();
  if (i < 1 || i > r)
    throw std::out_of_range("simple root index " + std::to_string(i) + " outside 1.." +
                            std::to_string(r));
  std::vector<int> perm = d.perm;
  std::swap(perm[i - 1], perm[i]);
  DynkinDiagram out = make_diagram(dims, perm, delta);
  // tau of the target must be the image of tau under sigma_{alpha_i}
  const Weight& alpha = d.tau[i - 1];
  for (int k = 0; k < r; ++k) {
    Weight img = d.tau[k] - d.cartan[i - 1][k] * alpha;
    if (img != out.tau[k])
      throw std::logic_error("reflection image disagrees with transposition at " +
                             d.tau[k].to_string(dims));
  }
  return out;
}

std::vector<int> simple_coordinates(const DynkinDiagram& d, const Weight& w) {
  std::vector<int> x(d.tau.size());
  int acc = 0;
  for (std::size_t k = 0; k < d.tau.size(); ++k) {
    acc += w.coords[d.perm[k] - 1];
    x[k] = acc;
  }
  if (acc + w.coords[d.perm.back() - 1] != 0)
    throw std::invalid_argument("weight does not lie in h*");
  return x;
}

const DynkinDiagram& Groupoid::diagram(int id) const {
  if (id < 1 || id > count()) throw std::out_of_range("no diagram with id " + std::to_string(id));
  return diagrams[id - 1];
}

int Groupoid::find(const std::vector<int>& perm) const {
  for (const auto& d : diagrams)
    if (d.perm == perm) return d.id;
  return 0;
}

std::optional<int> Groupoid::target(int d, int i) const {
  for (const auto& e : edges)
    if (e.source == d && e.index == i) return e.target;
  return std::nullopt;
}

Groupoid enumerate_groupoid(int m, int n) {
  Groupoid g;
  g.dims = SuperDims{m, n};
  require_supported(g.dims);
  g.roots = all_roots(g.dims);
  std::vector<int> start(g.dims.size());
  std::iota(start.begin(), start.end(), 1);
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> queue;
  ids[start] = 1;
  g.diagrams.push_back(make_diagram(g.dims, start, g.roots, 1));
  queue.push_back(start);
  while (!queue.empty()) {
    auto perm = queue.front();
    queue.pop_front();
    const DynkinDiagram src = g.diagrams[ids[perm] - 1];
    for (int i = 1; i <= g.dims.rank(); ++i) {
      DynkinDiagram t = reflect(g.dims, src, i, g.roots);
      auto it = ids.find(t.perm);
      int tid;
      if (it == ids.end()) {
        tid = static_cast<int>(g.diagrams.size()) + 1;
        ids[t.perm] = tid;
        t.id = tid;
        g.diagrams.push_back(t);
        queue.push_back(t.perm);
      } else {
        tid = it->second;
      }
      g.edges.push_back({src.id, i, tid});
    }
  }
  return g;
}

std::vector<WordStep> word_steps(const Groupoid& g, const GroupoidWord& w) {
  std::vector<WordStep> steps;
  int cur = w.source;
  g.diagram(cur);
  for (int i : w.indices) {
    auto t = g.target(cur, i);
    if (!t)
      throw std::invalid_argument("no generator sigma_{alpha_" + std::to_string(i) + "," +
                                  std::to_string(cur) + "} in the groupoid");
    steps.push_back({cur, i});
    cur = *t;
  }
  return steps;
}

int word_target(const Groupoid& g, const GroupoidWord& w) {
  int cur = w.source;
  for (const auto& s : word_steps(g, w)) cur = *g.target(s.diagram, s.index);
  return cur;
}

GroupoidWord parse_word(const std::string& text, int source) {
  GroupoidWord w;
  w.source = source;
  std::string digits;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
    } else if (c == ',' || c == ' ' || c == '-' || c == '.') {
      if (!digits.empty()) w.indices.push_back(std::stoi(digits));
      digits.clear();
    } else {
      throw std::invalid_argument(std::string("bad character in groupoid word: ") + c);
    }
  }
  if (!digits.empty()) w.indices.push_back(std::stoi(digits));
  return w;
}

GroupoidWord bfs_path(const Groupoid& g, int from, int to) {
  std::map<int, std::pair<int, int>> parent;  // node -> (prev, index)
  std::deque<int> queue{from};
  parent[from] = {0, 0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (int i = 1; i <= g.dims.rank(); ++i) {
      auto t = g.target(cur, i);
      if (t && !parent.count(*t)) {
        parent[*t] = {cur, i};
        queue.push_back(*t);
      }
    }
  }
  if (!parent.count(to)) throw std::invalid_argument("diagrams are not connected");
  GroupoidWord w;
  w.source = from;
  for (int cur = to; cur != from; cur = parent[cur].first) w.indices.push_back(parent[cur].second);
  std::reverse(w.indices.begin(), w.indices.end());
  return w;
}

Weight apply_reflection(const Groupoid& g, int d, int i, const Weight& v) {
  const auto& dg = g.diagram(d);
  auto x = simple_coordinates(dg, v);
  Weight out = Weight::zero(g.dims.size());
  const Weight& alpha = dg.tau[i - 1];
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    Weight img = dg.tau[k] - dg.cartan[i - 1][k] * alpha;
    out += x[k] * img;
  }
  return out;
}

std::vector<Weight> word_linear_map(const Groupoid& g, const GroupoidWord& w) {
  auto steps = word_steps(g, w);
  std::vector<Weight> images = g.diagram(1).tau;
  for (auto& v : images)
    for (const auto& s : steps) v = apply_reflection(g, s.diagram, s.index, v);
  return images;
}

namespace {

std::string edge_name(int d, int i) {
  return "sigma_{alpha_{" + std::to_string(i) + "," + std::to_string(d) + "}}";
}

std::pair<std::string, std::string> param(const std::string& k, const std::string& v) {
  return {k, v};
}

}  // namespace

Report verify_cartan_scheme(const Groupoid& g) {
  Report rep;
  rep.name = "cartan_scheme";
  const int r = g.dims.rank();
  auto params = std::vector{param("m", std::to_string(g.dims.m)),
                            param("n", std::to_string(g.dims.n))};
  // 1: every rho has an inverse partner
  std::optional<std::string> w1;
  for (const auto& d : g.diagrams) {
    for (int i = 1; i <= r && !w1; ++i) {
      auto t = g.target(d.id, i);
      if (!t) {
        w1 = edge_name(d.id, i) + " missing";
        break;
      }
      auto back = g.target(*t, i);
      if (!back || *back != d.id) w1 = edge_name(*t, i) + " does not return to d=" + std::to_string(d.id);
    }
  }
  rep.add("axiom1_inverse_pairs", !w1, w1, params);
  // 2: diagonal 2, off-diagonal <= 0
  std::optional<std::string> w2;
  for (const auto& d : g.diagrams)
    for (int a = 0; a < r && !w2; ++a)
      for (int b = 0; b < r && !w2; ++b) {
        if (a == b && d.cartan[a][b] != 2)
          w2 = "c_{" + std::to_string(a + 1) + std::to_string(a + 1) + "} != 2 at d=" + std::to_string(d.id);
        if (a != b && d.cartan[a][b] > 0)
          w2 = "positive off-diagonal at d=" + std::to_string(d.id);
      }
  rep.add("axiom2_cartan_entries", !w2, w2, params);
  // 3: zero symmetry
  std::optional<std::string> w3;
  for (const auto& d : g.diagrams)
    for (int a = 0; a < r && !w3; ++a)
      for (int b = 0; b < r && !w3; ++b)
        if ((d.cartan[a][b] == 0) != (d.cartan[b][a] == 0))
          w3 = "c_{" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
               "} zero pattern not symmetric at d=" + std::to_string(d.id);
  rep.add("axiom3_zero_symmetry", !w3, w3, params);
  // 4: c^d_{alpha,beta} = c^{d'}_{sigma alpha, sigma beta}
  std::optional<std::string> w4;
  for (const auto& d : g.diagrams) {
    for (int i = 1; i <= r && !w4; ++i) {
      auto t = g.target(d.id, i);
      if (!t) continue;
      const auto& dt = g.diagram(*t);
      const Weight& alpha = d.tau[i - 1];
      for (int a = 0; a < r && !w4; ++a) {
        Weight sa = d.tau[a] - d.cartan[i - 1][a] * alpha;
        if (sa != dt.tau[a]) {
          w4 = "tau of d=" + std::to_string(*t) + " is not the reflected basis";
          break;
        }
        for (int b = 0; b < r; ++b) {
          Weight sb = d.tau[b] - d.cartan[i - 1][b] * alpha;
          if (cartan_integer(d.tau[a], d.tau[b], g.roots) != cartan_integer(sa, sb, g.roots) ||
              d.cartan[a][b] != dt.cartan[a][b]) {
            w4 = "c^" + std::to_string(d.id) + " vs c^" + std::to_string(*t) + " at (" +
                 std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
            break;
          }
        }
      }
    }
  }
  rep.add("axiom4_reindexing", !w4, w4, params);
  return rep;
}

Report verify_root_system(const Groupoid& g, const std::optional<std::vector<Weight>>& root_set) {
  Report rep;
  rep.name = "root_system";
  const auto& R = root_set ? *root_set : g.roots;
  std::set<Weight> Rset(R.begin(), R.end());
  const int r = g.dims.rank();
  auto params = std::vector{param("m", std::to_string(g.dims.m)),
                            param("n", std::to_string(g.dims.n)),
                            param("roots", std::to_string(R.size()))};
  // 1: R = R+ u -R+ with R+ in N0^I
  std::optional<std::string> w1;
  for (const auto& d : g.diagrams) {
    for (const auto& beta : R) {
      std::vector<int> x;
      try {
        x = simple_coordinates(d, beta);
      } catch (const std::invalid_argument&) {
        w1 = beta.to_string(g.dims) + " outside h*";
        break;
      }
      bool pos = std::all_of(x.begin(), x.end(), [](int c) { return c >= 0; });
      bool neg = std::all_of(x.begin(), x.end(), [](int c) { return c <= 0; });
      if (!(pos || neg)) {
        w1 = beta.to_string(g.dims) + " has mixed signs at d=" + std::to_string(d.id);
        break;
      }
      if (!Rset.count(-beta)) {
        w1 = "-(" + beta.to_string(g.dims) + ") missing";
        break;
      }
    }
    if (w1) break;
  }
  rep.add("axiom1_positive_negative", !w1, w1, params);
  // 2: R cap Z alpha = {alpha, -alpha}
  std::optional<std::string> w2;
  for (const auto& d : g.diagrams) {
    for (int i = 0; i < r && !w2; ++i) {
      const Weight& a = d.tau[i];
      std::set<int> multiples;
      for (const auto& beta : R) {
        for (int k = -3; k <= 3; ++k)
          if (k != 0 && beta == k * a) multiples.insert(k);
      }
      if (multiples != std::set<int>{-1, 1})
        w2 = "multiples of " + a.to_string(g.dims) + " at d=" + std::to_string(d.id);
    }
  }
  rep.add("axiom2_multiples", !w2, w2, params);
  // 3: sigma(R^a) = R^{rho(a)}
  std::optional<std::string> w3;
  for (const auto& d : g.diagrams) {
    for (int i = 1; i <= r && !w3; ++i) {
      if (!g.target(d.id, i)) continue;
      std::set<Weight> img;
      for (const auto& beta : R) {
        try {
          img.insert(apply_reflection(g, d.id, i, beta));
        } catch (const std::invalid_argument&) {
        }
      }
      if (img != Rset) {
        for (const auto& x : img)
          if (!Rset.count(x)) {
            w3 = edge_name(d.id, i) + " maps into " + x.to_string(g.dims) + " outside R";
            break;
          }
        if (!w3) w3 = edge_name(d.id, i) + " image misses a root";
      }
    }
  }
  rep.add("axiom3_reflection_invariance", !w3, w3, params);
  // 4: id in Hom(a,b) => a = b; explore (object, map) states from each object
  std::optional<std::string> w4;
  std::optional<std::string> wsc;
  const auto& base = g.diagram(1).tau;
  for (const auto& a : g.diagrams) {
    std::map<std::pair<int, std::vector<Weight>>, bool> seen;
    std::deque<std::pair<int, std::vector<Weight>>> queue;
    queue.push_back({a.id, base});
    seen[queue.front()] = true;
    while (!queue.empty()) {
      auto [obj, img] = queue.front();
      queue.pop_front();
      if (img == base && obj != a.id && !w4)
        w4 = "identity map from d=" + std::to_string(a.id) + " to d=" + std::to_string(obj);
      if (obj == a.id && img != base && !wsc)
        wsc = "non-identity endomorphism of d=" + std::to_string(a.id);
      for (int i = 1; i <= r; ++i) {
        auto t = g.target(obj, i);
        if (!t) continue;
        std::vector<Weight> next = img;
        for (auto& v : next) v = apply_reflection(g, obj, i, v);
        auto key = std::make_pair(*t, next);
        if (!seen.count(key)) {
          seen[key] = true;
          queue.push_back(key);
        }
      }
    }
  }
  rep.add("axiom4_identity_only_on_objects", !w4, w4, params);
  rep.add("simply_connected", !wsc, wsc, params);
  return rep;
}

Report verify_braid_relations(const Groupoid& g) {
  Report rep;
  rep.name = "braid_relations";
  const int r = g.dims.rank();
  auto compare = [&](int d, const std::vector<int>& lhs, const std::vector<int>& rhs,
                     const std::string& name) {
    GroupoidWord a{d, lhs}, b{d, rhs};
    std::string label = name + " d=" + std::to_string(d);
    std::optional<std::string> w;
    try {
      if (word_target(g, a) != word_target(g, b))
        w = "targets differ";
      else if (word_linear_map(g, a) != word_linear_map(g, b))
        w = "linear maps differ";
    } catch (const std::exception& e) {
      w = e.what();
    }
    std::vector<std::pair<std::string, std::string>> params{param("d", std::to_string(d))};
    rep.add(label, !w, w, params);
  };
  for (const auto& d : g.diagrams) {
    for (int i = 1; i <= r; ++i) {
      GroupoidWord w{d.id, {i, i}};
      std::optional<std::string> wit;
      if (word_target(g, w) != d.id || word_linear_map(g, w) != g.diagram(1).tau)
        wit = "sigma_x sigma_alpha != id";
      rep.add("inverse_pair i=" + std::to_string(i) + " d=" + std::to_string(d.id), !wit, wit,
              {param("d", std::to_string(d.id)), param("i", std::to_string(i))});
    }
    for (int i = 1; i <= r; ++i) {
      for (int j = i + 1; j <= r; ++j) {
        bool both_even = d.parities[i - 1] == 0 && d.parities[j - 1] == 0;
        bool same_parity = d.parities[i - 1] == d.parities[j - 1];
        std::string ij = " i=" + std::to_string(i) + " j=" + std::to_string(j);
        if (j - i >= 2) {
          if (both_even) compare(d.id, {i, j}, {j, i}, "two_fold" + ij);
          compare(d.id, {i, j, i, j}, {j, i, j, i}, "four_fold" + ij);
        } else {
          if (same_parity) compare(d.id, {i, j, i}, {j, i, j}, "three_fold" + ij);
          compare(d.id, {i, j, i, j, i, j}, {j, i, j, i, j, i}, "six_fold" + ij);
        }
      }
    }
  }
  return rep;
}

bool diagram_graph_iso(const DynkinDiagram& a, const DynkinDiagram& b) {
  return a.perm.size() == b.perm.size() && a.white_nodes() == b.white_nodes() &&
         a.grey_nodes() == b.grey_nodes();
}

int root_pair_count(const Groupoid& g, int d, int i, int j) {
  const auto& dg = g.diagram(d);
  int count = 0;
  for (const auto& beta : g.roots) {
    auto x = simple_coordinates(dg, beta);
    bool ok = true;
    for (int k = 0; k < static_cast<int>(x.size()); ++k) {
      if (k == i - 1 || k == j - 1) {
        if (x[k] < 0) ok = false;
      } else if (x[k] != 0) {
        ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

std::string greek(const SuperDims& dims, const Weight& w) {
  std::ostringstream os;
  int plus = -1, minus = -1;
  for (int i = 0; i < dims.size(); ++i) {
    if (w.coords[i] == 1) plus = i;
    if (w.coords[i] == -1) minus = i;
  }
  auto slot = [&](int i) {
    return i < dims.m ? "ε" + std::to_string(i + 1) : "δ" + std::to_string(i + 1 - dims.m);
  };
  os << slot(plus) << "−" << slot(minus);
  return os.str();
}

}  // namespace

std::string to_dot(const Groupoid& g) {
  std::ostringstream os;
  os << "digraph weyl_groupoid {\n";
  os << "  label=\"Weyl groupoid of sl(" << g.dims.m << "|" << g.dims.n << ")\";\n";
  for (const auto& d : g.diagrams) {
    os << "  d" << d.id << " [label=\"d=" << d.id << ":";
    for (std::size_t k = 0; k < d.tau.size(); ++k)
      os << " " << greek(g.dims, d.tau[k]) << (d.parities[k] ? " ⊗" : " ○");
    os << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  d" << e.source << " -> d" << e.target << " [label=\"σ_{α_{" << e.index << ","
       << e.source << "}}\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qsuper
