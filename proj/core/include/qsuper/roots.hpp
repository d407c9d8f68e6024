#pragma once

#include "qsuper/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsuper {

// sl(m|n) context, m != n. Indices into I(m|n) are 1-based as in the text:
// slot i <= m is an epsilon slot, slot i > m is a delta slot.
struct SuperDims {
  int m = 2;
  int n = 1;
  int size() const { return m + n; }
  int rank() const { return m + n - 1; }
  int slot_sign(int slot) const { return slot <= m ? 1 : -1; }
  friend bool operator==(const SuperDims&, const SuperDims&) = default;
};

struct UnsupportedConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_supported(const SuperDims& dims);

// coefficients of eps_bar_1 .. eps_bar_{m+n}
struct Weight {
  std::vector<int> coords;
  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int size) { return Weight(std::vector<int>(size, 0)); }
  // eps_bar_a - eps_bar_b, 1-based
  static Weight root(int size, int a, int b);

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a);
  Weight operator-() const { return -1 * *this; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
  bool is_zero() const;
  // "e1-d1" style text; epsilon slots e<i>, delta slots d<j>
  std::string to_string(const SuperDims& dims) const;
};

int bilinear_form(const SuperDims& dims, const Weight& a, const Weight& b);
// 0 even, 1 odd, for a root eps_bar_i - eps_bar_j
int root_parity(const SuperDims& dims, const Weight& root);
bool is_root(const Weight& w);
std::vector<Weight> all_roots(const SuperDims& dims);
int cartan_integer(const Weight& alpha, const Weight& beta, const std::vector<Weight>& delta);

struct DynkinDiagram {
  int id = 0;
  std::vector<int> perm;  // (i_1, ..., i_{m+n})
  std::vector<Weight> tau;
  std::vector<std::vector<int>> gram;
  std::vector<std::vector<int>> cartan;
  std::vector<int> parities;

  int white_nodes() const;
  int grey_nodes() const;
  // "e1-e2(o) e2-d1(x)"
  std::string to_string(const SuperDims& dims) const;
};

DynkinDiagram make_diagram(const SuperDims& dims, const std::vector<int>& perm,
                           const std::vector<Weight>& delta, int id = 0);
// reflection at the i-th simple root, 1-based; result carries id 0 until
// resolved against an enumerated groupoid
DynkinDiagram reflect(const SuperDims& dims, const DynkinDiagram& d, int i,
                      const std::vector<Weight>& delta);

// coordinates of a weight in the basis tau of d (weight must lie in h*)
std::vector<int> simple_coordinates(const DynkinDiagram& d, const Weight& w);

struct GroupoidEdge {
  int source = 0;
  int index = 0;  // 1-based simple root index
  int target = 0;
  friend bool operator==(const GroupoidEdge&, const GroupoidEdge&) = default;
};

struct Groupoid {
  SuperDims dims;
  std::vector<Weight> roots;
  std::vector<DynkinDiagram> diagrams;  // diagrams[k].id == k + 1
  std::vector<GroupoidEdge> edges;

  const DynkinDiagram& diagram(int id) const;
  int find(const std::vector<int>& perm) const;  // 0 if absent
  std::optional<int> target(int d, int i) const;
  int count() const { return static_cast<int>(diagrams.size()); }
};

Groupoid enumerate_groupoid(int m, int n);

// A path in the groupoid: start at source, apply reflections at the listed
// simple-root indices in order.
struct GroupoidWord {
  int source = 1;
  std::vector<int> indices;
};

struct WordStep {
  int diagram;
  int index;
};

// diagram sequence visited by the word; throws on a missing edge
std::vector<WordStep> word_steps(const Groupoid& g, const GroupoidWord& w);
int word_target(const Groupoid& g, const GroupoidWord& w);
GroupoidWord parse_word(const std::string& text, int source);
// shortest path by BFS (generator index ascending)
GroupoidWord bfs_path(const Groupoid& g, int from, int to);

// linear map sigma^d_{alpha_i} on h*, applied to a weight
Weight apply_reflection(const Groupoid& g, int d, int i, const Weight& v);
// composed map of a word, evaluated on the basis tau of diagram 1
std::vector<Weight> word_linear_map(const Groupoid& g, const GroupoidWord& w);

Report verify_cartan_scheme(const Groupoid& g);
// root sets default to Delta for every object
Report verify_root_system(const Groupoid& g,
                          const std::optional<std::vector<Weight>>& root_set = std::nullopt);
Report verify_braid_relations(const Groupoid& g);
bool diagram_graph_iso(const DynkinDiagram& a, const DynkinDiagram& b);
// m^{a}_{alpha_i, alpha_j} = |R cap (N0 alpha_i + N0 alpha_j)|, informational only
int root_pair_count(const Groupoid& g, int d, int i, int j);

std::string to_dot(const Groupoid& g);

}  // namespace qsuper
