#include "qsuper/algebra.hpp"
#include "qsuper/classical.hpp"
#include "qsuper/classify.hpp"
#include "qsuper/expr.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/lusztig.hpp"
#include "qsuper/rmatrix.hpp"
#include "qsuper/roots.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace qsuper;
using Json = nlohmann::ordered_json;

namespace {

struct Config {
  int m = 2, n = 1, p = 3, d = 1;
  std::uint64_t seed = 20240601;
  bool slow = false;
  std::string json_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json report_json(const Report& r) {
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json params = Json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    checks.push_back({{"check", c.check},
                      {"params", params},
                      {"status", c.pass ? "pass" : "fail"},
                      {"witness", !c.pass && c.witness ? Json(*c.witness) : Json(nullptr)}});
  }
  return {{"name", r.name}, {"checks", checks}};
}

// collects reports and data, prints summaries, writes JSON, yields the exit code
class Output {
 public:
  Output(std::string command, const Config& cfg) : cfg_(cfg) {
    doc_["command"] = std::move(command);
    doc_["config"] = {{"m", cfg.m}, {"n", cfg.n}, {"p", cfg.p}, {"d", cfg.d}, {"seed", cfg.seed}};
    doc_["reports"] = Json::array();
    doc_["data"] = Json::object();
  }
  void add(const Report& r) {
    ok_ = ok_ && r.ok();
    std::cout << r.summary() << "\n";
    for (const CheckResult& c : r.checks) {
      if (c.pass) continue;
      std::cout << "  FAIL " << c.check;
      for (const auto& [k, v] : c.params) std::cout << " " << k << "=" << v;
      if (c.witness) std::cout << " :: " << *c.witness;
      std::cout << "\n";
    }
    doc_["reports"].push_back(report_json(r));
  }
  Json& data() { return doc_["data"]; }
  void fail() { ok_ = false; }
  int finish() {
    if (!cfg_.json_path.empty()) {
      std::ofstream os(cfg_.json_path);
      if (!os) throw UsageError("cannot write " + cfg_.json_path);
      os << doc_.dump(2) << "\n";
    }
    return ok_ ? 0 : 1;
  }

 private:
  const Config& cfg_;
  Json doc_;
  bool ok_ = true;
};

AlgebraPtr algebra(const Config& c) { return Algebra::get(c.m, c.n, c.p, c.d); }

Json tensor_json(const Tensor2& t) {
  const Algebra& a = *t.algebra();
  Json out = Json::array();
  for (const auto& [mm, c] : t.terms())
    out.push_back({{"mono_left", a.render_monomial(mm.first)},
                   {"mono_right", a.render_monomial(mm.second)},
                   {"coeff", c.to_string()}});
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j).to_string());
    out.push_back(row);
  }
  return out;
}

Json element_table(const AlgebraMorphism& f) {
  const Algebra& a = *f.source();
  Json t = Json::object();
  for (int l = 0; l < a.letter_count(); ++l)
    if (a.letters()[l].simple >= 0) t[a.letters()[l].name] = f.target()->render(f.image(l));
  return t;
}

int cmd_groupoid(const Config& c, const std::string& action, const std::string& dot_path) {
  Groupoid g = enumerate_groupoid(c.m, c.n);
  Output out("groupoid " + action, c);
  if (action == "enumerate") {
    Json ds = Json::array();
    for (const DynkinDiagram& d : g.diagrams) {
      std::cout << "d=" << d.id << ": " << d.to_string(g.dims) << "\n";
      ds.push_back({{"id", d.id}, {"tau", d.to_string(g.dims)}, {"parities", d.parities}, {"gram", d.gram}});
    }
    Json es = Json::array();
    for (const GroupoidEdge& e : g.edges) {
      std::cout << e.source << " --s" << e.index << "--> " << e.target << "\n";
      es.push_back({{"source", e.source}, {"index", e.index}, {"target", e.target}});
    }
    out.data()["diagrams"] = ds;
    out.data()["edges"] = es;
    std::cout << g.count() << " diagrams, " << g.edges.size() << " edges\n";
  } else if (action == "verify") {
    out.add(verify_cartan_scheme(g));
    out.add(verify_root_system(g));
    out.add(verify_braid_relations(g));
  } else if (action == "dot") {
    std::string dot = to_dot(g);
    if (dot_path.empty()) std::cout << dot;
  }
  if (!dot_path.empty()) {
    std::ofstream os(dot_path);
    if (!os) throw UsageError("cannot write " + dot_path);
    os << to_dot(g);
    std::cout << "wrote " << dot_path << "\n";
  }
  return out.finish();
}

int cmd_classical(const Config& c) {
  if (c.m != 2 || c.n != 1) throw UsageError("classical layer covers sl(2|1) only");
  classical::Sl21 s;
  Output out("classical verify", c);
  for (int d = 1; d <= s.groupoid().count(); ++d) out.add(s.verify_superbialgebra(d));
  for (const GroupoidEdge& e : s.groupoid().edges)
    for (auto v : {classical::LVariant::L, classical::LVariant::LMinus})
      out.add(s.verify_homomorphism(s.l_map(e.index, e.source, v)));
  out.add(s.verify_l_braid());
  auto iso = s.superbialgebra_iso_classes();
  out.add(iso.report);
  auto ob = s.obstruction(1, 3);
  Report orep{"classical obstruction", {}};
  orep.add("delta_3(phi(e1)) = 0", ob.lhs.is_zero(), "delta_3(phi(e1)) = " + s.to_string(ob.lhs));
  orep.add("(phi x phi) delta_1(e1) != 0", !ob.rhs.is_zero(), "(phi x phi) delta_1(e1) = 0");
  out.add(orep);
  out.data()["classes"] = iso.classes;
  out.data()["obstruction"] = {{"lhs", s.to_string(ob.lhs)}, {"rhs", s.to_string(ob.rhs)}};
  for (int d = 1; d <= s.groupoid().count(); ++d)
    out.data()["odd_square_rank"][std::to_string(d)] = s.odd_square_rank(d);
  return out.finish();
}

int cmd_pbw(const Config& c, const std::string& action, bool all) {
  Output out("pbw " + action, c);
  std::vector<int> ds;
  if (all) {
    for (int d = 1; d <= enumerate_groupoid(c.m, c.n).count(); ++d) ds.push_back(d);
  } else {
    ds.push_back(c.d);
  }
  for (int d : ds) {
    AlgebraPtr a = Algebra::get(c.m, c.n, c.p, d);
    if (action == "dim") {
      std::size_t n = a->pbw_basis().size();
      std::cout << n << "\n";
      out.data()[std::to_string(d)] = {{"count", n}, {"formula", a->pbw_dimension_formula()}};
      if (n != a->pbw_dimension_formula()) out.fail();
    } else {
      out.add(verify_pbw(*a));
    }
  }
  return out.finish();
}

int cmd_nf(const Config& c, const std::string& text) {
  AlgebraPtr a = algebra(c);
  Element x = eval_text(text, *a);
  std::cout << a->render(x) << "\n";
  Output out("nf", c);
  out.data()["input"] = text;
  out.data()["normal_form"] = a->render(x);
  return out.finish();
}

int cmd_hopf(const Config& c, bool skew, int samples) {
  AlgebraPtr a = algebra(c);
  HopfStructure h = HopfStructure::standard(a);
  Output out("hopf verify", c);
  out.add(verify_hopf(h, samples, c.seed));
  out.add(verify_group_likes(h));
  if (skew) {
    out.add(verify_skew_primitives(h));
    for (const auto& s : skew_primitive_dimensions(h)) out.data()["skew_primitive_dims"][s.g_name] = s.dimension;
  }
  return out.finish();
}

int cmd_lusztig(const Config& c, bool braid) {
  Output out("lusztig verify", c);
  Groupoid g = enumerate_groupoid(c.m, c.n);
  for (const GroupoidEdge& e : g.edges) {
    AlgebraMorphism t = t_map(c.m, c.n, c.p, e.index, e.source, TVariant::T);
    AlgebraMorphism ti = t_map(c.m, c.n, c.p, e.index, e.source, TVariant::TInverse);
    out.add(verify_isomorphism(t, &ti));
    AlgebraMorphism tm = t_map(c.m, c.n, c.p, e.index, e.source, TVariant::TMinus);
    out.add(verify_isomorphism(tm));
  }
  if (braid) out.add(verify_braid(c.m, c.n, c.p));
  return out.finish();
}

int cmd_twist(const Config& c, const std::string& word) {
  GroupoidWord w = parse_word(word, c.d);
  Groupoid g = enumerate_groupoid(c.m, c.n);
  int target = word_target(g, w);
  Output out("twist path", c);
  out.data()["word"] = w.indices;
  out.data()["target"] = target;
  std::cout << "path " << c.d << " -> " << target << "\n";
  out.add(groupoid_path_twist(c.m, c.n, c.p, w));
  return out.finish();
}

int cmd_rmatrix(const Config& c, const std::string& action, const std::vector<std::string>& verify,
                const std::string& export_path) {
  if (c.m != 2 || c.n != 1) throw UsageError("R-matrices ship for sl(2|1) only");
  if (c.d != 1 && c.d != 3) throw UsageError("R-matrices ship for d = 1 and d = 3");
  Output out("rmatrix " + action, c);
  AlgebraPtr a = algebra(c);
  HopfStructure h = HopfStructure::standard(a);
  RMatrix r;
  std::optional<TransportedR> tr;
  if (c.d == 1) {
    r = build_rbar1(c.p);
  } else {
    tr = build_rbar3(c.p);
    r = tr->rbar3;
  }
  std::cout << "R on d=" << r.d << " (" << r.provenance << "): " << r.value.size() << " terms\n";
  MatrixRep rep = MatrixRep::fundamental(a);
  out.data()["terms"] = r.value.size();
  out.data()["provenance"] = r.provenance;
  std::vector<std::string> todo = verify;
  if (action == "verify" && todo.empty()) todo = {"basic", "qc", "ybe-rep", "transport"};
  if (c.slow && std::find(todo.begin(), todo.end(), "hex") == todo.end()) todo.push_back("hex");
  for (const std::string& v : todo) {
    if (v == "basic") out.add(verify_r_basic(r, h));
    else if (v == "qc") out.add(verify_quasi_cocommutativity(r, h));
    else if (v == "ybe-rep") {
      out.add(rep.verify_relations());
      out.add(verify_ybe_in_rep(r, rep));
    } else if (v == "transport") {
      if (tr) {
        out.add(verify_transport(*tr));
        Report extra = verify_commuted_display(*tr);
        std::cout << "(informational) " << extra.summary() << "\n";
        out.data()["commuted_display"] = report_json(extra);
      }
    } else if (v == "hex") {
      out.add(verify_hexagons(r, h));
    } else {
      throw UsageError("unknown check '" + v + "' (basic, qc, ybe-rep, transport, hex)");
    }
  }
  if (!export_path.empty()) {
    Json ex = {{"d", r.d},
               {"provenance", r.provenance},
               {"terms", tensor_json(r.value)},
               {"rep_signs", rep.f_signs()},
               {"matrix", matrix_json(rep.tensor2(r.value))}};
    std::ofstream os(export_path);
    if (!os) throw UsageError("cannot write " + export_path);
    os << ex.dump(2) << "\n";
    std::cout << "wrote " << export_path << "\n";
  }
  return out.finish();
}

int cmd_classify(const Config& c, bool orbits) {
  Output out("classify", c);
  IsoClasses cls = enumerate_iso_classes(c.m, c.n, c.p);
  out.add(cls.report);
  std::cout << "classes:";
  for (const auto& cl : cls.classes) {
    std::cout << " {";
    for (std::size_t i = 0; i < cl.size(); ++i) std::cout << (i ? "," : "") << cl[i];
    std::cout << "}";
  }
  std::cout << (cls.diagram_level ? " (diagram level)" : "") << "\n";
  out.data()["classes"] = cls.classes;
  out.data()["level"] = cls.diagram_level ? "diagram" : "quantum";
  Groupoid g = enumerate_groupoid(c.m, c.n);
  Json autos = Json::object();
  for (int d = 1; d <= g.count(); ++d) {
    AutomorphismDescriptor ad = automorphism_group(c.m, c.n, d);
    std::cout << "Aut(U^" << d << ") = " << ad.group << "\n";
    autos[std::to_string(d)] = ad.group;
  }
  out.data()["automorphisms"] = autos;
  if (!cls.diagram_level) {
    Json ws = Json::array();
    for (const auto& cl : cls.classes)
      for (int d2 : cl) {
        if (d2 == cl.front()) continue;
        auto w = hopf_iso_exists(c.m, c.n, c.p, cl.front(), d2);
        if (!w) continue;
        out.add(w->verification);
        ws.push_back({{"d1", w->d1}, {"d2", w->d2}, {"kind", phi_kind_name(w->kind)}, {"images", element_table(w->map)}});
      }
    out.data()["witnesses"] = ws;
    AlgebraMorphism phi3 = phi_generator_map(PhiKind::ReverseSwap, c.m, c.n, c.p, 1, 1);
    int order = generator_order(phi3, 4 * c.p);
    std::cout << "order of phi''' on generators of U^1: " << order << "\n";
    out.data()["phi3_order"] = order;
  }
  out.add(verify_classification(c.m, c.n, c.p));
  if (orbits) {
    Json os = Json::object();
    for (int d = 1; d <= g.count(); ++d) {
      std::vector<int> o = dynkin_orbit(g, d);
      std::cout << "orbit(" << d << "):";
      for (int x : o) std::cout << " " << x;
      std::cout << "\n";
      os[std::to_string(d)] = o;
    }
    out.data()["orbits"] = os;
  }
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qsuper: quantum sl(m|n) superalgebras at roots of unity"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--m", cfg.m, "even dimension m")->capture_default_str();
  app.add_option("--n", cfg.n, "odd dimension n")->capture_default_str();
  app.add_option("--p", cfg.p, "odd order of the root of unity q")->capture_default_str();
  app.add_option("--d", cfg.d, "Dynkin diagram id")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
  app.add_flag("--slow", cfg.slow, "run gated slow checks");
  app.add_option("--json", cfg.json_path, "write the JSON report here");

  std::string groupoid_action = "enumerate", dot_path;
  auto* groupoid = app.add_subcommand("groupoid", "Weyl groupoid of sl(m|n)");
  groupoid->add_option("action", groupoid_action, "enumerate | verify | dot")
      ->check(CLI::IsMember({"enumerate", "verify", "dot"}));
  groupoid->add_option("--dot", dot_path, "write the groupoid graph as DOT");

  auto* classical = app.add_subcommand("classical", "classical sl(2|1) superbialgebra layer");
  std::string classical_action = "verify";
  classical->add_option("action", classical_action)->check(CLI::IsMember({"verify"}));

  std::string pbw_action = "verify";
  bool pbw_all = false;
  auto* pbw = app.add_subcommand("pbw", "PBW rewriting system");
  pbw->add_option("action", pbw_action, "verify | dim")->check(CLI::IsMember({"verify", "dim"}));
  pbw->add_flag("--all", pbw_all, "every diagram instead of --d");

  std::string nf_text;
  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  nf->add_option("expr", nf_text)->required();

  bool skew = false;
  int samples = 50;
  std::string hopf_action = "verify";
  auto* hopf = app.add_subcommand("hopf", "standard Hopf superstructure");
  hopf->add_option("action", hopf_action)->check(CLI::IsMember({"verify"}));
  hopf->add_flag("--skew-primitives", skew, "dimensions of P_{1,g} by weight-graded solves");
  hopf->add_option("--samples", samples, "random elements per property")->capture_default_str();

  bool braid = false;
  std::string lusztig_action = "verify";
  auto* lusztig = app.add_subcommand("lusztig", "Lusztig-type isomorphisms");
  lusztig->add_option("action", lusztig_action)->check(CLI::IsMember({"verify"}));
  lusztig->add_flag("--braid", braid, "braid relations of the functor");

  std::string twist_action, twist_word;
  auto* twist = app.add_subcommand("twist", "transport along a groupoid word");
  twist->add_option("action", twist_action)->required()->check(CLI::IsMember({"path"}));
  twist->add_option("word", twist_word, "simple-root indices, e.g. 2,1")->required();

  std::string r_action = "build", r_export;
  std::vector<std::string> r_verify;
  auto* rmatrix = app.add_subcommand("rmatrix", "universal R-matrices of sl(2|1)");
  rmatrix->add_option("action", r_action, "build | verify")->check(CLI::IsMember({"build", "verify"}));
  rmatrix->add_option("--verify", r_verify, "basic | qc | ybe-rep | transport | hex")->delimiter(',');
  rmatrix->add_option("--export", r_export, "write terms and the 9x9 matrix as JSON");

  bool orbits = false;
  auto* classify = app.add_subcommand("classify", "Hopf superalgebra classification");
  classify->add_flag("--orbits", orbits, "Dynkin orbits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    require_supported(SuperDims{cfg.m, cfg.n});
    if (cfg.p < 3 || cfg.p % 2 == 0) throw UsageError("--p must be an odd integer >= 3");
    if (*groupoid) return cmd_groupoid(cfg, groupoid_action, dot_path);
    if (*classical) return cmd_classical(cfg);
    if (*pbw) return cmd_pbw(cfg, pbw_action, pbw_all);
    if (*nf) return cmd_nf(cfg, nf_text);
    if (*hopf) return cmd_hopf(cfg, skew, samples);
    if (*lusztig) return cmd_lusztig(cfg, braid);
    if (*twist) return cmd_twist(cfg, twist_word);
    if (*rmatrix) return cmd_rmatrix(cfg, r_action, r_verify, r_export);
    if (*classify) return cmd_classify(cfg, orbits);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedConfiguration& e) {
    std::cerr << "unsupported configuration: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
