// eschur: command line front end.
//   expand   print one of the polynomial families (or its Schur expansion)
//   verify   run a lattice/crystal identity suite, exit 1 on failure
//   crystal  build the ELT crystal graph, optionally export DOT/JSON
//   uncrowd  run the uncrowding map on a JSON tableau
//   tableaux enumerate SSYT or ELTs
#include "eschur/crystal.hpp"
#include "eschur/errors.hpp"
#include "eschur/io.hpp"
#include "eschur/lattice.hpp"
#include "eschur/schur.hpp"
#include "eschur/uncrowding.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace eschur;

namespace {

struct UsageError : Error {
  explicit UsageError(const std::string &what) : Error("usage: " + what) {}
};

std::pair<int, int> parse_range(const std::string &s, const char *what) {
  auto colon = s.find(':', s.empty() ? 0 : 1);
  try {
    if (colon == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    int a = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(s);
    std::string rest = s.substr(colon + 1);
    int b = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error &) {
    throw UsageError(std::string(what) + " must look like a:b, got '" + s + "'");
  }
}

struct ShapeOpts {
  std::string lambda, mu;
  int extent = -1;
  int n = 2;
  std::string window;

  void add(CLI::App *app) {
    app->add_option("--lambda", lambda, "outer partition, e.g. 3,2 (empty for none)");
    app->add_option("--mu", mu, "inner partition");
    app->add_option("--extent", extent, "row extent (trailing zeros count)");
    app->add_option("--n", n, "number of x variables");
    app->add_option("--window", window, "a-window m:M");
  }

  SkewShape shape() const {
    Partition outer = parse_partition(lambda, extent);
    if (mu.empty()) return SkewShape(outer);
    return SkewShape(outer, parse_partition(mu, outer.extent()));
  }

  EdgeParams params(const SkewShape &s) const {
    EdgeParams p = EdgeParams::defaults(s, n);
    if (!window.empty()) {
      auto [lo, hi] = parse_range(window, "--window");
      p = p.with_window(lo, hi);
    }
    return p;
  }
};

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_expand(const ShapeOpts &o, const std::string &family, int m,
               int trunc, bool alpha, bool expand, int max_size,
               const std::string &format) {
  SkewShape s = o.shape();
  EdgeParams p = o.params(s);
  p.trunc = trunc;
  if (alpha) p.alphabet = Alphabet::constant_alpha();
  Poly f;
  if (family == "schur") {
    f = schur(s, o.n);
  } else if (family == "factorial") {
    f = factorial_schur(s, o.n, p.alphabet);
  } else if (family == "edge") {
    f = edge_schur(s, p);
  } else if (family == "ebar") {
    f = variation(Variation::EBar, s, p);
  } else if (family == "dualfact") {
    f = variation(Variation::DualFact, s, p);
  } else if (family == "scripte" || family == "hatscripte") {
    p.n = m;
    p.vars = VarKind::Y;
    f = variation(family == "scripte" ? Variation::ScriptE
                                      : Variation::HatScriptE,
                  s, p);
  } else if (family == "dualschur") {
    p.vars = VarKind::Y;
    f = dual_schur(s, m, p);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  if (expand) {
    if (p.vars == VarKind::Y) throw UsageError("--schur-expand needs x variables");
    auto e = schur_expand(f, o.n, max_size < 0 ? s.size() + 4 : max_size);
    if (format == "json") {
      json j = json::object();
      for (const auto &[nu, c] : e.coeffs) j[nu.str()] = canonical_string(c);
      std::cout << json{{"coefficients", j},
                        {"remainder", canonical_string(e.remainder)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << expansion_str(e);
    }
    return 0;
  }
  if (format == "json")
    std::cout << json{{"family", family}, {"value", canonical_string(f)}}.dump()
              << "\n";
  else
    std::cout << canonical_string(f) << "\n";
  return 0;
}

CheckReport equivalence_suite(int count, unsigned seed) {
  std::mt19937 rng(seed);
  auto pick = [&](int a, int b) {
    return std::uniform_int_distribution<int>(a, b)(rng);
  };
  CheckReport rep;
  while (rep.cases < count) {
    int rows = pick(1, 3);
    std::vector<int> parts(rows);
    int prev = 3;
    for (auto &x : parts) prev = x = pick(0, prev);
    Partition outer(parts, rows);
    std::vector<int> inner(rows);
    for (int i = 0; i < rows; ++i)
      inner[i] = pick(0, std::min(parts[i], i ? inner[i - 1] : parts[i]));
    SkewShape s(outer, Partition(inner, rows));
    int n = pick(1, 3);
    EdgeParams p = EdgeParams::defaults(s, n).with_window(
        -rows - pick(0, 1), outer.first() + pick(-1, 1));
    if (p.hi < outer.first() - 1) continue;
    ++rep.cases;
    Poly a = edge_schur(s, p), b = edge_schur_brute(s, p),
         c = edge_schur_lattice(s, p, Form::T),
         d = edge_schur_lattice(s, p, Form::TStar);
    if (!(a == b && a == c && a == d)) {
      std::ostringstream os;
      os << s.str() << " n=" << n << " window [" << p.lo << "," << p.hi << "]";
      rep.failures.push_back(os.str());
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

int report(const CheckReport &r, bool witness) {
  std::cout << r.summary() << "\n";
  if (!r.ok && witness && !r.failures.empty())
    std::cout << "witness: " << r.failures.front() << "\n";
  return r.ok ? 0 : 1;
}

int cmd_crystal(const ShapeOpts &o, int max_labels, const std::string &dot,
                const std::string &json_out) {
  SkewShape s = o.shape();
  // Without --window no edge labels are allowed.
  EdgeParams p = o.window.empty() ? EdgeParams::defaults(s, o.n).with_window(0, -1)
                                  : o.params(s);
  CrystalGraph g = crystal_graph(s, p, max_labels);
  std::cout << g.vertices.size() << " vertices, " << g.arcs.size()
            << " arcs, " << g.components.size() << " components\n";
  std::vector<const CrystalComponent *> order;
  for (const auto &c : g.components) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](auto *u, auto *v) {
    int du = u->a_monomial.degree(), dv = v->a_monomial.degree();
    if (du != dv) return du < dv;
    if (u->weight != v->weight) return u->weight < v->weight;
    return canonical_string(u->a_monomial) < canonical_string(v->a_monomial);
  });
  bool ok = true;
  for (const auto *cp : order) {
    const auto &c = *cp;
    std::cout << "  weight (";
    for (std::size_t k = 0; k < c.weight.size(); ++k)
      std::cout << (k ? "," : "") << c.weight[k];
    std::cout << ")  a=" << canonical_string(c.a_monomial)
              << "  size=" << c.members.size()
              << (c.isomorphic ? "" : "  NOT isomorphic to B(weight)") << "\n";
    ok = ok && c.isomorphic;
  }
  if (!dot.empty()) write_file(dot, to_dot(g));
  if (!json_out.empty()) {
    json j;
    j["vertices"] = json::array();
    for (const auto &t : g.vertices) j["vertices"].push_back(to_json(t));
    j["arcs"] = json::array();
    for (const auto &a : g.arcs) j["arcs"].push_back({a.from, a.to, a.i});
    j["components"] = json::array();
    for (const auto &c : g.components)
      j["components"].push_back({{"highest", c.highest},
                                 {"members", c.members},
                                 {"weight", c.weight},
                                 {"a", canonical_string(c.a_monomial)}});
    write_file(json_out, j.dump(1) + "\n");
  }
  return ok ? 0 : 1;
}

int cmd_uncrowd(const std::string &in, bool roundtrip, bool steps) {
  std::ifstream f(in);
  if (!f) throw UsageError("cannot read " + in);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad JSON in ") + in + ": " + e.what());
  }
  EdgeTableau t = elt_from_json(j);
  validate(t);
  std::cout << render_text(t) << "\n";
  auto all = uncrowd_steps(t);
  RSKPair last = all.empty() ? uncrowd(t) : all.back();
  if (steps)
    for (std::size_t i = 0; i < all.size(); ++i)
      std::cout << "step " << i + 1 << ": P=" << all[i].P.str()
                << "  Q=" << all[i].Q.str() << "\n";
  std::cout << "P:\n" << render_text(EdgeTableau{last.P, 0, -1, {}})
            << "Q:\n" << render_text(EdgeTableau{last.Q, 0, -1, {}});
  std::cout << json{{"P", to_json(last.P)}, {"Q", to_json(last.Q)}}.dump()
            << "\n";
  if (roundtrip) {
    EdgeTableau back = crowd(last, t.shape().outer(), t.lo, t.hi);
    bool ok = back == t;
    std::cout << "roundtrip: " << (ok ? "ok" : "MISMATCH") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

int cmd_tableaux(const ShapeOpts &o, bool edge, bool list,
                 const std::string &format) {
  SkewShape s = o.shape();
  json arr = json::array();
  std::size_t count = 0;
  if (edge) {
    EdgeParams p = o.params(s);
    auto all = enumerate_elt(s, o.n, p.lo, p.hi);
    count = all.size();
    for (const auto &t : all) {
      if (format == "json") arr.push_back(to_json(t));
      else if (list) std::cout << render_text(t) << "  wt " << canonical_string(weight_elt(t)) << "\n\n";
    }
  } else {
    auto all = enumerate_ssyt(s, o.n);
    count = all.size();
    for (const auto &t : all) {
      if (format == "json") arr.push_back(to_json(t));
      else if (list) std::cout << t.str() << "\n";
    }
  }
  if (format == "json") std::cout << arr.dump() << "\n";
  else std::cout << count << (edge ? " edge labeled" : " semistandard") << " tableaux\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"edge Schur functions, lattice models and crystals"};
  app.require_subcommand(1);

  ShapeOpts shape;
  std::string family = "edge", format = "text";
  int m = 1, trunc = Poly::kNoTrunc, max_size = -1;
  bool alpha = false, expand = false;
  auto *ex = app.add_subcommand("expand", "print a polynomial family");
  shape.add(ex);
  ex->add_option("--family", family,
                 "schur|factorial|edge|ebar|dualfact|scripte|hatscripte|dualschur");
  ex->add_option("--m", m, "number of y variables");
  ex->add_option("--trunc", trunc, "total degree truncation");
  ex->add_flag("--alpha", alpha, "specialize every a_d to alpha");
  ex->add_flag("--schur-expand", expand, "expand in Schur polynomials");
  ex->add_option("--max-size", max_size, "largest |nu| in the expansion");
  ex->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string suite, kind = "RLL_L", perturb, box = "2:2", model = "L",
                     vwindow, mu_s, eta_s;
  int vn = 1, vm = 1, vtrunc = 6, count = 30;
  unsigned seed = 1;
  bool flip = false, witness = true;
  auto *vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("suite", suite,
                 "yb|commutation|cauchy|freefermion|symmetry|equivalence")
      ->required();
  vf->add_option("--kind", kind, "RLL_L|RLL_Lstar|rll_Ell|frakRLell");
  vf->add_option("--perturb", perturb, "weight class a1..c2 or entry r0..r4");
  vf->add_option("--box", box, "rows:cols");
  vf->add_option("--window", vwindow, "m:M");
  vf->add_option("--trunc", vtrunc);
  vf->add_option("--n", vn);
  vf->add_option("--m", vm);
  vf->add_option("--mu", mu_s);
  vf->add_option("--eta", eta_s);
  vf->add_option("--model", model, "L|Lstar|Ell");
  vf->add_flag("--flip", flip, "commutation with the excluded boundary");
  vf->add_option("--count", count, "random instances for equivalence");
  vf->add_option("--seed", seed);
  vf->add_flag("--witness,!--no-witness", witness, "print the first failure");

  ShapeOpts cshape;
  cshape.n = 3;
  int max_labels = -1;
  std::string dot, json_out;
  auto *cr = app.add_subcommand("crystal", "edge labeled tableau crystal");
  cshape.add(cr);
  cr->add_option("--max-labels", max_labels, "bound on the number of edge labels");
  cr->get_option("--window")->description("a-window m:M (default: no edge labels)");
  cr->add_option("--dot", dot, "write Graphviz DOT");
  cr->add_option("--json", json_out, "write the graph as JSON");

  std::string in;
  bool roundtrip = false, steps = false;
  auto *un = app.add_subcommand("uncrowd", "uncrowding map on a tableau");
  un->add_option("--in", in, "tableau JSON")->required();
  un->add_flag("--roundtrip", roundtrip, "check crowd(uncrowd(T)) = T");
  un->add_flag("--steps", steps, "print every (P_i, Q_i)");

  ShapeOpts tshape;
  bool edge = false, list = false;
  std::string tformat = "text";
  auto *tb = app.add_subcommand("tableaux", "enumerate tableaux");
  tshape.add(tb);
  tb->add_flag("--edge", edge, "edge labeled tableaux on the window");
  tb->add_flag("--list", list, "print each tableau");
  tb->add_option("--format", tformat)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*ex)
      return cmd_expand(shape, family, m, trunc, alpha, expand, max_size, format);
    if (*vf) {
      if (suite == "yb") {
        std::optional<Perturbation> p;
        if (!perturb.empty()) p = Perturbation{perturb};
        YBResult r = yang_baxter_check(parse_yb_kind(kind), p);
        std::cout << r.describe() << "\n";
        return r.ok ? 0 : 1;
      }
      if (suite == "commutation") {
        auto [lo, hi] = parse_range(vwindow.empty() ? "-2:3" : vwindow, "--window");
        auto [r, c] = parse_range(box, "--box");
        return report(commutation_check(lo, hi, vtrunc, r, c, flip), witness);
      }
      if (suite == "cauchy") {
        auto [lo, hi] = parse_range(vwindow.empty() ? "-2:2" : vwindow, "--window");
        CauchyReport r = cauchy_check(parse_partition(mu_s),
                                      parse_partition(eta_s), vn, vm, lo, hi, vtrunc);
        std::cout << r.summary() << "\n";
        if (!r.ok && witness && !r.failures.empty())
          std::cout << "witness: " << r.failures.front() << "\n";
        return r.ok ? 0 : 1;
      }
      if (suite == "freefermion") {
        bool ok = free_fermion_check(parse_model(model), vtrunc);
        std::cout << model << ": free fermion " << (ok ? "holds" : "fails") << "\n";
        return ok ? 0 : 1;
      }
      if (suite == "symmetry") {
        auto [lo, hi] = parse_range(vwindow.empty() ? "-3:3" : vwindow, "--window");
        auto [r, c] = parse_range(box, "--box");
        return report(symmetry_check(r, c, vn, lo, hi), witness);
      }
      if (suite == "equivalence")
        return report(equivalence_suite(count, seed), witness);
      throw UsageError("unknown suite '" + suite + "'");
    }
    if (*cr) return cmd_crystal(cshape, max_labels, dot, json_out);
    if (*un) return cmd_uncrowd(in, roundtrip, steps);
    if (*tb) return cmd_tableaux(tshape, edge, list, tformat);
  } catch (const UsageError &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const WindowError &e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
