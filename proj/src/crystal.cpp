#include "eschur/crystal.hpp"

#include "eschur/errors.hpp"
#include "eschur/io.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace eschur {

namespace {

struct Reduced {
  std::vector<std::size_t> minus; // unmatched i, left to right
  std::vector<std::size_t> plus;  // unmatched i+1, left to right
};

Reduced reduce(const std::vector<int> &w, int i) {
  Reduced r;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1) {
      r.plus.push_back(k);
    } else if (w[k] == i) {
      if (!r.plus.empty())
        r.plus.pop_back();
      else
        r.minus.push_back(k);
    }
  }
  return r;
}

} // namespace

std::optional<std::size_t> tensor_f_position(const std::vector<int> &w, int i) {
  auto r = reduce(w, i);
  if (r.minus.empty()) return std::nullopt;
  return r.minus.back();
}

std::optional<std::size_t> tensor_e_position(const std::vector<int> &w, int i) {
  auto r = reduce(w, i);
  if (r.plus.empty()) return std::nullopt;
  return r.plus.front();
}

std::optional<std::vector<int>> tensor_f(std::vector<int> w, int i) {
  auto k = tensor_f_position(w, i);
  if (!k) return std::nullopt;
  w[*k] = i + 1;
  return w;
}

std::optional<std::vector<int>> tensor_e(std::vector<int> w, int i) {
  auto k = tensor_e_position(w, i);
  if (!k) return std::nullopt;
  w[*k] = i;
  return w;
}

EpsPhi signature_counts(const std::vector<int> &w, int i) {
  auto r = reduce(w, i);
  return {static_cast<int>(r.plus.size()), static_cast<int>(r.minus.size())};
}

namespace {

void replace_label(EdgeTableau &t, Cell e, int from, int to) {
  auto &set = t.edges.at(e);
  auto it = std::find(set.begin(), set.end(), from);
  if (it == set.end()) throw std::logic_error("label missing from edge");
  *it = to;
  std::sort(set.begin(), set.end());
}

void remove_label(EdgeTableau &t, Cell e, int v) {
  auto it = t.edges.find(e);
  if (it == t.edges.end()) throw std::logic_error("edge has no labels");
  auto &set = it->second;
  auto pos = std::find(set.begin(), set.end(), v);
  if (pos == set.end()) throw std::logic_error("label missing from edge");
  set.erase(pos);
  if (set.empty()) t.edges.erase(it);
}

void add_label(EdgeTableau &t, Cell e, int v) {
  auto &set = t.edges[e];
  if (std::find(set.begin(), set.end(), v) != set.end())
    throw std::logic_error("label already present on edge");
  set.push_back(v);
  std::sort(set.begin(), set.end());
}

bool has_label(const EdgeTableau &t, Cell e, int v) {
  const auto *set = t.labels(e.i, e.j);
  return set && std::find(set->begin(), set->end(), v) != set->end();
}

void check_result(const EdgeTableau &t) {
  if (!is_valid(t))
    throw std::logic_error("crystal operator produced an invalid tableau: " +
                           t.str());
}

} // namespace

std::optional<EdgeTableau> f_elt(const EdgeTableau &t, int i) {
  auto word = reading_word(t);
  auto k = tensor_f_position(letters(word), i);
  if (!k) return std::nullopt;
  const Letter &l = word[*k];
  EdgeTableau u = t;
  if (!l.box) {
    replace_label(u, l.at, i, i + 1);
  } else {
    // A run of boxes i to the right, each with i+1 on its lower edge,
    // moves up together; two boxes is the basic exception.
    int r = l.at.i, c = l.at.j;
    int run = 0;
    while (u.shape().contains(r, c + run + 1) && u.entry(r, c + run + 1) == i &&
           has_label(u, {r + 1, c + run + 1}, i + 1))
      ++run;
    for (int j = 0; j <= run; ++j) u.boxes.set(r, c + j, i + 1);
    for (int j = 1; j <= run; ++j) {
      remove_label(u, {r + 1, c + j}, i + 1);
      add_label(u, {r, c + j - 1}, i);
    }
  }
  check_result(u);
  return u;
}

std::optional<EdgeTableau> e_elt(const EdgeTableau &t, int i) {
  auto word = reading_word(t);
  auto k = tensor_e_position(letters(word), i);
  if (!k) return std::nullopt;
  const Letter &l = word[*k];
  EdgeTableau u = t;
  if (!l.box) {
    replace_label(u, l.at, i + 1, i);
  } else {
    int r = l.at.i, c = l.at.j;
    int run = 0;
    while (has_label(u, {r, c + run}, i) && u.shape().contains(r, c + run + 1) &&
           u.entry(r, c + run + 1) == i + 1)
      ++run;
    for (int j = 0; j <= run; ++j) u.boxes.set(r, c + j, i);
    for (int j = 1; j <= run; ++j) {
      remove_label(u, {r, c + j - 1}, i);
      add_label(u, {r + 1, c + j}, i + 1);
    }
  }
  check_result(u);
  return u;
}

namespace {

std::vector<Cell> row_reading_cells(const Tableau &t) {
  std::vector<Cell> out;
  for (int i = t.shape.extent(); i >= 1; --i)
    for (int j = t.shape.inner()[i] + 1; j <= t.shape.outer()[i]; ++j)
      out.push_back({i, j});
  return out;
}

std::optional<Tableau> apply_ssyt(const Tableau &t, int i, bool lower) {
  auto w = t.row_reading();
  auto k = lower ? tensor_f_position(w, i) : tensor_e_position(w, i);
  if (!k) return std::nullopt;
  Cell c = row_reading_cells(t)[*k];
  Tableau u = t;
  u.set(c.i, c.j, lower ? i + 1 : i);
  if (!u.is_semistandard())
    throw std::logic_error("crystal operator broke semistandardness");
  return u;
}

} // namespace

std::optional<Tableau> f_ssyt(const Tableau &t, int i) {
  return apply_ssyt(t, i, true);
}

std::optional<Tableau> e_ssyt(const Tableau &t, int i) {
  return apply_ssyt(t, i, false);
}

EpsPhiWt eps_phi_wt(const EdgeTableau &t, int i, int n) {
  EpsPhiWt out;
  auto s = signature_counts(letters(reading_word(t)), i);
  out.eps = s.eps;
  out.phi = s.phi;
  auto c = content_vector(t, n);
  out.wt.assign(c.begin() + 1, c.end());
  return out;
}

bool is_highest_weight(const EdgeTableau &t, int n) {
  auto w = letters(reading_word(t));
  for (int i = 1; i < n; ++i)
    if (signature_counts(w, i).eps > 0) return false;
  return true;
}

std::vector<HighestWeight> highest_weights(const SkewShape &shape,
                                           const EdgeParams &p, int max_labels) {
  std::vector<HighestWeight> out;
  for (auto &t : enumerate_elt(shape, p.n, p.lo, p.hi)) {
    if (max_labels >= 0 && t.label_count() > max_labels) continue;
    if (!is_highest_weight(t, p.n)) continue;
    auto c = content_vector(t, p.n);
    HighestWeight h{t, std::vector<int>(c.begin() + 1, c.end()), Poly()};
    Poly m(1);
    for (int d : t.label_diagonals()) m *= p.alphabet.at(d);
    h.a_monomial = m;
    out.push_back(std::move(h));
  }
  return out;
}

std::map<Partition, Poly> schur_expansion_crystal(const SkewShape &shape,
                                                  const EdgeParams &p,
                                                  int max_size) {
  std::map<Partition, Poly> out;
  for (const auto &h : highest_weights(shape, p)) {
    Partition nu(h.weight, p.n);
    if (nu.size() > max_size) continue;
    out[nu] += h.a_monomial;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

CrystalGraph crystal_graph(const SkewShape &shape, const EdgeParams &p,
                           int max_labels) {
  CrystalGraph g;
  g.n = p.n;
  for (auto &t : enumerate_elt(shape, p.n, p.lo, p.hi))
    if (max_labels < 0 || t.label_count() <= max_labels)
      g.vertices.push_back(std::move(t));
  std::map<EdgeTableau, int> index;
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    index[g.vertices[k]] = static_cast<int>(k);
  int nv = static_cast<int>(g.vertices.size());
  std::vector<std::vector<int>> adj(nv);
  for (int v = 0; v < nv; ++v)
    for (int i = 1; i < p.n; ++i)
      if (auto u = f_elt(g.vertices[v], i)) {
        int to = index.at(*u);
        g.arcs.push_back({v, to, i});
        adj[v].push_back(to);
        adj[to].push_back(v);
      }
  std::vector<int> comp(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (comp[v] >= 0) continue;
    CrystalComponent c;
    int id = static_cast<int>(g.components.size());
    std::deque<int> queue{v};
    comp[v] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      c.members.push_back(u);
      for (int w : adj[u])
        if (comp[w] < 0) {
          comp[w] = id;
          queue.push_back(w);
        }
    }
    std::sort(c.members.begin(), c.members.end());
    for (int u : c.members)
      if (is_highest_weight(g.vertices[u], p.n)) {
        if (c.highest >= 0)
          throw std::logic_error("component with two highest weights");
        c.highest = u;
      }
    if (c.highest >= 0) {
      const auto &h = g.vertices[c.highest];
      auto cv = content_vector(h, p.n);
      c.weight.assign(cv.begin() + 1, cv.end());
      Poly m(1);
      for (int d : h.label_diagonals()) m *= p.alphabet.at(d);
      c.a_monomial = m;
    }
    g.components.push_back(std::move(c));
  }
  for (auto &c : g.components) c.isomorphic = matches_highest_weight_crystal(g, c);
  return g;
}

bool matches_highest_weight_crystal(const CrystalGraph &g,
                                    const CrystalComponent &c) {
  if (c.highest < 0) return false;
  for (std::size_t k = 1; k < c.weight.size(); ++k)
    if (c.weight[k] > c.weight[k - 1]) return false;
  Partition nu(c.weight, g.n);
  Tableau y{SkewShape(nu)};
  for (int i = 1; i <= nu.extent(); ++i)
    for (int j = 1; j <= nu[i]; ++j) y.set(i, j, i);

  std::map<EdgeTableau, Tableau> pairing;
  std::map<Tableau, int> seen;
  std::deque<EdgeTableau> queue{g.vertices[c.highest]};
  pairing[g.vertices[c.highest]] = y;
  seen[y] = 1;
  while (!queue.empty()) {
    EdgeTableau t = queue.front();
    queue.pop_front();
    const Tableau &s = pairing.at(t);
    for (int i = 1; i < g.n; ++i) {
      auto ft = f_elt(t, i);
      auto fs = f_ssyt(s, i);
      if (ft.has_value() != fs.has_value()) return false;
      if (!ft) continue;
      auto it = pairing.find(*ft);
      if (it != pairing.end()) {
        if (!(it->second == *fs)) return false;
        continue;
      }
      if (seen.count(*fs)) return false;
      pairing[*ft] = *fs;
      seen[*fs] = 1;
      queue.push_back(*ft);
    }
  }
  return pairing.size() == c.members.size() &&
         pairing.size() == enumerate_ssyt(SkewShape(nu), g.n).size();
}

std::string to_dot(const CrystalGraph &g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    std::string label = to_json(g.vertices[v]).dump();
    std::string esc;
    for (char ch : label) {
      if (ch == '"' || ch == '\\') esc += '\\';
      esc += ch;
    }
    os << "  v" << v << " [label=\"" << esc << "\"];\n";
  }
  for (const auto &a : g.arcs)
    os << "  v" << a.from << " -> v" << a.to << " [label=\"f" << a.i << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace eschur
