#include "eschur/tableaux.hpp"

#include "eschur/errors.hpp"
#include "eschur/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace eschur {

Tableau::Tableau(SkewShape s) : shape(std::move(s)) {
  for (int i = 1; i <= shape.extent(); ++i)
    rows.emplace_back(shape.outer()[i], 0);
}

int Tableau::entry(int i, int j) const {
  if (!shape.contains(i, j)) return 0;
  return rows[i - 1][j - 1];
}

bool Tableau::is_semistandard() const {
  for (const auto &c : shape.cells()) {
    int v = entry(c.i, c.j);
    if (v < 1) return false;
    if (shape.contains(c.i, c.j + 1) && entry(c.i, c.j + 1) < v) return false;
    if (shape.contains(c.i + 1, c.j) && entry(c.i + 1, c.j) <= v) return false;
  }
  return true;
}

std::vector<int> Tableau::row_reading() const {
  std::vector<int> w;
  for (int i = shape.extent(); i >= 1; --i)
    for (int j = shape.inner()[i] + 1; j <= shape.outer()[i]; ++j)
      w.push_back(entry(i, j));
  return w;
}

std::string Tableau::str() const {
  std::string s;
  for (int i = 1; i <= shape.extent(); ++i) {
    if (i > 1) s += "/";
    for (int j = 1; j <= shape.outer()[i]; ++j) {
      if (j > 1) s += ",";
      s += shape.contains(i, j) ? std::to_string(entry(i, j)) : ".";
    }
  }
  return s;
}

const std::vector<int> *EdgeTableau::labels(int i, int j) const {
  auto it = edges.find({i, j});
  return it == edges.end() ? nullptr : &it->second;
}

int EdgeTableau::label_count() const {
  int k = 0;
  for (const auto &[e, s] : edges) k += static_cast<int>(s.size());
  return k;
}

std::vector<int> EdgeTableau::label_diagonals() const {
  std::vector<int> out;
  for (const auto &[e, s] : edges)
    for (std::size_t k = 0; k < s.size(); ++k) out.push_back(e.content());
  return out;
}

std::string EdgeTableau::str() const {
  std::string s = boxes.str();
  for (const auto &[e, set] : edges) {
    s += " [" + std::to_string(e.i) + "," + std::to_string(e.j) + ":";
    for (std::size_t k = 0; k < set.size(); ++k)
      s += (k ? "," : "") + std::to_string(set[k]);
    s += "]";
  }
  return s;
}

std::vector<Tableau> enumerate_ssyt(const SkewShape &shape, int n) {
  std::vector<Tableau> out;
  if (!shape.valid() || n < 0) return out;
  for (const auto &chain : strip_chains(shape, n)) {
    Tableau t(shape);
    for (int v = 1; v <= n; ++v)
      for (int i = 1; i <= shape.extent(); ++i)
        for (int j = chain[v - 1][i] + 1; j <= chain[v][i]; ++j) t.set(i, j, v);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cell> edge_positions(const SkewShape &shape, int lo, int hi) {
  std::vector<Cell> out;
  Partition oc = shape.outer().conjugate();
  Partition ic = shape.inner().conjugate();
  int jmax = std::max(hi + 1, shape.outer().first());
  for (int j = 1; j <= jmax; ++j) {
    int top = ic[j] + 1, bottom = oc[j] + 1;
    for (int i = top; i <= bottom; ++i) {
      int d = j - i;
      if (d >= lo && d <= hi) out.push_back({i, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> admissible_labels(const Tableau &t, Cell e, int n) {
  int above = t.shape.contains(e.i - 1, e.j) ? t.entry(e.i - 1, e.j) : 0;
  int below = t.shape.contains(e.i, e.j) ? t.entry(e.i, e.j) : -1;
  if (below < 0 && n <= 0)
    throw std::invalid_argument("label range below the shape needs n");
  int upper = below < 0 ? n : n > 0 ? std::min(n, below - 1) : below - 1;
  std::vector<int> out;
  for (int v = above + 1; v <= upper; ++v) out.push_back(v);
  return out;
}

void validate(const EdgeTableau &t, int n) {
  if (!t.shape().valid()) throw ValidationError("inner shape not contained");
  if (!t.boxes.is_semistandard())
    throw ValidationError("box entries are not semistandard: " + t.str());
  for (const auto &c : t.shape().cells())
    if (n > 0 && t.entry(c.i, c.j) > n)
      throw ValidationError("entry exceeds n: " + t.str());
  auto positions = edge_positions(t.shape(), t.lo, t.hi);
  std::set<Cell> allowed(positions.begin(), positions.end());
  for (const auto &[e, set] : t.edges) {
    if (set.empty()) throw ValidationError("empty label set stored");
    if (!allowed.count(e))
      throw ValidationError("edge (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + ") not allowed: " + t.str());
    if (!std::is_sorted(set.begin(), set.end()) ||
        std::adjacent_find(set.begin(), set.end()) != set.end())
      throw ValidationError("label set not strictly increasing: " + t.str());
    int above = t.shape().contains(e.i - 1, e.j) ? t.entry(e.i - 1, e.j) : 0;
    int below = t.shape().contains(e.i, e.j) ? t.entry(e.i, e.j) : -1;
    if (set.front() <= above || (below >= 0 && set.back() >= below) ||
        set.front() < 1 || (n > 0 && set.back() > n))
      throw ValidationError("label out of range: " + t.str());
  }
}

bool is_valid(const EdgeTableau &t, int n) {
  try {
    validate(t, n);
    return true;
  } catch (const ValidationError &) {
    return false;
  }
}

Poly weight_elt(const EdgeTableau &t, const Alphabet &a, VarKind kind) {
  validate(t);
  Poly w(1);
  for (const auto &c : t.shape().cells()) w *= Poly::var(kind, t.entry(c.i, c.j));
  for (const auto &[e, set] : t.edges)
    for (int v : set) w *= Poly::var(kind, v) * a.at(e.content());
  return w;
}

std::vector<int> content_vector(const EdgeTableau &t, int n) {
  std::vector<int> c(n + 1, 0);
  for (const auto &cell : t.shape().cells()) ++c.at(t.entry(cell.i, cell.j));
  for (const auto &[e, set] : t.edges)
    for (int v : set) ++c.at(v);
  return c;
}

Poly a_monomial(const EdgeTableau &t) {
  Poly m(1);
  for (const auto &[e, set] : t.edges)
    for (std::size_t k = 0; k < set.size(); ++k) m *= Poly::a(e.content());
  return m;
}

std::vector<EdgeTableau> enumerate_elt(const SkewShape &shape, int n, int lo,
                                       int hi) {
  std::vector<EdgeTableau> out;
  auto positions = edge_positions(shape, lo, hi);
  for (const auto &ssyt : enumerate_ssyt(shape, n)) {
    std::vector<std::pair<Cell, std::vector<int>>> slots;
    for (const auto &e : positions) {
      auto adm = admissible_labels(ssyt, e, n);
      if (!adm.empty()) slots.emplace_back(e, adm);
    }
    EdgeTableau t{ssyt, lo, hi, {}};
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == slots.size()) {
        out.push_back(t);
        return;
      }
      const auto &[e, adm] = slots[k];
      std::size_t m = adm.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<int> set;
        for (std::size_t b = 0; b < m; ++b)
          if (mask >> b & 1) set.push_back(adm[b]);
        if (set.empty())
          t.edges.erase(e);
        else
          t.edges[e] = set;
        rec(k + 1);
      }
      t.edges.erase(e);
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeTableau chain_to_positional(const ChainForm &c, int lo, int hi) {
  const Partition &outer = c.chain.back();
  const Partition &inner = c.chain.front();
  SkewShape shape(outer, inner);
  Tableau boxes(shape);
  int n = static_cast<int>(c.chain.size()) - 1;
  for (int v = 1; v <= n; ++v)
    for (int i = 1; i <= shape.extent(); ++i)
      for (int j = c.chain[v - 1][i] + 1; j <= c.chain[v][i]; ++j)
        boxes.set(i, j, v);
  EdgeTableau t{boxes, lo, hi, {}};
  auto positions = edge_positions(shape, lo, hi);
  for (int v = 1; v <= n; ++v) {
    for (int d : c.labels[v - 1]) {
      std::vector<Cell> hits;
      for (const auto &e : positions) {
        if (e.content() != d) continue;
        auto adm = admissible_labels(boxes, e, n);
        if (std::find(adm.begin(), adm.end(), v) != adm.end()) hits.push_back(e);
      }
      if (hits.size() != 1)
        throw ChainInvariantViolation(
            "label " + std::to_string(v) + " on diagonal " + std::to_string(d) +
            " has " + std::to_string(hits.size()) + " admissible edges");
      auto &set = t.edges[hits[0]];
      set.push_back(v);
      std::sort(set.begin(), set.end());
    }
  }
  validate(t, n);
  return t;
}

ChainForm positional_to_chain(const EdgeTableau &t, int n) {
  ChainForm c;
  const SkewShape &s = t.shape();
  for (int v = 0; v <= n; ++v) {
    std::vector<int> parts;
    for (int i = 1; i <= s.extent(); ++i) {
      int len = s.inner()[i];
      for (int j = s.inner()[i] + 1; j <= s.outer()[i]; ++j)
        if (t.entry(i, j) <= v) len = j;
      parts.push_back(len);
    }
    c.chain.emplace_back(parts);
  }
  c.labels.assign(n, {});
  for (const auto &[e, set] : t.edges)
    for (int v : set) c.labels.at(v - 1).insert(e.content());
  return c;
}

std::vector<EdgeTableau> enumerate_elt_chains(const SkewShape &shape, int n,
                                              int lo, int hi) {
  std::vector<EdgeTableau> out;
  for (const auto &chain : strip_chains(shape, n)) {
    std::vector<std::vector<int>> deformed;
    for (int v = 1; v <= n; ++v) {
      auto d = deformed_diagonals(chain[v], chain[v - 1], lo, hi);
      deformed.emplace_back(d.begin(), d.end());
    }
    ChainForm c{chain, std::vector<std::set<int>>(n)};
    std::function<void(int)> rec = [&](int v) {
      if (v > n) {
        out.push_back(chain_to_positional(c, lo, hi));
        return;
      }
      const auto &d = deformed[v - 1];
      for (std::size_t mask = 0; mask < (std::size_t{1} << d.size()); ++mask) {
        c.labels[v - 1].clear();
        for (std::size_t b = 0; b < d.size(); ++b)
          if (mask >> b & 1) c.labels[v - 1].insert(d[b]);
        rec(v + 1);
      }
    };
    rec(1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Letter> reading_word(const EdgeTableau &t) {
  const SkewShape &s = t.shape();
  int dmin = 0, dmax = 0;
  bool any = false;
  auto note = [&](int d) {
    dmin = any ? std::min(dmin, d) : d;
    dmax = any ? std::max(dmax, d) : d;
    any = true;
  };
  for (const auto &c : s.cells()) note(c.content());
  for (const auto &[e, set] : t.edges) note(e.content() + 1);
  std::vector<Letter> w;
  if (!any) return w;
  int rmax = s.extent();
  for (int d = dmin; d <= dmax; ++d) {
    for (int r = rmax; r >= 0; --r) {
      int col = r + d;
      if (col < 1) continue;
      if (const auto *set = t.labels(r + 1, col))
        for (auto it = set->rbegin(); it != set->rend(); ++it)
          w.push_back({*it, false, {r + 1, col}});
      if (r >= 1 && s.contains(r, col))
        w.push_back({t.entry(r, col), true, {r, col}});
    }
  }
  return w;
}

std::vector<Letter> reading_word(const Tableau &t) {
  return reading_word(EdgeTableau{t, 0, -1, {}});
}

std::vector<int> letters(const std::vector<Letter> &w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto &l : w) out.push_back(l.value);
  return out;
}

int reading_diagonal(const Letter &l) {
  return l.box ? l.at.content() : l.at.content() + 1;
}

EdgeTableau make_elt(const SkewShape &shape, int lo, int hi,
                     const std::vector<std::vector<int>> &rows,
                     const std::map<Cell, std::vector<int>> &edges) {
  Tableau b(shape);
  for (int i = 1; i <= shape.extent() && i <= static_cast<int>(rows.size()); ++i) {
    int k = 0;
    for (int j = shape.inner()[i] + 1; j <= shape.outer()[i]; ++j)
      b.set(i, j, rows[i - 1].at(k++));
  }
  EdgeTableau t{b, lo, hi, {}};
  for (const auto &[e, set] : edges) {
    if (set.empty()) continue;
    auto s = set;
    std::sort(s.begin(), s.end());
    t.edges[e] = s;
  }
  return t;
}

std::string render_text(const EdgeTableau &t) {
  // One line per box row, preceded by a line listing the labels on the
  // edges above that row.
  std::ostringstream os;
  const SkewShape &s = t.shape();
  int width = 1;
  for (const auto &[e, set] : t.edges) width = std::max(width, e.j);
  width = std::max(width, s.outer().first());
  auto edge_line = [&](int i) {
    std::string line;
    bool any = false;
    for (int j = 1; j <= width; ++j) {
      std::string cell;
      if (const auto *set = t.labels(i, j)) {
        any = true;
        cell = "{";
        for (std::size_t k = 0; k < set->size(); ++k)
          cell += (k ? "," : "") + std::to_string((*set)[k]);
        cell += "}";
      } else {
        cell = "-";
      }
      line += cell;
      if (j < width) line += " ";
    }
    if (any) os << "  " << line << "\n";
  };
  for (int i = 1; i <= s.extent(); ++i) {
    edge_line(i);
    std::string line;
    for (int j = 1; j <= s.outer()[i]; ++j) {
      line += s.contains(i, j) ? std::to_string(t.entry(i, j)) : ".";
      if (j < s.outer()[i]) line += " ";
    }
    os << "| " << line << "\n";
  }
  edge_line(s.extent() + 1);
  return os.str();
}

} // namespace eschur
