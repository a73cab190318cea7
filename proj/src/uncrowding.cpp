#include "eschur/uncrowding.hpp"

#include "eschur/crystal.hpp"
#include "eschur/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eschur {

namespace {

using Rows = std::vector<std::vector<int>>;

Rows rows_of(const Tableau &t) {
  Rows r;
  for (int i = 1; i <= t.shape.extent(); ++i) {
    int len = t.shape.outer()[i];
    if (len == 0) break;
    r.emplace_back(t.rows[i - 1].begin(), t.rows[i - 1].begin() + len);
  }
  return r;
}

std::vector<int> shape_of(const Rows &r) {
  std::vector<int> s;
  for (const auto &row : r) s.push_back(static_cast<int>(row.size()));
  return s;
}

Tableau tableau_of(const Rows &r) {
  Tableau t{SkewShape(Partition(shape_of(r)))};
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j)
      t.set(static_cast<int>(i + 1), static_cast<int>(j + 1), r[i][j]);
  return t;
}

void insert(Rows &p, int x) {
  for (auto &row : p) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
  p.push_back({x});
}

// Removes the last cell of row r (0-based) and bumps out the letter that
// inserting last would have created it.
int reverse_bump(Rows &p, std::size_t r) {
  int x = p[r].back();
  p[r].pop_back();
  if (p[r].empty()) p.pop_back();
  for (std::size_t k = r; k-- > 0;) {
    auto &row = p[k];
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.begin()) throw MalformedPair("reverse bump has no target");
    std::swap(*--it, x);
  }
  return x;
}

std::vector<int> conjugate_counts(const std::vector<int> &rows) {
  std::vector<int> cols(rows.empty() ? 0 : rows[0], 0);
  for (int len : rows)
    for (int j = 0; j < len; ++j) ++cols[j];
  return cols;
}

// Column heights of the cells of lambda with content <= d, top-justified.
std::vector<int> slid_columns(const Partition &lambda, int d) {
  Partition conj = lambda.conjugate();
  std::vector<int> cols;
  for (int j = 1; j <= lambda.first(); ++j) {
    int h = conj[j] - std::max(1, j - d) + 1;
    cols.push_back(std::max(0, h));
  }
  while (!cols.empty() && cols.back() == 0) cols.pop_back();
  return cols;
}

int at(const std::vector<int> &v, int j) { // 1-based, zero past the end
  return j >= 1 && j <= static_cast<int>(v.size()) ? v[j - 1] : 0;
}

using Columns = std::vector<std::vector<int>>; // Q entries, top to bottom

Tableau q_tableau(const Rows &p, const std::vector<int> &nu_cols,
                  const Columns &q) {
  auto mu = shape_of(p);
  int ext = static_cast<int>(mu.size());
  std::vector<int> nu(ext, 0);
  for (int r = 1; r <= ext; ++r)
    for (int h : nu_cols)
      if (h >= r) ++nu[r - 1];
  Tableau t{SkewShape(Partition(mu), Partition(nu, ext))};
  for (std::size_t j = 0; j < q.size(); ++j)
    for (std::size_t k = 0; k < q[j].size(); ++k)
      t.set(at(nu_cols, static_cast<int>(j + 1)) + static_cast<int>(k) + 1,
            static_cast<int>(j + 1), q[j][k]);
  return t;
}

Columns q_columns(const Tableau &q) {
  Columns cols(q.shape.outer().first());
  for (const auto &c : q.shape.cells()) cols[c.j - 1].push_back(q.entry(c.i, c.j));
  return cols;
}

} // namespace

Tableau rsk_insert(const Tableau &p, const std::vector<int> &word) {
  if (!p.shape.straight())
    throw UnsupportedSkew("RSK insertion needs a straight tableau");
  Rows r = rows_of(p);
  for (int x : word) insert(r, x);
  return tableau_of(r);
}

int first_reading_diagonal(const Partition &lambda) {
  return 1 - lambda.length();
}

std::vector<RSKPair> uncrowd_steps(const EdgeTableau &t) {
  if (!t.shape().straight())
    throw UnsupportedSkew("uncrowding is defined for straight shapes");
  const Partition &lambda = t.shape().outer();
  int d0 = first_reading_diagonal(lambda);
  std::map<int, std::vector<int>> words;
  int dmax = lambda.first() - 1;
  for (const auto &l : reading_word(t)) {
    int d = reading_diagonal(l);
    words[d].push_back(l.value);
    dmax = std::max(dmax, d);
  }
  std::vector<RSKPair> steps;
  Rows p;
  Columns q;
  for (int d = d0; d <= dmax; ++d) {
    int i = d - d0 + 1;
    for (int x : words[d]) insert(p, x);
    auto nu = slid_columns(lambda, d);
    auto mu = conjugate_counts(shape_of(p));
    Columns next(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j) {
      int c = static_cast<int>(j + 1);
      int cells = mu[j] - at(nu, c);
      const std::vector<int> old =
          j < q.size() ? q[j] : std::vector<int>{};
      if (cells < static_cast<int>(old.size()))
        throw std::logic_error("uncrowd: recording column overflow");
      next[j].assign(cells - old.size(), i);
      next[j].insert(next[j].end(), old.begin(), old.end());
    }
    q = std::move(next);
    steps.push_back({tableau_of(p), q_tableau(p, nu, q)});
  }
  return steps;
}

RSKPair uncrowd(const EdgeTableau &t) {
  auto steps = uncrowd_steps(t);
  if (steps.empty()) return {tableau_of({}), tableau_of({})};
  return steps.back();
}

namespace {

struct Placer {
  const Partition &lambda;
  int lo, hi;
  std::vector<int> diags;              // descending
  std::vector<std::vector<int>> words; // per entry of diags
  Rows box;                            // lambda-shaped, 0 = unset
  std::map<Cell, std::vector<int>> edges;
  std::vector<EdgeTableau> found;

  int entry(int r, int c) const {
    if (r < 1 || r > lambda.length() || c < 1 || c > lambda[r]) return 0;
    return box[r - 1][c - 1];
  }

  EdgeTableau build() const {
    Tableau b{SkewShape(lambda)};
    for (int r = 1; r <= lambda.length(); ++r)
      for (int c = 1; c <= lambda[r]; ++c) b.set(r, c, box[r - 1][c - 1]);
    return EdgeTableau{b, lo, hi, edges};
  }

  void run(std::size_t k) {
    if (found.size() > 1) return;
    if (k == diags.size()) {
      EdgeTableau t = build();
      if (is_valid(t)) found.push_back(t);
      return;
    }
    int d = diags[k];
    const auto &w = words[k];
    std::vector<Cell> cells; // bottom to top
    for (int r = lambda.length(); r >= 1; --r)
      if (r + d >= 1 && r + d <= lambda[r]) cells.push_back({r, r + d});
    bool carrier = d >= 1;
    int m = static_cast<int>(cells.size());
    int len = static_cast<int>(w.size());
    if (len < m) return;
    if (len > m && (d - 1 < lo || d - 1 > hi)) return;
    std::vector<int> pos(m);
    place(k, cells, carrier, 0, 0, pos);
  }

  // Chooses the position in w of the entry of cells[idx], starting at from.
  void place(std::size_t k, const std::vector<Cell> &cells, bool carrier,
             int idx, int from, std::vector<int> &pos) {
    const auto &w = words[k];
    int m = static_cast<int>(cells.size());
    int len = static_cast<int>(w.size());
    if (idx == m) {
      if (!carrier && (m == 0 ? len > 0 : pos[m - 1] != len - 1)) return;
      int prev = 0;
      std::vector<Cell> touched;
      for (int a = 0; a <= m; ++a) {
        int stop = a < m ? pos[a] : len;
        if (stop > prev) {
          Cell e = a < m ? Cell{cells[a].i + 1, cells[a].j}
                         : Cell{1, diags[k]};
          std::vector<int> set(w.begin() + prev, w.begin() + stop);
          std::sort(set.begin(), set.end());
          edges[e] = set;
          touched.push_back(e);
        }
        if (a < m) box[cells[a].i - 1][cells[a].j - 1] = w[pos[a]];
        prev = stop + 1;
      }
      run(k + 1);
      for (const auto &e : touched) edges.erase(e);
      for (const auto &c : cells) box[c.i - 1][c.j - 1] = 0;
      return;
    }
    for (int p = from; p <= len - (m - idx); ++p) {
      int v = w[p];
      const Cell &c = cells[idx];
      int right = entry(c.i, c.j + 1);
      if (right && v > right) continue;
      if (entry(c.i - 1, c.j) >= v) continue;
      auto it = edges.find({c.i, c.j});
      if (it != edges.end() && it->second.back() >= v) continue;
      pos[idx] = p;
      place(k, cells, carrier, idx + 1, p + 1, pos);
    }
  }
};

} // namespace

EdgeTableau crowd(const RSKPair &pair, const Partition &lambda, int lo,
                  int hi) {
  if (!pair.P.shape.straight() || !pair.P.is_semistandard())
    throw MalformedPair("P must be a straight semistandard tableau");
  Rows p = rows_of(pair.P);
  std::vector<int> qouter;
  for (int v : pair.Q.shape.outer().parts())
    if (v > 0) qouter.push_back(v);
  if (qouter != shape_of(p))
    throw MalformedPair("P and Q have different outer shapes");
  Columns q = q_columns(pair.Q);
  int d0 = first_reading_diagonal(lambda);
  int top = 0;
  for (const auto &col : q)
    for (int v : col) top = std::max(top, v);
  int dmax = std::max(lambda.first() - 1, d0 + top - 1);

  std::vector<int> diags;
  std::vector<std::vector<int>> words;
  for (int d = dmax; d >= d0; --d) {
    int i = d - d0 + 1;
    auto mu = conjugate_counts(shape_of(p));
    auto nu = slid_columns(lambda, d);
    auto nu_prev = slid_columns(lambda, d - 1);
    for (std::size_t j = mu.size(); j < q.size(); ++j)
      if (!q[j].empty()) throw MalformedPair("recording entry outside P");
    std::vector<int> prev(mu.size(), 0);
    Columns qprev(mu.size());
    for (std::size_t j = 0; j < mu.size(); ++j) {
      int c = static_cast<int>(j + 1);
      const auto col = j < q.size() ? q[j] : std::vector<int>{};
      if (static_cast<int>(col.size()) != mu[j] - at(nu, c))
        throw MalformedPair("recording tableau has the wrong shape");
      std::size_t fresh = 0;
      while (fresh < col.size() && col[fresh] == i) ++fresh;
      for (std::size_t k = fresh; k < col.size(); ++k)
        if (col[k] >= i)
          throw MalformedPair("recording entry out of order");
      qprev[j].assign(col.begin() + fresh, col.end());
      prev[j] = at(nu_prev, c) + static_cast<int>(qprev[j].size());
      if (prev[j] > mu[j] || (j > 0 && prev[j] > prev[j - 1]))
        throw MalformedPair("recording tableau does not shrink to a shape");
    }
    // Removed cells, lowest row first; the word of a diagonal is strictly
    // decreasing so they form a vertical strip.
    std::vector<int> rows_out;
    for (std::size_t j = 0; j < mu.size(); ++j)
      for (int r = prev[j] + 1; r <= mu[j]; ++r) rows_out.push_back(r);
    std::sort(rows_out.rbegin(), rows_out.rend());
    if (std::adjacent_find(rows_out.begin(), rows_out.end()) != rows_out.end())
      throw MalformedPair("removed cells are not a vertical strip");
    std::vector<int> word;
    for (int r : rows_out) word.push_back(reverse_bump(p, r - 1));
    std::reverse(word.begin(), word.end());
    for (std::size_t k = 1; k < word.size(); ++k)
      if (word[k] >= word[k - 1])
        throw MalformedPair("diagonal word is not strictly decreasing");
    diags.push_back(d);
    words.push_back(word);
    q = std::move(qprev);
  }
  if (!p.empty()) throw MalformedPair("letters left over after crowding");

  Placer pl{lambda, lo, hi, diags, words, {}, {}, {}};
  for (int r = 1; r <= lambda.length(); ++r) pl.box.emplace_back(lambda[r], 0);
  pl.run(0);
  if (pl.found.size() != 1)
    throw MalformedPair(pl.found.empty() ? "no edge labeled preimage"
                                         : "preimage is not unique");
  return pl.found.front();
}

CheckReport check_crystal_commute(const SkewShape &shape, const EdgeParams &p,
                                  int max_labels) {
  CheckReport rep;
  for (const auto &t : enumerate_elt(shape, p.n, p.lo, p.hi)) {
    if (max_labels >= 0 && t.label_count() > max_labels) continue;
    RSKPair u = uncrowd(t);
    for (int i = 1; i < p.n; ++i) {
      ++rep.cases;
      auto ft = f_elt(t, i);
      auto fp = f_ssyt(u.P, i);
      std::string why;
      if (ft.has_value() != fp.has_value()) {
        why = "f defined on one side only";
      } else if (ft) {
        RSKPair v = uncrowd(*ft);
        if (!(v.P == *fp)) why = "P does not follow f";
        else if (!(v.Q == u.Q)) why = "Q changed under f";
      }
      if (!why.empty())
        rep.failures.push_back("f" + std::to_string(i) + " on " + t.str() +
                               ": " + why);
    }
  }
  rep.ok = rep.failures.empty();
  return rep;
}

std::vector<CensusEntry> hook_tableau_census(const SkewShape &shape,
                                             const EdgeParams &p,
                                             int max_labels) {
  std::map<std::pair<Partition, std::vector<std::vector<int>>>, CensusEntry>
      by_key;
  for (const auto &t : enumerate_elt(shape, p.n, p.lo, p.hi)) {
    if (max_labels >= 0 && t.label_count() > max_labels) continue;
    RSKPair u = uncrowd(t);
    Partition mu(shape_of(rows_of(u.P)));
    auto key = std::make_pair(mu, u.Q.rows);
    auto it = by_key.find(key);
    if (it == by_key.end()) it = by_key.emplace(key, CensusEntry{mu, u.Q, 0}).first;
    ++it->second.count;
  }
  std::vector<CensusEntry> out;
  for (auto &[k, e] : by_key) out.push_back(std::move(e));
  return out;
}

std::string census_str(const std::vector<CensusEntry> &c) {
  std::ostringstream os;
  for (const auto &e : c)
    os << e.mu.str() << "  Q=" << e.Q.str() << "  x" << e.count << "\n";
  return os.str();
}

} // namespace eschur
