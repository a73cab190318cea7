#include "eschur/shapes.hpp"

#include "eschur/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace eschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0)
      throw std::invalid_argument("negative part in partition");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must weakly decrease");
  }
}

Partition::Partition(std::vector<int> parts, int extent) {
  while (static_cast<int>(parts.size()) > extent && !parts.empty() &&
         parts.back() == 0)
    parts.pop_back();
  if (static_cast<int>(parts.size()) > extent)
    throw std::invalid_argument("extent smaller than number of positive parts");
  parts.resize(extent, 0);
  *this = Partition(std::move(parts));
}

int Partition::length() const {
  int l = 0;
  for (int p : parts_)
    if (p > 0) ++l;
  return l;
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(const Partition &mu) const {
  int n = std::max(extent(), mu.extent());
  for (int i = 1; i <= n; ++i)
    if (mu[i] > (*this)[i]) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> c(first(), 0);
  for (int j = 1; j <= first(); ++j)
    for (int i = 1; i <= extent() && (*this)[i] >= j; ++i) ++c[j - 1];
  return Partition(c);
}

Partition Partition::with_extent(int e) const { return Partition(parts_, e); }

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + ")";
}

SkewShape::SkewShape(Partition outer)
    : outer_(std::move(outer)), inner_(std::vector<int>(outer_.extent(), 0)) {}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)) {
  if (inner.extent() < outer_.extent())
    inner_ = inner.with_extent(outer_.extent());
  else if (inner.extent() > outer_.extent())
    inner_ = inner.with_extent(std::max(outer_.extent(), inner.length()));
  else
    inner_ = std::move(inner);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= extent(); ++i)
    for (int j = inner_[i] + 1; j <= outer_[i]; ++j) out.push_back({i, j});
  return out;
}

std::string SkewShape::str() const {
  if (straight()) return outer_.str();
  return outer_.str() + "/" + inner_.str();
}

std::string MayaWindow::str() const {
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s;
}

std::set<int> particle_positions(const Partition &lambda, int lo, int hi) {
  std::set<int> out;
  for (int k = 1; k <= lambda.extent(); ++k) {
    int p = lambda[k] - k;
    if (p >= lo && p <= hi) out.insert(p);
  }
  for (int k = lambda.extent() + 1; -k >= lo; ++k)
    if (-k <= hi) out.insert(-k);
  return out;
}

MayaWindow to_maya(const Partition &lambda, int lo, int hi) {
  if (lo > -lambda.extent() || hi < lambda.first())
    throw WindowError("window [" + std::to_string(lo) + "," +
                      std::to_string(hi) + "] too small for " + lambda.str());
  MayaWindow m{lo, hi, std::vector<int>(hi - lo + 1, 0)};
  for (int p : particle_positions(lambda, lo, hi)) m.bits[p - lo] = 1;
  return m;
}

Partition from_maya(const MayaWindow &m, int extent) {
  if (static_cast<int>(m.bits.size()) != m.hi - m.lo + 1)
    throw MalformedMaya("bit count does not match the window");
  std::vector<int> pos; // descending
  for (int p = m.hi; p >= m.lo; --p)
    if (m.bits[p - m.lo]) pos.push_back(p);
  int vacuum = std::max(0, -m.lo - extent);
  if (static_cast<int>(pos.size()) != extent + vacuum)
    throw MalformedMaya("expected " + std::to_string(extent + vacuum) +
                        " particles, found " + std::to_string(pos.size()));
  std::vector<int> parts;
  for (int k = 1; k <= extent; ++k) {
    int part = pos[k - 1] + k;
    if (part < 0) throw MalformedMaya("particle below the vacuum level");
    parts.push_back(part);
  }
  for (int k = extent + 1; k <= extent + vacuum; ++k)
    if (pos[k - 1] != -k) throw MalformedMaya("vacuum region not filled");
  return Partition(parts);
}

bool is_horizontal_strip(const Partition &outer, const Partition &inner) {
  int n = std::max(outer.extent(), inner.extent());
  for (int i = 1; i <= n; ++i) {
    if (inner[i] > outer[i]) return false;
    if (i < n && outer[i + 1] > inner[i]) return false;
  }
  return true;
}

std::vector<Partition> strip_predecessors(const Partition &outer,
                                          const Partition &inner) {
  // nu_i ranges over [max(inner_i, outer_{i+1}), outer_i]
  int n = outer.extent();
  std::vector<Partition> out;
  std::vector<int> cur(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.emplace_back(cur);
      return;
    }
    int lo = std::max(inner[i], outer[i + 1]);
    for (int v = lo; v <= outer[i]; ++v) {
      cur[i - 1] = v;
      rec(i + 1);
    }
  };
  if (outer.contains(inner)) rec(1);
  return out;
}

std::vector<Chain> strip_chains(const SkewShape &shape, int n) {
  std::vector<Chain> out;
  if (!shape.valid()) return out;
  Chain cur(n + 1);
  std::function<void(int, const Partition &)> rec = [&](int v,
                                                        const Partition &top) {
    cur[v] = top;
    if (v == 0) {
      if (top == shape.inner()) out.push_back(cur);
      return;
    }
    for (const auto &nu : strip_predecessors(top, shape.inner())) rec(v - 1, nu);
  };
  if (n < 0) return out;
  rec(n, shape.outer());
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols, int extent) {
  if (extent < 0) extent = rows;
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int i, int bound) {
    if (i == rows) {
      out.emplace_back(cur, extent);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      cur.push_back(v);
      rec(i + 1, v);
      cur.pop_back();
    }
  };
  rec(0, cols);
  std::sort(out.begin(), out.end(), [](const Partition &p, const Partition &q) {
    if (p.size() != q.size()) return p.size() < q.size();
    return q < p;
  });
  return out;
}

std::vector<Partition> partitions_of_size_at_most(int max_size, int max_len,
                                                  int extent) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    out.emplace_back(cur, extent);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int v = 1; v <= std::min(bound, remaining); ++v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(max_size, max_size);
  return out;
}

Partition parse_partition(const std::string &text, int extent) {
  std::vector<int> parts;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad part '" + tok + "'");
    parts.push_back(v);
  }
  if (extent < 0) return Partition(parts);
  return Partition(parts, extent);
}

} // namespace eschur
