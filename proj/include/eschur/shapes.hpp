#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace eschur {

// A weakly decreasing sequence whose length (the extent) is part of its
// identity: (2,0) and (2) are different partitions.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::vector<int> parts, int extent);

  const std::vector<int> &parts() const { return parts_; }
  int extent() const { return static_cast<int>(parts_.size()); }
  // 1-based; zero past the extent.
  int operator[](int i) const {
    return i >= 1 && i <= extent() ? parts_[i - 1] : 0;
  }
  int first() const { return (*this)[1]; }
  int length() const; // number of positive parts
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(const Partition &mu) const;
  bool contains_cell(int i, int j) const { return j >= 1 && j <= (*this)[i]; }
  Partition conjugate() const;
  Partition with_extent(int extent) const;
  std::string str() const;

  friend bool operator==(const Partition &p, const Partition &q) {
    return p.parts_ == q.parts_;
  }
  friend bool operator!=(const Partition &p, const Partition &q) {
    return !(p == q);
  }
  friend bool operator<(const Partition &p, const Partition &q) {
    return p.parts_ < q.parts_;
  }

private:
  std::vector<int> parts_;
};

struct Cell {
  int i = 0, j = 0;
  int content() const { return j - i; }
  friend bool operator==(Cell p, Cell q) { return p.i == q.i && p.j == q.j; }
  friend bool operator<(Cell p, Cell q) {
    return p.i != q.i ? p.i < q.i : p.j < q.j;
  }
};

class SkewShape {
public:
  SkewShape() = default;
  explicit SkewShape(Partition outer);
  // The inner shape is padded to the outer extent.
  SkewShape(Partition outer, Partition inner);

  const Partition &outer() const { return outer_; }
  const Partition &inner() const { return inner_; }
  int extent() const { return outer_.extent(); }
  bool valid() const { return outer_.contains(inner_); }
  bool straight() const { return inner_.empty(); }
  bool contains(int i, int j) const {
    return outer_.contains_cell(i, j) && !inner_.contains_cell(i, j);
  }
  int size() const { return outer_.size() - inner_.size(); }
  // Row-major order.
  std::vector<Cell> cells() const;
  std::string str() const;

  friend bool operator==(const SkewShape &p, const SkewShape &q) {
    return p.outer_ == q.outer_ && p.inner_ == q.inner_;
  }

private:
  Partition outer_, inner_;
};

struct MayaWindow {
  int lo = 0, hi = -1;
  std::vector<int> bits; // position lo + k holds bits[k]
  std::string str() const;
};

MayaWindow to_maya(const Partition &lambda, int lo, int hi);
Partition from_maya(const MayaWindow &m, int extent);

// Particle positions lambda_k - k for k <= extent and -k beyond, restricted
// to [lo, hi]; no window checks.
std::set<int> particle_positions(const Partition &lambda, int lo, int hi);

bool is_horizontal_strip(const Partition &outer, const Partition &inner);

using Chain = std::vector<Partition>; // nu^0 = inner, ..., nu^n = outer

std::vector<Chain> strip_chains(const SkewShape &shape, int n);

// Partitions nu with inner <= nu <= outer (cellwise) and outer/nu a
// horizontal strip; extent of outer.
std::vector<Partition> strip_predecessors(const Partition &outer,
                                          const Partition &inner);

// All partitions with at most `rows` parts each at most `cols`, with extent
// `extent` (defaults to rows).
std::vector<Partition> partitions_in_box(int rows, int cols, int extent = -1);
std::vector<Partition> partitions_of_size_at_most(int max_size, int max_len,
                                                  int extent);

Partition parse_partition(const std::string &text, int extent = -1);

} // namespace eschur
