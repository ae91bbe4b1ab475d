#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lqt/config.hpp"

namespace lqt {

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns true if the classes were distinct. The smaller root wins so that
  // roots stay minima of their classes.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// Equivalence relation on {0..n-1} in canonical form: rep_[i] is the minimum
// element of i's block.
class Partition {
 public:
  Partition() = default;
  explicit Partition(int n) : rep_(n) {  // 0_Q: all singletons
    for (int i = 0; i < n; ++i) rep_[i] = i;
  }

  static Partition top(int n) {  // 1_Q
    Partition p;
    p.rep_.assign(n, 0);
    return p;
  }

  // Accepts any labeling (rep[i] = some class label in range) and canonicalizes.
  static Partition from_labels(const std::vector<int>& labels) {
    const int n = static_cast<int>(labels.size());
    std::vector<int> min_of(n, -1);
    for (int i = 0; i < n; ++i) {
      int l = labels[i];
      if (l < 0 || l >= n) throw std::invalid_argument("partition label out of range");
      if (min_of[l] < 0) min_of[l] = i;
    }
    Partition p;
    p.rep_.resize(n);
    for (int i = 0; i < n; ++i) p.rep_[i] = min_of[labels[i]];
    return p;
  }

  static Partition from_uf(detail::UnionFind& uf) {
    std::vector<int> labels(uf.size());
    for (int i = 0; i < uf.size(); ++i) labels[i] = uf.find(i);
    return from_labels(labels);
  }

  static Partition from_blocks(int n, const std::vector<std::vector<Point>>& blocks) {
    std::vector<int> labels(n, -1);
    for (const auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("empty block");
      int m = b.front();
      for (Point x : b) m = std::min(m, x);
      for (Point x : b) {
        if (x < 0 || x >= n) throw std::invalid_argument("block element out of range");
        if (labels[x] != -1) throw std::invalid_argument("blocks overlap");
        labels[x] = m;
      }
    }
    for (int i = 0; i < n; ++i)
      if (labels[i] == -1) throw std::invalid_argument("blocks do not cover carrier");
    return from_labels(labels);
  }

  int size() const { return static_cast<int>(rep_.size()); }
  Point rep(Point i) const { return rep_[i]; }
  bool same(Point a, Point b) const { return rep_[a] == rep_[b]; }
  const std::vector<Point>& reps() const { return rep_; }

  bool is_zero() const {
    for (int i = 0; i < size(); ++i)
      if (rep_[i] != i) return false;
    return true;
  }
  bool is_one() const {
    for (int i = 0; i < size(); ++i)
      if (rep_[i] != 0) return false;
    return true;
  }

  int block_count() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (rep_[i] == i) ++c;
    return c;
  }

  // Blocks ordered by their minimum element.
  std::vector<std::vector<Point>> blocks() const {
    std::vector<std::vector<Point>> out;
    std::vector<int> idx(size(), -1);
    for (int i = 0; i < size(); ++i) {
      if (rep_[i] == i) {
        idx[i] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[idx[rep_[i]]].push_back(i);
    }
    return out;
  }

  // point -> index of its block in blocks() order.
  std::vector<int> block_index() const {
    std::vector<int> idx(size(), -1);
    int c = 0;
    for (int i = 0; i < size(); ++i)
      if (rep_[i] == i) idx[i] = c++;
    std::vector<int> out(size());
    for (int i = 0; i < size(); ++i) out[i] = idx[rep_[i]];
    return out;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

  std::string to_string() const {
    std::ostringstream os;
    bool first_block = true;
    for (const auto& b : blocks()) {
      if (!first_block) os << '|';
      first_block = false;
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) os << ' ';
        os << b[i];
      }
    }
    return os.str();
  }

 private:
  std::vector<Point> rep_;
};

// alpha <= beta: every alpha-block lies inside a beta-block.
inline bool leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("leq: carrier mismatch");
  for (int i = 0; i < a.size(); ++i)
    if (!b.same(i, a.rep(i))) return false;
  return true;
}

inline Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("meet: carrier mismatch");
  std::map<std::pair<int, int>, int> first;
  std::vector<int> labels(a.size());
  for (int i = 0; i < a.size(); ++i) {
    auto key = std::make_pair(a.rep(i), b.rep(i));
    auto [it, fresh] = first.emplace(key, i);
    labels[i] = it->second;
  }
  return Partition::from_labels(labels);
}

// Join as equivalence relations (transitive closure of the union).
inline Partition join_eq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("join: carrier mismatch");
  detail::UnionFind uf(a.size());
  for (int i = 0; i < a.size(); ++i) {
    uf.unite(i, a.rep(i));
    uf.unite(i, b.rep(i));
  }
  return Partition::from_uf(uf);
}

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : p.reps()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// All partitions of {0..n-1} via restricted growth strings; n <= 10 guard.
inline std::vector<Partition> all_partitions(int n) {
  if (n > 10) throw capacity_error("all_partitions: carrier too large");
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int maxl) -> void {
    if (i == n) {
      out.push_back(Partition::from_labels(rgs));
      return;
    }
    for (int l = 0; l <= maxl + 1 && l < n; ++l) {
      rgs[i] = l;
      self(self, i + 1, std::max(maxl, l));
    }
  };
  if (n == 0) return out;
  rec(rec, 1, 0);  // rgs[0] = 0 fixed
  return out;
}

inline Partition random_partition(int n, Rng& rng) {
  std::vector<int> labels(n, 0);
  int maxl = 0;
  for (int i = 1; i < n; ++i) {
    labels[i] = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxl) + 2));
    maxl = std::max(maxl, labels[i]);
  }
  return Partition::from_labels(labels);
}

// Parses "0 2|1 3" (blocks separated by '|'); "0" and "1" denote bottom / top.
inline Partition parse_partition(const std::string& text, int n) {
  if (text == "0") return Partition(n);
  if (text == "1") return Partition::top(n);
  std::vector<std::vector<Point>> blocks;
  std::istringstream whole(text);
  std::string blk;
  while (std::getline(whole, blk, '|')) {
    std::istringstream bs(blk);
    std::vector<Point> b;
    Point x;
    while (bs >> x) b.push_back(x);
    if (!b.empty()) blocks.push_back(std::move(b));
  }
  return Partition::from_blocks(n, blocks);
}

}  // namespace lqt
