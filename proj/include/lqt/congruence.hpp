#pragma once

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lqt/left_quasigroup.hpp"
#include "lqt/partition.hpp"

namespace lqt {

// Compatibility with both operations is checked; \-compatibility is not
// implied by *-compatibility and is tested explicitly.
inline bool is_congruence(const LeftQuasigroup& q, const Partition& a) {
  const int n = q.order();
  if (a.size() != n) throw std::invalid_argument("is_congruence: carrier mismatch");
  for (int x = 0; x < n; ++x) {
    Point r = a.rep(x);
    if (r == x) continue;
    // one varying argument suffices; two-sided compatibility follows by
    // transitivity through (r, x)
    for (int c = 0; c < n; ++c) {
      if (!a.same(q.op(c, x), q.op(c, r))) return false;
      if (!a.same(q.op(x, c), q.op(r, c))) return false;
      if (!a.same(q.ldiv(c, x), q.ldiv(c, r))) return false;
      if (!a.same(q.ldiv(x, c), q.ldiv(r, c))) return false;
    }
  }
  return true;
}

namespace detail {

// Union-find fixpoint: every processed pair propagates its four translated
// consequences; the result is the least congruence containing the seed pairs
// on top of `base`.
inline Partition congruence_fixpoint(const LeftQuasigroup& q, const Partition* base,
                                     std::deque<std::pair<Point, Point>> work) {
  const int n = q.order();
  UnionFind uf(n);
  if (base)
    for (int i = 0; i < n; ++i) work.emplace_back(i, base->rep(i));
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    for (int c = 0; c < n; ++c) {
      work.emplace_back(q.op(c, a), q.op(c, b));
      work.emplace_back(q.op(a, c), q.op(b, c));
      work.emplace_back(q.ldiv(c, a), q.ldiv(c, b));
      work.emplace_back(q.ldiv(a, c), q.ldiv(b, c));
    }
  }
  return Partition::from_uf(uf);
}

}  // namespace detail

inline Partition congruence_generated(const LeftQuasigroup& q,
                                      const std::vector<std::pair<Point, Point>>& pairs) {
  for (auto [a, b] : pairs)
    if (a < 0 || b < 0 || a >= q.order() || b >= q.order())
      throw std::invalid_argument("congruence_generated: pair out of range");
  return detail::congruence_fixpoint(q, nullptr, {pairs.begin(), pairs.end()});
}

// Congruence join: congruence closure of the union.
inline Partition join_c(const LeftQuasigroup& q, const Partition& a, const Partition& b) {
  std::deque<std::pair<Point, Point>> work;
  for (int i = 0; i < q.order(); ++i) work.emplace_back(i, b.rep(i));
  return detail::congruence_fixpoint(q, &a, std::move(work));
}

// Full Con(Q): join-closure of the principal congruences plus 0_Q.
inline std::vector<Partition> all_congruences(const LeftQuasigroup& q) {
  const int n = q.order();
  std::vector<Partition> principal;
  {
    std::unordered_set<Partition, PartitionHash> dedup;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Partition c = congruence_generated(q, {{a, b}});
        if (dedup.insert(c).second) principal.push_back(std::move(c));
      }
  }
  std::unordered_set<Partition, PartitionHash> known;
  std::vector<Partition> out;
  std::deque<Partition> queue;
  auto push = [&](Partition p) {
    if (known.insert(p).second) {
      if (known.size() > caps().max_congruences)
        throw capacity_error("congruence enumeration exceeds max_congruences");
      out.push_back(p);
      queue.push_back(std::move(p));
    }
  };
  push(Partition(n));
  while (!queue.empty()) {
    Partition p = std::move(queue.front());
    queue.pop_front();
    for (const auto& c : principal) {
      if (leq(c, p)) continue;
      push(join_c(q, p, c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// beta/alpha on the blocks of alpha (labeled in block_index order).
inline Partition quotient_congruence(const Partition& alpha, const Partition& beta) {
  if (!leq(alpha, beta)) throw std::invalid_argument("quotient_congruence: alpha not below beta");
  auto bidx = alpha.block_index();
  std::vector<int> labels(alpha.block_count(), -1);
  for (int i = 0; i < alpha.size(); ++i) {
    if (alpha.rep(i) != i) continue;  // block minima, ascending
    labels[bidx[i]] = bidx[beta.rep(i)];
  }
  return Partition::from_labels(labels);
}

// Inverse of the above: pull a partition on alpha-blocks back to the carrier.
inline Partition lift_congruence(const Partition& alpha, const Partition& gamma_on_blocks) {
  if (gamma_on_blocks.size() != alpha.block_count())
    throw std::invalid_argument("lift_congruence: block count mismatch");
  auto blocks = alpha.blocks();
  detail::UnionFind uf(alpha.size());
  for (int i = 0; i < alpha.size(); ++i) uf.unite(i, alpha.rep(i));
  for (int k = 0; k < static_cast<int>(blocks.size()); ++k)
    uf.unite(blocks[k][0], blocks[gamma_on_blocks.rep(k)][0]);
  return Partition::from_uf(uf);
}

struct Quotient {
  LeftQuasigroup algebra;
  std::vector<int> block_of;  // point -> block index
};

inline Quotient quotient(const LeftQuasigroup& q, const Partition& alpha) {
  if (!is_congruence(q, alpha)) throw std::invalid_argument("quotient: not a congruence");
  auto blocks = alpha.blocks();
  auto bidx = alpha.block_index();
  const int m = static_cast<int>(blocks.size());
  std::vector<Point> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) flat[i * m + j] = bidx[q.op(blocks[i][0], blocks[j][0])];
  return Quotient{LeftQuasigroup::from_flat(m, std::move(flat)), std::move(bidx)};
}

// Induced permutation on alpha-blocks. Whether h maps blocks to blocks is
// verified; congruences and elements of LMlt always satisfy it.
inline Perm induced_block_perm(const Partition& alpha, const Perm& h) {
  auto blocks = alpha.blocks();
  auto bidx = alpha.block_index();
  std::vector<Point> img(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    int target = bidx[h(blocks[i][0])];
    for (Point x : blocks[i])
      if (bidx[h(x)] != target)
        throw std::invalid_argument("induced_block_perm: blocks not preserved");
    img[i] = target;
  }
  return Perm::from_images(std::move(img));
}

// Homomorphic image of a subgroup under the block action.
inline PermGroup induced_block_group(const Partition& alpha, const PermGroup& n) {
  std::vector<Perm> elems;
  elems.reserve(n.order());
  for (const auto& h : n.elements()) elems.push_back(induced_block_perm(alpha, h));
  return PermGroup::from_element_set(alpha.block_count(), std::move(elems));
}

inline Partition cayley_kernel(const LeftQuasigroup& q) {
  const int n = q.order();
  std::vector<int> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = x;
    for (int y = 0; y < x; ++y) {
      bool equal = true;
      for (int z = 0; z < n; ++z)
        if (q.op(x, z) != q.op(y, z)) {
          equal = false;
          break;
        }
      if (equal) {
        labels[x] = labels[y];
        break;
      }
    }
  }
  return Partition::from_labels(labels);
}

inline bool is_cayley(const LeftQuasigroup& q) { return is_congruence(q, cayley_kernel(q)); }

inline bool is_faithful(const LeftQuasigroup& q) { return cayley_kernel(q).is_zero(); }

}  // namespace lqt
