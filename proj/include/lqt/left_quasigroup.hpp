#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lqt/perm_group.hpp"

namespace lqt {

// An n x n Cayley table whose rows are permutations; x\y is the row-inverse
// operation, precomputed at validation.
class LeftQuasigroup {
 public:
  LeftQuasigroup() = default;

  static LeftQuasigroup from_rows(const std::vector<std::vector<Point>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 0) throw std::invalid_argument("empty table");
    std::vector<Point> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
      if (static_cast<int>(rows[x].size()) != n) {
        std::ostringstream os;
        os << "table is not square: row " << x << " has " << rows[x].size()
           << " entries, expected " << n;
        throw std::invalid_argument(os.str());
      }
      flat.insert(flat.end(), rows[x].begin(), rows[x].end());
    }
    return from_flat(n, std::move(flat));
  }

  static LeftQuasigroup from_flat(int n, std::vector<Point> flat) {
    LeftQuasigroup q;
    q.n_ = n;
    q.mul_ = std::move(flat);
    q.ld_.assign(q.mul_.size(), -1);
    std::vector<char> seen(n);
    for (int x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int y = 0; y < n; ++y) {
        Point v = q.mul_[x * n + y];
        if (v < 0 || v >= n) {
          std::ostringstream os;
          os << "entry out of range at row " << x << ", column " << y;
          throw std::invalid_argument(os.str());
        }
        if (seen[v]) {
          std::ostringstream os;
          os << "row " << x << " is not a bijection: value " << v << " repeats";
          throw std::invalid_argument(os.str());
        }
        seen[v] = 1;
        q.ld_[x * n + v] = y;  // x \ v = y  iff  x*y = v
      }
    }
    return q;
  }

  int order() const { return n_; }
  Point op(Point x, Point y) const { return mul_[x * n_ + y]; }
  Point ldiv(Point x, Point y) const { return ld_[x * n_ + y]; }

  Perm left_translation(Point x) const {
    std::vector<Point> img(mul_.begin() + x * n_, mul_.begin() + (x + 1) * n_);
    return Perm::from_images(std::move(img));
  }

  std::vector<std::vector<Point>> rows() const {
    std::vector<std::vector<Point>> out(n_);
    for (int x = 0; x < n_; ++x)
      out[x].assign(mul_.begin() + x * n_, mul_.begin() + (x + 1) * n_);
    return out;
  }

  const std::vector<Point>& flat() const { return mul_; }

  friend bool operator==(const LeftQuasigroup& a, const LeftQuasigroup& b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_;
  }

 private:
  int n_ = 0;
  std::vector<Point> mul_, ld_;
};

struct Predicates {
  bool idempotent = false;
  bool rack = false;
  bool quandle = false;
  bool latin = false;
  bool projection = false;
};

inline Predicates predicates(const LeftQuasigroup& q) {
  const int n = q.order();
  Predicates p;
  p.idempotent = true;
  for (int x = 0; x < n && p.idempotent; ++x)
    if (q.op(x, x) != x) p.idempotent = false;
  p.rack = true;
  for (int x = 0; x < n && p.rack; ++x)
    for (int y = 0; y < n && p.rack; ++y)
      for (int z = 0; z < n; ++z)
        if (q.op(x, q.op(y, z)) != q.op(q.op(x, y), q.op(x, z))) {
          p.rack = false;
          break;
        }
  p.quandle = p.rack && p.idempotent;
  p.latin = true;
  for (int y = 0; y < n && p.latin; ++y) {
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      Point v = q.op(x, y);
      if (seen[v]) {
        p.latin = false;
        break;
      }
      seen[v] = 1;
    }
  }
  p.projection = true;
  for (int x = 0; x < n && p.projection; ++x)
    for (int y = 0; y < n; ++y)
      if (q.op(x, y) != y) {
        p.projection = false;
        break;
      }
  return p;
}

inline std::vector<Point> idempotent_elements(const LeftQuasigroup& q) {
  std::vector<Point> out;
  for (int x = 0; x < q.order(); ++x)
    if (q.op(x, x) == x) out.push_back(x);
  return out;
}

inline PermGroup lmlt(const LeftQuasigroup& q) {
  std::vector<Perm> gens;
  for (int x = 0; x < q.order(); ++x) gens.push_back(q.left_translation(x));
  return PermGroup::closure(q.order(), std::move(gens));
}

// Generators L_x L_y^-1 over all pairs; deduplicated.
inline std::vector<Perm> displacement_generators(const LeftQuasigroup& q) {
  const int n = q.order();
  std::set<Perm> gens;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<Point> img(n);
      for (int i = 0; i < n; ++i) img[i] = q.op(x, q.ldiv(y, i));
      Perm p = Perm::from_images(std::move(img));
      if (!p.is_identity()) gens.insert(std::move(p));
    }
  return {gens.begin(), gens.end()};
}

// Dis(Q): the normal closure of the displacements inside LMlt(Q). The plain
// subgroup generated by the L_x L_y^-1 can be smaller and non-normal outside
// the rack world, where conjugation by translations permutes the generators.
inline PermGroup dis(const LeftQuasigroup& q, const PermGroup& lm) {
  return normal_closure(lm, displacement_generators(q));
}

inline PermGroup dis(const LeftQuasigroup& q) { return dis(q, lmlt(q)); }

inline std::vector<Point> subuniverse_generated(const LeftQuasigroup& q,
                                                const std::vector<Point>& seed) {
  if (seed.empty()) throw std::invalid_argument("subuniverse_generated: empty seed");
  const int n = q.order();
  std::vector<char> in(n, 0);
  std::vector<Point> members;
  std::vector<Point> work;
  auto add = [&](Point x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  };
  for (Point x : seed) {
    if (x < 0 || x >= n) throw std::invalid_argument("subuniverse_generated: point out of range");
    add(x);
  }
  while (!work.empty()) {
    Point a = work.back();
    work.pop_back();
    // pair a with every current member, both orders, both operations
    for (std::size_t i = 0; i < members.size(); ++i) {
      Point b = members[i];
      add(q.op(a, b));
      add(q.op(b, a));
      add(q.ldiv(a, b));
      add(q.ldiv(b, a));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Every subuniverse is a join of closures of singletons, so the join-closure
// of the singleton closures is the full family.
inline std::vector<std::vector<Point>> all_subalgebras(const LeftQuasigroup& q) {
  std::set<std::vector<Point>> family;
  std::vector<std::vector<Point>> queue;
  for (int x = 0; x < q.order(); ++x) {
    auto s = subuniverse_generated(q, {x});
    if (family.insert(s).second) queue.push_back(std::move(s));
  }
  std::vector<std::vector<Point>> atoms(family.begin(), family.end());
  while (!queue.empty()) {
    auto s = std::move(queue.back());
    queue.pop_back();
    for (const auto& a : atoms) {
      std::vector<Point> both = s;
      both.insert(both.end(), a.begin(), a.end());
      auto j = subuniverse_generated(q, both);
      if (family.insert(j).second) queue.push_back(std::move(j));
    }
  }
  return {family.begin(), family.end()};
}

// Subalgebra on the given closed subset, relabeled by sorted position.
inline LeftQuasigroup restrict_to(const LeftQuasigroup& q, const std::vector<Point>& sub) {
  std::vector<Point> pos(q.order(), -1);
  for (std::size_t i = 0; i < sub.size(); ++i) pos[sub[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sub.size());
  std::vector<Point> flat(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Point v = q.op(sub[i], sub[j]);
      if (pos[v] < 0) throw std::invalid_argument("restrict_to: subset not closed");
      flat[i * m + j] = pos[v];
    }
  return LeftQuasigroup::from_flat(m, std::move(flat));
}

namespace detail {

// Per-point invariant used to prune the isomorphism backtracking: the sorted
// cycle type of L_x plus whether x is idempotent.
inline std::vector<int> point_signature(const LeftQuasigroup& q, Point x) {
  Perm l = q.left_translation(x);
  std::vector<char> done(q.order(), 0);
  std::vector<int> cycles;
  for (int i = 0; i < q.order(); ++i) {
    if (done[i]) continue;
    int len = 0;
    for (int j = i; !done[j]; j = l(j)) {
      done[j] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.push_back(q.op(x, x) == x ? 1 : 0);
  return cycles;
}

}  // namespace detail

// Exact brute force with row-signature pruning; desk scale only.
inline bool are_isomorphic(const LeftQuasigroup& a, const LeftQuasigroup& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  if (n > 10) throw capacity_error("are_isomorphic: order above brute-force cap");
  std::vector<std::vector<int>> siga(n), sigb(n);
  for (int x = 0; x < n; ++x) {
    siga[x] = detail::point_signature(a, x);
    sigb[x] = detail::point_signature(b, x);
  }
  {
    auto sa = siga;
    auto sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&](int k) {
    // all pairs involving k whose images are decided
    for (int i = 0; i <= k; ++i) {
      for (auto [x, y] : {std::pair{i, k}, std::pair{k, i}}) {
        Point v = a.op(x, y);
        if (v <= k) {
          if (b.op(img[x], img[y]) != img[v]) return false;
        }
      }
    }
    // products landing on k from decided pairs
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (a.op(i, j) == k && b.op(img[i], img[j]) != img[k]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || siga[k] != sigb[c]) continue;
      img[k] = c;
      used[c] = 1;
      if (consistent(k) && self(self, k + 1)) return true;
      used[c] = 0;
      img[k] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

// --- named small structures ---

inline LeftQuasigroup projection_lq(int n) {
  std::vector<Point> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = y;
  return LeftQuasigroup::from_flat(n, std::move(flat));
}

inline LeftQuasigroup dihedral_quandle(int n) {
  std::vector<Point> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = ((2 * x - y) % n + n) % n;
  return LeftQuasigroup::from_flat(n, std::move(flat));
}

inline LeftQuasigroup cyclic_shift_lq(int n) {  // x*y = y+1
  std::vector<Point> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[x * n + y] = (y + 1) % n;
  return LeftQuasigroup::from_flat(n, std::move(flat));
}

inline LeftQuasigroup one_point_lq() { return projection_lq(1); }

// Compact single-line rendering used in witnesses and harness reports.
inline std::string table_brief(const LeftQuasigroup& q) {
  std::ostringstream os;
  os << q.order() << ':';
  for (int x = 0; x < q.order(); ++x) {
    if (x) os << '/';
    for (int y = 0; y < q.order(); ++y) {
      if (y) os << ' ';
      os << q.op(x, y);
    }
  }
  return os.str();
}

}  // namespace lqt
