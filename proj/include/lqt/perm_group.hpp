#pragma once

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lqt/partition.hpp"
#include "lqt/perm.hpp"

namespace lqt {

// A finitely generated subgroup of Sym({0..n-1}) with its element set
// materialized eagerly by BFS. Target degrees are small, so this is exact,
// predictable and makes subgroup comparison canonical (sorted element sets).
class PermGroup {
 public:
  PermGroup() = default;

  static PermGroup trivial(int degree) {
    PermGroup g;
    g.degree_ = degree;
    g.elems_ = {Perm(degree)};
    return g;
  }

  // <gens>: BFS closure under composition; generator inverses are added to
  // the expansion set so every word is reachable left to right.
  static PermGroup closure(int degree, std::vector<Perm> gens) {
    for (const auto& g : gens)
      if (g.degree() != degree) throw std::invalid_argument("closure: degree mismatch");
    PermGroup out;
    out.degree_ = degree;
    std::vector<Perm> exp;  // expansion set: gens and their inverses
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      exp.push_back(g);
      Perm inv = g.inverse();
      if (inv != g) exp.push_back(inv);
    }
    std::sort(exp.begin(), exp.end());
    exp.erase(std::unique(exp.begin(), exp.end()), exp.end());

    std::unordered_set<Perm, PermHash> seen;
    seen.insert(Perm(degree));
    std::deque<Perm> queue{Perm(degree)};
    while (!queue.empty()) {
      Perm w = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : exp) {
        Perm next = compose(w, g);
        if (seen.insert(next).second) {
          if (seen.size() > caps().max_group_order)
            throw capacity_error("group closure exceeds max_group_order");
          queue.push_back(std::move(next));
        }
      }
    }
    out.elems_.assign(seen.begin(), seen.end());
    std::sort(out.elems_.begin(), out.elems_.end());
    out.gens_ = std::move(gens);
    return out;
  }

  // Wraps a set already known to be a subgroup (e.g. a filtered subgroup or a
  // homomorphic image); validated cheaply.
  static PermGroup from_element_set(int degree, std::vector<Perm> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    PermGroup g;
    g.degree_ = degree;
    g.elems_ = std::move(elems);
    if (!g.contains(Perm(degree)))
      throw std::invalid_argument("element set lacks the identity");
    g.gens_.assign(g.elems_.begin(), g.elems_.end());
    return g;
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elems_.size(); }
  bool is_trivial() const { return elems_.size() == 1; }
  const std::vector<Perm>& elements() const { return elems_; }

  // Generating set; for filtered/image groups this is the element set itself.
  const std::vector<Perm>& generators() const {
    return gens_.empty() ? elems_ : gens_;
  }

  bool contains(const Perm& p) const {
    return std::binary_search(elems_.begin(), elems_.end(), p);
  }

  bool is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree_) return false;
    return std::includes(g.elems_.begin(), g.elems_.end(), elems_.begin(), elems_.end());
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.degree_ == b.degree_ && a.elems_ == b.elems_;
  }

  // Canonical order for deterministic sets of subgroups.
  friend bool canonical_less(const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems_ < b.elems_;
  }

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
};

struct PermGroupHash {
  std::size_t operator()(const PermGroup& g) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    PermHash ph;
    for (const auto& p : g.elements()) h = detail::hash_combine(h, ph(p));
    return h;
  }
};

// Orbit partition of the group generated by `gens` (no materialization).
inline Partition orbits_of(int degree, const std::vector<Perm>& gens) {
  detail::UnionFind uf(degree);
  for (const auto& g : gens)
    for (int i = 0; i < degree; ++i) uf.unite(i, g(i));
  return Partition::from_uf(uf);
}

inline Partition group_orbits(const PermGroup& g) {
  return orbits_of(g.degree(), g.generators());
}

inline bool is_transitive(const PermGroup& g) {
  return group_orbits(g).is_one();
}

// Smallest subgroup containing `seed` and closed under conjugation by
// `ambient`. Single BFS whose expansion ops are right-multiplication by seed
// elements (and inverses) and conjugation by ambient generators (and
// inverses); the conjugation ops keep the closure normal, the products keep
// it a subgroup.
inline PermGroup normal_closure(const PermGroup& ambient, const std::vector<Perm>& seed) {
  const int n = ambient.degree();
  for (const auto& s : seed) {
    if (s.degree() != n) throw std::invalid_argument("normal_closure: degree mismatch");
    if (!ambient.contains(s)) throw std::invalid_argument("normal_closure: seed not in ambient");
  }
  std::vector<Perm> mult;
  for (const auto& s : seed) {
    if (s.is_identity()) continue;
    mult.push_back(s);
    Perm inv = s.inverse();
    if (inv != s) mult.push_back(inv);
  }
  std::sort(mult.begin(), mult.end());
  mult.erase(std::unique(mult.begin(), mult.end()), mult.end());

  std::vector<Perm> conj;
  for (const auto& g : ambient.generators()) {
    if (g.is_identity()) continue;
    conj.push_back(g);
    Perm inv = g.inverse();
    if (inv != g) conj.push_back(inv);
  }
  std::sort(conj.begin(), conj.end());
  conj.erase(std::unique(conj.begin(), conj.end()), conj.end());

  std::unordered_set<Perm, PermHash> seen;
  seen.insert(Perm(n));
  std::deque<Perm> queue{Perm(n)};
  auto push = [&](Perm p) {
    if (seen.insert(p).second) {
      if (seen.size() > caps().max_group_order)
        throw capacity_error("normal closure exceeds max_group_order");
      queue.push_back(std::move(p));
    }
  };
  while (!queue.empty()) {
    Perm w = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : mult) push(compose(w, s));
    for (const auto& g : conj) push(conjugate(g, w));
  }
  std::vector<Perm> elems(seen.begin(), seen.end());
  return PermGroup::from_element_set(n, std::move(elems));
}

inline PermGroup join_groups(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> gens = a.generators();
  const auto& gb = b.generators();
  gens.insert(gens.end(), gb.begin(), gb.end());
  return PermGroup::closure(a.degree(), std::move(gens));
}

inline bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& h : n.generators())
      if (!n.contains(conjugate(x, h))) return false;
  return true;
}

namespace detail {

// Conjugacy class representatives, found by BFS of the conjugation action of
// the generators. Deterministic: classes discovered in element order.
inline std::vector<Perm> conjugacy_class_reps(const PermGroup& g) {
  std::vector<Perm> reps;
  std::unordered_set<Perm, PermHash> visited;
  for (const auto& e : g.elements()) {
    if (visited.count(e)) continue;
    reps.push_back(e);
    std::deque<Perm> queue{e};
    visited.insert(e);
    while (!queue.empty()) {
      Perm w = std::move(queue.front());
      queue.pop_front();
      for (const auto& x : g.generators()) {
        Perm c = conjugate(x, w);
        if (visited.insert(c).second) queue.push_back(std::move(c));
        Perm ci = conjugate(x.inverse(), w);
        if (visited.insert(ci).second) queue.push_back(std::move(ci));
      }
    }
  }
  return reps;
}

}  // namespace detail

// Exactly the normal subgroups of G: join-closure (BFS) of the normal
// closures of single elements (constant on conjugacy classes) together with
// the trivial group.
inline std::vector<PermGroup> all_normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> principal;
  {
    std::unordered_set<PermGroup, PermGroupHash> dedup;
    for (const auto& rep : detail::conjugacy_class_reps(g)) {
      if (rep.is_identity()) continue;
      PermGroup ncl = normal_closure(g, {rep});
      if (dedup.insert(ncl).second) principal.push_back(std::move(ncl));
    }
  }
  std::unordered_set<PermGroup, PermGroupHash> known;
  std::vector<PermGroup> out;
  std::deque<PermGroup> queue;
  auto push = [&](PermGroup n) {
    if (known.insert(n).second) {
      if (known.size() > caps().max_normal_subgroups)
        throw capacity_error("normal subgroup enumeration exceeds max_normal_subgroups");
      out.push_back(n);
      queue.push_back(std::move(n));
    }
  };
  push(PermGroup::trivial(g.degree()));
  while (!queue.empty()) {
    PermGroup n = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : principal) {
      if (p.is_subgroup_of(n)) continue;
      push(join_groups(n, p));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) { return canonical_less(a, b); });
  return out;
}

inline PermGroup pointwise_stabilizer(const PermGroup& g, Point x) {
  if (x < 0 || x >= g.degree()) throw std::invalid_argument("stabilizer: point out of range");
  std::vector<Perm> elems;
  for (const auto& p : g.elements())
    if (p(x) == x) elems.push_back(p);
  return PermGroup::from_element_set(g.degree(), std::move(elems));
}

inline PermGroup center_of(const PermGroup& g) {
  std::vector<Perm> elems;
  for (const auto& p : g.elements()) {
    bool central = true;
    for (const auto& x : g.generators())
      if (compose(p, x) != compose(x, p)) {
        central = false;
        break;
      }
    if (central) elems.push_back(p);
  }
  return PermGroup::from_element_set(g.degree(), std::move(elems));
}

// <[n,m] : n in N, m in M> over the full element sets.
inline PermGroup commutator_subgroup(const PermGroup& n, const PermGroup& m) {
  if (n.degree() != m.degree()) throw std::invalid_argument("commutator_subgroup: degree mismatch");
  if (n.order() * m.order() > 4'000'000)
    throw capacity_error("commutator_subgroup: too many element pairs");
  std::unordered_set<Perm, PermHash> seeds;
  for (const auto& a : n.elements())
    for (const auto& b : m.elements()) {
      Perm c = commutator(a, b);
      if (!c.is_identity()) seeds.insert(std::move(c));
    }
  return PermGroup::closure(n.degree(), std::vector<Perm>(seeds.begin(), seeds.end()));
}

}  // namespace lqt
