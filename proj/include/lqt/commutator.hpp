#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "lqt/congruence.hpp"

namespace lqt {

// The closed set of value matrices ((m11,m12),(m21,m22)) realizing the term
// condition without enumerating terms: it is the subalgebra of Q^4 generated
// by {(x,x,y,y) : x alpha y} and {(z,u,z,u) : z beta u} under componentwise
// operations. Rows are indexed by the alpha-pair, columns by the beta-tuples.
struct MatrixSet {
  int n = 0;
  std::vector<std::array<Point, 4>> quads;  // insertion order (deterministic)
  std::vector<char> member;                 // indexed by packed quad

  std::size_t pack(Point a, Point b, Point c, Point d) const {
    return ((static_cast<std::size_t>(a) * n + b) * n + c) * n + d;
  }
  bool contains(Point a, Point b, Point c, Point d) const {
    return member[pack(a, b, c, d)] != 0;
  }
};

namespace detail {

// Worklist closure; if `reject` is given, construction aborts as soon as a
// quad satisfying it appears (used for early-exit term-condition checks).
inline bool close_matrices(const LeftQuasigroup& q, const Partition& alpha,
                           const Partition& beta, MatrixSet& m,
                           const std::function<bool(const std::array<Point, 4>&)>& reject) {
  const int n = q.order();
  if (alpha.size() != n || beta.size() != n)
    throw std::invalid_argument("generate_matrices: carrier mismatch");
  m.n = n;
  m.member.assign(static_cast<std::size_t>(n) * n * n * n, 0);
  bool rejected = false;
  auto add = [&](Point a, Point b, Point c, Point d) {
    std::size_t key = m.pack(a, b, c, d);
    if (!m.member[key]) {
      m.member[key] = 1;
      m.quads.push_back({a, b, c, d});
      if (reject && reject(m.quads.back())) rejected = true;
    }
  };
  for (int x = 0; x < n && !rejected; ++x)
    for (int y = 0; y < n; ++y) {
      if (alpha.same(x, y)) add(x, x, y, y);
      if (beta.same(x, y)) add(x, y, x, y);
    }
  // pairwise closure under both operations, both argument orders
  for (std::size_t i = 0; i < m.quads.size() && !rejected; ++i) {
    auto qi = m.quads[i];  // copy: quads may reallocate
    for (std::size_t j = 0; j <= i && !rejected; ++j) {
      auto qj = m.quads[j];
      add(q.op(qi[0], qj[0]), q.op(qi[1], qj[1]), q.op(qi[2], qj[2]), q.op(qi[3], qj[3]));
      add(q.op(qj[0], qi[0]), q.op(qj[1], qi[1]), q.op(qj[2], qi[2]), q.op(qj[3], qi[3]));
      add(q.ldiv(qi[0], qj[0]), q.ldiv(qi[1], qj[1]), q.ldiv(qi[2], qj[2]), q.ldiv(qi[3], qj[3]));
      add(q.ldiv(qj[0], qi[0]), q.ldiv(qj[1], qi[1]), q.ldiv(qj[2], qi[2]), q.ldiv(qj[3], qi[3]));
    }
  }
  return !rejected;
}

}  // namespace detail

inline MatrixSet generate_matrices(const LeftQuasigroup& q, const Partition& alpha,
                                   const Partition& beta) {
  MatrixSet m;
  detail::close_matrices(q, alpha, beta, m, nullptr);
  return m;
}

inline bool centralizes(const MatrixSet& m, const Partition& delta) {
  for (const auto& t : m.quads)
    if (delta.same(t[0], t[1]) && !delta.same(t[2], t[3])) return false;
  return true;
}

// C(alpha, beta; delta): whether alpha centralizes beta over delta. Aborts
// the closure on the first violating matrix.
inline bool centralizes(const LeftQuasigroup& q, const Partition& alpha, const Partition& beta,
                        const Partition& delta) {
  MatrixSet m;
  return detail::close_matrices(q, alpha, beta, m, [&](const std::array<Point, 4>& t) {
    return delta.same(t[0], t[1]) && !delta.same(t[2], t[3]);
  });
}

// [alpha, beta]: least fixpoint harvesting row-failures into the growing
// congruence. The result is verified to centralize and to be minimal among
// the enumerated congruences.
inline Partition commutator_of(const LeftQuasigroup& q, const Partition& alpha,
                               const Partition& beta) {
  if (!is_congruence(q, alpha) || !is_congruence(q, beta))
    throw std::invalid_argument("commutator_of: arguments must be congruences");
  MatrixSet m = generate_matrices(q, alpha, beta);
  Partition delta(q.order());
  for (;;) {
    std::vector<std::pair<Point, Point>> harvest;
    for (const auto& t : m.quads)
      if (delta.same(t[0], t[1]) && !delta.same(t[2], t[3])) harvest.emplace_back(t[2], t[3]);
    if (harvest.empty()) break;
    delta = detail::congruence_fixpoint(q, &delta, {harvest.begin(), harvest.end()});
  }
  if (!centralizes(m, delta)) throw std::logic_error("commutator_of: fixpoint does not centralize");
  for (const auto& gamma : all_congruences(q))
    if (centralizes(m, gamma) && !leq(delta, gamma))
      throw std::logic_error("commutator_of: fixpoint not minimal");
  return delta;
}

inline bool is_abelian_congruence(const LeftQuasigroup& q, const Partition& alpha) {
  return centralizes(q, alpha, alpha, Partition(q.order()));
}

inline bool is_central_congruence(const LeftQuasigroup& q, const Partition& alpha) {
  return centralizes(q, alpha, Partition::top(q.order()), Partition(q.order()));
}

// zeta_Q: join of all congruences centralizing 1_Q; the join is re-verified
// rather than assumed to qualify.
inline Partition center(const LeftQuasigroup& q) {
  const Partition one = Partition::top(q.order());
  const Partition zero(q.order());
  Partition acc(q.order());
  for (const auto& alpha : all_congruences(q)) {
    if (centralizes(q, alpha, one, zero)) acc = join_c(q, acc, alpha);
  }
  if (!centralizes(q, acc, one, zero))
    throw join_error("center: join of centralizing congruences fails the term condition");
  return acc;
}

// Iterated centers lifted along quotients; empty series with class 0 for the
// one-element structure.
struct NilpotencyResult {
  std::vector<Partition> series;  // zeta_1 <= zeta_2 <= ... on the original carrier
  std::optional<int> nilpotency_class;  // nullopt: not nilpotent
};

inline NilpotencyResult nilpotency(const LeftQuasigroup& q) {
  NilpotencyResult r;
  Partition zeta(q.order());  // zeta_0 = 0_Q
  for (;;) {
    if (zeta.is_one()) {
      r.nilpotency_class = static_cast<int>(r.series.size());
      return r;
    }
    Quotient qu = quotient(q, zeta);
    Partition z = center(qu.algebra);
    Partition lifted = lift_congruence(zeta, z);
    if (lifted == zeta) return r;  // proper fixpoint below 1_Q
    r.series.push_back(lifted);
    zeta = lifted;
  }
}

inline std::optional<int> nilpotency_class(const LeftQuasigroup& q) {
  return nilpotency(q).nilpotency_class;
}

}  // namespace lqt
