#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lqt/displacement.hpp"
#include "lqt/term.hpp"

namespace lqt {

// Finite abelian group as a direct sum of cyclic groups; elements are indexed
// in mixed radix (last modulus fastest).
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("abelian group needs at least one modulus");
    order_ = 1;
    for (int m : moduli_) {
      if (m < 1) throw std::invalid_argument("modulus must be >= 1");
      order_ *= m;
    }
  }

  int order() const { return order_; }
  int rank() const { return static_cast<int>(moduli_.size()); }
  const std::vector<int>& moduli() const { return moduli_; }

  std::vector<int> decode(int idx) const {
    std::vector<int> v(rank());
    for (int i = rank() - 1; i >= 0; --i) {
      v[i] = idx % moduli_[i];
      idx /= moduli_[i];
    }
    return v;
  }

  int encode(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != rank()) throw std::invalid_argument("encode: rank mismatch");
    int idx = 0;
    for (int i = 0; i < rank(); ++i) {
      int c = ((v[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
      idx = idx * moduli_[i] + c;
    }
    return idx;
  }

  int add(int a, int b) const {
    auto va = decode(a), vb = decode(b);
    for (int i = 0; i < rank(); ++i) va[i] = (va[i] + vb[i]) % moduli_[i];
    return encode(va);
  }
  int neg(int a) const {
    auto v = decode(a);
    for (int i = 0; i < rank(); ++i) v[i] = (moduli_[i] - v[i]) % moduli_[i];
    return encode(v);
  }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int zero() const { return 0; }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

  std::string name() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (i) os << 'x';
      os << 'Z' << moduli_[i];
    }
    return os.str();
  }

  std::string element_name(int idx) const {
    auto v = decode(idx);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> moduli_;
  int order_;
};

// Endomorphism given by an integer matrix acting on column vectors mod the
// moduli; well-definedness (columns respect element orders) is validated and
// the action is precomputed on element indices.
class EndoMap {
 public:
  static EndoMap from_matrix(const AbelianGroup& a, std::vector<std::vector<int>> mat) {
    const int k = a.rank();
    if (static_cast<int>(mat.size()) != k) throw std::invalid_argument("endomorphism matrix rank mismatch");
    for (auto& row : mat) {
      if (static_cast<int>(row.size()) != k) throw std::invalid_argument("endomorphism matrix not square");
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        mat[i][j] = ((mat[i][j] % a.moduli()[i]) + a.moduli()[i]) % a.moduli()[i];
        if ((mat[i][j] * a.moduli()[j]) % a.moduli()[i] != 0)
          throw std::invalid_argument("matrix does not define an endomorphism (column order violated)");
      }
    EndoMap e;
    e.a_ = a;
    e.mat_ = std::move(mat);
    e.table_.resize(a.order());
    for (int idx = 0; idx < a.order(); ++idx) {
      auto v = a.decode(idx);
      std::vector<int> w(k, 0);
      for (int i = 0; i < k; ++i) {
        long long s = 0;
        for (int j = 0; j < k; ++j) s += static_cast<long long>(e.mat_[i][j]) * v[j];
        w[i] = static_cast<int>(s % a.moduli()[i]);
      }
      e.table_[idx] = a.encode(w);
    }
    return e;
  }

  static EndoMap scalar(const AbelianGroup& a, int c) {
    std::vector<std::vector<int>> m(a.rank(), std::vector<int>(a.rank(), 0));
    for (int i = 0; i < a.rank(); ++i) m[i][i] = c;
    return from_matrix(a, std::move(m));
  }
  static EndoMap identity(const AbelianGroup& a) { return scalar(a, 1); }
  static EndoMap zero(const AbelianGroup& a) { return scalar(a, 0); }

  int apply(int idx) const { return table_[idx]; }
  const std::vector<int>& action() const { return table_; }
  const std::vector<std::vector<int>>& matrix() const { return mat_; }
  const AbelianGroup& group() const { return a_; }

  bool is_automorphism() const {
    std::vector<char> seen(table_.size(), 0);
    for (int v : table_) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  EndoMap one_minus() const {  // 1 - f
    std::vector<std::vector<int>> m(a_.rank(), std::vector<int>(a_.rank(), 0));
    for (int i = 0; i < a_.rank(); ++i)
      for (int j = 0; j < a_.rank(); ++j) m[i][j] = (i == j ? 1 : 0) - mat_[i][j];
    return from_matrix(a_, std::move(m));
  }

  friend bool operator==(const EndoMap& x, const EndoMap& y) {
    return x.a_ == y.a_ && x.table_ == y.table_;
  }

  std::string name() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < mat_.size(); ++i) {
      if (i) os << ';';
      for (std::size_t j = 0; j < mat_[i].size(); ++j) {
        if (j) os << ' ';
        os << mat_[i][j];
      }
    }
    os << ']';
    return os.str();
  }

 private:
  AbelianGroup a_{std::vector<int>{1}};
  std::vector<std::vector<int>> mat_;
  std::vector<int> table_;
};

inline std::vector<EndoMap> all_endomorphisms(const AbelianGroup& a) {
  const int k = a.rank();
  std::vector<EndoMap> out;
  std::vector<std::vector<int>> mat(k, std::vector<int>(k, 0));
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == k * k) {
      try {
        out.push_back(EndoMap::from_matrix(a, mat));
      } catch (const std::invalid_argument&) {
        // column order violated; not an endomorphism
      }
      return;
    }
    int i = cell / k;
    for (int v = 0; v < a.moduli()[i]; ++v) {
      mat[i][cell % k] = v;
      self(self, cell + 1);
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<EndoMap> all_automorphisms(const AbelianGroup& a) {
  std::vector<EndoMap> out;
  for (auto& e : all_endomorphisms(a))
    if (e.is_automorphism()) out.push_back(std::move(e));
  return out;
}

// Subgroups of A as sorted element-index lists.
inline std::vector<int> subgroup_generated(const AbelianGroup& a, const std::vector<int>& gens) {
  std::vector<char> in(a.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> work{0};
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  };
  for (int g : gens) push(g);
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < members.size(); ++i) push(a.add(x, members[i]));
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::vector<std::vector<int>> all_subgroups(const AbelianGroup& a) {
  std::set<std::vector<int>> family;
  family.insert({0});
  std::vector<std::vector<int>> queue{{0}};
  while (!queue.empty()) {
    auto s = std::move(queue.back());
    queue.pop_back();
    for (int x = 0; x < a.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      auto bigger = s;
      bigger.push_back(x);
      auto t = subgroup_generated(a, bigger);
      if (family.insert(t).second) queue.push_back(std::move(t));
    }
  }
  return {family.begin(), family.end()};
}

struct Cocycle {
  int q_order = 0;
  std::vector<int> values;  // q_order * q_order element indices

  int at(Point x, Point y) const { return values[x * q_order + y]; }

  static Cocycle zero(int q_order) {
    Cocycle c;
    c.q_order = q_order;
    c.values.assign(static_cast<std::size_t>(q_order) * q_order, 0);
    return c;
  }
};

// E = Aff(Q, A, g, f, theta) on Q x A with lexicographic point encoding
// (Q-index major); the encoding is part of the public result.
struct Extension {
  LeftQuasigroup base;
  AbelianGroup a{std::vector<int>{1}};
  EndoMap g, f;
  Cocycle theta;
  LeftQuasigroup total;
  std::string label;

  Point encode(Point x, int av) const { return x * a.order() + av; }
  std::pair<Point, int> decode(Point p) const { return {p / a.order(), p % a.order()}; }
};

inline Extension build_extension(const LeftQuasigroup& base, const AbelianGroup& a,
                                 const EndoMap& g, const EndoMap& f, const Cocycle& theta) {
  if (!(g.group() == a) || !(f.group() == a))
    throw std::invalid_argument("build_extension: endomorphism group mismatch");
  if (theta.q_order != base.order())
    throw std::invalid_argument("build_extension: cocycle carrier mismatch");
  if (!f.is_automorphism()) throw std::invalid_argument("build_extension: f is not an automorphism");
  Extension e;
  e.base = base;
  e.a = a;
  e.g = g;
  e.f = f;
  e.theta = theta;
  const int qn = base.order(), an = a.order(), n = qn * an;
  std::vector<Point> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < qn; ++x)
    for (int av = 0; av < an; ++av)
      for (int y = 0; y < qn; ++y)
        for (int bv = 0; bv < an; ++bv) {
          int second = a.add(a.add(g.apply(av), f.apply(bv)), theta.at(x, y));
          flat[(x * an + av) * static_cast<std::size_t>(n) + (y * an + bv)] =
              base.op(x, y) * an + second;
        }
  e.total = LeftQuasigroup::from_flat(n, std::move(flat));
  return e;
}

// Affine left quasigroup a*b = g(a) + f(b) + c over A (one-point base).
inline Extension affine_extension(const AbelianGroup& a, const EndoMap& g, const EndoMap& f,
                                  int c) {
  Cocycle theta = Cocycle::zero(1);
  theta.values[0] = c;
  return build_extension(one_point_lq(), a, g, f, theta);
}

inline LeftQuasigroup build_affine(const AbelianGroup& a, const EndoMap& g, const EndoMap& f,
                                   int c) {
  return affine_extension(a, g, f, c).total;
}

inline bool is_idempotent_extension(const Extension& e) {
  if (!predicates(e.base).idempotent) return false;
  if (!(e.g == e.f.one_minus())) return false;
  for (int x = 0; x < e.base.order(); ++x)
    if (e.theta.at(x, x) != 0) return false;
  return true;
}

inline Partition ker_p1(const Extension& e) {
  const int n = e.total.order();
  std::vector<int> labels(n);
  for (int p = 0; p < n; ++p) labels[p] = e.decode(p).first * e.a.order();
  return Partition::from_labels(labels);
}

inline bool subgroup_invariant(const AbelianGroup& a, const EndoMap& g, const EndoMap& f,
                               const std::vector<int>& sub) {
  for (int x : sub) {
    if (!std::binary_search(sub.begin(), sub.end(), g.apply(x))) return false;
    if (!std::binary_search(sub.begin(), sub.end(), f.apply(x))) return false;
  }
  // f bijective and f(N) inside N forces f(N) = N on a finite subgroup
  return true;
}

inline Partition alpha_n_unchecked(const Extension& e, const std::vector<int>& sub) {
  detail::UnionFind uf(e.total.order());
  for (int x = 0; x < e.base.order(); ++x)
    for (int av = 0; av < e.a.order(); ++av)
      for (int nv : sub) uf.unite(e.encode(x, av), e.encode(x, e.a.add(av, nv)));
  return Partition::from_uf(uf);
}

// alpha_N: same base point and difference in N; requires g(N) <= N = f(N).
inline Partition alpha_n(const Extension& e, const std::vector<int>& sub) {
  if (!subgroup_invariant(e.a, e.g, e.f, sub))
    throw std::invalid_argument("alpha_n: subgroup not invariant under g and f");
  return alpha_n_unchecked(e, sub);
}

// Multiplicative order of the action of f (lcm of its cycle lengths).
inline int endo_order(const EndoMap& f) {
  if (!f.is_automorphism()) throw std::invalid_argument("endo_order: not an automorphism");
  const std::vector<int>& act = f.action();
  std::vector<char> done(act.size(), 0);
  long long ord = 1;
  for (std::size_t i = 0; i < act.size(); ++i) {
    if (done[i]) continue;
    long long len = 0;
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(act[j])) {
      done[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

// Verifies that every generator h L_(x,a) L_(x,b)^-1 h^-1 of Dis_{ker p1}
// translates each fiber by f^k g(a-b), where k is an exponent with
// h L_0^-k in Dis(E). Returns false on mismatch.
inline bool displacement_action_check(const Extension& e) {
  const LeftQuasigroup& t = e.total;
  const int n = t.order(), an = e.a.order(), qn = e.base.order();
  PermGroup lm = lmlt(t);
  PermGroup ds = dis(t, lm);
  Perm l0 = t.left_translation(0);
  Perm l0inv = l0.inverse();
  // minimal m >= 1 with L_0^m in Dis
  int m = 1;
  {
    Perm p = l0;
    while (!ds.contains(p)) {
      p = compose(p, l0);
      ++m;
      if (m > static_cast<int>(lm.order()) + 1)
        throw std::logic_error("displacement_action_check: no power of L_0 in Dis");
    }
  }
  std::vector<Perm> l0inv_pow{Perm(n)};
  for (int k = 1; k < m; ++k) l0inv_pow.push_back(compose(l0inv_pow.back(), l0inv));
  // f^k action tables for k in [0, m)
  std::vector<std::vector<int>> fpow{std::vector<int>(an)};
  for (int i = 0; i < an; ++i) fpow[0][i] = i;
  for (int k = 1; k < m; ++k) {
    std::vector<int> next(an);
    for (int i = 0; i < an; ++i) next[i] = e.f.apply(fpow[k - 1][i]);
    fpow.push_back(std::move(next));
  }

  std::vector<Perm> lrow(n), lrow_inv(n);
  for (int p = 0; p < n; ++p) {
    lrow[p] = t.left_translation(p);
    lrow_inv[p] = lrow[p].inverse();
  }

  for (const auto& h : lm.elements()) {
    int k = -1;
    for (int kk = 0; kk < m; ++kk)
      if (ds.contains(compose(h, l0inv_pow[kk]))) {
        k = kk;
        break;
      }
    if (k < 0) throw std::logic_error("displacement_action_check: decomposition failed");
    Perm hinv = h.inverse();
    for (int x = 0; x < qn; ++x)
      for (int av = 0; av < an; ++av)
        for (int bv = 0; bv < an; ++bv) {
          if (av == bv) continue;
          int delta = fpow[k][e.g.apply(e.a.sub(av, bv))];
          const Perm& la = lrow[e.encode(x, av)];
          const Perm& lbinv = lrow_inv[e.encode(x, bv)];
          for (int p = 0; p < n; ++p) {
            Point image = h(la(lbinv(hinv(p))));
            auto [y, c] = e.decode(p);
            if (image != e.encode(y, e.a.add(c, delta))) return false;
          }
        }
  }
  return true;
}

// Orbit structure of Dis_{ker p1}: fibers translated by H = <f^k g(A)>; when
// that orbit relation equals ker p1 itself, each fiber must be connected.
inline bool block_connectivity_check(const Extension& e) {
  if (!predicates(e.base).idempotent)
    throw std::invalid_argument("block_connectivity_check: base must be idempotent");
  const LeftQuasigroup& t = e.total;
  const int an = e.a.order(), qn = e.base.order();
  int ordf = endo_order(e.f);
  std::vector<int> hgens;
  {
    std::vector<int> img(an);
    for (int i = 0; i < an; ++i) img[i] = e.g.apply(i);
    for (int k = 0; k < ordf; ++k) {
      for (int v : img) hgens.push_back(v);
      for (int i = 0; i < an; ++i) img[i] = e.f.apply(img[i]);
    }
  }
  std::vector<int> h = subgroup_generated(e.a, hgens);

  Partition kp = ker_p1(e);
  PermGroup lm = lmlt(t);
  Partition actual = orbit_relation(dis_lower(t, kp, lm));
  detail::UnionFind uf(t.order());
  for (int x = 0; x < qn; ++x)
    for (int av = 0; av < an; ++av)
      for (int hv : h) uf.unite(e.encode(x, av), e.encode(x, e.a.add(av, hv)));
  Partition expected = Partition::from_uf(uf);
  if (!(actual == expected)) return false;

  if (expected == kp) {
    for (const auto& block : kp.blocks())
      if (!is_transitive(lmlt(restrict_to(t, block)))) return false;
  }
  return true;
}

// Every term operation of an extension is t^Q in the first coordinate and, in
// the second, affine in each A-argument: perturbing argument j by d shifts
// the output by an amount depending only on (j, d).
inline bool term_form_check(const Extension& e, int term_count, std::uint64_t seed,
                            int bases_per_term = 3) {
  Rng rng(seed);
  const int an = e.a.order(), qn = e.base.order();
  for (int it = 0; it < term_count; ++it) {
    int arity = 1 + static_cast<int>(rng.below(3));
    Term t = Term::random(arity, 6, rng);
    int k = t.arity();
    std::vector<std::vector<Point>> bases(bases_per_term, std::vector<Point>(k));
    std::vector<std::vector<Point>> base_proj(bases_per_term, std::vector<Point>(k));
    for (int b = 0; b < bases_per_term; ++b)
      for (int j = 0; j < k; ++j) {
        int x = static_cast<int>(rng.below(qn));
        int av = static_cast<int>(rng.below(an));
        bases[b][j] = e.encode(x, av);
        base_proj[b][j] = x;
      }
    std::vector<std::vector<int>> ref_diff(k, std::vector<int>(an, -1));
    for (int b = 0; b < bases_per_term; ++b) {
      Point val = t.eval(e.total, bases[b]);
      auto [vy, vc] = e.decode(val);
      if (vy != t.eval(e.base, base_proj[b])) return false;
      for (int j = 0; j < k; ++j) {
        auto [xj, aj] = e.decode(bases[b][j]);
        for (int d = 0; d < an; ++d) {
          std::vector<Point> args = bases[b];
          args[j] = e.encode(xj, e.a.add(aj, d));
          auto [wy, wc] = e.decode(t.eval(e.total, args));
          if (wy != vy) return false;
          int diff = e.a.sub(wc, vc);
          if (ref_diff[j][d] < 0)
            ref_diff[j][d] = diff;
          else if (ref_diff[j][d] != diff)
            return false;
        }
      }
    }
  }
  return true;
}

}  // namespace lqt
