#pragma once

#include <optional>
#include <vector>

#include "lqt/congruence.hpp"

namespace lqt {

// Dis_alpha: normal closure in LMlt(Q) of the alpha-displacements.
inline PermGroup dis_lower(const LeftQuasigroup& q, const Partition& alpha,
                           const PermGroup& lm) {
  const int n = q.order();
  if (alpha.size() != n) throw std::invalid_argument("dis_lower: carrier mismatch");
  std::set<Perm> seeds;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !alpha.same(x, y)) continue;
      std::vector<Point> img(n);
      for (int i = 0; i < n; ++i) img[i] = q.op(x, q.ldiv(y, i));
      Perm p = Perm::from_images(std::move(img));
      if (!p.is_identity()) seeds.insert(std::move(p));
    }
  return normal_closure(lm, {seeds.begin(), seeds.end()});
}

inline PermGroup dis_lower(const LeftQuasigroup& q, const Partition& alpha) {
  return dis_lower(q, alpha, lmlt(q));
}

// Dis^alpha, the Dis(Q)-restricted reading (= kernel of the block action of
// Dis(Q)); this is the operator all theorems use.
inline PermGroup dis_upper(const LeftQuasigroup& q, const Partition& alpha,
                           const PermGroup& ds) {
  if (alpha.size() != q.order()) throw std::invalid_argument("dis_upper: carrier mismatch");
  std::vector<Perm> elems;
  for (const auto& h : ds.elements()) {
    bool fixes = true;
    for (int x = 0; x < q.order(); ++x)
      if (!alpha.same(h(x), x)) {
        fixes = false;
        break;
      }
    if (fixes) elems.push_back(h);
  }
  return PermGroup::from_element_set(q.order(), std::move(elems));
}

inline PermGroup dis_upper(const LeftQuasigroup& q, const Partition& alpha) {
  return dis_upper(q, alpha, dis(q));
}

// Diagnostic: the literal LMlt-wide set {h in LMlt : h(x) alpha x}. Differs
// from dis_upper on permutation left quasigroups such as x*y = y+1.
inline PermGroup dis_upper_lmlt(const LeftQuasigroup& q, const Partition& alpha,
                                const PermGroup& lm) {
  return dis_upper(q, alpha, lm);
}

inline Partition orbit_relation(const PermGroup& n) { return group_orbits(n); }

// x ~ y iff L_x L_y^-1 in N; an equivalence for any subgroup N.
inline Partition cayley_relation(const LeftQuasigroup& q, const PermGroup& n) {
  const int qn = q.order();
  detail::UnionFind uf(qn);
  std::vector<Point> img(qn);
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < x; ++y) {
      for (int i = 0; i < qn; ++i) img[i] = q.op(x, q.ldiv(y, i));
      if (n.contains(Perm::from_images(img))) uf.unite(x, y);
    }
  return Partition::from_uf(uf);
}

// Norm'(Q): normal subgroups of LMlt inside Dis whose orbit relation refines
// their Cayley relation. The alternative characterization via
// Dis_{O_N} <= N is evaluated as a consistency cross-check.
inline std::vector<PermGroup> admissible_subgroups(const LeftQuasigroup& q, const PermGroup& lm,
                                                   const PermGroup& ds,
                                                   const std::vector<PermGroup>& normals) {
  std::vector<PermGroup> out;
  for (const auto& n : normals) {
    if (!n.is_subgroup_of(ds)) continue;
    bool refines = leq(orbit_relation(n), cayley_relation(q, n));
    bool alt = dis_lower(q, orbit_relation(n), lm).is_subgroup_of(n);
    if (refines != alt)
      throw std::logic_error("admissible_subgroups: characterizations disagree");
    if (refines) out.push_back(n);
  }
  return out;
}

inline std::vector<PermGroup> admissible_subgroups(const LeftQuasigroup& q) {
  PermGroup lm = lmlt(q);
  return admissible_subgroups(q, lm, dis(q, lm), all_normal_subgroups(lm));
}

struct ConnectFlags {
  bool connected = false;
  bool connected_by_dis = false;
  bool superconnected = false;
  bool semiregular = false;
};

inline ConnectFlags connect_flags(const LeftQuasigroup& q, const PermGroup& lm,
                                  const PermGroup& ds) {
  ConnectFlags f;
  f.connected = is_transitive(lm);
  f.connected_by_dis = is_transitive(ds);
  f.superconnected = true;
  for (const auto& sub : all_subalgebras(q)) {
    if (!is_transitive(lmlt(restrict_to(q, sub)))) {
      f.superconnected = false;
      break;
    }
  }
  f.semiregular = true;
  for (int x = 0; x < q.order() && f.semiregular; ++x)
    for (const auto& h : ds.elements())
      if (!h.is_identity() && h(x) == x) {
        f.semiregular = false;
        break;
      }
  return f;
}

inline ConnectFlags connect_flags(const LeftQuasigroup& q) {
  PermGroup lm = lmlt(q);
  return connect_flags(q, lm, dis(q, lm));
}

struct GaloisFlags {
  bool cdos = false;
  bool cdsg = false;
  bool sharp = false;
  bool faithful = false;
  bool cayley = false;
  bool connected = false;
  bool connected_by_dis = false;
  bool superconnected = false;
  bool semiregular = false;
};

// All data of the two Galois connections for one structure.
struct GaloisReport {
  LeftQuasigroup q;
  PermGroup lm, ds;
  std::vector<Partition> congruences;   // Con(Q), canonical order
  std::vector<PermGroup> normals;       // normal subgroups of LMlt
  std::vector<PermGroup> admissibles;   // Norm'(Q), canonical order
  std::vector<PermGroup> dis_low;       // per congruence
  std::vector<PermGroup> dis_high;      // per congruence
  std::vector<int> dis_low_index;       // position in admissibles
  std::vector<int> dis_high_index;
  std::vector<Partition> orb;           // per admissible
  std::vector<Partition> cay;           // per admissible (may fail to be a congruence)
  std::vector<int> orb_index;           // position in congruences
  Partition lambda;                     // Cayley kernel
  GaloisFlags flags;

  int congruence_index(const Partition& p) const {
    auto it = std::lower_bound(congruences.begin(), congruences.end(), p);
    if (it == congruences.end() || !(*it == p)) return -1;
    return static_cast<int>(it - congruences.begin());
  }
  int admissible_index(const PermGroup& n) const {
    for (std::size_t i = 0; i < admissibles.size(); ++i)
      if (admissibles[i] == n) return static_cast<int>(i);
    return -1;
  }
};

namespace detail {

inline bool eval_cdos(const GaloisReport& r) {
  for (std::size_t i = 0; i < r.congruences.size(); ++i)
    if (!(orbit_relation(r.dis_high[i]) == r.congruences[i])) return false;
  for (std::size_t j = 0; j < r.admissibles.size(); ++j)
    if (!(dis_upper(r.q, r.orb[j], r.ds) == r.admissibles[j])) return false;
  return true;
}

inline bool eval_cdsg(const GaloisReport& r) {
  for (std::size_t i = 0; i < r.congruences.size(); ++i)
    if (!(cayley_relation(r.q, r.dis_low[i]) == r.congruences[i])) return false;
  for (std::size_t j = 0; j < r.admissibles.size(); ++j) {
    if (!is_congruence(r.q, r.cay[j])) return false;
    if (!(dis_lower(r.q, r.cay[j], r.lm) == r.admissibles[j])) return false;
  }
  return true;
}

inline bool eval_sharp(const GaloisReport& r) {
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    if (!(orbit_relation(r.dis_low[i]) == r.congruences[i])) return false;
    if (!(orbit_relation(r.dis_high[i]) == r.congruences[i])) return false;
  }
  return true;
}

}  // namespace detail

inline GaloisReport full_report(const LeftQuasigroup& q) {
  GaloisReport r;
  r.q = q;
  r.lm = lmlt(q);
  r.ds = dis(q, r.lm);
  r.congruences = all_congruences(q);
  r.normals = all_normal_subgroups(r.lm);
  r.admissibles = admissible_subgroups(q, r.lm, r.ds, r.normals);
  r.lambda = cayley_kernel(q);

  for (const auto& alpha : r.congruences) {
    r.dis_low.push_back(dis_lower(q, alpha, r.lm));
    r.dis_high.push_back(dis_upper(q, alpha, r.ds));
  }
  for (const auto& n : r.admissibles) {
    r.orb.push_back(orbit_relation(n));
    r.cay.push_back(cayley_relation(q, n));
  }
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    int lo = r.admissible_index(r.dis_low[i]);
    int hi = r.admissible_index(r.dis_high[i]);
    if (lo < 0 || hi < 0)
      throw std::logic_error("full_report: Dis operator left Norm'(Q)");
    r.dis_low_index.push_back(lo);
    r.dis_high_index.push_back(hi);
  }
  for (std::size_t j = 0; j < r.admissibles.size(); ++j) {
    int oi = r.congruence_index(r.orb[j]);
    if (oi < 0) throw std::logic_error("full_report: orbit relation of admissible not a congruence");
    r.orb_index.push_back(oi);
    if (!leq(r.orb[j], r.cay[j]))
      throw std::logic_error("full_report: admissible with orbit relation above Cayley relation");
  }

  // operator chain and adjunction consistency per congruence
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const auto& alpha = r.congruences[i];
    if (!r.dis_low[i].is_subgroup_of(r.dis_high[i]))
      throw std::logic_error("full_report: Dis_alpha not inside Dis^alpha");
    Partition olo = orbit_relation(r.dis_low[i]);
    Partition ohi = orbit_relation(r.dis_high[i]);
    Partition clo = cayley_relation(r.q, r.dis_low[i]);
    Partition chi = cayley_relation(r.q, r.dis_high[i]);
    if (!(leq(olo, ohi) && leq(ohi, alpha) && leq(alpha, clo) && leq(clo, chi)))
      throw std::logic_error("full_report: operator chain violated");
    // Galois composition identities
    if (!(dis_upper(q, ohi, r.ds) == r.dis_high[i]))
      throw std::logic_error("full_report: Dis^ O Dis^ composition violated");
    if (!(dis_lower(q, clo, r.lm) == r.dis_low[i]))
      throw std::logic_error("full_report: Dis_ c Dis_ composition violated");
  }

  ConnectFlags cf = connect_flags(q, r.lm, r.ds);
  r.flags.faithful = r.lambda.is_zero();
  r.flags.cayley = is_congruence(q, r.lambda);
  r.flags.connected = cf.connected;
  r.flags.connected_by_dis = cf.connected_by_dis;
  r.flags.superconnected = cf.superconnected;
  r.flags.semiregular = cf.semiregular;
  r.flags.cdos = detail::eval_cdos(r);
  r.flags.cdsg = detail::eval_cdsg(r);
  r.flags.sharp = detail::eval_sharp(r);
  return r;
}

inline bool is_cdos(const LeftQuasigroup& q) { return full_report(q).flags.cdos; }
inline bool is_cdsg(const LeftQuasigroup& q) { return full_report(q).flags.cdsg; }

inline bool is_sharp(const LeftQuasigroup& q) {
  PermGroup lm = lmlt(q);
  PermGroup ds = dis(q, lm);
  for (const auto& alpha : all_congruences(q)) {
    if (!(orbit_relation(dis_lower(q, alpha, lm)) == alpha)) return false;
    if (!(orbit_relation(dis_upper(q, alpha, ds)) == alpha)) return false;
  }
  return true;
}

// First adjunction: O_N <= alpha iff N <= Dis^alpha, over Norm'(Q) x Con(Q).
inline bool check_adjunction_orbits(const LeftQuasigroup& q) {
  PermGroup lm = lmlt(q);
  PermGroup ds = dis(q, lm);
  auto con = all_congruences(q);
  auto admis = admissible_subgroups(q, lm, ds, all_normal_subgroups(lm));
  std::vector<PermGroup> upper;
  for (const auto& alpha : con) upper.push_back(dis_upper(q, alpha, ds));
  for (const auto& n : admis) {
    Partition on = orbit_relation(n);
    for (std::size_t i = 0; i < con.size(); ++i)
      if (leq(on, con[i]) != n.is_subgroup_of(upper[i])) return false;
  }
  return true;
}

// Second adjunction: Dis_alpha <= N iff alpha <= c_N, over the lattice of
// normal subgroups of LMlt and equivalences (all of them for n <= 4,
// congruences plus seeded pseudorandom samples beyond).
inline bool check_adjunction_subgroups(const LeftQuasigroup& q, std::uint64_t seed,
                                       int random_samples = 200) {
  PermGroup lm = lmlt(q);
  auto normals = all_normal_subgroups(lm);
  std::vector<Partition> equivs;
  if (q.order() <= 4) {
    equivs = all_partitions(q.order());
  } else {
    equivs = all_congruences(q);
    Rng rng(seed);
    for (int i = 0; i < random_samples; ++i) equivs.push_back(random_partition(q.order(), rng));
  }
  for (const auto& alpha : equivs) {
    PermGroup dl = dis_lower(q, alpha, lm);
    for (const auto& n : normals)
      if (dl.is_subgroup_of(n) != leq(alpha, cayley_relation(q, n))) return false;
  }
  return true;
}

}  // namespace lqt
