#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "lqt/displacement.hpp"

namespace lqt {

inline std::vector<Perm> all_perms(int n) {
  std::vector<Point> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Lexicographically least table over all relabelings.
inline std::vector<Point> canonical_form(const LeftQuasigroup& q) {
  const int n = q.order();
  std::vector<Point> best;
  std::vector<Point> cand(static_cast<std::size_t>(n) * n);
  for (const auto& s : all_perms(n)) {
    Perm si = s.inverse();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cand[i * n + j] = s(q.op(si(i), si(j)));
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

struct EnumerateOptions {
  int order = 2;
  bool idempotent = false;
  bool rack = false;   // row-by-row conjugation propagation
  bool latin = false;
  bool isomorph_reject = false;
  bool equal_rows01 = false;  // rows 0 and 1 forced equal (nontrivial Cayley kernel)
  std::uint64_t limit = 0;    // stop after this many emitted structures (0 = no limit)
};

// Emits each structure satisfying the filters; the sink returns false to stop.
// Row-by-row DFS; the rack condition L_{x*y} = L_x L_y L_x^{-1} both prunes
// and forces rows ahead of the frontier.
inline void enumerate_left_quasigroups(const EnumerateOptions& opt,
                                       const std::function<bool(const LeftQuasigroup&)>& sink) {
  const int n = opt.order;
  if (n < 1) throw std::invalid_argument("enumerate: order must be positive");
  if (opt.rack) {
    if (n > 8) throw capacity_error("enumerate: rack-filtered sweep capped at order 8");
  } else if (n > 5) {
    throw capacity_error("enumerate: unfiltered sweep capped at order 5");
  }
  const std::vector<Perm> perms = all_perms(n);

  std::vector<Perm> rows(n);
  std::vector<char> assigned(n, 0);
  std::vector<std::optional<Perm>> forced(n);
  std::vector<std::vector<char>> col_used;  // latin pruning
  if (opt.latin) col_used.assign(n, std::vector<char>(n, 0));
  std::set<std::vector<Point>> canon_seen;
  std::uint64_t emitted = 0;
  bool stop = false;

  // Re-scan all fully available rack constraints; records rows newly forced
  // during this assignment for undo. Returns false on conflict.
  auto propagate = [&](std::vector<int>& newly_forced) -> bool {
    if (!opt.rack) return true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        if (!assigned[x] && !forced[x]) continue;
        const Perm& lx = assigned[x] ? rows[x] : *forced[x];
        for (int y = 0; y < n; ++y) {
          if (!assigned[y] && !forced[y]) continue;
          const Perm& ly = assigned[y] ? rows[y] : *forced[y];
          int k = lx(y);
          Perm req = conjugate(lx, ly);
          if (assigned[k]) {
            if (!(rows[k] == req)) return false;
          } else if (forced[k]) {
            if (!(*forced[k] == req)) return false;
          } else {
            if (opt.idempotent && req(k) != k) return false;
            forced[k] = req;
            newly_forced.push_back(k);
            changed = true;
          }
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int r) -> void {
    if (stop) return;
    if (r == n) {
      std::vector<Point> flat;
      flat.reserve(static_cast<std::size_t>(n) * n);
      for (int x = 0; x < n; ++x)
        flat.insert(flat.end(), rows[x].images().begin(), rows[x].images().end());
      LeftQuasigroup q = LeftQuasigroup::from_flat(n, std::move(flat));
      if (opt.isomorph_reject && !canon_seen.insert(canonical_form(q)).second) return;
      ++emitted;
      if (!sink(q)) {
        stop = true;
        return;
      }
      if (opt.limit && emitted >= opt.limit) stop = true;
      return;
    }
    auto try_candidate = [&](const Perm& p) {
      if (opt.idempotent && p(r) != r) return;
      if (forced[r] && !(*forced[r] == p)) return;
      if (opt.equal_rows01 && r == 1 && !(p == rows[0])) return;
      if (opt.latin) {
        for (int y = 0; y < n; ++y)
          if (col_used[y][p(y)]) return;
      }
      rows[r] = p;
      assigned[r] = 1;
      if (opt.latin)
        for (int y = 0; y < n; ++y) col_used[y][p(y)] = 1;
      std::vector<int> newly_forced;
      if (propagate(newly_forced)) self(self, r + 1);
      for (int k : newly_forced) forced[k].reset();
      if (opt.latin)
        for (int y = 0; y < n; ++y) col_used[y][p(y)] = 0;
      assigned[r] = 0;
      if (stop) return;
    };
    if (opt.equal_rows01 && r == 1) {
      try_candidate(rows[0]);
    } else if (forced[r]) {
      try_candidate(*forced[r]);
    } else {
      for (const auto& p : perms) {
        try_candidate(p);
        if (stop) return;
      }
    }
  };
  rec(rec, 0);
}

inline std::uint64_t count_left_quasigroups(const EnumerateOptions& opt) {
  std::uint64_t count = 0;
  enumerate_left_quasigroups(opt, [&](const LeftQuasigroup&) {
    ++count;
    return true;
  });
  return count;
}

struct SearchResult {
  std::optional<LeftQuasigroup> witness;
  std::uint64_t examined = 0;
  bool budget_exhausted = false;  // witness absent + not exhausted = space swept, none exists
};

// Looks for a quandle with congruences determined by orbits that is not
// sharp. Candidates are restricted to tables with rows 0 and 1 equal: any
// quandle with a nontrivial Cayley kernel has an isomorphic copy of that
// shape, and a nontrivial Cayley kernel (a congruence, since racks are
// Cayley) already defeats sharpness.
inline SearchResult search_cdos_not_cdsg(int order, std::uint64_t budget) {
  SearchResult res;
  EnumerateOptions opt;
  opt.order = order;
  opt.idempotent = true;
  opt.rack = true;
  opt.equal_rows01 = true;
  enumerate_left_quasigroups(opt, [&](const LeftQuasigroup& q) {
    if (res.examined >= budget) {
      res.budget_exhausted = true;
      return false;
    }
    ++res.examined;
    // candidates are racks, where the displacements generate a subgroup that
    // is already normal, so their orbits are the Dis-orbits
    if (!orbits_of(q.order(), displacement_generators(q)).is_one()) return true;
    auto con = all_congruences(q);
    PermGroup lm = lmlt(q);
    PermGroup ds = dis(q, lm);
    for (const auto& alpha : con) {
      PermGroup u = dis_upper(q, alpha, ds);
      if (!(orbit_relation(u) == alpha)) return true;  // necessary for CDOs
    }
    auto admis = admissible_subgroups(q, lm, ds, all_normal_subgroups(lm));
    for (const auto& nsub : admis)
      if (!(dis_upper(q, orbit_relation(nsub), ds) == nsub)) return true;
    // CDOs holds; confirm non-sharpness explicitly
    for (std::size_t i = 0; i < con.size(); ++i) {
      if (!(orbit_relation(dis_lower(q, con[i], lm)) == con[i])) {
        res.witness = q;
        return false;
      }
    }
    return true;  // sharp after all; not a witness
  });
  return res;
}

}  // namespace lqt
