#include <catch_amalgamated.hpp>

#include "lqt/perm_group.hpp"

using namespace lqt;

namespace {

Perm P(std::vector<Point> v) { return Perm::from_images(std::move(v)); }

// Independent closure oracle: grow the set by full pairwise products until
// stable (different shape from the BFS used by the implementation).
std::vector<Perm> naive_closure(int degree, std::vector<Perm> gens) {
  std::set<Perm> s;
  s.insert(Perm(degree));
  for (const auto& g : gens) {
    s.insert(g);
    s.insert(g.inverse());
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> cur(s.begin(), s.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (s.insert(compose(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

// All subgroups of a tiny group, via closures of generator subsets of size <= 2.
std::vector<PermGroup> all_subgroups_oracle(const PermGroup& g) {
  std::set<std::vector<Perm>> seen;
  std::vector<PermGroup> out;
  auto push = [&](PermGroup h) {
    if (seen.insert(h.elements()).second) out.push_back(std::move(h));
  };
  push(PermGroup::trivial(g.degree()));
  const auto& e = g.elements();
  for (std::size_t i = 0; i < e.size(); ++i) {
    push(PermGroup::closure(g.degree(), {e[i]}));
    for (std::size_t j = i; j < e.size(); ++j)
      push(PermGroup::closure(g.degree(), {e[i], e[j]}));
  }
  // subgroups of groups of order <= 24 at our degrees are at most 2-generated
  // except possibly elementary abelian ones; close under joins to be safe
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PermGroup> cur = out;
    for (const auto& a : cur)
      for (const auto& b : cur) {
        PermGroup j = join_groups(a, b);
        if (seen.insert(j.elements()).second) {
          out.push_back(j);
          grew = true;
        }
      }
  }
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("composition convention and inverses") {
  Perm p = P({1, 0, 2}), q = P({0, 2, 1});
  CHECK(compose(p, Perm(3)) == p);
  CHECK(compose(p, p.inverse()) == Perm(3));
  CHECK(compose(p, q) == P({1, 2, 0}));  // (p o q)(i) = p(q(i))
  CHECK(conjugate(q, p) == compose(compose(q, p), q.inverse()));
  CHECK_THROWS_AS(compose(p, Perm(4)), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 3, 1}), std::invalid_argument);
  CHECK(P({1, 2, 0}).to_string() == "(0 1 2)");
  CHECK(Perm(4).to_string() == "id");
}

TEST_CASE("closure matches the naive oracle") {
  CHECK(PermGroup::closure(3, {}).order() == 1);
  CHECK(PermGroup::closure(3, {P({1, 2, 0})}).order() == 3);
  CHECK(PermGroup::closure(3, {P({1, 0, 2}), P({0, 2, 1})}).order() == 6);

  std::vector<std::vector<Perm>> gen_sets = {
      {P({1, 2, 0})},
      {P({1, 0, 2}), P({0, 2, 1})},
      {P({1, 2, 3, 0})},
      {P({1, 0, 3, 2}), P({2, 3, 0, 1})},
      {P({1, 2, 0, 4, 3})},
  };
  for (const auto& gens : gen_sets) {
    int degree = gens.front().degree();
    PermGroup g = PermGroup::closure(degree, gens);
    CHECK(g.elements() == naive_closure(degree, gens));
    CHECK(factorial(degree) % g.order() == 0);
    CHECK(g.contains(Perm(degree)));
  }
}

TEST_CASE("closure capacity cap reports an error") {
  auto saved = caps();
  caps().max_group_order = 5;
  CHECK_THROWS_AS(PermGroup::closure(3, {P({1, 0, 2}), P({0, 2, 1})}), capacity_error);
  caps() = saved;
}

TEST_CASE("orbits") {
  CHECK(group_orbits(PermGroup::trivial(3)) == Partition(3));
  CHECK(group_orbits(PermGroup::closure(3, {P({1, 2, 0})})).is_one());
  CHECK(group_orbits(PermGroup::closure(4, {P({2, 3, 0, 1})})) ==
        Partition::from_blocks(4, {{0, 2}, {1, 3}}));
  // monotone: orbits of a subgroup refine orbits of the group
  PermGroup s3 = PermGroup::closure(3, {P({1, 0, 2}), P({0, 2, 1})});
  PermGroup a3 = PermGroup::closure(3, {P({1, 2, 0})});
  CHECK(leq(group_orbits(a3), group_orbits(s3)));
}

TEST_CASE("normal closure") {
  PermGroup s3 = PermGroup::closure(3, {P({1, 0, 2}), P({0, 2, 1})});
  CHECK(normal_closure(s3, {}).is_trivial());
  CHECK(normal_closure(s3, s3.generators()) == s3);
  PermGroup a3 = normal_closure(s3, {P({1, 2, 0})});
  CHECK(a3.order() == 3);

  // oracle: smallest subgroup containing the seed and stable under
  // conjugation by every ambient element
  PermGroup s4 = PermGroup::closure(4, {P({1, 0, 2, 3}), P({1, 2, 3, 0})});
  std::vector<Perm> seed = {P({1, 0, 3, 2})};
  PermGroup ncl = normal_closure(s4, seed);
  for (const auto& s : seed) CHECK(ncl.contains(s));
  for (const auto& g : s4.elements())
    for (const auto& h : ncl.elements()) CHECK(ncl.contains(conjugate(g, h)));
  for (const auto& sub : all_subgroups_oracle(s4)) {
    bool contains_seed = true;
    for (const auto& s : seed)
      if (!sub.contains(s)) contains_seed = false;
    if (contains_seed && is_normal_in(sub, s4)) CHECK(ncl.is_subgroup_of(sub));
  }
  CHECK(ncl.order() == 4);  // Klein four-group inside S_4
  CHECK_THROWS_AS(normal_closure(a3, {P({1, 0, 2})}), std::invalid_argument);
}

TEST_CASE("all normal subgroups against the subgroup-filter oracle") {
  auto check_group = [](const PermGroup& g) {
    auto normals = all_normal_subgroups(g);
    std::set<std::vector<Perm>> expected;
    for (const auto& sub : all_subgroups_oracle(g))
      if (is_normal_in(sub, g)) expected.insert(sub.elements());
    std::set<std::vector<Perm>> got;
    for (const auto& n : normals) got.insert(n.elements());
    CHECK(got == expected);
    // closed under join, contains both bounds, every member normal
    CHECK(got.count(PermGroup::trivial(g.degree()).elements()) == 1);
    CHECK(got.count(g.elements()) == 1);
    for (const auto& a : normals) {
      CHECK(is_normal_in(a, g));
      for (const auto& b : normals) CHECK(got.count(join_groups(a, b).elements()) == 1);
    }
  };
  check_group(PermGroup::trivial(3));
  check_group(PermGroup::closure(3, {P({1, 2, 0})}));                  // Z_3
  check_group(PermGroup::closure(3, {P({1, 0, 2}), P({0, 2, 1})}));    // S_3
  check_group(PermGroup::closure(4, {P({1, 0, 2, 3}), P({1, 2, 3, 0})}));  // S_4
  check_group(PermGroup::closure(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})}));  // V_4

  auto s3_normals = all_normal_subgroups(PermGroup::closure(3, {P({1, 0, 2}), P({0, 2, 1})}));
  REQUIRE(s3_normals.size() == 3);
  CHECK(s3_normals[0].order() == 1);
  CHECK(s3_normals[1].order() == 3);
  CHECK(s3_normals[2].order() == 6);
}

TEST_CASE("stabilizer, center, commutator subgroup") {
  PermGroup z3 = PermGroup::closure(3, {P({1, 2, 0})});
  CHECK(pointwise_stabilizer(z3, 0).is_trivial());
  PermGroup s3 = PermGroup::closure(3, {P({1, 0, 2}), P({0, 2, 1})});
  CHECK(center_of(s3).is_trivial());
  CHECK(commutator_subgroup(s3, PermGroup::trivial(3)).is_trivial());
  CHECK(commutator_subgroup(s3, s3).order() == 3);  // [S_3, S_3] = A_3
  PermGroup v4 = PermGroup::closure(4, {P({1, 0, 3, 2}), P({2, 3, 0, 1})});
  CHECK(center_of(v4) == v4);
  CHECK(pointwise_stabilizer(v4, 2).is_trivial());
}
