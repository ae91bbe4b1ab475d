#include <catch_amalgamated.hpp>

#include "lqt/enumerate.hpp"
#include "lqt/term.hpp"

using namespace lqt;

namespace {

// Brute-force family of subuniverses: every nonempty closed subset.
std::vector<std::vector<Point>> subalgebras_by_sweep(const LeftQuasigroup& q) {
  const int n = q.order();
  std::vector<std::vector<Point>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Point> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    bool closed = true;
    for (Point a : s)
      for (Point b : s) {
        auto in = [&](Point v) { return std::binary_search(s.begin(), s.end(), v); };
        if (!in(q.op(a, b)) || !in(q.ldiv(a, b))) {
          closed = false;
          break;
        }
      }
    if (closed) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(LeftQuasigroup::from_rows({{0, 1}, {0, 1}}).order() == 2);  // projection
  CHECK_THROWS_WITH(LeftQuasigroup::from_rows({{0, 0}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("not a bijection"));
  CHECK_THROWS_WITH(LeftQuasigroup::from_rows({{0, 1}, {0}}),
                    Catch::Matchers::ContainsSubstring("not square"));
  CHECK_THROWS_WITH(LeftQuasigroup::from_rows({{0, 2}, {1, 0}}),
                    Catch::Matchers::ContainsSubstring("out of range"));
  CHECK_THROWS_AS(LeftQuasigroup::from_rows({}), std::invalid_argument);
  CHECK(dihedral_quandle(3).rows() ==
        std::vector<std::vector<Point>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
}

TEST_CASE("operations satisfy the axioms") {
  LeftQuasigroup proj = projection_lq(2);
  CHECK(proj.op(0, 1) == 1);
  LeftQuasigroup r3 = dihedral_quandle(3);
  CHECK(r3.op(1, 0) == 2);
  for (const LeftQuasigroup& q : {r3, dihedral_quandle(4), cyclic_shift_lq(3), projection_lq(4)})
    for (int x = 0; x < q.order(); ++x)
      for (int y = 0; y < q.order(); ++y) {
        CHECK(q.ldiv(x, q.op(x, y)) == y);
        CHECK(q.op(x, q.ldiv(x, y)) == y);
      }
}

TEST_CASE("predicates") {
  Predicates p2 = predicates(projection_lq(2));
  CHECK(p2.idempotent);
  CHECK(p2.rack);
  CHECK(p2.quandle);
  CHECK(!p2.latin);
  CHECK(p2.projection);

  Predicates r3 = predicates(dihedral_quandle(3));
  CHECK(r3.quandle);
  CHECK(r3.latin);
  CHECK(!r3.projection);

  Predicates shift = predicates(cyclic_shift_lq(2));
  CHECK(!shift.idempotent);
  // right translations of x*y = y+1 are constant maps
  CHECK(!shift.latin);
  CHECK(shift.rack);
}

TEST_CASE("rack predicate is equivalent to translations being endomorphisms") {
  EnumerateOptions opt;
  opt.order = 3;
  enumerate_left_quasigroups(opt, [&](const LeftQuasigroup& q) {
    bool endo = true;
    for (int x = 0; x < q.order() && endo; ++x)
      for (int y = 0; y < q.order() && endo; ++y)
        for (int z = 0; z < q.order(); ++z)
          if (q.op(x, q.op(y, z)) != q.op(q.op(x, y), q.op(x, z))) {
            endo = false;
            break;
          }
    REQUIRE(predicates(q).rack == endo);
    return true;
  });
}

TEST_CASE("idempotent elements") {
  CHECK(idempotent_elements(projection_lq(3)) == std::vector<Point>{0, 1, 2});
  CHECK(idempotent_elements(cyclic_shift_lq(2)).empty());
  CHECK(idempotent_elements(dihedral_quandle(3)) == std::vector<Point>{0, 1, 2});
}

TEST_CASE("left multiplication and displacement groups") {
  CHECK(lmlt(projection_lq(4)).is_trivial());
  CHECK(dis(projection_lq(4)).is_trivial());

  PermGroup lm3 = lmlt(dihedral_quandle(3));
  PermGroup ds3 = dis(dihedral_quandle(3));
  CHECK(lm3.order() == 6);
  CHECK(ds3.order() == 3);
  CHECK(ds3.contains(Perm::from_images({1, 2, 0})));  // y -> y+1
  CHECK(is_normal_in(ds3, lm3));

  CHECK(lmlt(cyclic_shift_lq(2)).order() == 2);
  CHECK(dis(cyclic_shift_lq(2)).is_trivial());

  // on racks the displacements generate a normal subgroup, so the plain
  // closure already equals the normal closure
  for (const LeftQuasigroup& q : {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(6)})
    CHECK(dis(q) == PermGroup::closure(q.order(), displacement_generators(q)));

  // outside the rack world the normal closure can be strictly larger
  LeftQuasigroup crooked = LeftQuasigroup::from_rows(
      {{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2, 3, 0}, {0, 1, 2, 3}});
  PermGroup plain = PermGroup::closure(4, displacement_generators(crooked));
  PermGroup full = dis(crooked);
  CHECK(plain.is_subgroup_of(full));
  CHECK(is_normal_in(full, lmlt(crooked)));
}

TEST_CASE("subuniverse generation and the family of subalgebras") {
  LeftQuasigroup r3 = dihedral_quandle(3);
  CHECK(subuniverse_generated(r3, {0, 1, 2}) == std::vector<Point>{0, 1, 2});
  CHECK(subuniverse_generated(r3, {0}) == std::vector<Point>{0});
  LeftQuasigroup r4 = dihedral_quandle(4);
  CHECK(subuniverse_generated(r4, {0, 2}) == std::vector<Point>{0, 2});
  CHECK_THROWS_AS(subuniverse_generated(r3, {}), std::invalid_argument);

  for (const LeftQuasigroup& q :
       {dihedral_quandle(3), dihedral_quandle(4), projection_lq(3), cyclic_shift_lq(4)})
    CHECK(all_subalgebras(q) == subalgebras_by_sweep(q));
}

TEST_CASE("restriction to a subalgebra") {
  LeftQuasigroup r4 = dihedral_quandle(4);
  LeftQuasigroup sub = restrict_to(r4, {0, 2});
  CHECK(sub == dihedral_quandle(2));
  CHECK_THROWS_AS(restrict_to(r4, {0, 1}), std::invalid_argument);
}

TEST_CASE("term evaluation") {
  LeftQuasigroup r3 = dihedral_quandle(3);
  Term x0 = Term::var(0), x1 = Term::var(1);
  CHECK(Term::mul(x0, x1).eval(r3, std::vector<Point>{1, 0}) == 2);
  CHECK(x0.eval(r3, std::vector<Point>{2, 0}) == 2);
  Term cancel = Term::ldiv(x0, Term::mul(x0, x1));  // x0 \ (x0 * x1)
  for (const LeftQuasigroup& q : {r3, cyclic_shift_lq(3), projection_lq(2)})
    for (int a = 0; a < q.order(); ++a)
      for (int b = 0; b < q.order(); ++b)
        CHECK(cancel.eval(q, std::vector<Point>{a, b}) == b);
  CHECK(cancel.arity() == 2);
  CHECK_THROWS_AS(cancel.eval(r3, std::vector<Point>{0}), std::invalid_argument);
}

TEST_CASE("random terms are reproducible and respect bounds") {
  Rng r1(42), r2(42);
  for (int i = 0; i < 50; ++i) {
    Term a = Term::random(3, 6, r1);
    Term b = Term::random(3, 6, r2);
    CHECK(a.to_string() == b.to_string());
    CHECK(a.arity() <= 3);
  }
}

TEST_CASE("isomorphism testing") {
  LeftQuasigroup r3 = dihedral_quandle(3);
  CHECK(are_isomorphic(r3, r3));
  CHECK(!are_isomorphic(projection_lq(2), cyclic_shift_lq(2)));
  // relabel dihedral Z_3 by the cycle (0 1 2)
  Perm s = Perm::from_images({1, 2, 0});
  std::vector<std::vector<Point>> rows(3, std::vector<Point>(3));
  Perm si = s.inverse();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[i][j] = s(r3.op(si(i), si(j)));
  CHECK(are_isomorphic(r3, LeftQuasigroup::from_rows(rows)));
  CHECK(!are_isomorphic(r3, projection_lq(3)));
}
