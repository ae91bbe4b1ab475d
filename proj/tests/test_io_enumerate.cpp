#include <catch_amalgamated.hpp>

#include "lqt/enumerate.hpp"
#include "lqt/io.hpp"

using namespace lqt;

TEST_CASE("text parsing and canonical emission") {
  ParsedStructure p = parse_structure("2\n0 1\n0 1\n");
  CHECK(p.q == projection_lq(2));
  ParsedStructure r3 = parse_structure("3\n0 2 1\n2 1 0\n1 0 2\n");
  CHECK(r3.q == dihedral_quandle(3));

  std::string text = "# a comment\n 3 \n0 2 1\n2 1 0 # trailing comment\n1 0 2\n";
  ParsedStructure c = parse_structure(text);
  CHECK(c.q == dihedral_quandle(3));
  // emit o parse o emit is byte-identical
  std::string emitted = emit_structure(c.q);
  CHECK(emit_structure(parse_structure(emitted).q) == emitted);
  CHECK(emitted == "3\n0 2 1\n2 1 0\n1 0 2\n");
}

TEST_CASE("parse errors carry line information") {
  CHECK_THROWS_WITH(parse_structure(""), Catch::Matchers::ContainsSubstring("empty"));
  CHECK_THROWS_WITH(parse_structure("2\n0 x\n0 1\n"),
                    Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(parse_structure("2\n0 1\n0 1\n1\n"),
                    Catch::Matchers::ContainsSubstring("line 4"));
  CHECK_THROWS_WITH(parse_structure("2\n0 1\n"),
                    Catch::Matchers::ContainsSubstring("expected 4"));
  CHECK_THROWS_AS(parse_structure("2\n0 0\n1 1\n"), std::invalid_argument);
}

TEST_CASE("JSON structures and transposition") {
  ParsedStructure j = parse_structure(R"({"name": "p2", "order": 2, "table": [[0,1],[0,1]]})");
  CHECK(j.q == projection_lq(2));
  CHECK(j.name == "p2");
  CHECK_THROWS_AS(parse_structure(R"({"order": 3, "table": [[0,1],[0,1]]})"),
                  std::invalid_argument);

  // a latin table whose transpose is a valid left quasigroup
  std::string rows = "2\n0 1\n1 0\n";
  CHECK(parse_structure(rows, true).q == parse_structure(rows, false).q);  // symmetric
  // column-permutation table: rows of the transpose are constant, rejected
  CHECK_THROWS_AS(parse_structure("2\n0 1\n0 1\n", true), std::invalid_argument);

  json round = structure_to_json(dihedral_quandle(3), "r3");
  ParsedStructure back = parse_structure(round.dump());
  CHECK(back.q == dihedral_quandle(3));
  CHECK(back.name == "r3");
}

TEST_CASE("named structures") {
  CHECK(named_structure("point").order() == 1);
  CHECK(named_structure("projection:4") == projection_lq(4));
  CHECK(named_structure("dihedral:5") == dihedral_quandle(5));
  CHECK(named_structure("cyclic:2") == cyclic_shift_lq(2));
  CHECK_THROWS_AS(named_structure("octonion:8"), std::invalid_argument);
}

TEST_CASE("enumeration counts match closed forms") {
  EnumerateOptions opt;
  opt.order = 1;
  CHECK(count_left_quasigroups(opt) == 1);
  opt.order = 2;
  CHECK(count_left_quasigroups(opt) == 4);  // (2!)^2
  opt.order = 3;
  CHECK(count_left_quasigroups(opt) == 216);  // (3!)^3
  opt.idempotent = true;
  CHECK(count_left_quasigroups(opt) == 8);  // ((3-1)!)^3

  EnumerateOptions over;
  over.order = 6;
  CHECK_THROWS_AS(count_left_quasigroups(over), capacity_error);
}

TEST_CASE("quandle enumeration agrees with predicate filtering") {
  for (int n = 2; n <= 4; ++n) {
    EnumerateOptions filt;
    filt.order = n;
    filt.idempotent = true;
    std::uint64_t by_filter = 0;
    enumerate_left_quasigroups(filt, [&](const LeftQuasigroup& q) {
      if (predicates(q).quandle) ++by_filter;
      return true;
    });
    EnumerateOptions pruned;
    pruned.order = n;
    pruned.idempotent = true;
    pruned.rack = true;
    CHECK(count_left_quasigroups(pruned) == by_filter);
  }
}

TEST_CASE("isomorphism classes of small quandles") {
  auto classes = [](int n) {
    EnumerateOptions opt;
    opt.order = n;
    opt.idempotent = true;
    opt.rack = true;
    opt.isomorph_reject = true;
    return count_left_quasigroups(opt);
  };
  CHECK(classes(1) == 1);
  CHECK(classes(2) == 1);
  CHECK(classes(3) == 3);
  CHECK(classes(4) == 7);
  CHECK(classes(5) == 22);
}

TEST_CASE("latin filter") {
  EnumerateOptions opt;
  opt.order = 3;
  opt.latin = true;
  std::uint64_t latin_count = 0;
  enumerate_left_quasigroups(opt, [&](const LeftQuasigroup& q) {
    CHECK(predicates(q).latin);
    ++latin_count;
    return true;
  });
  CHECK(latin_count == 12);  // latin squares of order 3
}

TEST_CASE("enumeration limit and early stop") {
  EnumerateOptions opt;
  opt.order = 3;
  opt.limit = 5;
  CHECK(count_left_quasigroups(opt) == 5);
}

TEST_CASE("extension specs") {
  json spec = {{"moduli", {2}}, {"g", {{0}}}, {"f", {{1}}}, {"c", {1}}};
  Extension aff = parse_extension_spec(spec);
  CHECK(aff.total == cyclic_shift_lq(2));

  json spec2 = {{"base", "dihedral:3"},
                {"moduli", {2}},
                {"g", {{0}}},
                {"f", {{1}}},
                {"theta", "zero"}};
  Extension e6 = parse_extension_spec(spec2);
  CHECK(e6.total.order() == 6);
  CHECK(predicates(e6.total).quandle);
  json emitted = extension_to_json(e6);
  CHECK(emitted["order"] == 6);
  CHECK(emitted["index_map"].size() == 6);

  CHECK_THROWS_AS(parse_extension_spec(json{{"g", {{0}}}, {"f", {{1}}}}), std::invalid_argument);
  json bad_theta = {{"base", "projection:2"},
                    {"moduli", {2}},
                    {"g", {{0}}},
                    {"f", {{1}}},
                    {"theta", {{0}}}};
  CHECK_THROWS_AS(parse_extension_spec(bad_theta), std::invalid_argument);
}

TEST_CASE("search smoke behavior") {
  SearchResult zero_budget = search_cdos_not_cdsg(3, 0);
  CHECK(!zero_budget.witness.has_value());
  CHECK(zero_budget.budget_exhausted);

  SearchResult order3 = search_cdos_not_cdsg(3, 1'000'000);
  CHECK(!order3.witness.has_value());
  CHECK(!order3.budget_exhausted);  // full space swept: no witness exists
  CHECK(order3.examined >= 1);
}
