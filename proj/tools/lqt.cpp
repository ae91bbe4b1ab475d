// lqt: command-line interface for the left quasigroup toolkit.
//
// Exit codes: 0 success, 1 law failure or internal inconsistency,
// 2 input error, 3 capacity exceeded.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lqt/harness.hpp"
#include "lqt/report.hpp"

namespace {

struct GlobalFlags {
  std::string format = "human";
  bool transpose = false;
  std::uint64_t seed = 0xC0FFEE;
  std::size_t max_group_order = 200'000;
  std::size_t max_normal_subgroups = 20'000;
  std::size_t max_congruences = 100'000;
  int jobs = 1;
};

lqt::ParsedStructure load(const std::string& path, const GlobalFlags& g) {
  return lqt::load_structure(path, g.transpose);
}

void print_json(const lqt::json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_validate(const std::string& path, const GlobalFlags& g) {
  lqt::ParsedStructure s = load(path, g);
  lqt::Predicates p = lqt::predicates(s.q);
  if (g.format == "json") {
    lqt::json j = lqt::structure_to_json(s.q, s.name);
    j["predicates"] = {{"idempotent", p.idempotent},
                       {"rack", p.rack},
                       {"quandle", p.quandle},
                       {"latin", p.latin},
                       {"projection", p.projection}};
    print_json(j);
  } else {
    std::cout << "valid left quasigroup of order " << s.q.order();
    if (!s.name.empty()) std::cout << " (" << s.name << ")";
    std::cout << '\n';
    std::cout << "predicates:";
    if (p.idempotent) std::cout << " idempotent";
    if (p.rack) std::cout << " rack";
    if (p.quandle) std::cout << " quandle";
    if (p.latin) std::cout << " latin";
    if (p.projection) std::cout << " projection";
    std::cout << '\n';
  }
  return 0;
}

int cmd_report(const std::string& path, const GlobalFlags& g) {
  lqt::ParsedStructure s = load(path, g);
  if (g.format == "json")
    print_json(lqt::report_json(s.q, s.name));
  else
    std::cout << lqt::report_human(s.q, s.name);
  return 0;
}

int cmd_galois(const std::string& path, const GlobalFlags& g) {
  lqt::ParsedStructure s = load(path, g);
  if (g.format == "json")
    print_json(lqt::galois_json(s.q));
  else
    std::cout << lqt::galois_human(s.q);
  return 0;
}

int cmd_commutator(const std::string& path, const GlobalFlags& g, const std::string& alpha_text,
                   const std::string& beta_text) {
  lqt::ParsedStructure s = load(path, g);
  lqt::Partition alpha = lqt::parse_partition(alpha_text, s.q.order());
  lqt::Partition beta = lqt::parse_partition(beta_text, s.q.order());
  lqt::Partition c = lqt::commutator_of(s.q, alpha, beta);
  if (g.format == "json")
    print_json(lqt::json{{"alpha", lqt::partition_to_json(alpha)},
                         {"beta", lqt::partition_to_json(beta)},
                         {"commutator", lqt::partition_to_json(c)}});
  else
    std::cout << "commutator: " << c.to_string() << '\n';
  return 0;
}

int cmd_center(const std::string& path, const GlobalFlags& g) {
  lqt::ParsedStructure s = load(path, g);
  lqt::Partition z = lqt::center(s.q);
  if (g.format == "json")
    print_json(lqt::json{{"center", lqt::partition_to_json(z)}, {"abelian", z.is_one()}});
  else
    std::cout << "center: " << z.to_string() << (z.is_one() ? " (abelian)" : "") << '\n';
  return 0;
}

int cmd_nilpotency(const std::string& path, const GlobalFlags& g) {
  lqt::ParsedStructure s = load(path, g);
  lqt::NilpotencyResult nil = lqt::nilpotency(s.q);
  if (g.format == "json") {
    lqt::json j;
    j["nilpotent"] = nil.nilpotency_class.has_value();
    if (nil.nilpotency_class) j["class"] = *nil.nilpotency_class;
    j["series"] = lqt::json::array();
    for (const auto& z : nil.series) j["series"].push_back(lqt::partition_to_json(z));
    print_json(j);
  } else {
    for (std::size_t i = 0; i < nil.series.size(); ++i)
      std::cout << "zeta_" << (i + 1) << ": " << nil.series[i].to_string() << '\n';
    if (nil.nilpotency_class)
      std::cout << "nilpotency class: " << *nil.nilpotency_class << '\n';
    else
      std::cout << "not nilpotent\n";
  }
  return 0;
}

int cmd_extend(const std::string& path, const GlobalFlags& g, bool with_report) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  lqt::json spec;
  try {
    in >> spec;
  } catch (const lqt::json::parse_error& e) {
    throw std::invalid_argument(std::string("extension spec: ") + e.what());
  }
  lqt::Extension e = lqt::parse_extension_spec(spec);
  if (g.format == "json") {
    lqt::json j = lqt::extension_to_json(e);
    if (with_report) j["report"] = lqt::report_json(e.total);
    print_json(j);
  } else {
    std::cout << lqt::emit_structure(e.total);
    for (int p = 0; p < e.total.order(); ++p) {
      auto [x, av] = e.decode(p);
      std::cout << "# point " << p << " = (" << x << ", " << e.a.element_name(av) << ")\n";
    }
    if (with_report) std::cout << lqt::report_human(e.total);
  }
  return 0;
}

int cmd_enumerate(const GlobalFlags& g, lqt::EnumerateOptions opt, bool count_only) {
  if (count_only) {
    std::cout << lqt::count_left_quasigroups(opt) << '\n';
    return 0;
  }
  bool json_mode = g.format == "json";
  lqt::json arr = lqt::json::array();
  lqt::enumerate_left_quasigroups(opt, [&](const lqt::LeftQuasigroup& q) {
    if (json_mode)
      arr.push_back(lqt::structure_to_json(q));
    else
      std::cout << lqt::emit_structure(q) << '\n';
    return true;
  });
  if (json_mode) print_json(arr);
  return 0;
}

int cmd_search(const GlobalFlags& g, int order, std::uint64_t budget) {
  lqt::SearchResult res = lqt::search_cdos_not_cdsg(order, budget);
  if (g.format == "json") {
    lqt::json j;
    j["examined"] = res.examined;
    j["budget_exhausted"] = res.budget_exhausted;
    j["found"] = res.witness.has_value();
    if (res.witness) j["witness"] = lqt::structure_to_json(*res.witness);
    print_json(j);
  } else if (res.witness) {
    std::cout << "witness found after " << res.examined << " candidates\n"
              << lqt::emit_structure(*res.witness);
    lqt::GaloisReport r = lqt::full_report(*res.witness);
    std::cout << "cdos: " << (r.flags.cdos ? "yes" : "no")
              << ", sharp: " << (r.flags.sharp ? "yes" : "no")
              << ", cdsg: " << (r.flags.cdsg ? "yes" : "no") << '\n';
  } else if (res.budget_exhausted) {
    std::cout << "inconclusive: budget exhausted after " << res.examined << " candidates\n";
  } else {
    std::cout << "no witness exists at order " << order << " (search space swept, "
              << res.examined << " candidates)\n";
  }
  return 0;
}

int cmd_verify(const GlobalFlags& g, lqt::HarnessOptions hopt) {
  auto results = lqt::verify_theorems(hopt);
  bool any_fail = false;
  if (g.format == "json") {
    lqt::json arr = lqt::json::array();
    for (const auto& r : results) {
      lqt::json j;
      j["law"] = r.law;
      j["instances"] = r.instances;
      j["failures"] = lqt::json::array();
      for (const auto& f : r.failures)
        j["failures"].push_back({{"instance", f.instance}, {"detail", f.detail}});
      j["elapsed_ms"] = r.elapsed_ms;
      arr.push_back(j);
      if (!r.pass()) any_fail = true;
    }
    print_json(arr);
  } else {
    for (const auto& r : results) {
      std::printf("%-42s %6zu instances  %4zu failures  %8.1f ms\n", r.law.c_str(), r.instances,
                  r.failures.size(), r.elapsed_ms);
      for (const auto& f : r.failures)
        std::cout << "    " << f.instance << ": " << f.detail << '\n';
      if (!r.pass()) any_fail = true;
    }
    std::cout << (any_fail ? "RESULT: FAIL" : "RESULT: PASS") << '\n';
  }
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for finite left quasigroups, racks and quandles"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--seed", g.seed, "seed for all randomized sampling");
  app.add_option("--max-group-order", g.max_group_order, "group materialization cap");
  app.add_option("--max-normal-subgroups", g.max_normal_subgroups, "normal subgroup cap");
  app.add_option("--max-congruences", g.max_congruences, "congruence enumeration cap");
  app.add_flag("--transpose", g.transpose, "transpose input tables (other row convention)");
  app.add_option("--jobs", g.jobs, "worker threads for verify-theorems");
  app.fallthrough();

  std::string path, alpha_text = "1", beta_text = "1";
  bool with_report = false, count_only = false;
  lqt::EnumerateOptions eopt;
  bool want_quandle = false;
  int search_order = 8;
  std::uint64_t search_budget = 50'000'000;
  lqt::HarnessOptions hopt;
  std::string families = "lq,quandles,extensions";

  auto* validate = app.add_subcommand("validate", "check a table file");
  validate->add_option("file", path)->required();
  auto* report = app.add_subcommand("report", "full structural report");
  report->add_option("file", path)->required();
  auto* galois = app.add_subcommand("galois", "congruence/admissible lattices and operators");
  galois->add_option("file", path)->required();
  auto* comm = app.add_subcommand("commutator", "term-condition commutator of two congruences");
  comm->add_option("file", path)->required();
  comm->add_option("--alpha", alpha_text, "partition, e.g. '0 2|1 3', or 0/1");
  comm->add_option("--beta", beta_text, "partition, e.g. '0 2|1 3', or 0/1");
  auto* cent = app.add_subcommand("center", "center congruence");
  cent->add_option("file", path)->required();
  auto* nil = app.add_subcommand("nilpotency", "iterated-center series and class");
  nil->add_option("file", path)->required();
  auto* ext = app.add_subcommand("extend", "build a central extension from a JSON spec");
  ext->add_option("file", path)->required();
  ext->add_flag("--report", with_report, "also report on the built structure");
  auto* en = app.add_subcommand("enumerate", "stream small structures");
  en->add_option("--order", eopt.order)->required();
  en->add_flag("--idempotent", eopt.idempotent);
  en->add_flag("--rack", eopt.rack);
  en->add_flag("--quandle", want_quandle, "idempotent rack");
  en->add_flag("--latin", eopt.latin);
  en->add_flag("--isomorph-reject", eopt.isomorph_reject);
  en->add_option("--limit", eopt.limit, "stop after this many structures");
  en->add_flag("--count-only", count_only);
  auto* search = app.add_subcommand("search", "look for a quandle with CDOs that is not sharp");
  search->add_option("--order", search_order);
  search->add_option("--budget", search_budget, "max candidates examined");
  auto* verify = app.add_subcommand("verify-theorems", "run every law suite");
  verify->add_option("--max-order", hopt.max_order, "exhaustive bound for left quasigroups");
  verify->add_option("--max-quandle-order", hopt.max_quandle_order);
  verify->add_option("--families", families, "comma list of lq,quandles,extensions");
  verify->add_option("--term-form-terms", hopt.term_form_terms);

  CLI11_PARSE(app, argc, argv);

  lqt::caps().max_group_order = g.max_group_order;
  lqt::caps().max_normal_subgroups = g.max_normal_subgroups;
  lqt::caps().max_congruences = g.max_congruences;
  lqt::global_seed() = g.seed;

  try {
    if (validate->parsed()) return cmd_validate(path, g);
    if (report->parsed()) return cmd_report(path, g);
    if (galois->parsed()) return cmd_galois(path, g);
    if (comm->parsed()) return cmd_commutator(path, g, alpha_text, beta_text);
    if (cent->parsed()) return cmd_center(path, g);
    if (nil->parsed()) return cmd_nilpotency(path, g);
    if (ext->parsed()) return cmd_extend(path, g, with_report);
    if (en->parsed()) {
      if (want_quandle) {
        eopt.idempotent = true;
        eopt.rack = true;
      }
      return cmd_enumerate(g, eopt, count_only);
    }
    if (search->parsed()) return cmd_search(g, search_order, search_budget);
    if (verify->parsed()) {
      hopt.seed = g.seed;
      hopt.jobs = g.jobs;
      hopt.run_lq = families.find("lq") != std::string::npos;
      hopt.run_quandles = families.find("quandles") != std::string::npos;
      hopt.run_extensions = families.find("extensions") != std::string::npos;
      return cmd_verify(g, hopt);
    }
  } catch (const lqt::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
