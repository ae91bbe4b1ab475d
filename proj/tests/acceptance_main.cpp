// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The order-8 search (criterion 7) is long-running and only runs
// with --long.

#include <chrono>
#include <cstring>
#include <iostream>
#include <set>

#include "lqt/harness.hpp"
#include "lqt/term.hpp"

using namespace lqt;

namespace {

struct Outcome {
  int criterion;
  std::string verdict;  // PASS / FAIL / SKIP / INCONCLUSIVE
  std::string detail;
};

std::vector<Outcome> outcomes;

void record(int criterion, bool pass, const std::string& detail) {
  outcomes.push_back({criterion, pass ? "PASS" : "FAIL", detail});
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", s);
  return buf;
}

const HarnessResult* find_law(const std::vector<HarnessResult>& rs, const std::string& law) {
  for (const auto& r : rs)
    if (r.law == law) return &r;
  return nullptr;
}

std::size_t total_failures(const std::vector<HarnessResult>& rs) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.failures.size();
  return n;
}

void print_failures(const std::vector<HarnessResult>& rs, std::size_t cap = 5) {
  std::size_t shown = 0;
  for (const auto& r : rs)
    for (const auto& f : r.failures) {
      if (shown++ >= cap) return;
      std::cout << "    [" << r.law << "] " << f.instance << ": " << f.detail << '\n';
    }
}

// Criterion 1: all laws over every left quasigroup of order <= 3, split by
// order 1 + 4 + 216 instances, zero failures, under two minutes.
void criterion_1(const HarnessOptions& base) {
  auto t0 = std::chrono::steady_clock::now();
  HarnessOptions opt = base;
  opt.max_order = 3;
  opt.run_quandles = false;
  opt.run_extensions = false;
  auto results = verify_theorems(opt);
  double secs = seconds_since(t0);
  std::size_t fails = total_failures(results);
  bool counts_ok = true;
  for (const auto& r : results)
    if (r.instances != 221) counts_ok = false;
  bool pass = fails == 0 && counts_ok && secs < 120.0;
  std::ostringstream os;
  os << "exhaustive law suite, 221 instances of order <= 3, " << fails << " failures, "
     << fmt_secs(secs);
  if (!counts_ok) os << ", instance count mismatch";
  if (secs >= 120.0) os << ", over the 2 minute budget";
  record(1, pass, os.str());
  if (fails) print_failures(results);
}

// Criteria 2, 3 and the quandle half of 6 share the combined structure run.
void criteria_2_3_6(const HarnessOptions& base, bool run_extensions) {
  auto t0 = std::chrono::steady_clock::now();
  HarnessOptions opt = base;
  opt.max_order = 3;
  opt.max_quandle_order = 5;
  opt.run_extensions = false;
  auto results = verify_theorems(opt);
  double secs = seconds_since(t0);

  const HarnessResult* theorem = find_law(results, "cdsg-vs-cdos");
  bool p2 = theorem && theorem->pass() && secs < 600.0;
  {
    std::ostringstream os;
    os << "cdsg iff (sharp and cdos) iff operator collapse, "
       << (theorem ? theorem->instances : 0) << " instances, "
       << (theorem ? theorem->failures.size() : 1) << " discrepancies, " << fmt_secs(secs)
       << " for the combined structure scope";
    if (secs >= 600.0) os << ", over the 10 minute budget";
    record(2, p2, os.str());
    if (theorem && !theorem->pass()) print_failures({*theorem});
  }
  const HarnessResult* closure = find_law(results, "quotient-closure");
  {
    bool p3 = closure && closure->pass();
    std::ostringstream os;
    os << "cdos/cdsg/sharp closed under quotients, "
       << (closure ? closure->failures.size() : 1) << " failures";
    record(3, p3, os.str());
    if (closure && !closure->pass()) print_failures({*closure});
  }

  // criterion 6: nilpotent idempotent instances among quandles <= 5 and the
  // idempotent extension family; dihedral:3 must be a positive witness
  const HarnessResult* nil_struct = find_law(results, "nilpotent-cdsg");
  bool p6 = nil_struct && nil_struct->pass();
  std::size_t ext_fails = 0;
  std::size_t ext_count = 0;
  if (run_extensions) {
    HarnessOptions eopt = base;
    eopt.run_lq = false;
    eopt.run_quandles = false;
    eopt.run_extensions = true;
    eopt.term_form_terms = 1;  // only the nilpotency law matters here
    auto eresults = verify_theorems(eopt);
    const HarnessResult* nil_ext = find_law(eresults, "nilpotent-cdsg");
    if (!nil_ext || !nil_ext->pass()) {
      p6 = false;
      ext_fails = nil_ext ? nil_ext->failures.size() : 1;
    }
    ext_count = nil_ext ? nil_ext->instances : 0;
  }
  GaloisReport witness = full_report(dihedral_quandle(3));
  NilpotencyResult wn = nilpotency(dihedral_quandle(3));
  bool witness_ok = witness.flags.cdsg && wn.nilpotency_class == 1 &&
                    witness.flags.semiregular && witness.flags.superconnected;
  p6 = p6 && witness_ok;
  std::ostringstream os;
  os << "nilpotent classification over " << (nil_struct ? nil_struct->instances : 0)
     << " structures";
  if (run_extensions) os << " and " << ext_count << " extensions (" << ext_fails << " failures)";
  os << "; dihedral:3 positive witness " << (witness_ok ? "confirmed" : "MISSING");
  record(6, p6, os.str());
  if (nil_struct && !nil_struct->pass()) print_failures({*nil_struct});
}

// Criterion 4: quad closure vs random-term sampling on every instance of
// order <= 3; exact containment, agreeing centralizing verdicts.
void criterion_4(const HarnessOptions& base) {
  auto t0 = std::chrono::steady_clock::now();
  auto instances = all_left_quasigroups_upto(3);
  std::size_t containment_violations = 0, verdict_violations = 0;
  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    const LeftQuasigroup& q = instances[idx];
    auto con = all_congruences(q);
    Rng rng(derive_seed(base.seed, idx));
    std::vector<Term> terms;
    for (int i = 0; i < 500; ++i) terms.push_back(Term::random(3, 6, rng));
    for (const auto& alpha : con)
      for (const auto& beta : con) {
        MatrixSet m = generate_matrices(q, alpha, beta);
        std::vector<std::pair<Point, Point>> ap, bp;
        for (int a = 0; a < q.order(); ++a)
          for (int b = 0; b < q.order(); ++b) {
            if (alpha.same(a, b)) ap.emplace_back(a, b);
            if (beta.same(a, b)) bp.emplace_back(a, b);
          }
        std::vector<std::array<Point, 4>> sampled;
        for (const auto& t : terms) {
          const int k = t.arity();
          for (int rep = 0; rep < 2; ++rep) {
            auto [x, y] = ap[rng.below(ap.size())];
            std::vector<Point> zs(k), us(k);
            zs[0] = x;
            us[0] = y;
            for (int j = 1; j < k; ++j) {
              auto [z, u] = bp[rng.below(bp.size())];
              zs[j] = z;
              us[j] = u;
            }
            std::vector<Point> args(k);
            auto eval_mixed = [&](bool row_y, bool col_u) {
              args[0] = row_y ? us[0] : zs[0];
              for (int j = 1; j < k; ++j) args[j] = col_u ? us[j] : zs[j];
              return t.eval(q, args);
            };
            std::array<Point, 4> quad = {eval_mixed(false, false), eval_mixed(false, true),
                                         eval_mixed(true, false), eval_mixed(true, true)};
            if (!m.contains(quad[0], quad[1], quad[2], quad[3])) ++containment_violations;
            sampled.push_back(quad);
          }
        }
        for (const auto& delta : con) {
          bool closure_verdict = centralizes(m, delta);
          bool sampled_verdict = true;
          for (const auto& t : sampled)
            if (delta.same(t[0], t[1]) && !delta.same(t[2], t[3])) sampled_verdict = false;
          if (closure_verdict && !sampled_verdict) ++verdict_violations;
        }
      }
  }
  double secs = seconds_since(t0);
  bool pass = containment_violations == 0 && verdict_violations == 0;
  std::ostringstream os;
  os << "500-term sampling vs closure on " << instances.size() << " instances, "
     << containment_violations << " containment violations, " << verdict_violations
     << " verdict violations, " << fmt_secs(secs);
  record(4, pass, os.str());
}

// Criterion 5: the full constructed extension family.
void criterion_5(const HarnessOptions& base) {
  auto t0 = std::chrono::steady_clock::now();
  HarnessOptions opt = base;
  opt.run_lq = false;
  opt.run_quandles = false;
  opt.run_extensions = true;
  opt.term_form_terms = 300;
  auto results = verify_theorems(opt);
  double secs = seconds_since(t0);
  const char* needed[] = {"extension-kernel-central", "extension-displacement-action",
                          "extension-invariant-subgroup-congruence", "extension-term-form"};
  std::size_t fails = 0, count = 0;
  bool all_found = true;
  for (const char* law : needed) {
    const HarnessResult* r = find_law(results, law);
    if (!r) {
      all_found = false;
      continue;
    }
    fails += r->failures.size();
    count = r->instances;
  }
  bool pass = all_found && fails == 0 && count >= 200 && secs < 900.0;
  std::ostringstream os;
  os << "central-extension suite over " << count << " extensions, " << fails << " failures, "
     << fmt_secs(secs);
  if (count < 200) os << ", family too small";
  if (secs >= 900.0) os << ", over the 15 minute budget";
  record(5, pass, os.str());
  if (fails) print_failures(results);
}

// Criterion 7 (long-running): reproduce the order-8 CDOs-not-sharp witness.
void criterion_7(std::uint64_t budget) {
  auto t0 = std::chrono::steady_clock::now();
  SearchResult res = search_cdos_not_cdsg(8, budget);
  double secs = seconds_since(t0);
  if (res.witness) {
    GaloisReport r = full_report(*res.witness);
    bool pass = r.flags.cdos && !r.flags.sharp && !r.flags.cdsg &&
                predicates(*res.witness).quandle;
    std::ostringstream os;
    os << "order-8 quandle with CDOs and not sharp found after " << res.examined
       << " candidates, " << fmt_secs(secs) << "; table " << table_brief(*res.witness);
    record(7, pass, os.str());
  } else if (res.budget_exhausted) {
    outcomes.push_back({7, "INCONCLUSIVE",
                        "budget exhausted after " + std::to_string(res.examined) +
                            " candidates without a witness (" + fmt_secs(secs) + ")"});
  } else {
    record(7, false,
           "search space swept with no witness after " + std::to_string(res.examined) +
               " candidates, " + fmt_secs(secs));
  }
}

// Criterion 8: named structures, exact values.
void criterion_8() {
  std::ostringstream os;
  bool pass = true;

  GaloisReport p2 = full_report(projection_lq(2));
  bool p2_ok = p2.admissibles.size() == 1 && p2.admissibles[0].is_trivial() && !p2.flags.cdos &&
               p2.lambda.is_one();
  pass = pass && p2_ok;
  os << "projection:2 " << (p2_ok ? "ok" : "MISMATCH");

  AbelianGroup z2({2});
  LeftQuasigroup aff = build_affine(z2, EndoMap::zero(z2), EndoMap::identity(z2), 1);
  GaloisReport ar = full_report(aff);
  bool aff_ok = aff == cyclic_shift_lq(2) && ar.congruences.size() == 2 && ar.ds.is_trivial() &&
                ar.lambda.is_one();
  pass = pass && aff_ok;
  os << "; affine(Z2,0,1,1) " << (aff_ok ? "ok" : "MISMATCH");

  GaloisReport r3 = full_report(dihedral_quandle(3));
  bool r3_ok = r3.congruences.size() == 2 && r3.admissibles.size() == 2 &&
               r3.admissibles[0].is_trivial() && r3.admissibles[1].order() == 3 &&
               r3.admissibles[1].contains(Perm::from_images({1, 2, 0})) && r3.flags.cdos &&
               r3.flags.cdsg;
  pass = pass && r3_ok;
  os << "; dihedral:3 " << (r3_ok ? "ok" : "MISMATCH");

  record(8, pass, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  bool run_long = false;
  std::set<int> only;
  std::uint64_t budget = 50'000'000;
  HarnessOptions base;
  base.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--long") == 0) run_long = true;
    else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      std::istringstream ss(argv[++i]);
      std::string tok;
      while (std::getline(ss, tok, ',')) only.insert(std::stoi(tok));
    } else if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc) {
      base.jobs = std::stoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      base.seed = std::stoull(argv[++i]);
    } else if (std::strcmp(argv[i], "--budget") == 0 && i + 1 < argc) {
      budget = std::stoull(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--long] [--only 1,2,...] [--jobs N] [--seed N] "
                   "[--budget N]\n";
      return 2;
    }
  }
  auto want = [&](int c) { return only.empty() || only.count(c) > 0; };

  if (want(1)) criterion_1(base);
  if (want(2) || want(3) || want(6)) criteria_2_3_6(base, want(6));
  if (want(4)) criterion_4(base);
  if (want(5)) criterion_5(base);
  if (want(7)) {
    if (run_long)
      criterion_7(budget);
    else
      outcomes.push_back({7, "SKIP", "long-running search; enable with --long"});
  }
  if (want(8)) criterion_8();

  bool any_fail = false;
  for (const auto& o : outcomes) {
    std::cout << '[' << o.verdict << "] criterion-" << o.criterion << ": " << o.detail << '\n';
    if (o.verdict == "FAIL" || o.verdict == "INCONCLUSIVE") any_fail = true;
  }
  std::cout << (any_fail ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << '\n';
  return any_fail ? 1 : 0;
}
