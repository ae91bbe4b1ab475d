#pragma once

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "lqt/commutator.hpp"
#include "lqt/enumerate.hpp"
#include "lqt/extension.hpp"

namespace lqt {

struct LawFailure {
  std::string instance;
  std::string detail;
};

struct HarnessResult {
  std::string law;
  std::size_t instances = 0;
  std::vector<LawFailure> failures;
  double elapsed_ms = 0;
  bool pass() const { return failures.empty(); }
};

struct HarnessOptions {
  int max_order = 3;          // exhaustive sweep bound for plain left quasigroups
  int max_quandle_order = 5;  // exhaustive sweep bound for quandles
  bool run_lq = true;
  bool run_quandles = true;
  bool run_extensions = true;
  std::uint64_t seed = 0xC0FFEE;
  int jobs = 1;
  int term_form_terms = 300;
};

// Everything the laws need about one structure, computed once and shared.
class InstanceData {
 public:
  InstanceData(LeftQuasigroup q, std::string label, std::uint64_t ordinal)
      : q_(std::move(q)), label_(std::move(label)), ordinal_(ordinal) {}

  const LeftQuasigroup& q() const { return q_; }
  const std::string& label() const { return label_; }
  std::uint64_t ordinal() const { return ordinal_; }

  const GaloisReport& report() {
    if (!report_) report_ = full_report(q_);
    return *report_;
  }
  const std::vector<PermGroup>& normals() { return report().normals; }
  const Predicates& preds() {
    if (!preds_) preds_ = predicates(q_);
    return *preds_;
  }
  const NilpotencyResult& nil() {
    if (!nil_) nil_ = nilpotency(q_);
    return *nil_;
  }
  const Partition& zeta() {
    if (!zeta_) zeta_ = center(q_);
    return *zeta_;
  }

 private:
  LeftQuasigroup q_;
  std::string label_;
  std::uint64_t ordinal_;
  std::optional<GaloisReport> report_;
  std::optional<Predicates> preds_;
  std::optional<NilpotencyResult> nil_;
  std::optional<Partition> zeta_;
};

namespace laws {

using Out = std::vector<std::string>;  // failure details for one instance

// LMlt(Q) = Dis(Q)<L_x> for every x, with Dis normal and every left
// translation in the same coset generating the cyclic quotient.
inline void lmlt_decomposition(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  const auto& q = d.q();
  if (!is_normal_in(r.ds, r.lm)) out.push_back("Dis(Q) is not normal in LMlt(Q)");
  if (r.lm.order() % r.ds.order() != 0) out.push_back("|Dis| does not divide |LMlt|");
  const int index = static_cast<int>(r.lm.order() / r.ds.order());
  for (int x = 0; x < q.order(); ++x) {
    Perm lx = q.left_translation(x);
    std::vector<Perm> gens = r.ds.generators();
    gens.push_back(lx);
    if (!(PermGroup::closure(q.order(), gens) == r.lm)) {
      out.push_back("LMlt != Dis<L_" + std::to_string(x) + ">");
      continue;
    }
    Perm p = lx;
    int k = 1;
    while (!r.ds.contains(p)) {
      p = compose(p, lx);
      ++k;
    }
    if (k != index)
      out.push_back("coset order of L_" + std::to_string(x) + " is " + std::to_string(k) +
                    ", expected " + std::to_string(index));
  }
}

// pi_alpha(Dis_beta) = Dis_{beta/alpha} and pi_alpha(Dis^beta) = Dis^{beta/alpha}.
inline void dis_quotient_transport(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const Partition& alpha = r.congruences[i];
    Quotient qa = quotient(d.q(), alpha);
    PermGroup qlm = lmlt(qa.algebra);
    PermGroup qds = dis(qa.algebra);
    for (std::size_t j = 0; j < r.congruences.size(); ++j) {
      const Partition& beta = r.congruences[j];
      if (!leq(alpha, beta)) continue;
      Partition ba = quotient_congruence(alpha, beta);
      if (!(induced_block_group(alpha, r.dis_low[j]) == dis_lower(qa.algebra, ba, qlm)))
        out.push_back("pi(" + alpha.to_string() + ")(Dis_" + beta.to_string() +
                      ") != Dis_{beta/alpha}");
      if (!(induced_block_group(alpha, r.dis_high[j]) == dis_upper(qa.algebra, ba, qds)))
        out.push_back("pi(" + alpha.to_string() + ")(Dis^" + beta.to_string() +
                      ") != Dis^{beta/alpha}");
    }
  }
}

// pi_alpha is an order isomorphism {N in Norm' : Dis^alpha <= N} -> Norm'(Q/alpha).
inline void admissible_lattice_iso(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const Partition& alpha = r.congruences[i];
    Quotient qa = quotient(d.q(), alpha);
    std::vector<const PermGroup*> above;
    for (const auto& n : r.admissibles)
      if (r.dis_high[i].is_subgroup_of(n)) above.push_back(&n);
    std::vector<PermGroup> images;
    for (const auto* n : above) images.push_back(induced_block_group(alpha, *n));
    // distinct images, exactly Norm'(Q/alpha), order-preserving both ways
    auto target = admissible_subgroups(qa.algebra);
    auto sorted_images = images;
    std::sort(sorted_images.begin(), sorted_images.end(),
              [](const PermGroup& a, const PermGroup& b) { return canonical_less(a, b); });
    if (std::adjacent_find(sorted_images.begin(), sorted_images.end()) != sorted_images.end()) {
      out.push_back("pi_" + alpha.to_string() + " not injective on admissibles above Dis^alpha");
      continue;
    }
    if (!(sorted_images == target)) {
      out.push_back("pi_" + alpha.to_string() + " image differs from Norm'(Q/alpha)");
      continue;
    }
    for (std::size_t a = 0; a < above.size(); ++a)
      for (std::size_t b = 0; b < above.size(); ++b)
        if (above[a]->is_subgroup_of(*above[b]) != images[a].is_subgroup_of(images[b]))
          out.push_back("pi_" + alpha.to_string() + " does not preserve order both ways");
  }
}

// O_N / beta = O_{pi_beta(N)} and c_N / alpha = c_{pi_alpha(N)} for
// admissible N above Dis^alpha, beta = O_{Dis^alpha}.
inline void orbit_cayley_transport(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const Partition& alpha = r.congruences[i];
    Partition beta = orbit_relation(r.dis_high[i]);
    Quotient qa = quotient(d.q(), alpha);
    for (std::size_t j = 0; j < r.admissibles.size(); ++j) {
      if (!r.dis_high[i].is_subgroup_of(r.admissibles[j])) continue;
      PermGroup imgb = induced_block_group(beta, r.admissibles[j]);
      if (!(quotient_congruence(beta, r.orb[j]) == orbit_relation(imgb)))
        out.push_back("orbit transport fails at alpha=" + alpha.to_string());
      PermGroup imga = induced_block_group(alpha, r.admissibles[j]);
      if (!(quotient_congruence(alpha, r.cay[j]) == cayley_relation(qa.algebra, imga)))
        out.push_back("Cayley transport fails at alpha=" + alpha.to_string());
    }
  }
}

// (i) alpha <= lambda iff Dis_alpha trivial; (ii) lambda_{Q/alpha} = c_{Dis^alpha}/alpha.
inline void cayley_kernel_remark(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const Partition& alpha = r.congruences[i];
    if (leq(alpha, r.lambda) != r.dis_low[i].is_trivial())
      out.push_back("alpha <= lambda mismatch at " + alpha.to_string());
    Quotient qa = quotient(d.q(), alpha);
    Partition chigh = cayley_relation(d.q(), r.dis_high[i]);
    if (!(cayley_kernel(qa.algebra) == quotient_congruence(alpha, chigh)))
      out.push_back("lambda of quotient mismatch at " + alpha.to_string());
  }
}

// alpha/beta <= lambda_{Q/beta} for beta = O_{Dis^alpha}, and likewise for
// gamma = O_{Dis_alpha}.
inline void below_kernel_quotients(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const Partition& alpha = r.congruences[i];
    for (const Partition& below : {orbit_relation(r.dis_high[i]), orbit_relation(r.dis_low[i])}) {
      Quotient qb = quotient(d.q(), below);
      if (!leq(quotient_congruence(below, alpha), cayley_kernel(qb.algebra)))
        out.push_back("alpha/beta above quotient Cayley kernel at " + alpha.to_string());
    }
  }
}

// Definitional sharpness (no quotient hides a congruence below its Cayley
// kernel) against the operator characterization.
inline void sharp_characterization(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  bool definitional = true;
  for (std::size_t i = 0; i < r.congruences.size() && definitional; ++i)
    for (std::size_t j = 0; j < r.congruences.size(); ++j) {
      const Partition& alpha = r.congruences[i];
      const Partition& beta = r.congruences[j];
      if (!leq(alpha, beta) || alpha == beta) continue;
      Quotient qa = quotient(d.q(), alpha);
      if (leq(quotient_congruence(alpha, beta), cayley_kernel(qa.algebra))) {
        definitional = false;
        break;
      }
    }
  if (definitional != r.flags.sharp)
    out.push_back(std::string("definitional sharpness ") + (definitional ? "true" : "false") +
                  " but operator characterization says " + (r.flags.sharp ? "true" : "false"));
}

// Three-way equivalence: O_* = c_* on Norm'(Q); the chain collapses for every
// congruence; every quotient is faithful. And any of them forces sharpness.
inline void orbit_cayley_collapse(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  bool eq_on_admissibles = true;
  for (std::size_t j = 0; j < r.admissibles.size(); ++j)
    if (!(r.orb[j] == r.cay[j])) eq_on_admissibles = false;
  bool chain_collapses = true;
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const Partition& alpha = r.congruences[i];
    if (!(orbit_relation(r.dis_low[i]) == alpha) || !(orbit_relation(r.dis_high[i]) == alpha) ||
        !(cayley_relation(d.q(), r.dis_low[i]) == alpha) ||
        !(cayley_relation(d.q(), r.dis_high[i]) == alpha))
      chain_collapses = false;
  }
  bool quotients_faithful = true;
  for (const auto& alpha : r.congruences)
    if (!is_faithful(quotient(d.q(), alpha).algebra)) quotients_faithful = false;
  if (eq_on_admissibles != chain_collapses || chain_collapses != quotients_faithful)
    out.push_back("the three collapse conditions disagree");
  if (eq_on_admissibles && !r.flags.sharp) out.push_back("collapse holds but Q is not sharp");
}

inline void galois_adjunction_orbits(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t j = 0; j < r.admissibles.size(); ++j)
    for (std::size_t i = 0; i < r.congruences.size(); ++i)
      if (leq(r.orb[j], r.congruences[i]) != r.admissibles[j].is_subgroup_of(r.dis_high[i]))
        out.push_back("O_N <= alpha iff N <= Dis^alpha fails at alpha=" +
                      r.congruences[i].to_string());
}

inline void galois_adjunction_subgroups(InstanceData& d, const HarnessOptions& opt, Out& out) {
  if (!check_adjunction_subgroups(d.q(), derive_seed(opt.seed, d.ordinal())))
    out.push_back("Dis_alpha <= N iff alpha <= c_N fails on sampled equivalences");
}

// FGF = F and GFG = G for both operator pairs.
inline void galois_compositions(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    if (!(dis_upper(d.q(), orbit_relation(r.dis_high[i]), r.ds) == r.dis_high[i]))
      out.push_back("Dis^{O_{Dis^alpha}} != Dis^alpha at " + r.congruences[i].to_string());
    if (!(dis_lower(d.q(), cayley_relation(d.q(), r.dis_low[i]), r.lm) == r.dis_low[i]))
      out.push_back("Dis_{c_{Dis_alpha}} != Dis_alpha at " + r.congruences[i].to_string());
  }
  for (std::size_t j = 0; j < r.admissibles.size(); ++j) {
    if (!(orbit_relation(dis_upper(d.q(), r.orb[j], r.ds)) == r.orb[j]))
      out.push_back("O_{Dis^{O_N}} != O_N at admissible " + std::to_string(j));
    if (!(cayley_relation(d.q(), dis_lower(d.q(), r.cay[j], r.lm)) == r.cay[j]))
      out.push_back("c_{Dis_{c_N}} != c_N at admissible " + std::to_string(j));
  }
}

// O_{Dis_alpha} <= O_{Dis^alpha} <= alpha <= c_{Dis_alpha} <= c_{Dis^alpha}.
inline void operator_chain(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    const Partition& alpha = r.congruences[i];
    Partition olo = orbit_relation(r.dis_low[i]);
    Partition ohi = orbit_relation(r.dis_high[i]);
    Partition clo = cayley_relation(d.q(), r.dis_low[i]);
    Partition chi = cayley_relation(d.q(), r.dis_high[i]);
    if (!(leq(olo, ohi) && leq(ohi, alpha) && leq(alpha, clo) && leq(clo, chi)))
      out.push_back("operator chain fails at " + alpha.to_string());
  }
}

// N in Norm'(Q) forces O_N in Con(Q) and N <= Dis^{O_N}.
inline void admissible_orbit_congruence(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t j = 0; j < r.admissibles.size(); ++j) {
    if (!is_congruence(d.q(), r.orb[j]))
      out.push_back("orbit relation of admissible " + std::to_string(j) + " not a congruence");
    else if (!r.admissibles[j].is_subgroup_of(dis_upper(d.q(), r.orb[j], r.ds)))
      out.push_back("admissible " + std::to_string(j) + " not inside Dis^{O_N}");
  }
}

inline void monotone_operators(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (std::size_t i = 0; i < r.congruences.size(); ++i)
    for (std::size_t j = 0; j < r.congruences.size(); ++j) {
      if (!leq(r.congruences[i], r.congruences[j])) continue;
      if (!r.dis_low[i].is_subgroup_of(r.dis_low[j]))
        out.push_back("Dis_* not monotone");
      if (!r.dis_high[i].is_subgroup_of(r.dis_high[j]))
        out.push_back("Dis^* not monotone");
    }
  for (std::size_t a = 0; a < r.admissibles.size(); ++a)
    for (std::size_t b = 0; b < r.admissibles.size(); ++b) {
      if (!r.admissibles[a].is_subgroup_of(r.admissibles[b])) continue;
      if (!leq(r.orb[a], r.orb[b])) out.push_back("O_* not monotone");
      if (!leq(r.cay[a], r.cay[b])) out.push_back("c_* not monotone");
    }
}

// CDOs, CDSg and sharpness survive passing to quotients.
inline void quotient_closure(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  if (!r.flags.cdos && !r.flags.cdsg && !r.flags.sharp) return;
  for (const auto& alpha : r.congruences) {
    GaloisReport qr = full_report(quotient(d.q(), alpha).algebra);
    if (r.flags.cdos && !qr.flags.cdos)
      out.push_back("CDOs lost in quotient by " + alpha.to_string());
    if (r.flags.cdsg && !qr.flags.cdsg)
      out.push_back("CDSg lost in quotient by " + alpha.to_string());
    if (r.flags.sharp && !qr.flags.sharp)
      out.push_back("sharpness lost in quotient by " + alpha.to_string());
  }
}

// CDSg iff sharp and CDOs iff both operator pairs coincide.
inline void cdsg_vs_cdos(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  bool three = true;
  for (std::size_t j = 0; j < r.admissibles.size(); ++j)
    if (!(r.orb[j] == r.cay[j])) three = false;
  for (std::size_t i = 0; i < r.congruences.size(); ++i)
    if (!(r.dis_low[i] == r.dis_high[i])) three = false;
  bool ii = r.flags.sharp && r.flags.cdos;
  if (r.flags.cdsg != ii || r.flags.cdsg != three)
    out.push_back(std::string("equivalence fails: cdsg=") + (r.flags.cdsg ? "1" : "0") +
                  " sharp&cdos=" + (ii ? "1" : "0") + " collapse=" + (three ? "1" : "0"));
}

// Simple structures with lambda != 1 have Norm' = {1, Dis} and CDOs.
inline void simple_case_cdos(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  if (r.congruences.size() != 2 || r.lambda.is_one()) return;
  bool shape = r.admissibles.size() == 2 && r.admissibles.front().is_trivial() &&
               r.admissibles.back() == r.ds;
  if (!shape) out.push_back("Norm' is not {1, Dis} on a simple instance");
  if (!r.flags.cdos) out.push_back("simple instance with lambda != 1 lacks CDOs");
}

// Blocks over idempotent elements of the quotient are subuniverses.
inline void idempotent_block_subalgebra(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (const auto& alpha : r.congruences) {
    Quotient qa = quotient(d.q(), alpha);
    auto blocks = alpha.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (qa.algebra.op(static_cast<int>(b), static_cast<int>(b)) != static_cast<int>(b))
        continue;
      if (!(subuniverse_generated(d.q(), blocks[b]) == blocks[b]))
        out.push_back("idempotent block is not a subuniverse at " + alpha.to_string());
    }
  }
}

// The block action of each left translation is the left translation of the
// quotient.
inline void quotient_translation_compat(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  for (const auto& alpha : r.congruences) {
    Quotient qa = quotient(d.q(), alpha);
    for (int x = 0; x < d.q().order(); ++x) {
      Perm induced = induced_block_perm(alpha, d.q().left_translation(x));
      if (!(induced == qa.algebra.left_translation(qa.block_of[x])))
        out.push_back("block action of L_" + std::to_string(x) + " mismatches at " +
                      alpha.to_string());
    }
  }
}

// C(alpha,beta;0) forces [Dis_alpha, Dis_beta] = 1 and beta-stabilizers
// constant along alpha-classes.
inline void displacement_centralizer(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  const Partition zero(d.q().order());
  for (std::size_t i = 0; i < r.congruences.size(); ++i)
    for (std::size_t j = 0; j < r.congruences.size(); ++j) {
      if (!centralizes(d.q(), r.congruences[i], r.congruences[j], zero)) continue;
      if (!commutator_subgroup(r.dis_low[i], r.dis_low[j]).is_trivial())
        out.push_back("[Dis_a, Dis_b] != 1 for centralizing pair");
      for (int x = 0; x < d.q().order(); ++x)
        for (int y = 0; y < x; ++y)
          if (r.congruences[i].same(x, y) &&
              !(pointwise_stabilizer(r.dis_low[j], x) == pointwise_stabilizer(r.dis_low[j], y)))
            out.push_back("(Dis_b)_x != (Dis_b)_y along a centralizing pair");
    }
}

// Below the center: Dis_alpha central in Dis(Q), stabilizers constant along
// alpha-classes.
inline void central_displacement(InstanceData& d, const HarnessOptions&, Out& out) {
  const auto& r = d.report();
  const Partition& zeta = d.zeta();
  PermGroup zd = center_of(r.ds);
  for (std::size_t i = 0; i < r.congruences.size(); ++i) {
    if (!leq(r.congruences[i], zeta)) continue;
    if (!r.dis_low[i].is_subgroup_of(zd))
      out.push_back("Dis_alpha not central for alpha <= zeta");
  }
  for (int x = 0; x < d.q().order(); ++x)
    for (int y = 0; y < x; ++y)
      if (zeta.same(x, y) &&
          !(pointwise_stabilizer(r.ds, x) == pointwise_stabilizer(r.ds, y)))
        out.push_back("Dis(Q)_x != Dis(Q)_y inside a central class");
}

// Nilpotent idempotent structures: CDSg iff semiregular superconnected latin
// quandle.
inline void nilpotent_cdsg(InstanceData& d, const HarnessOptions&, Out& out) {
  if (!d.preds().idempotent) return;
  if (!d.nil().nilpotency_class.has_value()) return;
  const auto& r = d.report();
  bool rhs = r.flags.semiregular && r.flags.superconnected && d.preds().latin &&
             d.preds().quandle;
  if (r.flags.cdsg != rhs)
    out.push_back(std::string("cdsg=") + (r.flags.cdsg ? "1" : "0") +
                  " but semiregular*superconnected*latin*quandle=" + (rhs ? "1" : "0"));
}

}  // namespace laws

namespace ext_laws {

using Out = std::vector<std::string>;

struct ExtData {
  Extension e;
  std::string label;
  std::uint64_t ordinal = 0;
  std::optional<InstanceData> total_data;

  InstanceData& total() {
    if (!total_data) total_data.emplace(e.total, label, ordinal);
    return *total_data;
  }
};

inline void term_form(ExtData& d, const HarnessOptions& opt, Out& out) {
  if (!term_form_check(d.e, opt.term_form_terms, derive_seed(opt.seed, d.ordinal)))
    out.push_back("second coordinate of a term operation is not affine in the fiber arguments");
}

inline void kernel_central(ExtData& d, const HarnessOptions&, Out& out) {
  Partition kp = ker_p1(d.e);
  if (!is_central_congruence(d.e.total, kp))
    out.push_back("ker p1 is not a central congruence");
  if (!(quotient(d.e.total, kp).algebra == d.e.base))
    out.push_back("E / ker p1 does not reproduce the base table");
}

inline void displacement_action(ExtData& d, const HarnessOptions&, Out& out) {
  if (!displacement_action_check(d.e))
    out.push_back("generator of Dis_{ker p1} deviates from the fiber translation formula");
}

inline void invariant_subgroup_congruence(ExtData& d, const HarnessOptions&, Out& out) {
  for (const auto& sub : all_subgroups(d.e.a)) {
    if (!subgroup_invariant(d.e.a, d.e.g, d.e.f, sub)) continue;
    if (!is_congruence(d.e.total, alpha_n(d.e, sub)))
      out.push_back("alpha_N not a congruence for an invariant subgroup");
  }
}

inline void block_connectivity(ExtData& d, const HarnessOptions&, Out& out) {
  if (!predicates(d.e.base).idempotent) return;
  if (!block_connectivity_check(d.e))
    out.push_back("orbit structure of Dis_{ker p1} deviates from fiber cosets");
}

inline void idempotence_criterion(ExtData& d, const HarnessOptions&, Out& out) {
  if (is_idempotent_extension(d.e) != predicates(d.e.total).idempotent)
    out.push_back("idempotence criterion disagrees with the built table");
}

inline void affine_superconnected(ExtData& d, const HarnessOptions&, Out& out) {
  if (!is_idempotent_extension(d.e)) return;
  if (!d.total().report().flags.cdos) return;
  LeftQuasigroup fiber = build_affine(d.e.a, d.e.f.one_minus(), d.e.f, 0);
  if (!connect_flags(fiber).superconnected)
    out.push_back("CDOs extension whose affine fiber quandle is not superconnected");
}

inline void nilpotent_cdsg_total(ExtData& d, const HarnessOptions& opt, Out& out) {
  laws::nilpotent_cdsg(d.total(), opt, out);
}

}  // namespace ext_laws

// The constructed extension family: every base in {point, projection:2,
// dihedral:3}, every A in {Z2, Z3, Z4, Z2xZ2}, every automorphism f, every
// endomorphism g, theta from a fixed three-element pool.
inline std::vector<std::pair<Extension, std::string>> standard_extension_family() {
  std::vector<std::pair<Extension, std::string>> out;
  const std::vector<std::pair<std::string, LeftQuasigroup>> bases = {
      {"point", one_point_lq()},
      {"projection:2", projection_lq(2)},
      {"dihedral:3", dihedral_quandle(3)}};
  const std::vector<std::vector<int>> moduli_list = {{2}, {3}, {4}, {2, 2}};
  for (const auto& [bname, base] : bases) {
    for (const auto& moduli : moduli_list) {
      AbelianGroup a(moduli);
      auto thetas = [&]() {
        std::vector<std::pair<std::string, Cocycle>> ts;
        ts.emplace_back("zero", Cocycle::zero(base.order()));
        Cocycle diag0 = Cocycle::zero(base.order());
        std::vector<int> e0(a.rank(), 0);
        e0[0] = 1;
        int e0i = a.encode(e0);
        for (int x = 0; x < base.order(); ++x)
          for (int y = 0; y < base.order(); ++y)
            if (x != y) diag0.values[x * base.order() + y] = e0i;
        ts.emplace_back("offdiag", diag0);
        Cocycle mix = Cocycle::zero(base.order());
        for (int x = 0; x < base.order(); ++x)
          for (int y = 0; y < base.order(); ++y) {
            std::vector<int> v(a.rank(), 0);
            v[0] = (x + 2 * y) % a.moduli()[0];
            mix.values[x * base.order() + y] = a.encode(v);
          }
        ts.emplace_back("mix", mix);
        return ts;
      }();
      for (const auto& f : all_automorphisms(a))
        for (const auto& g : all_endomorphisms(a))
          for (const auto& [tname, theta] : thetas) {
            Extension e = build_extension(base, a, g, f, theta);
            std::string label = "Aff(" + bname + ", " + a.name() + ", g=" + g.name() +
                                ", f=" + f.name() + ", theta=" + tname + ")";
            e.label = label;
            out.emplace_back(std::move(e), std::move(label));
          }
    }
  }
  return out;
}

namespace detail {

struct StructureLaw {
  const char* name;
  void (*fn)(InstanceData&, const HarnessOptions&, laws::Out&);
};

struct ExtensionLaw {
  const char* name;
  void (*fn)(ext_laws::ExtData&, const HarnessOptions&, ext_laws::Out&);
};

inline const std::vector<StructureLaw>& structure_laws() {
  static const std::vector<StructureLaw> list = {
      {"lmlt-decomposition", laws::lmlt_decomposition},
      {"dis-quotient-transport", laws::dis_quotient_transport},
      {"admissible-lattice-iso", laws::admissible_lattice_iso},
      {"orbit-cayley-transport", laws::orbit_cayley_transport},
      {"cayley-kernel-remark", laws::cayley_kernel_remark},
      {"below-kernel-quotients", laws::below_kernel_quotients},
      {"sharp-characterization", laws::sharp_characterization},
      {"orbit-cayley-collapse", laws::orbit_cayley_collapse},
      {"galois-adjunction-orbits", laws::galois_adjunction_orbits},
      {"galois-adjunction-subgroups", laws::galois_adjunction_subgroups},
      {"galois-compositions", laws::galois_compositions},
      {"operator-chain", laws::operator_chain},
      {"admissible-orbit-congruence", laws::admissible_orbit_congruence},
      {"monotone-operators", laws::monotone_operators},
      {"quotient-closure", laws::quotient_closure},
      {"cdsg-vs-cdos", laws::cdsg_vs_cdos},
      {"simple-case-cdos", laws::simple_case_cdos},
      {"idempotent-block-subalgebra", laws::idempotent_block_subalgebra},
      {"quotient-translation-compat", laws::quotient_translation_compat},
      {"displacement-centralizer", laws::displacement_centralizer},
      {"central-displacement", laws::central_displacement},
      {"nilpotent-cdsg", laws::nilpotent_cdsg},
  };
  return list;
}

inline const std::vector<ExtensionLaw>& extension_laws() {
  static const std::vector<ExtensionLaw> list = {
      {"extension-term-form", ext_laws::term_form},
      {"extension-kernel-central", ext_laws::kernel_central},
      {"extension-displacement-action", ext_laws::displacement_action},
      {"extension-invariant-subgroup-congruence", ext_laws::invariant_subgroup_congruence},
      {"extension-block-connectivity", ext_laws::block_connectivity},
      {"extension-idempotence", ext_laws::idempotence_criterion},
      {"affine-superconnected", ext_laws::affine_superconnected},
      {"nilpotent-cdsg", ext_laws::nilpotent_cdsg_total},
  };
  return list;
}

// Order-stable parallel map: results land in slots indexed by instance.
template <typename WorkFn>
inline void parallel_for(std::size_t count, int jobs, WorkFn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int workers = std::min<std::size_t>(jobs, count);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

// Collects the exhaustive instance lists for the two structure scopes.
inline std::vector<LeftQuasigroup> all_left_quasigroups_upto(int max_order) {
  std::vector<LeftQuasigroup> out;
  for (int n = 1; n <= max_order; ++n) {
    EnumerateOptions opt;
    opt.order = n;
    enumerate_left_quasigroups(opt, [&](const LeftQuasigroup& q) {
      out.push_back(q);
      return true;
    });
  }
  return out;
}

inline std::vector<LeftQuasigroup> all_quandles_upto(int max_order) {
  std::vector<LeftQuasigroup> out;
  for (int n = 1; n <= max_order; ++n) {
    EnumerateOptions opt;
    opt.order = n;
    opt.idempotent = true;
    opt.rack = true;
    enumerate_left_quasigroups(opt, [&](const LeftQuasigroup& q) {
      out.push_back(q);
      return true;
    });
  }
  return out;
}

// Runs every law over its scope; failures carry the instance and a witness
// description. Deterministic across runs and job counts (elapsed aside).
inline std::vector<HarnessResult> verify_theorems(const HarnessOptions& opt) {
  const auto& slaws = detail::structure_laws();
  const auto& elaws = detail::extension_laws();

  std::vector<LeftQuasigroup> structures;
  if (opt.run_lq) {
    auto a = all_left_quasigroups_upto(opt.max_order);
    structures.insert(structures.end(), a.begin(), a.end());
  }
  if (opt.run_quandles) {
    auto b = all_quandles_upto(opt.max_quandle_order);
    structures.insert(structures.end(), b.begin(), b.end());
  }

  std::vector<std::vector<std::vector<LawFailure>>> sfail(
      slaws.size(), std::vector<std::vector<LawFailure>>(structures.size()));
  std::vector<double> stime(slaws.size(), 0.0);
  std::mutex time_mutex;

  detail::parallel_for(structures.size(), opt.jobs, [&](std::size_t idx) {
    InstanceData data(structures[idx], table_brief(structures[idx]), idx);
    for (std::size_t l = 0; l < slaws.size(); ++l) {
      laws::Out details;
      auto t0 = std::chrono::steady_clock::now();
      slaws[l].fn(data, opt, details);
      auto t1 = std::chrono::steady_clock::now();
      {
        std::lock_guard<std::mutex> lock(time_mutex);
        stime[l] += std::chrono::duration<double, std::milli>(t1 - t0).count();
      }
      for (auto& msg : details) sfail[l][idx].push_back({data.label(), std::move(msg)});
    }
  });

  std::vector<std::pair<Extension, std::string>> family;
  if (opt.run_extensions) family = standard_extension_family();
  std::vector<std::vector<std::vector<LawFailure>>> efail(
      elaws.size(), std::vector<std::vector<LawFailure>>(family.size()));
  std::vector<double> etime(elaws.size(), 0.0);

  detail::parallel_for(family.size(), opt.jobs, [&](std::size_t idx) {
    ext_laws::ExtData data{family[idx].first, family[idx].second,
                           structures.size() + idx, std::nullopt};
    for (std::size_t l = 0; l < elaws.size(); ++l) {
      ext_laws::Out details;
      auto t0 = std::chrono::steady_clock::now();
      elaws[l].fn(data, opt, details);
      auto t1 = std::chrono::steady_clock::now();
      {
        std::lock_guard<std::mutex> lock(time_mutex);
        etime[l] += std::chrono::duration<double, std::milli>(t1 - t0).count();
      }
      for (auto& msg : details) efail[l][idx].push_back({data.label, std::move(msg)});
    }
  });

  std::vector<HarnessResult> out;
  for (std::size_t l = 0; l < slaws.size(); ++l) {
    HarnessResult r;
    r.law = slaws[l].name;
    r.instances = structures.size();
    r.elapsed_ms = stime[l];
    for (auto& per : sfail[l])
      for (auto& f : per) r.failures.push_back(std::move(f));
    out.push_back(std::move(r));
  }
  for (std::size_t l = 0; l < elaws.size(); ++l) {
    HarnessResult r;
    r.law = elaws[l].name;
    r.instances = family.size();
    r.elapsed_ms = etime[l];
    for (auto& per : efail[l])
      for (auto& f : per) r.failures.push_back(std::move(f));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lqt
