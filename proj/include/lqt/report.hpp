#pragma once

#include "lqt/commutator.hpp"
#include "lqt/io.hpp"

namespace lqt {

inline json partition_to_json(const Partition& p) {
  json out = json::array();
  for (const auto& b : p.blocks()) out.push_back(b);
  return out;
}

inline json group_to_json(const PermGroup& g) {
  json out;
  out["order"] = g.order();
  json gens = json::array();
  for (const auto& p : g.generators()) {
    if (!p.is_identity()) gens.push_back(p.to_string());
  }
  out["generators"] = gens;
  return out;
}

// The full structural report rendered by the CLI; field order is stable.
inline json report_json(const LeftQuasigroup& q, const std::string& name = "") {
  GaloisReport r = full_report(q);
  Predicates p = predicates(q);
  NilpotencyResult nil = nilpotency(q);
  json j;
  if (!name.empty()) j["name"] = name;
  j["order"] = q.order();
  j["table"] = q.rows();
  j["predicates"] = {{"idempotent", p.idempotent}, {"rack", p.rack},     {"quandle", p.quandle},
                     {"latin", p.latin},           {"projection", p.projection}};
  j["flags"] = {{"faithful", r.flags.faithful},
                {"cayley", r.flags.cayley},
                {"connected", r.flags.connected},
                {"connected_by_dis", r.flags.connected_by_dis},
                {"superconnected", r.flags.superconnected},
                {"semiregular", r.flags.semiregular},
                {"sharp", r.flags.sharp},
                {"cdos", r.flags.cdos},
                {"cdsg", r.flags.cdsg}};
  j["lmlt"] = group_to_json(r.lm);
  j["dis"] = group_to_json(r.ds);
  j["cayley_kernel"] = partition_to_json(r.lambda);
  j["congruences"] = json::array();
  for (const auto& c : r.congruences) j["congruences"].push_back(partition_to_json(c));
  j["admissibles"] = json::array();
  for (const auto& n : r.admissibles) j["admissibles"].push_back(group_to_json(n));
  j["galois"] = {{"dis_lower", r.dis_low_index},
                 {"dis_upper", r.dis_high_index},
                 {"orbit", r.orb_index}};
  json cay = json::array();
  for (const auto& c : r.cay) cay.push_back(partition_to_json(c));
  j["galois"]["cayley"] = cay;
  j["center"] = partition_to_json(center(q));
  json nj;
  nj["nilpotent"] = nil.nilpotency_class.has_value();
  if (nil.nilpotency_class) nj["class"] = *nil.nilpotency_class;
  nj["series"] = json::array();
  for (const auto& z : nil.series) nj["series"].push_back(partition_to_json(z));
  j["nilpotency"] = nj;
  return j;
}

inline std::string report_human(const LeftQuasigroup& q, const std::string& name = "") {
  GaloisReport r = full_report(q);
  Predicates p = predicates(q);
  NilpotencyResult nil = nilpotency(q);
  std::ostringstream os;
  os << "left quasigroup of order " << q.order();
  if (!name.empty()) os << " (" << name << ")";
  os << '\n';
  os << "predicates:";
  if (p.idempotent) os << " idempotent";
  if (p.rack) os << " rack";
  if (p.quandle) os << " quandle";
  if (p.latin) os << " latin";
  if (p.projection) os << " projection";
  os << '\n';
  os << "lmlt order " << r.lm.order() << ", dis order " << r.ds.order() << '\n';
  os << "congruences: " << r.congruences.size() << ", admissible subgroups: "
     << r.admissibles.size() << '\n';
  os << "cayley kernel: " << r.lambda.to_string() << (r.flags.faithful ? " (faithful)" : "")
     << (r.flags.cayley ? " (congruence)" : " (not a congruence)") << '\n';
  os << "flags:";
  if (r.flags.connected) os << " connected";
  if (r.flags.connected_by_dis) os << " connected-by-dis";
  if (r.flags.superconnected) os << " superconnected";
  if (r.flags.semiregular) os << " semiregular";
  if (r.flags.sharp) os << " sharp";
  if (r.flags.cdos) os << " cdos";
  if (r.flags.cdsg) os << " cdsg";
  os << '\n';
  os << "center: " << center(q).to_string() << '\n';
  if (nil.nilpotency_class)
    os << "nilpotency class: " << *nil.nilpotency_class << '\n';
  else
    os << "nilpotency: not nilpotent\n";
  return os.str();
}

inline json galois_json(const LeftQuasigroup& q) {
  GaloisReport r = full_report(q);
  json j;
  j["order"] = q.order();
  j["congruences"] = json::array();
  for (const auto& c : r.congruences) j["congruences"].push_back(partition_to_json(c));
  j["admissibles"] = json::array();
  for (const auto& n : r.admissibles) j["admissibles"].push_back(group_to_json(n));
  j["dis_lower"] = r.dis_low_index;
  j["dis_upper"] = r.dis_high_index;
  j["orbit"] = r.orb_index;
  json cay = json::array();
  for (const auto& c : r.cay) cay.push_back(partition_to_json(c));
  j["cayley"] = cay;
  j["adjunction_orbits"] = check_adjunction_orbits(q);
  j["adjunction_subgroups"] = check_adjunction_subgroups(q, global_seed());
  j["flags"] = {{"sharp", r.flags.sharp}, {"cdos", r.flags.cdos}, {"cdsg", r.flags.cdsg}};
  return j;
}

inline std::string galois_human(const LeftQuasigroup& q) {
  GaloisReport r = full_report(q);
  std::ostringstream os;
  os << "Con(Q): " << r.congruences.size() << " congruences\n";
  for (std::size_t i = 0; i < r.congruences.size(); ++i)
    os << "  a" << i << " = " << r.congruences[i].to_string() << '\n';
  os << "Norm'(Q): " << r.admissibles.size() << " admissible subgroups\n";
  for (std::size_t i = 0; i < r.admissibles.size(); ++i)
    os << "  N" << i << ": order " << r.admissibles[i].order() << '\n';
  os << "Dis_a / Dis^a per congruence:\n";
  for (std::size_t i = 0; i < r.congruences.size(); ++i)
    os << "  a" << i << " -> N" << r.dis_low_index[i] << " / N" << r.dis_high_index[i] << '\n';
  os << "orbit / Cayley relation per admissible:\n";
  for (std::size_t i = 0; i < r.admissibles.size(); ++i)
    os << "  N" << i << " -> " << r.orb[i].to_string() << " / " << r.cay[i].to_string() << '\n';
  os << "adjunction (Dis^*, O_*): " << (check_adjunction_orbits(q) ? "holds" : "VIOLATED") << '\n';
  os << "adjunction (Dis_*, c_*): "
     << (check_adjunction_subgroups(q, global_seed()) ? "holds" : "VIOLATED") << '\n';
  os << "sharp: " << (r.flags.sharp ? "yes" : "no") << ", cdos: " << (r.flags.cdos ? "yes" : "no")
     << ", cdsg: " << (r.flags.cdsg ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace lqt
