#include "tracediv/report.hpp"

namespace tracediv {

const char* tool_version() { return "0.1.0"; }

nlohmann::json to_json(const Valuation& v) {
  nlohmann::json j;
  j["display"] = v.str();
  switch (v.kind()) {
    case Valuation::Kind::Finite:
      j["kind"] = "finite";
      j["num"] = v.num();
      j["den"] = v.den();
      break;
    case Valuation::Kind::AtLeast:
      j["kind"] = "at_least";
      j["num"] = v.num();
      j["den"] = v.den();
      break;
    case Valuation::Kind::Infinite:
      j["kind"] = "infinite";
      break;
  }
  return j;
}

nlohmann::json to_json(const FieldTower& tower) {
  return nlohmann::json{{"p", tower.p()},
                        {"e", tower.e()},
                        {"m", tower.m()},
                        {"q", tower.q()},
                        {"order", tower.order()},
                        {"poly", tower.modulus()}};
}

nlohmann::json to_json(const ExponentTuple& t) {
  return nlohmann::json{
      {"entries", t.entries}, {"total", t.total}, {"digit_total", t.digit_total}};
}

nlohmann::json to_json(const CriterionResult& r) {
  nlohmann::json j;
  j["valuation"] = to_json(r.valuation);
  j["degenerate"] = r.degenerate;
  if (!r.degenerate) {
    j["argmin"] = to_json(r.argmin);
    j["objective_breakdown"] = {{"digit_term", to_json(r.digit_term)},
                                {"inner_valuation", to_json(r.inner_valuation)},
                                {"minus_e", r.minus_e}};
  }
  j["tuples_examined"] = r.tuples_examined;
  j["tuples_pruned"] = r.tuples_pruned;
  j["cap"] = r.cap;
  return j;
}

nlohmann::json to_json(const BruteforceResult& r) {
  nlohmann::json j;
  j["valuation"] = to_json(r.valuation);
  j["degenerate"] = r.degenerate;
  j["enumerated"] = r.enumerated;
  std::vector<uint32_t> witness;
  for (FieldElement a : r.witness) witness.push_back(a.code);
  j["witness_codes"] = witness;
  return j;
}

nlohmann::json to_json(const McElieceResult& r) {
  return nlohmann::json{{"ell", r.ell}, {"exponent", r.exponent}, {"witness", r.witness}};
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["d"] = r.d;
  j["k"] = r.k;
  j["homogeneous"] = r.homogeneous;
  j["reduction_changed_degree"] = r.reduction_changed;
  if (r.program_bound) j["program_bound"] = to_json(*r.program_bound);
  if (r.homogeneous_lower) j["homogeneous_lower"] = to_json(*r.homogeneous_lower);
  j["cover_upper"] = to_json(r.cover_upper);
  j["degree_lower"] = to_json(r.degree_lower);
  j["knapsack_q_lower"] = to_json(r.knapsack_q_lower);
  j["knapsack_p_lower"] = to_json(r.knapsack_p_lower);
  j["wq"] = r.wq;
  j["wp"] = r.wp;
  if (r.measured) {
    j["measured"] = to_json(*r.measured);
    j["solutions"] = *r.solutions;
    j["sound"] = r.sound;
  }
  return j;
}

nlohmann::json to_json(const WeightDistribution& d) {
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [w, c] : d.counts) counts[std::to_string(w)] = c;
  return nlohmann::json{{"counts", counts}, {"multiplicity", d.multiplicity}};
}

std::string element_str(const FieldTower& tower, FieldElement a) {
  (void)tower;
  if (a.is_zero()) return "0";
  return "a^" + std::to_string(a.log());
}

}  // namespace tracediv
