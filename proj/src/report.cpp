#include "normsearch/report.hpp"

namespace normsearch::report {

namespace {

const char* trivial_name(TrivialSolutions t) { return t == TrivialSolutions::include ? "included" : "excluded"; }

}  // namespace

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(x.get_str());
  return out;
}

Json to_json(const QuadNum& q) {
  return {{"x", q.x().get_str()}, {"y", q.y().get_str()}, {"d", q.d()}, {"text", q.str()}};
}

Json to_json(const IntPair& p) { return Json::array({p.x.get_str(), p.y.get_str()}); }

Json to_json(const PellData& p) {
  Json j{{"d", p.d},
         {"fundamental", to_json(p.fundamental)},
         {"automorph", to_json(p.automorph)},
         {"cf_period_length", p.cf_period}};
  j["negative"] = p.negative ? to_json(*p.negative) : Json(nullptr);
  return j;
}

Json to_json(const SolutionOrbit& o) {
  return {{"representative", to_json(o.representative)}, {"automorph", to_json(o.automorph)}};
}

Json to_json(const UnitPowerForm& f) {
  return {{"c1", to_json(f.c1)},
          {"c2", to_json(f.c2)},
          {"eps", to_json(f.eps)},
          {"coordinate", static_cast<int>(f.coordinate)}};
}

Json to_json(const BinetForm& b) {
  return {{"roots", Json::array({to_json(b.root1), to_json(b.root2)})},
          {"coefficients", Json::array({to_json(b.coeff1), to_json(b.coeff2)})},
          {"discriminant", b.discriminant.get_str()},
          {"rational_roots", b.rational_roots()}};
}

Json to_json(const DegeneracyVerdict& v) {
  Json j{{"degenerate", v.degenerate}, {"repeated_root", v.repeated_root}, {"verdict", v.describe()}};
  j["ratio_order"] = v.ratio_order ? Json(*v.ratio_order) : Json(nullptr);
  return j;
}

Json to_json(const DependenceVerdict& v) {
  Json j{{"dependent", v.dependent}, {"bound", v.bound}, {"verdict", v.describe()}};
  j["witness"] = v.witness ? Json::array({v.witness->first, v.witness->second}) : Json(nullptr);
  return j;
}

Json to_json(const HypothesisReport& h) {
  Json j{{"roots_available", h.roots_available},
         {"degeneracy", to_json(h.degeneracy)},
         {"nondegenerate", h.nondegenerate},
         {"pairwise_independent", h.pairwise_independent},
         {"no_root_of_unity_root", h.no_root_of_unity_root},
         {"last_coeff_not_unit", h.last_coeff_not_unit},
         {"applicable", h.applicable()}};
  Json roots = Json::array();
  for (std::size_t i = 0; i < h.distinct_roots.size(); ++i) {
    Json r = to_json(h.distinct_roots[i]);
    r["root_of_unity_order"] = h.root_unity_orders[i] ? Json(*h.root_unity_orders[i]) : Json(nullptr);
    roots.push_back(std::move(r));
  }
  j["distinct_roots"] = std::move(roots);
  Json pairs = Json::array();
  for (const RootPairCheck& c : h.pair_checks) {
    Json p = to_json(c.verdict);
    p["roots"] = Json::array({c.i + 1, c.j + 1});
    pairs.push_back(std::move(p));
  }
  j["pair_checks"] = std::move(pairs);
  return j;
}

Json to_json(const PairSearchReport& r) {
  Json hits = Json::array();
  for (const PairHit& h : r.hits) {
    hits.push_back({{"n1", h.n1}, {"n2", h.n2}, {"value", h.value.get_str()}, {"in_x1", h.in_x1}, {"in_x2", h.in_x2}});
  }
  const std::size_t total = r.hits.size();
  return {{"problem", {{"recurrence", r.recurrence}, {"d", r.d}, {"m", r.m.get_str()}}},
          {"bounds", {{"N", r.index_bound}, {"B", r.coordinate_bound.get_str()}}},
          {"trivial_solutions", trivial_name(r.trivial)},
          {"hypotheses", to_json(r.hypotheses)},
          {"hit_count", total},
          {"hits", std::move(hits)},
          {"stabilization",
           {{"hits_at_half_N", r.hits_at_half},
            {"hits_at_N", total},
            {"stable", r.hits_at_half == total}}}};
}

Json to_json(const SUnitSearchReport& r) {
  Json hits = Json::array();
  for (const SUnitHit& h : r.hits) {
    Json entries = Json::array();
    for (const SUnit& u : h.entries) {
      entries.push_back({{"value", u.value.get_str()}, {"sign", u.sign}, {"exponents", u.exponents}});
    }
    hits.push_back({{"entries", std::move(entries)},
                    {"sum", h.sum.get_str()},
                    {"in_x1", h.in_x1},
                    {"in_x2", h.in_x2},
                    {"subsums_nonvanishing", h.certificate.nonvanishing}});
  }
  const std::size_t total = r.hits.size();
  return {{"problem", {{"primes", r.primes}, {"d", r.d}, {"m", r.m.get_str()}}},
          {"bounds", {{"t", r.tuple_size}, {"E", r.exponent_bound}, {"B", r.coordinate_bound.get_str()}}},
          {"trivial_solutions", trivial_name(r.trivial)},
          {"units_enumerated", r.units_enumerated},
          {"rejected_vanishing_subsum", r.rejected_vanishing},
          {"hit_count", total},
          {"hits", std::move(hits)},
          {"stabilization",
           {{"hits_at_half_E", r.hits_at_half}, {"hits_at_E", total}, {"stable", r.hits_at_half == total}}}};
}

Json to_json(const std::vector<VanishingSum>& v) {
  Json out = Json::array();
  for (const VanishingSum& s : v) {
    out.push_back({{"n1", s.n1}, {"n2", s.n2}, {"roots", s.roots}, {"kind", s.roots.size() == 1 ? "per-root" : "full-sum"}});
  }
  return out;
}

Json to_json(const SchlickeweiBound& b) {
  Json j{{"A", b.a.get_str()},
         {"exact", b.exact},
         {"digits", b.digits},
         {"leading_digits", b.leading_digits},
         {"log2", static_cast<double>(b.log2_value)}};
  j["value"] = b.value ? Json(b.value->get_str()) : Json(nullptr);
  return j;
}

Json to_json(const std::vector<PartitionReport>& parts, long dependence_bound) {
  Json out = Json::array();
  for (const PartitionReport& p : parts) {
    Json checks = Json::array();
    for (const RootPairCheck& c : p.checks) {
      Json cj = to_json(c.verdict);
      cj["pair"] = Json::array({c.i + 1, c.j + 1});
      checks.push_back(std::move(cj));
    }
    std::string label = p.label();
    if (!p.certified_dependent) label = "independent-up-to-" + std::to_string(dependence_bound);
    out.push_back({{"blocks", p.blocks}, {"checks", std::move(checks)}, {"verdict", label}});
  }
  return out;
}

Json to_json(const RemarkReport& r) {
  Json checks = Json::array();
  for (const RemarkCheck& c : r.checks) {
    checks.push_back({{"name", c.name}, {"agrees", c.agrees}, {"detail", c.detail}});
  }
  Json j{{"id", r.id},
         {"N", r.bound},
         {"checks", std::move(checks)},
         {"all_agree", r.all_agree()},
         {"discrepancies", r.discrepancies()},
         {"notes", r.notes}};
  if (!r.sums.empty()) {
    Json sums = Json::array();
    for (const SumMembership& s : r.sums) {
      sums.push_back({{"n", s.n}, {"sum", s.sum.get_str()}, {"in_x1", s.in_x1}, {"in_x2", s.in_x2}});
    }
    j["sum_membership"] = std::move(sums);
  }
  return j;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace normsearch::report
