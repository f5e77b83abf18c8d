#include "normsearch/remarks.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "normsearch/error.hpp"
#include "normsearch/pell_norm.hpp"
#include "normsearch/recurrence.hpp"
#include "normsearch/search.hpp"

namespace normsearch {

namespace {

using nlohmann::json;

json load_fixture(const std::filesystem::path& dir, std::string_view id) {
  std::string stem(id);
  std::replace(stem.begin(), stem.end(), '.', '_');
  const auto path = dir / ("remark_" + stem + ".json");
  std::ifstream in(path);
  if (!in) throw InvalidArgument("fixture not found: " + path.string());
  return json::parse(in);
}

std::vector<Integer> integers(const json& arr) {
  std::vector<Integer> out;
  for (const auto& v : arr) out.push_back(parse_integer(v.get<std::string>(), "fixture"));
  return out;
}

QuadNum quad(const json& j, long d) {
  return {parse_rational(j.at("x").get<std::string>(), "fixture"),
          parse_rational(j.at("y").get<std::string>(), "fixture"), d};
}

std::string join(const std::vector<Integer>& v, std::size_t limit = 12) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? ", " : "") << v[i].get_str();
  if (v.size() > limit) os << ", ...";
  os << "]";
  return os.str();
}

NormFormProblem problem_of(const json& fx) {
  return {fx.at("d").get<long>(), Integer(fx.at("m").get<long>())};
}

RemarkCheck list_check(std::string name, const std::vector<Integer>& got, const std::vector<Integer>& want) {
  return {std::move(name), got == want, "computed " + join(got) + ", reference " + join(want)};
}

void verify_even_sequence(const json& fx, long bound, RemarkReport& r) {
  const NormFormProblem p = problem_of(fx);
  const auto rx1 = integers(fx.at("reference_x1"));
  const auto rx2 = integers(fx.at("reference_x2"));
  r.checks.push_back(list_check("x1_prefix", coordinate_set(p, Coordinate::first, rx1.back()), rx1));
  r.checks.push_back(list_check("x2_prefix", coordinate_set(p, Coordinate::second, rx2.back()), rx2));

  // Every third element (orbit order = ascending order) is even, the others odd.
  const long period = fx.at("even_period").get<long>();
  const auto want = static_cast<std::size_t>(fx.at("even_check_terms").get<long>());
  const Integer big = ipow(10, static_cast<unsigned long>(want) + 5);
  for (Coordinate c : {Coordinate::first, Coordinate::second}) {
    const auto values = coordinate_set(p, c, big);
    bool ok = values.size() >= want;
    for (std::size_t i = 0; ok && i < want; ++i) {
      const bool even = mpz_even_p(values[i].get_mpz_t()) != 0;
      ok = even == ((i + 1) % static_cast<std::size_t>(period) == 0);
    }
    r.checks.push_back({c == Coordinate::first ? "x1_every_third_even" : "x2_every_third_even", ok,
                        "first " + std::to_string(want) + " elements checked"});
  }

  const LinearRecurrence rec = LinearRecurrence::parse(fx.at("recurrence").get<std::string>());
  const auto terms = rec.terms_up_to(static_cast<std::size_t>(bound));
  bool evens = true;
  for (std::size_t n = 0; n < terms.size(); ++n) evens = evens && terms[n] == Integer(2 * n);
  r.checks.push_back({"sequence_is_even_numbers", evens, std::to_string(terms.size()) + " terms"});

  const HypothesisReport h = audit_hypotheses(rec);
  const bool unity_root = h.roots_available && !h.no_root_of_unity_root;
  r.checks.push_back({"root_is_root_of_unity", unity_root,
                      h.degeneracy.describe() + "; distinct roots: " + std::to_string(h.distinct_roots.size())});

  const Integer b = 2 * terms.back();
  const PairSearchReport s = pair_sum_search(rec, p, bound, b);
  std::vector<Integer> values;
  for (const PairHit& hit : s.hits) values.push_back(hit.value);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  r.checks.push_back({"pair_hits_found", !s.hits.empty(),
                      std::to_string(s.hits.size()) + " pairs (" + std::to_string(s.hits_at_half) +
                          " at N/2), sums " + join(values)});
}

void verify_periodic_sequence(const json& fx, long bound, RemarkReport& r) {
  const NormFormProblem p = problem_of(fx);
  const LinearRecurrence rec = LinearRecurrence::parse(fx.at("recurrence").get<std::string>());
  const auto period = integers(fx.at("period"));
  const auto terms = rec.terms_up_to(static_cast<std::size_t>(bound));
  bool periodic = true;
  for (std::size_t n = 0; n < terms.size(); ++n) periodic = periodic && terms[n] == period[n % period.size()];
  r.checks.push_back({"period_confirmed", periodic,
                      "period " + join(period) + " over " + std::to_string(terms.size()) + " terms"});

  const auto rx1 = integers(fx.at("reference_x1"));
  const auto rx1t = integers(fx.at("reference_x1_with_trivial"));
  r.checks.push_back(list_check("x1_prefix", coordinate_set(p, Coordinate::first, rx1.back()), rx1));
  r.checks.push_back(list_check("x1_prefix_with_trivial",
                                coordinate_set(p, Coordinate::first, rx1t.back(), TrivialSolutions::include),
                                rx1t));

  const DegeneracyVerdict deg = is_degenerate(rec);
  const int want_order = fx.at("ratio_order").get<int>();
  r.checks.push_back({"degenerate_ratio", deg.degenerate && deg.ratio_order == want_order, deg.describe()});

  const Integer target = parse_integer(fx.at("target_sum").get<std::string>(), "fixture");
  Integer b = 1;
  for (const Integer& t : terms) b = std::max(b, Integer(2 * abs(t)));
  const PairSearchReport s = pair_sum_search(rec, p, bound, b);
  const auto hits = std::count_if(s.hits.begin(), s.hits.end(),
                                  [&](const PairHit& h) { return h.value == target && h.in_x1; });
  const long min_hits = fx.at("min_target_hits").get<long>();
  r.checks.push_back({"target_sum_hits", hits >= min_hits,
                      std::to_string(hits) + " pairs with sum " + target.get_str() + " in X1 (need >= " +
                          std::to_string(min_hits) + ")"});
}

void verify_dependent_roots(const json& fx, long bound, RemarkReport& r) {
  const NormFormProblem p = problem_of(fx);
  const long d = p.d();
  const LinearRecurrence rec = LinearRecurrence::parse(fx.at("recurrence").get<std::string>());
  const BinetForm b = binet(rec);

  const QuadNum want_coeff = quad(fx.at("binet_coeff1"), d);
  r.checks.push_back({"binet_coefficient", b.coeff1 == want_coeff && b.coeff2 == -want_coeff,
                      "f1 = " + b.coeff1.str() + ", f2 = " + b.coeff2.str()});
  const QuadNum r1 = quad(fx.at("roots")[0], d);
  const QuadNum r2 = quad(fx.at("roots")[1], d);
  r.checks.push_back({"binet_roots", b.root1 == r1 && b.root2 == r2,
                      "roots " + b.root1.str() + ", " + b.root2.str()});

  const long e = fx.at("dependence_bound").get<long>();
  const DependenceVerdict dep = roots_multiplicatively_independent(b.root1, b.root2, e);
  const auto w = fx.at("dependence_witness");
  const bool dep_ok =
      dep.dependent && dep.witness == std::make_pair(w[0].get<long>(), w[1].get<long>());
  r.checks.push_back({"roots_dependent", dep_ok, dep.describe()});

  const QuadNum stated = quad(fx.at("stated_fundamental_unit"), d);
  const QuadNum computed = p.pell().fundamental_unit();
  r.checks.push_back({"fundamental_unit", stated == computed,
                      "stated " + stated.str() + " (norm " + stated.norm().get_str() + "), computed " +
                          computed.str() + " (norm " + computed.norm().get_str() + ")"});

  // x1 + x2 sqrt d = mu * unit^k covers exactly the positive solutions.
  const QuadNum mu = quad(fx.at("parametrization").at("mu"), d);
  const QuadNum unit = quad(fx.at("parametrization").at("unit"), d);
  std::vector<IntPair> param;
  bool y_formula = true;
  for (long k = 0; k <= bound; ++k) {
    const QuadNum v = mu * unit.pow(k);
    param.push_back({v.x().get_num(), v.y().get_num()});
    const QuadNum odd = computed.pow(2 * k + 1) - computed.conj().pow(2 * k + 1);
    const QuadNum y = odd / (QuadNum(2) * QuadNum::sqrt_of(d));
    y_formula = y_formula && y == QuadNum(v.y());
  }
  std::vector<IntPair> positive;
  for (const IntPair& s : solutions_up_to(p, Coordinate::first, param.back().x)) {
    if (s.x > 0 && s.y > 0) positive.push_back(s);
  }
  std::sort(param.begin(), param.end());
  r.checks.push_back({"unit_power_parametrization", positive == param,
                      std::to_string(param.size()) + " positive solutions compared"});
  r.checks.push_back({"x2_closed_form", y_formula, "second coordinates of mu*unit^k"});

  const auto terms = rec.terms_up_to(static_cast<std::size_t>(bound) + 1);
  bool all_x1 = true;
  bool all_claimed = true;
  std::vector<Integer> outside;
  const int claimed = fx.at("claimed_sum_coordinate").get<int>();
  for (long n = 0; n <= bound; ++n) {
    SumMembership row;
    row.n = n;
    row.sum = terms[n] + terms[n + 1];
    const auto y = partner_for_first(p, row.sum);
    const auto x = partner_for_second(p, row.sum);
    row.in_x1 = y && *y != 0 && row.sum != 0;
    row.in_x2 = x && *x != 0 && row.sum != 0;
    all_x1 = all_x1 && row.in_x1;
    const bool in_claimed = claimed == 1 ? row.in_x1 : row.in_x2;
    if (!in_claimed) outside.push_back(row.sum);
    all_claimed = all_claimed && in_claimed;
    r.sums.push_back(std::move(row));
  }
  r.checks.push_back({"claimed_sum_membership", all_claimed,
                      "sums U_n+U_(n+1) outside X" + std::to_string(claimed) + ": " + join(outside, 6)});
  r.checks.push_back({"sums_in_x1", all_x1, "n = 0.." + std::to_string(bound)});
}

}  // namespace

bool RemarkReport::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const RemarkCheck& c) { return c.agrees; });
}

std::vector<std::string> RemarkReport::discrepancies() const {
  std::vector<std::string> out;
  for (const RemarkCheck& c : checks) {
    if (!c.agrees) out.push_back(c.name + ": " + c.detail);
  }
  return out;
}

const RemarkCheck& RemarkReport::check(std::string_view name) const {
  for (const RemarkCheck& c : checks) {
    if (c.name == name) return c;
  }
  throw InvalidArgument("no check named " + std::string(name));
}

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("NORMSEARCH_FIXTURES"); env != nullptr && *env != '\0') return env;
  return NORMSEARCH_FIXTURE_DIR;
}

RemarkReport verify_remark(std::string_view id, long bound, const std::filesystem::path& fixture_dir) {
  if (id != "2.3" && id != "2.4" && id != "2.5") throw UnknownRemark(std::string(id));
  if (bound < 10) throw InvalidArgument("remark verification needs N >= 10");
  const json fx = load_fixture(fixture_dir, id);
  RemarkReport r;
  r.id = std::string(id);
  r.bound = bound;
  for (const auto& n : fx.value("notes", json::array())) r.notes.push_back(n.get<std::string>());
  if (id == "2.3") {
    verify_even_sequence(fx, bound, r);
  } else if (id == "2.4") {
    verify_periodic_sequence(fx, bound, r);
  } else {
    verify_dependent_roots(fx, bound, r);
  }
  return r;
}

}  // namespace normsearch
