#include "normsearch/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "normsearch/error.hpp"
#include "normsearch/pell_norm.hpp"
#include "normsearch/recurrence.hpp"
#include "normsearch/remarks.hpp"
#include "normsearch/report.hpp"
#include "normsearch/search.hpp"

namespace normsearch::cli {

namespace {

using report::Json;

constexpr const char* kRecurrenceHelp =
    "recurrence literal \"a1,...,ad;U0,...,U_{d-1}\" for U_n = a1 U_{n-1} + ... + ad U_{n-d}";

struct Outcome {
  Json result;
  std::string summary;
};

template <typename T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string(flag) + " is required");
  return *v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

NormFormProblem problem(const RunConfig& c) {
  const long d = need(c.d, "--d");
  if (d <= 1 || !is_squarefree(d)) throw InvalidArgument("--d: " + std::to_string(d) + " is not a squarefree integer > 1");
  const Integer m = parse_integer(need(c.m, "--m"), "--m");
  if (m == 0) throw InvalidArgument("--m: must be nonzero");
  return {d, m};
}

Integer positive_bound(const RunConfig& c) {
  const Integer b = parse_integer(need(c.bound, "--bound"), "--bound");
  if (b < 1) throw InvalidArgument("--bound: must be >= 1");
  return b;
}

long index_bound(const RunConfig& c, long min = 1) {
  const long n = need(c.n, "--n");
  if (n < min) throw InvalidArgument("--n: must be >= " + std::to_string(min));
  return n;
}

LinearRecurrence recurrence(const RunConfig& c) {
  try {
    return LinearRecurrence::parse(need(c.recurrence, "--rec"));
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("--rec: ") + e.what());
  }
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.shards = c.shards;
  o.serial = c.serial;
  o.trivial = c.include_trivial ? TrivialSolutions::include : TrivialSolutions::exclude;
  return o;
}

std::string list_text(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << "]";
  return os.str();
}

Json config_json(const RunConfig& c) {
  Json j{{"subcommand", c.subcommand}};
  auto put = [&](const char* key, const auto& opt) {
    if (opt) j[key] = *opt;
  };
  put("d", c.d);
  put("m", c.m);
  put("rec", c.recurrence);
  put("primes", c.primes);
  put("t", c.t);
  put("e", c.e);
  put("n", c.n);
  put("bound", c.bound);
  put("coord", c.coord);
  put("s", c.s);
  put("degrees", c.degrees);
  put("field_degree", c.field_degree);
  put("bases", c.bases);
  put("id", c.remark_id);
  // Scheduling knobs (--shards, --serial) are left out so they cannot change the bytes.
  j["include_trivial"] = c.include_trivial;
  return j;
}

Outcome cmd_pell(const RunConfig& c) {
  const long d = need(c.d, "--d");
  if (d <= 1 || !is_squarefree(d)) throw InvalidArgument("--d: " + std::to_string(d) + " is not a squarefree integer > 1");
  const SqrtContinuedFraction cf = continued_fraction_sqrt(d);
  const PellData p = pell_data(d);
  Json r = report::to_json(p);
  r["cf"] = {{"a0", cf.a0}, {"period", cf.period}};
  std::ostringstream os;
  os << "d=" << d << " fundamental=(" << p.fundamental.x << ", " << p.fundamental.y << ")";
  if (p.negative) os << " negative=(" << p.negative->x << ", " << p.negative->y << ")";
  os << " automorph=(" << p.automorph.x << ", " << p.automorph.y << ") period=" << p.cf_period << "\n";
  return {std::move(r), os.str()};
}

Outcome cmd_solve_norm(const RunConfig& c) {
  const NormFormProblem p = problem(c);
  Json orbits = Json::array();
  std::ostringstream os;
  const auto reps = class_representatives(p);
  os << reps.size() << " solution class(es) of x^2 - " << p.d() << " y^2 = " << p.m() << "\n";
  for (const SolutionOrbit& o : reps) {
    Json oj = report::to_json(o);
    oj["unit_power_form_x1"] = report::to_json(unit_power_form(p, o, Coordinate::first));
    oj["unit_power_form_x2"] = report::to_json(unit_power_form(p, o, Coordinate::second));
    orbits.push_back(std::move(oj));
    os << "  representative (" << o.representative.x << ", " << o.representative.y << "), automorph ("
       << o.automorph.x << ", " << o.automorph.y << ")\n";
  }
  Json r{{"class_count", reps.size()}, {"orbits", std::move(orbits)}};
  if (c.bound) {
    const Integer b = positive_bound(c);
    Json sols = Json::array();
    for (const IntPair& s : solutions_up_to(p, Coordinate::first, b)) sols.push_back(report::to_json(s));
    r["solutions_by_first_coordinate"] = std::move(sols);
  }
  return {std::move(r), os.str()};
}

Outcome cmd_coords(const RunConfig& c) {
  const NormFormProblem p = problem(c);
  const int coord = need(c.coord, "--coord");
  if (coord != 1 && coord != 2) throw InvalidArgument("--coord: must be 1 or 2");
  const Integer b = positive_bound(c);
  const auto values = coordinate_set(p, coord == 1 ? Coordinate::first : Coordinate::second, b,
                                     c.include_trivial ? TrivialSolutions::include : TrivialSolutions::exclude);
  return {Json{{"coordinate", coord}, {"values", report::integers(values)}},
          "X" + std::to_string(coord) + " = " + list_text(values) + "\n"};
}

Outcome cmd_recur(const RunConfig& c) {
  const LinearRecurrence rec = recurrence(c);
  const auto terms = rec.terms_up_to(static_cast<std::size_t>(index_bound(c, 0)));
  return {Json{{"terms", report::integers(terms)}}, list_text(terms) + "\n"};
}

Outcome cmd_binet(const RunConfig& c) {
  const BinetForm b = binet(recurrence(c));
  std::ostringstream os;
  os << "U_n = (" << b.coeff1 << ") * (" << b.root1 << ")^n + (" << b.coeff2 << ") * (" << b.root2 << ")^n\n";
  return {report::to_json(b), os.str()};
}

Outcome cmd_hypotheses(const RunConfig& c) {
  const HypothesisReport h = audit_hypotheses(recurrence(c), c.e.value_or(10));
  std::ostringstream os;
  os << "non-degenerate: " << (h.nondegenerate ? "yes" : "no") << " (" << h.degeneracy.describe() << ")\n"
     << "pairwise independent: " << (h.pairwise_independent ? "yes" : "no") << "\n"
     << "no root of unity root: " << (h.no_root_of_unity_root ? "yes" : "no") << "\n"
     << "|a_d| != 1: " << (h.last_coeff_not_unit ? "yes" : "no") << "\n"
     << "finiteness hypotheses hold: " << (h.applicable() ? "yes" : "no") << "\n";
  return {report::to_json(h), os.str()};
}

Outcome cmd_pairs(const RunConfig& c) {
  const LinearRecurrence rec = recurrence(c);
  const NormFormProblem p = problem(c);
  const long n = index_bound(c);
  const Integer b = positive_bound(c);
  const PairSearchReport r = pair_sum_search(rec, p, n, b, search_options(c));
  std::ostringstream os;
  os << r.hits.size() << " pair(s) with U_n1 + U_n2 in X1 u X2 (N=" << n << ", B=" << b << "); " << r.hits_at_half
     << " at N/2\n"
     << "hypotheses hold: " << (r.hypotheses.applicable() ? "yes" : "no") << "\n"
     << "shards=" << r.shards << " wall=" << r.wall_seconds << "s\n";
  return {report::to_json(r), os.str()};
}

Outcome cmd_sunits(const RunConfig& c) {
  std::vector<long> primes;
  for (const std::string& s : split(need(c.primes, "--primes"), ',')) {
    const Integer v = parse_integer(s, "--primes");
    if (!v.fits_slong_p() || !is_prime(v.get_si())) throw InvalidArgument("--primes: " + s + " is not prime");
    primes.push_back(v.get_si());
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const int t = need(c.t, "--t");
  if (t < 1 || t > 4) throw InvalidArgument("--t: must be in 1..4");
  const long e = need(c.e, "--e");
  if (e < 0) throw InvalidArgument("--e: must be >= 0");
  const NormFormProblem p = problem(c);
  const Integer b = positive_bound(c);
  const SUnitSearchReport r = sunit_sum_search(SPrimeSet(primes), t, e, p, b, search_options(c));
  std::ostringstream os;
  os << r.hits.size() << " S-unit tuple(s) with sum in X1 u X2 (" << r.units_enumerated << " units, "
     << r.rejected_vanishing << " rejected for a vanishing subsum)\n";
  for (const SUnitHit& h : r.hits) {
    os << "  {";
    for (std::size_t i = 0; i < h.entries.size(); ++i) os << (i ? ", " : "") << h.entries[i].value.get_str();
    os << "} -> " << h.sum << (h.in_x1 ? " in X1" : "") << (h.in_x2 ? " in X2" : "") << "\n";
  }
  os << "shards=" << r.shards << " wall=" << r.wall_seconds << "s\n";
  return {report::to_json(r), os.str()};
}

Outcome cmd_vanishing(const RunConfig& c) {
  const auto v = vanishing_pair_sums(recurrence(c), index_bound(c));
  return {Json{{"vanishing", report::to_json(v)}}, std::to_string(v.size()) + " vanishing pair sum(s)\n"};
}

Outcome cmd_bound(const RunConfig& c) {
  const unsigned s = need(c.s, "--s");
  const unsigned field = need(c.field_degree, "--field-degree");
  std::vector<unsigned> degrees;
  for (const std::string& tok : split(need(c.degrees, "--degrees"), ',')) {
    const Integer v = parse_integer(tok, "--degrees");
    if (v < 0 || !v.fits_uint_p()) throw InvalidArgument("--degrees: '" + tok + "' is not a non-negative degree");
    degrees.push_back(static_cast<unsigned>(v.get_ui()));
  }
  if (s < 1) throw InvalidArgument("--s: must be >= 1");
  if (field < 1) throw InvalidArgument("--field-degree: must be >= 1");
  const SchlickeweiBound b = schlickewei_bound(s, degrees, field);
  std::string text = b.value ? b.value->get_str()
                             : std::to_string(b.digits) + " digits, leading " + b.leading_digits;
  return {report::to_json(b), "A=" + b.a.get_str() + " bound=" + text + "\n"};
}

Outcome cmd_partitions(const RunConfig& c) {
  const long d = c.d.value_or(0);
  const long e = c.e.value_or(10);
  if (e < 1) throw InvalidArgument("--e: must be >= 1");
  std::vector<QuadNum> bases;
  for (const std::string& tok : split(need(c.bases, "--bases"), ';')) {
    const auto colon = tok.find(':');
    const Rational x = parse_rational(tok.substr(0, colon), "--bases");
    const Rational y = colon == std::string::npos ? Rational(0) : parse_rational(tok.substr(colon + 1), "--bases");
    if (y != 0 && d == 0) throw InvalidArgument("--bases: irrational entries need --d");
    bases.push_back(y == 0 ? QuadNum(x) : QuadNum(x, y, d));
  }
  const auto parts = partition_analysis(bases, e);
  std::ostringstream os;
  os << parts.size() << " partition(s)\n";
  for (const PartitionReport& p : parts) {
    os << "  ";
    for (const auto& blk : p.blocks) {
      os << "{";
      for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? "," : "") << blk[i];
      os << "}";
    }
    os << " " << (p.certified_dependent ? "certified-dependent" : "independent-up-to-" + std::to_string(e)) << "\n";
  }
  return {Json{{"partitions", report::to_json(parts, e)}, {"count", parts.size()}}, os.str()};
}

Outcome cmd_remark(const RunConfig& c) {
  const std::string& id = need(c.remark_id, "--id");
  const long n = index_bound(c, 10);
  const auto dir = c.fixture_dir.empty() ? default_fixture_dir() : std::filesystem::path(c.fixture_dir);
  const RemarkReport r = verify_remark(id, n, dir);
  std::ostringstream os;
  for (const RemarkCheck& ch : r.checks) {
    os << (ch.agrees ? "[agree]    " : "[disagree] ") << ch.name << ": " << ch.detail << "\n";
  }
  return {report::to_json(r), os.str()};
}

const std::map<std::string, std::function<Outcome(const RunConfig&)>>& commands() {
  static const std::map<std::string, std::function<Outcome(const RunConfig&)>> table{
      {"pell", cmd_pell},
      {"solve-norm", cmd_solve_norm},
      {"coords", cmd_coords},
      {"recur", cmd_recur},
      {"binet", cmd_binet},
      {"hypotheses", cmd_hypotheses},
      {"pairs-search", cmd_pairs},
      {"sunit-search", cmd_sunits},
      {"vanishing", cmd_vanishing},
      {"bound", cmd_bound},
      {"partitions", cmd_partitions},
      {"verify-remark", cmd_remark},
  };
  return table;
}

// Binds a CLI11 option to a std::optional through a scratch value.
template <typename T>
struct OptionalBinder {
  std::vector<std::function<void()>> commits;

  void add(CLI::App* app, const std::string& name, std::optional<T>& target, const std::string& help,
           std::vector<std::unique_ptr<T>>& scratch) {
    scratch.push_back(std::make_unique<T>());
    T* slot = scratch.back().get();
    CLI::Option* opt = app->add_option(name, *slot, help);
    commits.push_back([opt, slot, &target] {
      if (opt->count() > 0) target = *slot;
    });
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"normsearch: exact searches over solutions of x^2 - d y^2 = m", "normsearch"};
  app.require_subcommand(1);
  app.add_option("--out", cfg.out_path, "write the structured report document to this path");
  app.add_option("--format", cfg.format, "standard output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--shards", cfg.shards, "worker count for searches (default: $NORMSEARCH_SHARDS or all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--fixtures", cfg.fixture_dir, "directory holding remark fixtures");
  app.add_flag("--serial", cfg.serial, "use the serial reference kernels");
  app.add_flag("--include-trivial", cfg.include_trivial, "keep solutions with a zero coordinate");

  std::vector<std::unique_ptr<long>> longs;
  std::vector<std::unique_ptr<int>> ints;
  std::vector<std::unique_ptr<unsigned>> uints;
  std::vector<std::unique_ptr<std::string>> strings;
  OptionalBinder<long> bl;
  OptionalBinder<int> bi;
  OptionalBinder<unsigned> bu;
  OptionalBinder<std::string> bs;

  auto sub = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto opt_d = [&](CLI::App* a) { bl.add(a, "--d", cfg.d, "squarefree d > 1", longs); };
  auto opt_m = [&](CLI::App* a) { bs.add(a, "--m", cfg.m, "nonzero right-hand side m", strings); };
  auto opt_rec = [&](CLI::App* a) { bs.add(a, "--rec", cfg.recurrence, kRecurrenceHelp, strings); };
  auto opt_n = [&](CLI::App* a) { bl.add(a, "--n", cfg.n, "index bound N", longs); };
  auto opt_bound = [&](CLI::App* a) { bs.add(a, "--bound", cfg.bound, "coordinate bound B", strings); };
  auto opt_e = [&](CLI::App* a, const std::string& help) { bl.add(a, "--e", cfg.e, help, longs); };

  CLI::App* pell = sub("pell", "continued fraction, fundamental solutions and automorph of sqrt(d)");
  opt_d(pell);
  CLI::App* solve = sub("solve-norm", "solution classes of x^2 - d y^2 = m");
  opt_d(solve);
  opt_m(solve);
  opt_bound(solve);
  CLI::App* coords = sub("coords", "coordinate set X1 or X2 up to a bound");
  opt_d(coords);
  opt_m(coords);
  opt_bound(coords);
  bi.add(coords, "--coord", cfg.coord, "coordinate index, 1 or 2", ints);
  CLI::App* recur = sub("recur", "terms U_0..U_N of a recurrence");
  opt_rec(recur);
  opt_n(recur);
  CLI::App* bin = sub("binet", "exact Binet form of an order-2 recurrence");
  opt_rec(bin);
  CLI::App* hyp = sub("hypotheses", "audit the finiteness hypotheses for sums of two terms");
  opt_rec(hyp);
  opt_e(hyp, "exponent bound for multiplicative dependence (default 10)");
  CLI::App* pairs = sub("pairs-search", "pairs n1 <= n2 <= N with U_n1 + U_n2 in X1 u X2");
  opt_rec(pairs);
  opt_d(pairs);
  opt_m(pairs);
  opt_n(pairs);
  opt_bound(pairs);
  CLI::App* sun = sub("sunit-search", "t-element S-unit multisets whose sum lies in X1 u X2");
  bs.add(sun, "--primes", cfg.primes, "comma-separated primes of S", strings);
  bi.add(sun, "--t", cfg.t, "tuple size t (1..4)", ints);
  opt_e(sun, "exponent bound E");
  opt_d(sun);
  opt_m(sun);
  opt_bound(sun);
  CLI::App* van = sub("vanishing", "vanishing pair sums of the Binet terms");
  opt_rec(van);
  opt_n(van);
  CLI::App* bnd = sub("bound", "2^(35A^3) D^(6A^2) solution-count bound");
  bu.add(bnd, "--s", cfg.s, "number of variables s", uints);
  bs.add(bnd, "--degrees", cfg.degrees, "comma-separated total degrees", strings);
  bu.add(bnd, "--field-degree", cfg.field_degree, "field degree D", uints);
  CLI::App* parts = sub("partitions", "pairwise dependence analysis over all set partitions");
  bs.add(parts, "--bases", cfg.bases, "semicolon-separated bases, each 'x' or 'x:y' for x + y sqrt(d)", strings);
  opt_d(parts);
  opt_e(parts, "exponent bound (default 10)");
  CLI::App* rem = sub("verify-remark", "replay a worked-example fixture (2.3, 2.4, 2.5)");
  bs.add(rem, "--id", cfg.remark_id, "fixture id", strings);
  opt_n(rem);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* b : {&bl.commits, &bi.commits, &bu.commits, &bs.commits}) {
    for (auto& commit : *b) commit();
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    Outcome o = commands().at(cfg.subcommand)(cfg);
    Json doc{{"toolkit", {{"name", "normsearch"}, {"version", NORMSEARCH_VERSION}}},
             {"config", config_json(cfg)},
             {"result", std::move(o.result)}};
    const std::string text = report::dump(doc);
    if (!cfg.out_path.empty()) {
      std::ofstream f(cfg.out_path, std::ios::binary);
      if (!f) throw InvalidArgument("--out: cannot write " + cfg.out_path);
      f << text;
    }
    out << (cfg.format == "structured" ? text : o.summary);
    return kOk;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace normsearch::cli
