#include "normsearch/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

#include "normsearch/error.hpp"

namespace normsearch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int resolve_shards(const SearchOptions& opts) {
  if (opts.serial) return 1;
  return opts.shards > 0 ? opts.shards : default_shards();
}

void verify_membership(const NormFormProblem& p, const Integer& value, bool in_x1, bool in_x2) {
  if (in_x1) {
    const auto y = partner_for_first(p, value);
    if (!y || !p.is_solution(IntPair{value, *y})) {
      throw InvariantViolation("hit " + value.get_str() + " is not a first coordinate");
    }
  }
  if (in_x2) {
    const auto x = partner_for_second(p, value);
    if (!x || !p.is_solution(IntPair{*x, value})) {
      throw InvariantViolation("hit " + value.get_str() + " is not a second coordinate");
    }
  }
}

}  // namespace

std::optional<Integer> partner_for_first(const NormFormProblem& p, const Integer& value) {
  const Integer num = value * value - p.m();
  if (num % p.d() != 0) return std::nullopt;
  const Integer y2 = num / p.d();
  if (!is_square(y2)) return std::nullopt;
  return isqrt(y2);
}

std::optional<Integer> partner_for_second(const NormFormProblem& p, const Integer& value) {
  const Integer x2 = p.m() + p.d() * value * value;
  if (!is_square(x2)) return std::nullopt;
  return isqrt(x2);
}

HypothesisReport audit_hypotheses(const LinearRecurrence& rec, long dependence_bound) {
  HypothesisReport h;
  h.last_coeff_not_unit = abs(rec.last_coeff()) != 1;
  std::vector<QuadNum> roots;
  try {
    h.degeneracy = is_degenerate(rec);
    roots = characteristic_roots(rec);
  } catch (const UnsupportedOrder&) {
    return h;
  }
  h.roots_available = true;
  for (const QuadNum& r : roots) {
    if (std::find(h.distinct_roots.begin(), h.distinct_roots.end(), r) == h.distinct_roots.end()) {
      h.distinct_roots.push_back(r);
    }
  }
  h.nondegenerate = !h.degeneracy.degenerate;

  h.pairwise_independent = true;
  for (std::size_t i = 0; i < h.distinct_roots.size(); ++i) {
    for (std::size_t j = i + 1; j < h.distinct_roots.size(); ++j) {
      RootPairCheck c{i, j,
                      roots_multiplicatively_independent(h.distinct_roots[i], h.distinct_roots[j], dependence_bound)};
      if (c.verdict.dependent) h.pairwise_independent = false;
      h.pair_checks.push_back(std::move(c));
    }
  }

  h.no_root_of_unity_root = true;
  for (const QuadNum& r : h.distinct_roots) {
    h.root_unity_orders.push_back(root_of_unity_order(r));
    if (h.root_unity_orders.back()) h.no_root_of_unity_root = false;
  }
  return h;
}

PairSearchReport pair_sum_search(const LinearRecurrence& rec, const NormFormProblem& p, long index_bound,
                                 const Integer& coordinate_bound, const SearchOptions& opts) {
  if (index_bound < 1) throw InvalidArgument("index bound N must be >= 1");
  if (coordinate_bound < 1) throw InvalidArgument("coordinate bound B must be >= 1");
  const auto start = Clock::now();

  PairSearchReport r;
  r.recurrence = rec.literal();
  r.d = p.d();
  r.m = p.m();
  r.index_bound = index_bound;
  r.coordinate_bound = coordinate_bound;
  r.trivial = opts.trivial;
  r.shards = resolve_shards(opts);
  r.hypotheses = audit_hypotheses(rec, opts.dependence_bound);

  const std::vector<Integer> terms = rec.terms_up_to(static_cast<std::size_t>(index_bound));
  const CoordinateIndex index(p, coordinate_bound, opts.trivial);
  r.hits = opts.serial ? kernels::pair_sums_serial(terms, index)
                       : kernels::pair_sums_parallel(terms, index, r.shards);
  for (const PairHit& h : r.hits) {
    if (terms[h.n1] + terms[h.n2] != h.value) throw InvariantViolation("pair hit sum mismatch");
    verify_membership(p, h.value, h.in_x1, h.in_x2);
    if (h.n2 <= index_bound / 2) ++r.hits_at_half;
  }
  r.wall_seconds = seconds_since(start);
  return r;
}

SUnitSearchReport sunit_sum_search(const SPrimeSet& s, int t, long exponent_bound, const NormFormProblem& p,
                                   const Integer& coordinate_bound, const SearchOptions& opts) {
  if (t < 1 || t > 4) throw InvalidArgument("tuple size t must be in 1..4");
  if (coordinate_bound < 1) throw InvalidArgument("coordinate bound B must be >= 1");
  const auto start = Clock::now();

  SUnitSearchReport r;
  r.primes = s.primes();
  r.tuple_size = t;
  r.exponent_bound = exponent_bound;
  r.d = p.d();
  r.m = p.m();
  r.coordinate_bound = coordinate_bound;
  r.trivial = opts.trivial;
  r.shards = resolve_shards(opts);

  const SUnitEnumeration units_range = enumerate_sunits(s, exponent_bound);
  const std::vector<SUnit> units(units_range.begin(), units_range.end());
  r.units_enumerated = units.size();
  const CoordinateIndex index(p, coordinate_bound, opts.trivial);
  SUnitKernelResult k = opts.serial ? kernels::sunit_sums_serial(units, t, index)
                                    : kernels::sunit_sums_parallel(units, t, index, r.shards);
  r.rejected_vanishing = k.rejected_vanishing;
  r.hits = std::move(k.hits);

  for (const SUnitHit& h : r.hits) {
    Rational sum = 0;
    for (const SUnit& u : h.entries) sum += u.value;
    if (sum != Rational(h.sum) || !h.certificate.nonvanishing) throw InvariantViolation("S-unit hit mismatch");
    verify_membership(p, h.sum, h.in_x1, h.in_x2);
    const bool small = std::all_of(h.entries.begin(), h.entries.end(), [&](const SUnit& u) {
      return std::all_of(u.exponents.begin(), u.exponents.end(),
                         [&](long b) { return 2 * std::abs(b) <= exponent_bound; });
    });
    if (small) ++r.hits_at_half;
  }
  r.wall_seconds = seconds_since(start);
  return r;
}

std::vector<VanishingSum> vanishing_pair_sums(const LinearRecurrence& rec, long index_bound) {
  if (index_bound < 1) throw InvalidArgument("index bound N must be >= 1");
  const BinetForm b = binet(rec);
  const auto count = static_cast<std::size_t>(index_bound) + 1;
  std::vector<QuadNum> t1(count);
  std::vector<QuadNum> t2(count);
  for (std::size_t n = 0; n < count; ++n) {
    t1[n] = b.term(0, static_cast<long>(n));
    t2[n] = b.term(1, static_cast<long>(n));
  }
  std::vector<VanishingSum> out;
  for (long n1 = 0; n1 <= index_bound; ++n1) {
    for (long n2 = n1; n2 <= index_bound; ++n2) {
      const QuadNum s1 = t1[n1] + t1[n2];
      const QuadNum s2 = t2[n1] + t2[n2];
      if (s1.is_zero()) out.push_back({n1, n2, {1}});
      if (s2.is_zero()) out.push_back({n1, n2, {2}});
      if ((s1 + s2).is_zero()) out.push_back({n1, n2, {1, 2}});
    }
  }
  return out;
}

}  // namespace normsearch
