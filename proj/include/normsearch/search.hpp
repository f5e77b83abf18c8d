#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "normsearch/kernels.hpp"
#include "normsearch/pell_norm.hpp"
#include "normsearch/recurrence.hpp"
#include "normsearch/sunits.hpp"

namespace normsearch {

struct RootPairCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  DependenceVerdict verdict;
};

/// Finiteness hypotheses for sums of two recurrence terms: non-degenerate,
/// pairwise multiplicatively independent roots, no root a root of unity, and
/// |a_d| != 1.
struct HypothesisReport {
  bool roots_available = false;
  std::vector<QuadNum> distinct_roots;
  DegeneracyVerdict degeneracy;
  bool nondegenerate = false;
  std::vector<RootPairCheck> pair_checks;
  bool pairwise_independent = false;
  std::vector<std::optional<int>> root_unity_orders;
  bool no_root_of_unity_root = false;
  bool last_coeff_not_unit = false;

  bool applicable() const {
    return nondegenerate && pairwise_independent && no_root_of_unity_root && last_coeff_not_unit;
  }
};

HypothesisReport audit_hypotheses(const LinearRecurrence& rec, long dependence_bound = 10);

struct SearchOptions {
  int shards = 0;  // 0: default_shards()
  bool serial = false;
  TrivialSolutions trivial = TrivialSolutions::exclude;
  long dependence_bound = 10;
};

struct PairSearchReport {
  std::string recurrence;
  long d = 0;
  Integer m;
  long index_bound = 0;
  Integer coordinate_bound;
  TrivialSolutions trivial = TrivialSolutions::exclude;
  HypothesisReport hypotheses;
  std::vector<PairHit> hits;
  std::size_t hits_at_half = 0;  // hits with n2 <= N/2
  int shards = 1;
  double wall_seconds = 0;
};

PairSearchReport pair_sum_search(const LinearRecurrence& rec, const NormFormProblem& p, long index_bound,
                                 const Integer& coordinate_bound, const SearchOptions& opts = {});

struct SUnitSearchReport {
  std::vector<long> primes;
  int tuple_size = 0;
  long exponent_bound = 0;
  long d = 0;
  Integer m;
  Integer coordinate_bound;
  TrivialSolutions trivial = TrivialSolutions::exclude;
  std::uint64_t units_enumerated = 0;
  std::vector<SUnitHit> hits;
  std::uint64_t rejected_vanishing = 0;
  std::size_t hits_at_half = 0;  // hits whose exponents all satisfy |b| <= E/2
  int shards = 1;
  double wall_seconds = 0;
};

SUnitSearchReport sunit_sum_search(const SPrimeSet& s, int t, long exponent_bound, const NormFormProblem& p,
                                   const Integer& coordinate_bound, const SearchOptions& opts = {});

// Partner coordinate making (value, partner) or (partner, value) a solution.
std::optional<Integer> partner_for_first(const NormFormProblem& p, const Integer& value);
std::optional<Integer> partner_for_second(const NormFormProblem& p, const Integer& value);

struct VanishingSum {
  long n1 = 0;
  long n2 = 0;
  std::vector<int> roots;  // 1-based subset of {1, 2}

  friend bool operator==(const VanishingSum&, const VanishingSum&) = default;
};

// Pairs n1 <= n2 <= N where sum_{i in roots} f_i (alpha_i^n1 + alpha_i^n2) = 0.
std::vector<VanishingSum> vanishing_pair_sums(const LinearRecurrence& rec, long index_bound);

struct SchlickeweiBound {
  Integer a;
  bool exact = true;
  std::optional<Integer> value;  // present when exact and at most 10^4 digits
  std::size_t digits = 0;
  std::string leading_digits;
  long double log2_value = 0;
};

// 2^(35 A^3) * D^(6 A^2) with A = max(s, sum_l binom(s + delta_l, s)).
SchlickeweiBound schlickewei_bound(unsigned s, std::span<const unsigned> degrees, unsigned field_degree);

struct PartitionReport {
  std::vector<std::vector<std::size_t>> blocks;  // 1-based indices
  std::vector<RootPairCheck> checks;
  bool certified_dependent = false;

  std::string label() const;
};

// One report per set partition of the bases (Bell(n) in total), n <= 8.
std::vector<PartitionReport> partition_analysis(std::span<const QuadNum> bases, long dependence_bound);

}  // namespace normsearch
