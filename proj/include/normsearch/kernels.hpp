#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "normsearch/pell_norm.hpp"
#include "normsearch/sunits.hpp"

namespace normsearch {

/// Coordinate sets X1, X2 materialized up to a bound, for membership lookups.
/// Values are absolute; a signed value v is a member when |v| is.
class CoordinateIndex {
 public:
  CoordinateIndex(const NormFormProblem& p, const Integer& bound, TrivialSolutions trivial);

  const std::vector<Integer>& x1() const { return x1_; }
  const std::vector<Integer>& x2() const { return x2_; }
  const Integer& bound() const { return bound_; }
  bool in_x1(const Integer& v) const;
  bool in_x2(const Integer& v) const;
  // Sorted signed values of X1 u X2.
  const std::vector<Integer>& signed_targets() const { return targets_; }

 private:
  std::vector<Integer> x1_;
  std::vector<Integer> x2_;
  std::vector<Integer> targets_;
  Integer bound_;
};

struct PairHit {
  long n1 = 0;
  long n2 = 0;
  Integer value;
  bool in_x1 = false;
  bool in_x2 = false;

  friend bool operator==(const PairHit&, const PairHit&) = default;
};

bool operator<(const PairHit& a, const PairHit& b);

struct SUnitHit {
  std::vector<SUnit> entries;  // ascending by value
  Integer sum;
  bool in_x1 = false;
  bool in_x2 = false;
  SubsumCertificate certificate;
};

bool operator==(const SUnitHit& a, const SUnitHit& b);
bool operator<(const SUnitHit& a, const SUnitHit& b);

struct SUnitKernelResult {
  std::vector<SUnitHit> hits;
  // Multisets whose sum is a coordinate but which have a vanishing subsum.
  std::uint64_t rejected_vanishing = 0;
};

/// Search kernels. The serial versions are the straightforward reference
/// loops; the parallel versions shard the leading index over OpenMP threads
/// and must return identical, sorted results.
namespace kernels {

std::vector<PairHit> pair_sums_serial(std::span<const Integer> terms, const CoordinateIndex& index);
std::vector<PairHit> pair_sums_parallel(std::span<const Integer> terms, const CoordinateIndex& index, int shards);

SUnitKernelResult sunit_sums_serial(std::span<const SUnit> units, int t, const CoordinateIndex& index);
// Enumerates t-1 entries and solves for the last one against the target set.
SUnitKernelResult sunit_sums_parallel(std::span<const SUnit> units, int t, const CoordinateIndex& index,
                                      int shards);

}  // namespace kernels

// Shard count from NORMSEARCH_SHARDS, else the OpenMP worker count.
int default_shards();

}  // namespace normsearch
