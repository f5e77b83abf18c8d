#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "normsearch/arith.hpp"

namespace normsearch {

/// Strictly increasing list of distinct primes.
class SPrimeSet {
 public:
  explicit SPrimeSet(std::vector<long> primes);

  const std::vector<long>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

 private:
  std::vector<long> primes_;
};

/// sign * prod p_i^{b_i}
struct SUnit {
  int sign = 1;
  std::vector<long> exponents;
  Rational value;
};

SUnit make_sunit(const SPrimeSet& s, int sign, std::vector<long> exponents);

// Exponent vector of `value` over S, or nullopt if value is not an S-unit.
std::optional<std::vector<long>> factor_over(const SPrimeSet& s, const Rational& value);

/// All S-units with |b_i| <= E, ordered lexicographically by exponent vector
/// and then by sign (+1 before -1). Random access by index makes sharding
/// a matter of splitting the index range.
class SUnitEnumeration {
 public:
  SUnitEnumeration(SPrimeSet s, long exponent_bound, bool positive_only);

  std::uint64_t size() const { return size_; }
  SUnit at(std::uint64_t index) const;
  const SPrimeSet& primes() const { return s_; }
  long exponent_bound() const { return bound_; }
  bool positive_only() const { return positive_only_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SUnit;
    using difference_type = std::ptrdiff_t;

    iterator(const SUnitEnumeration* e, std::uint64_t i) : e_(e), i_(i) {}
    SUnit operator*() const { return e_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const SUnitEnumeration* e_;
    std::uint64_t i_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  SPrimeSet s_;
  long bound_;
  bool positive_only_;
  std::uint64_t size_;
};

SUnitEnumeration enumerate_sunits(const SPrimeSet& s, long exponent_bound, bool positive_only = false);

struct SubsumCertificate {
  bool nonvanishing = true;
  // 1-based indices of the lexicographically first vanishing subsum.
  std::vector<std::size_t> witness;
};

// Checks all 2^t - 1 nonempty subsums; t <= 20.
SubsumCertificate subsums_nonvanishing(std::span<const Rational> tuple);

}  // namespace normsearch
