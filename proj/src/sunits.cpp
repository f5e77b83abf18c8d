#include "normsearch/sunits.hpp"

#include <algorithm>
#include <limits>

#include "normsearch/error.hpp"

namespace normsearch {

SPrimeSet::SPrimeSet(std::vector<long> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw InvalidArgument("S must contain at least one prime");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) throw InvalidArgument("S: " + std::to_string(primes_[i]) + " is not prime");
    if (i > 0 && primes_[i] <= primes_[i - 1]) throw InvalidArgument("S: primes must be strictly increasing");
  }
}

SUnit make_sunit(const SPrimeSet& s, int sign, std::vector<long> exponents) {
  if (exponents.size() != s.size()) throw DimensionMismatch(s.size(), exponents.size());
  if (sign != 1 && sign != -1) throw InvalidArgument("S-unit sign must be +1 or -1");
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const long b = exponents[i];
    const Integer pw = ipow(Integer(s.primes()[i]), static_cast<unsigned long>(b < 0 ? -b : b));
    if (b >= 0) {
      num *= pw;
    } else {
      den *= pw;
    }
  }
  SUnit u;
  u.sign = sign;
  u.exponents = std::move(exponents);
  u.value = make_rational(sign * num, den);
  return u;
}

std::optional<std::vector<long>> factor_over(const SPrimeSet& s, const Rational& value) {
  if (value == 0) return std::nullopt;
  Integer num = abs(value.get_num());
  Integer den = value.get_den();
  std::vector<long> exps(s.size(), 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Integer p = s.primes()[i];
    while (num % p == 0) {
      num /= p;
      ++exps[i];
    }
    while (den % p == 0) {
      den /= p;
      --exps[i];
    }
  }
  if (num != 1 || den != 1) return std::nullopt;
  return exps;
}

SUnitEnumeration::SUnitEnumeration(SPrimeSet s, long exponent_bound, bool positive_only)
    : s_(std::move(s)), bound_(exponent_bound), positive_only_(positive_only) {
  if (bound_ < 0) throw InvalidArgument("exponent bound E must be >= 0");
  const auto width = static_cast<std::uint64_t>(2 * bound_ + 1);
  size_ = positive_only_ ? 1 : 2;
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (size_ > std::numeric_limits<std::uint64_t>::max() / width) {
      throw InvalidArgument("S-unit enumeration too large");
    }
    size_ *= width;
  }
}

SUnit SUnitEnumeration::at(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("S-unit index out of range");
  const std::uint64_t signs = positive_only_ ? 1 : 2;
  const int sign = index % signs == 0 ? 1 : -1;
  std::uint64_t rest = index / signs;
  const auto width = static_cast<std::uint64_t>(2 * bound_ + 1);
  std::vector<long> exps(s_.size());
  for (std::size_t k = s_.size(); k-- > 0;) {
    exps[k] = static_cast<long>(rest % width) - bound_;
    rest /= width;
  }
  return make_sunit(s_, sign, std::move(exps));
}

SUnitEnumeration enumerate_sunits(const SPrimeSet& s, long exponent_bound, bool positive_only) {
  return {s, exponent_bound, positive_only};
}

SubsumCertificate subsums_nonvanishing(std::span<const Rational> tuple) {
  const std::size_t t = tuple.size();
  if (t > 20) throw TupleTooLarge(t);
  if (t == 0) throw InvalidArgument("subsum check needs a nonempty tuple");
  const std::size_t masks = std::size_t{1} << t;
  std::vector<Rational> sums(masks);
  SubsumCertificate cert;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sums[mask] = sums[mask & (mask - 1)] + tuple[low];
    if (sums[mask] != 0) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < t; ++i) {
      if (mask >> i & 1U) idx.push_back(i + 1);
    }
    if (cert.nonvanishing || idx < cert.witness) cert.witness = std::move(idx);
    cert.nonvanishing = false;
  }
  return cert;
}

}  // namespace normsearch
