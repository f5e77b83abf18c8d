#include <algorithm>
#include <cmath>

#include "normsearch/error.hpp"
#include "normsearch/search.hpp"

namespace normsearch {

namespace {

// Above this many bits the exact bound is not materialized.
constexpr long double kMaxExactBits = 1 << 26;
constexpr std::size_t kMaxPrintedDigits = 10'000;
constexpr std::size_t kLeadingDigits = 20;

}  // namespace

SchlickeweiBound schlickewei_bound(unsigned s, std::span<const unsigned> degrees, unsigned field_degree) {
  if (s < 1) throw InvalidArgument("s must be >= 1");
  if (field_degree < 1) throw InvalidArgument("field degree D must be >= 1");
  if (degrees.empty()) throw InvalidArgument("at least one polynomial degree is required");

  SchlickeweiBound out;
  Integer sum = 0;
  for (unsigned delta : degrees) sum += binomial(s + delta, s);
  out.a = std::max(Integer(s), sum);

  const Integer two_exp = 35 * out.a * out.a * out.a;
  const Integer d_exp = 6 * out.a * out.a;
  out.log2_value = two_exp.get_d() + d_exp.get_d() * std::log2(static_cast<long double>(field_degree));

  if (out.log2_value <= kMaxExactBits) {
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), Integer(field_degree).get_mpz_t(), d_exp.get_ui());
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), two_exp.get_ui());
    const std::string text = v.get_str();
    out.digits = text.size();
    out.leading_digits = text.substr(0, kLeadingDigits);
    if (out.digits <= kMaxPrintedDigits) out.value = std::move(v);
    return out;
  }

  out.exact = false;
  const long double log10v = out.log2_value * std::log10(2.0L);
  out.digits = static_cast<std::size_t>(std::floor(log10v)) + 1;
  const long double mantissa = std::pow(10.0L, log10v - std::floor(log10v));
  std::string lead = std::to_string(static_cast<unsigned long long>(mantissa * 1e15L));
  out.leading_digits = lead.substr(0, 15);
  return out;
}

std::string PartitionReport::label() const {
  return certified_dependent ? "certified-dependent" : "independent-up-to-E";
}

std::vector<PartitionReport> partition_analysis(std::span<const QuadNum> bases, long dependence_bound) {
  const std::size_t n = bases.size();
  if (n > 8) throw TooManyIndices(n);
  if (n < 2) throw InvalidArgument("partition analysis needs at least two bases");
  if (dependence_bound < 1) throw InvalidArgument("dependence bound E must be >= 1");

  // Pairwise verdicts are shared by every partition that joins the pair.
  std::vector<std::vector<DependenceVerdict>> verdict(n, std::vector<DependenceVerdict>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      verdict[i][j] = roots_multiplicatively_independent(bases[i], bases[j], dependence_bound);
    }
  }

  std::vector<PartitionReport> out;
  // Restricted growth strings in lexicographic order.
  std::vector<std::size_t> rgs(n, 0);
  for (;;) {
    PartitionReport r;
    const std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    r.blocks.resize(blocks);
    for (std::size_t i = 0; i < n; ++i) r.blocks[rgs[i]].push_back(i + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rgs[i] != rgs[j]) continue;
        r.checks.push_back(RootPairCheck{i, j, verdict[i][j]});
        if (verdict[i][j].dependent) r.certified_dependent = true;
      }
    }
    out.push_back(std::move(r));

    std::size_t k = n;
    while (k > 1) {
      const std::size_t prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<long>(k - 1));
      if (rgs[k - 1] <= prefix_max) break;
      --k;
    }
    if (k <= 1) break;
    ++rgs[k - 1];
    std::fill(rgs.begin() + static_cast<long>(k), rgs.end(), 0);
  }
  return out;
}

}  // namespace normsearch
