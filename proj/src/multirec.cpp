#include <algorithm>
#include <cmath>
#include <numeric>

#include "normsearch/error.hpp"
#include "normsearch/recurrence.hpp"

namespace normsearch {

namespace {

constexpr double kMaxDegeneracyVectors = 1e7;

QuadNum eval_polynomial(const Polynomial& poly, std::span<const long> n) {
  QuadNum acc;
  for (const auto& [exps, coeff] : poly) {
    Integer mono = 1;
    for (std::size_t k = 0; k < exps.size(); ++k) mono *= ipow(Integer(n[k]), exps[k]);
    acc += coeff * QuadNum(Rational(mono));
  }
  return acc;
}

}  // namespace

Polynomial constant_polynomial(std::size_t dims, const QuadNum& c) {
  return Polynomial{{std::vector<unsigned>(dims, 0U), c}};
}

MultiRecurrence::MultiRecurrence(std::size_t dims, std::vector<MultiTerm> terms)
    : dims_(dims), terms_(std::move(terms)) {
  if (dims_ == 0) throw InvalidArgument("multi-recurrence needs at least one variable");
  for (const MultiTerm& t : terms_) {
    if (t.bases.size() != dims_) throw DimensionMismatch(dims_, t.bases.size());
    for (const QuadNum& b : t.bases) {
      if (b.is_zero()) throw InvalidArgument("multi-recurrence bases must be nonzero");
    }
    for (const auto& [exps, coeff] : t.poly) {
      if (exps.size() != dims_) throw DimensionMismatch(dims_, exps.size());
      if (!coeff.is_rational() && dims_ != 1) {
        throw InvalidArgument("irrational polynomial coefficients are only supported for one variable");
      }
    }
  }
}

QuadNum MultiRecurrence::eval(std::span<const long> n) const {
  if (n.size() != dims_) throw DimensionMismatch(dims_, n.size());
  QuadNum acc;
  for (const MultiTerm& t : terms_) {
    QuadNum prod = eval_polynomial(t.poly, n);
    for (std::size_t k = 0; k < dims_; ++k) prod *= t.bases[k].pow(n[k]);
    acc += prod;
  }
  return acc;
}

QuadNum eval_multirec(const MultiRecurrence& f, std::span<const long> n) { return f.eval(n); }

MultiDegeneracyVerdict multirec_degenerate(const MultiRecurrence& f, long bound) {
  if (bound < 1) throw InvalidArgument("degeneracy bound must be >= 1");
  const std::size_t s = f.dims();
  const long width = 2 * bound + 1;
  if (std::pow(static_cast<double>(width), static_cast<double>(s)) > kMaxDegeneracyVectors) {
    throw InvalidArgument("degeneracy search space too large");
  }

  // Nonzero vectors with first nonzero entry positive, by |n|_1 then lexicographically.
  std::vector<std::vector<long>> vectors;
  std::vector<long> cur(s, -bound);
  for (;;) {
    auto first = std::find_if(cur.begin(), cur.end(), [](long v) { return v != 0; });
    if (first != cur.end() && *first > 0) vectors.push_back(cur);
    std::size_t k = s;
    while (k > 0 && cur[k - 1] == bound) cur[--k] = -bound;
    if (k == 0) break;
    ++cur[k - 1];
  }
  auto l1 = [](const std::vector<long>& v) {
    return std::accumulate(v.begin(), v.end(), 0L, [](long a, long b) { return a + std::abs(b); });
  };
  std::stable_sort(vectors.begin(), vectors.end(),
                   [&](const std::vector<long>& a, const std::vector<long>& b) { return l1(a) < l1(b); });

  MultiDegeneracyVerdict v;
  v.bound = bound;
  const auto& terms = f.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      // ratio_k^e for e in [-bound, bound]
      std::vector<std::vector<QuadNum>> powers(s);
      for (std::size_t k = 0; k < s; ++k) {
        const QuadNum r = terms[i].bases[k] / terms[j].bases[k];
        for (long e = -bound; e <= bound; ++e) powers[k].push_back(r.pow(e));
      }
      for (const auto& n : vectors) {
        QuadNum prod(1);
        for (std::size_t k = 0; k < s; ++k) prod *= powers[k][n[k] + bound];
        if (prod == QuadNum(1)) {
          v.degenerate = true;
          v.term_pair = std::make_pair(i, j);
          v.witness = n;
          return v;
        }
      }
    }
  }
  return v;
}

}  // namespace normsearch
