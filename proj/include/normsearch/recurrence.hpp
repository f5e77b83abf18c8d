#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "normsearch/quadratic.hpp"

namespace normsearch {

/// U_n = a_1 U_{n-1} + ... + a_d U_{n-d}
class LinearRecurrence {
 public:
  LinearRecurrence(std::vector<Integer> coeffs, std::vector<Integer> initials);

  // "a1,...,ad;U0,...,U_{d-1}", whitespace ignored.
  static LinearRecurrence parse(std::string_view literal);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const std::vector<Integer>& initials() const { return initials_; }
  const Integer& last_coeff() const { return coeffs_.back(); }

  // [U_0, ..., U_N]
  std::vector<Integer> terms_up_to(std::size_t n) const;

  std::string literal() const;

 private:
  std::vector<Integer> coeffs_;
  std::vector<Integer> initials_;
};

/// U_n = f1 * alpha1^n + f2 * alpha2^n for an order-2 recurrence with
/// distinct roots. Rational roots carry d == 0.
struct BinetForm {
  QuadNum root1;  // (a1 + sqrt(disc)) / 2
  QuadNum root2;
  QuadNum coeff1;
  QuadNum coeff2;
  Integer discriminant;  // a1^2 + 4 a2

  bool rational_roots() const { return root1.is_rational(); }
  QuadNum term(std::size_t root, long n) const;
  QuadNum value(long n) const;
};

BinetForm binet(const LinearRecurrence& rec);

// Roots of x^d - a1 x^{d-1} - ... - a_d listed with multiplicity. Works when
// the polynomial splits over Q into linear factors and at most one quadratic;
// throws UnsupportedOrder otherwise.
std::vector<QuadNum> characteristic_roots(const LinearRecurrence& rec);

// Smallest k in {1,2,3,4,6} with z^k = 1; these are the only orders of roots
// of unity of degree <= 2.
std::optional<int> root_of_unity_order(const QuadNum& z);

struct DegeneracyVerdict {
  bool degenerate = false;
  bool repeated_root = false;
  // Order of the root of unity alpha_i / alpha_j when degenerate.
  std::optional<int> ratio_order;
  std::optional<std::pair<std::size_t, std::size_t>> root_pair;

  std::string describe() const;
};

DegeneracyVerdict is_degenerate(const LinearRecurrence& rec);

/// alpha^p * beta^q = 1
struct DependenceVerdict {
  bool dependent = false;
  std::optional<std::pair<long, long>> witness;
  long bound = 0;

  std::string describe() const;
};

DependenceVerdict roots_multiplicatively_independent(const QuadNum& alpha, const QuadNum& beta, long expbound);

/// Polynomial in s variables; the key is the exponent vector of a monomial.
using Polynomial = std::map<std::vector<unsigned>, QuadNum>;

Polynomial constant_polynomial(std::size_t dims, const QuadNum& c);

struct MultiTerm {
  Polynomial poly;
  std::vector<QuadNum> bases;
};

/// F(n) = sum_i P_i(n) * alpha_i1^{n_1} ... alpha_is^{n_s}
class MultiRecurrence {
 public:
  MultiRecurrence(std::size_t dims, std::vector<MultiTerm> terms);

  std::size_t dims() const { return dims_; }
  const std::vector<MultiTerm>& terms() const { return terms_; }

  QuadNum eval(std::span<const long> n) const;

 private:
  std::size_t dims_;
  std::vector<MultiTerm> terms_;
};

QuadNum eval_multirec(const MultiRecurrence& f, std::span<const long> n);

struct MultiDegeneracyVerdict {
  bool degenerate = false;
  std::optional<std::pair<std::size_t, std::size_t>> term_pair;
  std::vector<long> witness;
  long bound = 0;
};

// Looks for a nonzero n with |n_k| <= bound and alpha_i^n = alpha_j^n.
MultiDegeneracyVerdict multirec_degenerate(const MultiRecurrence& f, long bound);

}  // namespace normsearch
