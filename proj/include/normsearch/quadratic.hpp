#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "normsearch/arith.hpp"

namespace normsearch {

/// Exact element x + y*sqrt(d) of a quadratic field Q(sqrt(d)).
///
/// `d` is a squarefree integer other than 0 and 1. Negative `d` is accepted so
/// that complex characteristic roots (roots of unity in particular) can be
/// handled exactly. The special value d == 0 marks a plain rational (y == 0)
/// that embeds into every quadratic field; such a value may be combined with
/// an element of any field. Two genuine fields with different d never mix.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long v) : x_(v) {}  // NOLINT(google-explicit-constructor)
  QuadNum(Rational x) : x_(std::move(x)) { x_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  QuadNum(Rational x, Rational y, long d);

  static QuadNum sqrt_of(long d) { return {0, 1, d}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  long d() const { return d_; }

  bool is_rational() const { return y_ == 0; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  QuadNum conj() const;
  // x^2 - d*y^2
  Rational norm() const;
  Rational trace() const { return 2 * x_; }
  QuadNum inverse() const;
  QuadNum pow(long e) const;
  // Same value re-tagged as an element of Q(sqrt(d)); the value must fit.
  QuadNum in_field(long d) const;

  friend QuadNum operator+(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator-(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator*(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator/(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator-(const QuadNum& a);
  friend bool operator==(const QuadNum& a, const QuadNum& b);

  QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
  QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
  QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }

  // "x", "x+y*sqrt(d)" or "x-y*sqrt(d)".
  std::string str() const;

 private:
  Rational x_{0};
  Rational y_{0};
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& q);

// Field of the result of combining a and b; throws MixedField.
long common_field(const QuadNum& a, const QuadNum& b);

void require_real_quadratic(long d);

struct IntPair {
  Integer x;
  Integer y;
  friend bool operator==(const IntPair&, const IntPair&) = default;
};

bool operator<(const IntPair& a, const IntPair& b);

struct SqrtContinuedFraction {
  long a0 = 0;
  std::vector<long> period;
};

// Periodic expansion of sqrt(d) via the exact (P, Q) recursion.
SqrtContinuedFraction continued_fraction_sqrt(long d);

struct PellData {
  long d = 0;
  IntPair fundamental;            // x^2 - d y^2 = 1
  std::optional<IntPair> negative;  // x^2 - d y^2 = -1
  IntPair automorph;              // t^2 - d u^2 = 4
  std::size_t cf_period = 0;

  // (t + u sqrt d) / 2
  QuadNum automorph_unit() const;
  QuadNum fundamental_unit() const;
};

PellData pell_data(long d);

}  // namespace normsearch
