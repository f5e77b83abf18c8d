#include "normsearch/quadratic.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "normsearch/error.hpp"

namespace normsearch {

namespace {

void require_field(long d) {
  if (d == 1 || !is_squarefree(d)) throw NotSquarefree(d);
}

}  // namespace

QuadNum::QuadNum(Rational x, Rational y, long d) : x_(std::move(x)), y_(std::move(y)), d_(d) {
  x_.canonicalize();
  y_.canonicalize();
  if (d_ == 0) {
    if (y_ != 0) throw InvalidArgument("a rational QuadNum (d=0) must have y=0");
  } else {
    require_field(d_);
  }
}

long common_field(const QuadNum& a, const QuadNum& b) {
  if (a.d() == b.d()) return a.d();
  if (a.d() == 0) return b.d();
  if (b.d() == 0) return a.d();
  throw MixedField(a.d(), b.d());
}

QuadNum QuadNum::conj() const {
  QuadNum r = *this;
  r.y_ = -y_;
  return r;
}

Rational QuadNum::norm() const { return x_ * x_ - d_ * y_ * y_; }

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  QuadNum r = conj();
  r.x_ /= n;
  r.y_ /= n;
  return r;
}

QuadNum QuadNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadNum result = QuadNum(Rational(1), Rational(0), 0).in_field(d_);
  QuadNum base = *this;
  auto k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

QuadNum QuadNum::in_field(long d) const {
  if (d == d_) return *this;
  if (d_ != 0 && d != 0) throw MixedField(d_, d);
  if (d == 0 && y_ != 0) throw MixedField(d_, d);
  QuadNum r = *this;
  r.d_ = d;
  if (d != 0) require_field(d);
  return r;
}

QuadNum operator+(const QuadNum& a, const QuadNum& b) {
  QuadNum r;
  r.d_ = common_field(a, b);
  r.x_ = a.x_ + b.x_;
  r.y_ = a.y_ + b.y_;
  return r;
}

QuadNum operator-(const QuadNum& a, const QuadNum& b) {
  QuadNum r;
  r.d_ = common_field(a, b);
  r.x_ = a.x_ - b.x_;
  r.y_ = a.y_ - b.y_;
  return r;
}

QuadNum operator-(const QuadNum& a) {
  QuadNum r = a;
  r.x_ = -a.x_;
  r.y_ = -a.y_;
  return r;
}

QuadNum operator*(const QuadNum& a, const QuadNum& b) {
  QuadNum r;
  r.d_ = common_field(a, b);
  r.x_ = a.x_ * b.x_ + r.d_ * a.y_ * b.y_;
  r.y_ = a.x_ * b.y_ + a.y_ * b.x_;
  return r;
}

QuadNum operator/(const QuadNum& a, const QuadNum& b) {
  if (b.is_zero()) throw DivisionByZero();
  common_field(a, b);
  return a * b.inverse();
}

bool operator==(const QuadNum& a, const QuadNum& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  // Equal coordinates with y != 0 in two different fields are different numbers.
  return a.y_ == 0 || a.d_ == b.d_;
}

std::string QuadNum::str() const {
  std::ostringstream os;
  if (y_ == 0) {
    os << x_.get_str();
    return os.str();
  }
  if (x_ != 0) os << x_.get_str();
  const Rational ay = abs(y_);
  if (y_ < 0) {
    os << "-";
  } else if (x_ != 0) {
    os << "+";
  }
  if (ay != 1) os << ay.get_str() << "*";
  os << "sqrt(" << d_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadNum& q) { return os << q.str(); }

bool operator<(const IntPair& a, const IntPair& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

void require_real_quadratic(long d) {
  if (d <= 1 || !is_squarefree(d)) throw NotSquarefree(d);
}

SqrtContinuedFraction continued_fraction_sqrt(long d) {
  require_real_quadratic(d);
  SqrtContinuedFraction cf;
  cf.a0 = isqrt(Integer(d)).get_si();
  // State (P, Q) represents (P + sqrt d) / Q.
  long p = 0;
  long q = 1;
  long a = cf.a0;
  std::map<std::pair<long, long>, std::size_t> seen;
  for (;;) {
    p = a * q - p;
    q = (d - p * p) / q;
    if (!seen.emplace(std::make_pair(p, q), cf.period.size()).second) break;
    a = (cf.a0 + p) / q;
    cf.period.push_back(a);
  }
  return cf;
}

QuadNum PellData::automorph_unit() const {
  return {Rational(automorph.x, 2), Rational(automorph.y, 2), d};
}

QuadNum PellData::fundamental_unit() const {
  if (negative) return {Rational(negative->x), Rational(negative->y), d};
  return {Rational(fundamental.x), Rational(fundamental.y), d};
}

PellData pell_data(long d) {
  const SqrtContinuedFraction cf = continued_fraction_sqrt(d);
  PellData out;
  out.d = d;
  out.cf_period = cf.period.size();

  // Convergent p/q at the end of the first period.
  Integer p_prev = 1, q_prev = 0;
  Integer p = cf.a0, q = 1;
  for (std::size_t k = 0; k + 1 < cf.period.size(); ++k) {
    Integer pn = cf.period[k] * p + p_prev;
    Integer qn = cf.period[k] * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(pn);
    q = std::move(qn);
  }
  const Integer n = p * p - d * q * q;
  if (cf.period.size() % 2 == 1) {
    if (n != -1) throw InvariantViolation("odd-period convergent does not solve x^2-dy^2=-1");
    out.negative = IntPair{p, q};
    out.fundamental = IntPair{p * p + d * q * q, 2 * p * q};
  } else {
    if (n != 1) throw InvariantViolation("even-period convergent does not solve x^2-dy^2=1");
    out.fundamental = IntPair{p, q};
  }

  // A half-integral automorph (t + u sqrt d)/2 exists only for d = 5 mod 8, and
  // then its cube is the fundamental solution: t^3 - 3t = 2 x1.
  out.automorph = IntPair{2 * out.fundamental.x, 2 * out.fundamental.y};
  if (d % 8 == 5) {
    const Integer target = 2 * out.fundamental.x;
    Integer t;
    mpz_root(t.get_mpz_t(), target.get_mpz_t(), 3);
    for (int delta = 0; delta <= 2; ++delta, ++t) {
      if (t * t * t - 3 * t != target) continue;
      const Integer u2 = t * t - 4;
      if (u2 % d != 0 || !is_square(u2 / d)) continue;
      const Integer u = isqrt(u2 / d);
      if (mpz_odd_p(t.get_mpz_t()) != 0 && mpz_odd_p(u.get_mpz_t()) != 0) out.automorph = IntPair{t, u};
      break;
    }
  }
  const IntPair& a = out.automorph;
  if (a.x * a.x - d * a.y * a.y != 4) throw InvariantViolation("automorph does not solve t^2-du^2=4");
  return out;
}

}  // namespace normsearch
