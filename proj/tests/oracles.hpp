#pragma once

// Independent reference computations. None of these call into the library
// code paths they are used to check.

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "normsearch/quadratic.hpp"

namespace oracle {

using normsearch::Integer;
using normsearch::QuadNum;
using normsearch::Rational;

inline bool square_i64(std::int64_t v, std::int64_t& root) {
  if (v < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  root = r;
  return r * r == v;
}

inline bool square_mpz(const Integer& v, Integer& root) {
  if (v < 0) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return root * root == v;
}

// Smallest y >= 1 with d*y^2 + c a perfect square, searching y <= ymax.
inline std::optional<std::pair<Integer, Integer>> least_solution(long d, long c, long ymax) {
  Integer x;
  for (long y = 1; y <= ymax; ++y) {
    const Integer v = Integer(d) * y * y + c;
    if (square_mpz(v, x)) return std::make_pair(x, Integer(y));
  }
  return std::nullopt;
}

// All signed (x, y) with x^2 - d y^2 = m and |x| <= xmax, in 64-bit arithmetic.
inline std::set<std::pair<std::int64_t, std::int64_t>> norm_solutions(long d, long m, std::int64_t xmax) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t x = 0; x <= xmax; ++x) {
    const std::int64_t num = x * x - m;
    if (num < 0 || num % d != 0) continue;
    std::int64_t y = 0;
    if (!square_i64(num / d, y)) continue;
    for (std::int64_t sx : {x, -x}) {
      for (std::int64_t sy : {y, -y}) out.emplace(sx, sy);
    }
  }
  return out;
}

// Floor of p + q*sqrt(d) for d > 1 by exact comparison.
inline Integer floor_quad(const Rational& p, const Rational& q, long d) {
  // q*sqrt(d) = sign(q) * sqrt(q^2 d); bracket it with integer square roots.
  const Rational q2d = q * q * d;
  Integer lo;
  const Integer num = q2d.get_num() * q2d.get_den();
  mpz_sqrt(lo.get_mpz_t(), num.get_mpz_t());
  Rational approx = q >= 0 ? Rational(lo, q2d.get_den()) : -Rational(lo + 1, q2d.get_den());
  approx.canonicalize();
  Rational start = p + approx;
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), start.get_num_mpz_t(), start.get_den_mpz_t());
  k -= 2;
  // Step up while k + 1 <= p + q sqrt d, i.e. q sqrt d >= k + 1 - p.
  auto le = [&](const Integer& v) {
    const Rational rhs = Rational(v) - p;
    if (q >= 0) return rhs <= 0 || rhs * rhs <= q2d;
    return rhs < 0 && rhs * rhs >= q2d;
  };
  while (le(k + 1)) ++k;
  return k;
}

// Continued fraction of sqrt(d) by the floor/reciprocal iteration on exact
// quadratic numbers; the period of sqrt(d) ends with the term 2*a0.
inline std::pair<long, std::vector<long>> sqrt_cf(long d) {
  Rational p = 0, q = 1;
  const Integer a0 = floor_quad(p, q, d);
  std::vector<long> period;
  Integer a = a0;
  for (int guard = 0; guard < 100000; ++guard) {
    // x <- 1 / (x - a)
    p -= a;
    const Rational den = p * p - q * q * d;
    p = p / den;
    q = -q / den;
    a = floor_quad(p, q, d);
    period.push_back(a.get_si());
    if (a == 2 * a0) break;
  }
  return {a0.get_si(), period};
}

// n = f^2 * core with core squarefree (sign kept on core).
inline std::pair<long, long> square_split(long n) {
  long core = n < 0 ? -1 : 1;
  long f = 1;
  long m = n < 0 ? -n : n;
  for (long p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      f *= p;
    }
    if (m % p == 0) {
      core *= p;
      m /= p;
    }
  }
  return {f, core * m};
}

// Roots of x^2 - a1 x - a2 written as (a1 +- f sqrt(core)) / 2.
inline std::pair<QuadNum, QuadNum> quadratic_roots(long a1, long a2) {
  const long disc = a1 * a1 + 4 * a2;
  const auto [f, core] = square_split(disc);
  const Rational half(1, 2);
  if (core == 1 || disc == 0) {
    const Rational r = disc == 0 ? Rational(0) : Rational(f);
    return {QuadNum(Rational(a1 + r) * half), QuadNum(Rational(a1 - r) * half)};
  }
  return {QuadNum(Rational(a1) * half, Rational(f) * half, core),
          QuadNum(Rational(a1) * half, Rational(-f) * half, core)};
}

// Smallest k <= kmax with (alpha/beta)^k == 1, by repeated multiplication.
inline std::optional<int> ratio_root_order(const QuadNum& alpha, const QuadNum& beta, int kmax) {
  if (alpha == beta) return std::nullopt;
  const QuadNum r = alpha / beta;
  QuadNum acc = r;
  for (int k = 1; k <= kmax; ++k) {
    if (acc == QuadNum(1)) return k;
    acc = acc * r;
  }
  return std::nullopt;
}

inline std::vector<Integer> iterate(const std::vector<long>& a, const std::vector<long>& init, std::size_t n) {
  std::vector<Integer> u;
  for (long v : init) u.emplace_back(v);
  while (u.size() <= n) {
    Integer next = 0;
    for (std::size_t i = 0; i < a.size(); ++i) next += a[i] * u[u.size() - 1 - i];
    u.push_back(next);
  }
  u.resize(n + 1);
  return u;
}

inline Integer bell(unsigned n) {
  // Bell triangle.
  std::vector<Integer> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Integer> next{row.back()};
    for (const Integer& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace oracle
