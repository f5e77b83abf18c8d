#include "normsearch/arith.hpp"

#include <cctype>

#include "normsearch/error.hpp"

namespace normsearch {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero();
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational rpow(const Rational& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DivisionByZero();
    Rational inv = 1 / base;
    return rpow(inv, -exp);
  }
  const auto e = static_cast<unsigned long>(exp);
  Rational r(ipow(base.get_num(), e), ipow(base.get_den(), e));
  r.canonicalize();
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_squarefree(long n) {
  if (n == 0) return false;
  unsigned long v = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  for (unsigned long p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      v /= p;
      if (v % p == 0) return false;
    }
  }
  return true;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Integer parse_integer(std::string_view text, std::string_view field) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw InvalidArgument(std::string(field) + ": cannot parse integer '" + std::string(text) + "'");
  }
  return v;
}

Rational parse_rational(std::string_view text, std::string_view field) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, field));
  Integer num = parse_integer(text.substr(0, slash), field);
  Integer den = parse_integer(text.substr(slash + 1), field);
  if (den == 0) throw InvalidArgument(std::string(field) + ": zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

}  // namespace normsearch
