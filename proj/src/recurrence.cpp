#include "normsearch/recurrence.hpp"

#include <algorithm>
#include <sstream>

#include "normsearch/error.hpp"

namespace normsearch {

namespace {

// n = k^2 * core with core squarefree (sign kept on the core).
std::pair<Integer, Integer> square_decomposition(const Integer& n) {
  Integer rest = abs(n);
  Integer k = 1;
  Integer core = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      k *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      core *= p;
    }
  }
  core *= rest;
  if (n < 0) core = -core;
  return {k, core};
}

// Roots of x^2 + b x + c.
std::pair<QuadNum, QuadNum> monic_quadratic_roots(const Integer& b, const Integer& c) {
  const Integer disc = b * b - 4 * c;
  if (is_square(disc)) {
    const Integer s = isqrt(disc);
    return {QuadNum(make_rational(-b + s, 2)), QuadNum(make_rational(-b - s, 2))};
  }
  const auto [k, core] = square_decomposition(disc);
  if (!core.fits_slong_p()) throw InvalidArgument("discriminant core does not fit a machine integer");
  const long d = core.get_si();
  const Rational half_b = make_rational(-b, 2);
  const Rational half_k = make_rational(k, 2);
  return {QuadNum(half_b, half_k, d), QuadNum(half_b, -half_k, d)};
}

std::string unity_name(int order) {
  switch (order) {
    case 1: return "1";
    case 2: return "-1";
    case 3: return "a primitive cube root of unity";
    case 4: return "a primitive fourth root of unity";
    case 6: return "a primitive sixth root of unity";
    default: return "a root of unity of order " + std::to_string(order);
  }
}

Integer eval_poly(const std::vector<Integer>& desc, const Integer& x) {
  Integer acc = 0;
  for (const Integer& c : desc) acc = acc * x + c;
  return acc;
}

std::vector<Integer> deflate(const std::vector<Integer>& desc, const Integer& root) {
  std::vector<Integer> out;
  Integer carry = 0;
  for (std::size_t i = 0; i + 1 < desc.size(); ++i) {
    carry = carry * root + desc[i];
    out.push_back(carry);
  }
  return out;
}

}  // namespace

LinearRecurrence::LinearRecurrence(std::vector<Integer> coeffs, std::vector<Integer> initials)
    : coeffs_(std::move(coeffs)), initials_(std::move(initials)) {
  if (coeffs_.empty()) throw InvalidArgument("recurrence needs at least one coefficient");
  if (coeffs_.back() == 0) throw InvalidArgument("last recurrence coefficient a_d must be nonzero");
  if (initials_.size() != coeffs_.size()) {
    throw InvalidArgument("recurrence of order " + std::to_string(coeffs_.size()) + " needs " +
                          std::to_string(coeffs_.size()) + " initial terms");
  }
  if (std::all_of(initials_.begin(), initials_.end(), [](const Integer& v) { return v == 0; })) {
    throw InvalidArgument("initial terms must not all be zero");
  }
}

LinearRecurrence LinearRecurrence::parse(std::string_view literal) {
  const auto semi = literal.find(';');
  if (semi == std::string_view::npos) {
    throw InvalidArgument("recurrence: expected 'a1,...,ad;U0,...,U_{d-1}', got '" + std::string(literal) + "'");
  }
  auto split = [](std::string_view s) {
    std::vector<Integer> out;
    std::size_t start = 0;
    for (;;) {
      const auto comma = s.find(',', start);
      out.push_back(parse_integer(s.substr(start, comma - start), "recurrence"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  return {split(literal.substr(0, semi)), split(literal.substr(semi + 1))};
}

std::vector<Integer> LinearRecurrence::terms_up_to(std::size_t n) const {
  const std::size_t d = order();
  std::vector<Integer> u;
  u.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i < d) {
      u.push_back(initials_[i]);
      continue;
    }
    Integer acc = 0;
    for (std::size_t k = 0; k < d; ++k) acc += coeffs_[k] * u[i - 1 - k];
    u.push_back(std::move(acc));
  }
  return u;
}

std::string LinearRecurrence::literal() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
  os << ";";
  for (std::size_t i = 0; i < initials_.size(); ++i) os << (i ? "," : "") << initials_[i].get_str();
  return os.str();
}

QuadNum BinetForm::term(std::size_t root, long n) const {
  return root == 0 ? coeff1 * root1.pow(n) : coeff2 * root2.pow(n);
}

QuadNum BinetForm::value(long n) const { return term(0, n) + term(1, n); }

BinetForm binet(const LinearRecurrence& rec) {
  if (rec.order() != 2) throw UnsupportedOrder(rec.order());
  const Integer& a1 = rec.coeffs()[0];
  const Integer& a2 = rec.coeffs()[1];
  BinetForm b;
  b.discriminant = a1 * a1 + 4 * a2;
  if (b.discriminant == 0) throw RepeatedRoot();
  std::tie(b.root1, b.root2) = monic_quadratic_roots(-a1, -a2);
  const QuadNum u0(Rational(rec.initials()[0]));
  const QuadNum u1(Rational(rec.initials()[1]));
  b.coeff1 = (u1 - u0 * b.root2) / (b.root1 - b.root2);
  b.coeff2 = u0 - b.coeff1;
  if (b.value(0) != u0 || b.value(1) != u1) throw InvariantViolation("Binet form misses the initial terms");
  return b;
}

std::vector<QuadNum> characteristic_roots(const LinearRecurrence& rec) {
  // x^d - a1 x^{d-1} - ... - a_d, highest degree first.
  std::vector<Integer> poly{1};
  for (const Integer& a : rec.coeffs()) poly.push_back(-a);

  std::vector<QuadNum> roots;
  const Integer constant = abs(rec.last_coeff());
  std::vector<Integer> candidates;
  for (Integer k = 1; k * k <= constant; ++k) {
    if (constant % k != 0) continue;
    for (const Integer& v : {k, Integer(constant / k)}) {
      candidates.push_back(v);
      candidates.push_back(-v);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Integer& r : candidates) {
    while (poly.size() > 1 && eval_poly(poly, r) == 0) {
      poly = deflate(poly, r);
      roots.emplace_back(Rational(r));
    }
  }
  switch (poly.size() - 1) {
    case 0:
      break;
    case 1:
      roots.emplace_back(Rational(-poly[1]));
      break;
    case 2: {
      auto [r1, r2] = monic_quadratic_roots(poly[1], poly[2]);
      roots.push_back(std::move(r1));
      roots.push_back(std::move(r2));
      break;
    }
    default:
      throw UnsupportedOrder(rec.order());
  }
  return roots;
}

std::optional<int> root_of_unity_order(const QuadNum& z) {
  if (z.is_zero()) return std::nullopt;
  for (int k : {1, 2, 3, 4, 6}) {
    if (z.pow(k) == QuadNum(1)) return k;
  }
  return std::nullopt;
}

std::string DegeneracyVerdict::describe() const {
  if (repeated_root) return "repeated root (not simple)";
  if (!degenerate) return "non-degenerate";
  std::ostringstream os;
  os << "degenerate: ratio of roots " << root_pair->first + 1 << " and " << root_pair->second + 1 << " is "
     << unity_name(*ratio_order);
  return os.str();
}

DegeneracyVerdict is_degenerate(const LinearRecurrence& rec) {
  DegeneracyVerdict v;
  if (rec.order() == 1) return v;
  if (rec.order() == 2) {
    const Integer& a = rec.coeffs()[0];
    const Integer& b = rec.coeffs()[1];
    const Integer a2 = a * a;
    if (a2 + 4 * b == 0) {
      v.repeated_root = true;
      return v;
    }
    // (a1^2)/(-a2) = zeta + 2 + 1/zeta for the root ratio zeta.
    int order = 0;
    if (a == 0) {
      order = 2;
    } else if (a2 == -b) {
      order = 3;
    } else if (a2 == -2 * b) {
      order = 4;
    } else if (a2 == -3 * b) {
      order = 6;
    }
    if (order != 0) {
      v.degenerate = true;
      v.ratio_order = order;
      v.root_pair = std::make_pair(std::size_t{0}, std::size_t{1});
    }
    return v;
  }

  const std::vector<QuadNum> roots = characteristic_roots(rec);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) {
        v.repeated_root = true;
        continue;
      }
      if (auto k = root_of_unity_order(roots[i] / roots[j]); k && !v.degenerate) {
        v.degenerate = true;
        v.ratio_order = *k;
        v.root_pair = std::make_pair(i, j);
      }
    }
  }
  return v;
}

std::string DependenceVerdict::describe() const {
  if (!dependent) return "independent up to " + std::to_string(bound);
  return "dependent: alpha^" + std::to_string(witness->first) + " * beta^" + std::to_string(witness->second) +
         " = 1";
}

DependenceVerdict roots_multiplicatively_independent(const QuadNum& alpha, const QuadNum& beta, long expbound) {
  if (expbound < 1) throw InvalidArgument("exponent bound must be >= 1");
  if (alpha.is_zero() || beta.is_zero()) throw InvalidArgument("multiplicative dependence needs nonzero numbers");
  common_field(alpha, beta);

  const long e = expbound;
  std::vector<QuadNum> apow(static_cast<std::size_t>(e) + 1);
  std::vector<QuadNum> bpow(static_cast<std::size_t>(2 * e) + 1);
  std::vector<Rational> an(apow.size());
  std::vector<Rational> bn(bpow.size());
  const Rational na = abs(alpha.norm());
  const Rational nb = abs(beta.norm());
  for (long p = 0; p <= e; ++p) {
    apow[p] = alpha.pow(p);
    an[p] = rpow(na, p);
  }
  for (long q = -e; q <= e; ++q) {
    bpow[q + e] = beta.pow(q);
    bn[q + e] = rpow(nb, q);
  }

  DependenceVerdict v;
  v.bound = e;
  // Canonical witness: smallest |p|+|q|, then p, then q, with p > 0 or (p = 0, q > 0).
  for (long total = 1; total <= 2 * e; ++total) {
    for (long p = std::max(0L, total - e); p <= std::min(e, total); ++p) {
      const long rest = total - p;
      const std::vector<long> qs = rest == 0 ? std::vector<long>{0} : std::vector<long>{-rest, rest};
      for (long q : qs) {
        if (p == 0 && q <= 0) continue;
        // |N(alpha)|^p |N(beta)|^q = 1 is necessary.
        if (an[p] * bn[q + e] != 1) continue;
        if (apow[p] * bpow[q + e] == QuadNum(1)) {
          v.dependent = true;
          v.witness = std::make_pair(p, q);
          return v;
        }
      }
    }
  }
  return v;
}

}  // namespace normsearch
