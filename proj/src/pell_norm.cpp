#include "normsearch/pell_norm.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "normsearch/error.hpp"

namespace normsearch {

namespace {

constexpr long kMaxWalk = 1'000'000;

bool integral_automorph(const IntPair& a) {
  return mpz_even_p(a.x.get_mpz_t()) != 0 && mpz_even_p(a.y.get_mpz_t()) != 0;
}

IntPair cube_automorph(const IntPair& a, long d) {
  const QuadNum eps(Rational(a.x, 2), Rational(a.y, 2), d);
  const QuadNum e3 = eps.pow(3);
  const Rational t = 2 * e3.x();
  const Rational u = 2 * e3.y();
  return {t.get_num(), u.get_num()};
}

const Integer& coordinate_of(const IntPair& s, Coordinate c) {
  return c == Coordinate::first ? s.x : s.y;
}

std::pair<Integer, Integer> descent_key(const IntPair& s) { return {abs(s.y), abs(s.x)}; }

}  // namespace

NormFormProblem::NormFormProblem(long d, Integer m) : d_(d), m_(std::move(m)), pell_(pell_data(d)) {
  if (m_ == 0) throw InvalidArgument("m must be nonzero");
}

IntPair SolutionOrbit::step(const IntPair& s) const {
  const Integer& t = automorph.x;
  const Integer& u = automorph.y;
  const Integer x2 = t * s.x + d * u * s.y;
  const Integer y2 = u * s.x + t * s.y;
  if (mpz_odd_p(x2.get_mpz_t()) != 0 || mpz_odd_p(y2.get_mpz_t()) != 0) {
    throw InvariantViolation("automorph step left the integers");
  }
  return {x2 / 2, y2 / 2};
}

IntPair SolutionOrbit::step_back(const IntPair& s) const {
  const Integer& t = automorph.x;
  const Integer& u = automorph.y;
  const Integer x2 = t * s.x - d * u * s.y;
  const Integer y2 = t * s.y - u * s.x;
  if (mpz_odd_p(x2.get_mpz_t()) != 0 || mpz_odd_p(y2.get_mpz_t()) != 0) {
    throw InvariantViolation("inverse automorph step left the integers");
  }
  return {x2 / 2, y2 / 2};
}

std::array<IntPair, 4> SolutionOrbit::sign_class(const IntPair& s) const {
  return {IntPair{s.x, s.y}, IntPair{-s.x, s.y}, IntPair{s.x, -s.y}, IntPair{-s.x, -s.y}};
}

SolutionOrbit orbit_of(const NormFormProblem& p, const IntPair& solution) {
  if (!p.is_solution(solution)) throw InvalidArgument("pair is not a solution of the norm form equation");
  SolutionOrbit o;
  o.d = p.d();
  o.representative = solution;
  o.automorph = p.pell().automorph;
  // Half-integral automorph: (t x + d u y)/2 is integral iff x = y mod 2.
  const Integer parity = solution.x + solution.y;
  if (!integral_automorph(o.automorph) && mpz_odd_p(parity.get_mpz_t()) != 0) {
    o.automorph = cube_automorph(o.automorph, p.d());
  }
  return o;
}

IntPair canonical_representative(const NormFormProblem& p, const IntPair& solution) {
  const SolutionOrbit o = orbit_of(p, solution);
  // |y| is unimodal along an orbit, so plain descent reaches the minimum.
  IntPair cur = solution;
  for (long i = 0;; ++i) {
    if (i > kMaxWalk) throw InvariantViolation("orbit descent did not terminate");
    IntPair next = o.step(cur);
    if (!(descent_key(next) < descent_key(cur))) break;
    cur = std::move(next);
  }
  for (long i = 0;; ++i) {
    if (i > kMaxWalk) throw InvariantViolation("orbit descent did not terminate");
    IntPair prev = o.step_back(cur);
    if (!(descent_key(prev) < descent_key(cur))) break;
    cur = std::move(prev);
  }
  return {abs(cur.x), abs(cur.y)};
}

std::vector<SolutionOrbit> class_representatives(const NormFormProblem& p) {
  const long d = p.d();
  const Integer& m = p.m();
  IntPair unit = p.pell().automorph;
  if (!integral_automorph(unit)) unit = cube_automorph(unit, d);

  // Every class meets sqrt|m| <= mu < sqrt|m| * eta, which bounds |y|:
  //   m > 0: y <= u sqrt(m) / 2
  //   m < 0: y <= t sqrt(-m) / (2 sqrt d)
  Integer y_bound;
  if (m > 0) {
    y_bound = isqrt(unit.y * unit.y * m / 4) + 1;
  } else {
    y_bound = isqrt(unit.x * unit.x * (-m) / (4 * d)) + 1;
  }

  std::set<IntPair> canon;
  for (Integer y = 0; y <= y_bound; ++y) {
    const Integer x2 = m + d * y * y;
    if (x2 < 0 || !is_square(x2)) continue;
    canon.insert(canonical_representative(p, IntPair{isqrt(x2), y}));
  }

  std::vector<IntPair> reps(canon.begin(), canon.end());
  std::sort(reps.begin(), reps.end(), [](const IntPair& a, const IntPair& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::vector<SolutionOrbit> out;
  out.reserve(reps.size());
  for (const IntPair& r : reps) out.push_back(orbit_of(p, r));
  return out;
}

std::vector<IntPair> orbit_solutions(const SolutionOrbit& orbit, Coordinate c, const Integer& bound) {
  std::set<IntPair> found;
  auto add = [&](const IntPair& s) {
    for (const IntPair& v : orbit.sign_class(s)) found.insert(v);
  };
  const IntPair& rep = orbit.representative;
  if (abs(coordinate_of(rep, c)) <= bound) add(rep);

  // Coordinates are quasi-convex along the orbit: once a value is past the
  // bound and not decreasing, the rest of that direction is past it too.
  for (int dir = 0; dir < 2; ++dir) {
    IntPair cur = rep;
    Integer prev = abs(coordinate_of(rep, c));
    for (long i = 0;; ++i) {
      if (i > kMaxWalk) throw InvariantViolation("orbit walk did not terminate");
      cur = dir == 0 ? orbit.step(cur) : orbit.step_back(cur);
      const Integer v = abs(coordinate_of(cur, c));
      if (v <= bound) {
        add(cur);
      } else if (v >= prev) {
        break;
      }
      prev = v;
    }
  }
  return {found.begin(), found.end()};
}

std::vector<IntPair> solutions_up_to(const NormFormProblem& p, Coordinate c, const Integer& bound) {
  std::set<IntPair> all;
  for (const SolutionOrbit& o : class_representatives(p)) {
    for (IntPair& s : orbit_solutions(o, c, bound)) {
      if (!p.is_solution(s)) throw InvariantViolation("orbit element fails the norm form equation");
      all.insert(std::move(s));
    }
  }
  return {all.begin(), all.end()};
}

std::vector<Integer> coordinate_set(const NormFormProblem& p, Coordinate c, const Integer& bound,
                                    TrivialSolutions trivial) {
  std::vector<Integer> out;
  for (const IntPair& s : solutions_up_to(p, c, bound)) {
    if (trivial == TrivialSolutions::exclude && is_trivial(s)) continue;
    out.push_back(abs(coordinate_of(s, c)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational UnitPowerForm::at(long a) const {
  const QuadNum v = c1 * eps.pow(a) + c2 * eps.conj().pow(a);
  if (!v.is_rational()) throw InvariantViolation("unit power form produced an irrational coordinate");
  return v.x();
}

UnitPowerForm unit_power_form(const NormFormProblem& p, const SolutionOrbit& orbit, Coordinate c) {
  if (!p.is_solution(orbit.representative)) throw InvalidArgument("orbit does not belong to the problem");
  const long d = p.d();
  const QuadNum mu(Rational(orbit.representative.x), Rational(orbit.representative.y), d);
  UnitPowerForm f;
  f.coordinate = c;
  f.eps = QuadNum(Rational(orbit.automorph.x, 2), Rational(orbit.automorph.y, 2), d);
  if (c == Coordinate::first) {
    f.c1 = mu / QuadNum(2);
  } else {
    // mu / (2 sqrt d) = mu * sqrt d / (2 d)
    f.c1 = mu * QuadNum::sqrt_of(d) / QuadNum(2 * d);
  }
  f.c2 = f.c1.conj();
  if (f.eps * f.eps.conj() != QuadNum(1)) throw InvariantViolation("automorph is not a norm-one unit");
  return f;
}

}  // namespace normsearch
