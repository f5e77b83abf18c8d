#pragma once

#include <array>
#include <vector>

#include "normsearch/quadratic.hpp"

namespace normsearch {

/// x^2 - d*y^2 = m over the basis {1, sqrt d}.
class NormFormProblem {
 public:
  NormFormProblem(long d, Integer m);

  long d() const { return d_; }
  const Integer& m() const { return m_; }
  const PellData& pell() const { return pell_; }

  bool is_solution(const IntPair& s) const { return s.x * s.x - d_ * s.y * s.y == m_; }

 private:
  long d_;
  Integer m_;
  PellData pell_;
};

/// One class of solutions: everything reachable from `representative` by the
/// automorph step (or its inverse) followed by a sign change.
struct SolutionOrbit {
  IntPair representative;
  // (t, u) with t^2 - d u^2 = 4. This is the problem's automorph, or its cube
  // when the automorph itself does not preserve integrality on this orbit.
  IntPair automorph;
  long d = 0;

  // (x, y) -> ((t x + d u y)/2, (u x + t y)/2); throws InvariantViolation if
  // the image is not integral.
  IntPair step(const IntPair& s) const;
  IntPair step_back(const IntPair& s) const;
  std::array<IntPair, 4> sign_class(const IntPair& s) const;
};

// Orbit whose step preserves integrality for the given solution.
SolutionOrbit orbit_of(const NormFormProblem& p, const IntPair& solution);

// Canonical class member: minimal |y|, then minimal |x|, both non-negative.
IntPair canonical_representative(const NormFormProblem& p, const IntPair& solution);

std::vector<SolutionOrbit> class_representatives(const NormFormProblem& p);

enum class Coordinate { first = 1, second = 2 };

enum class TrivialSolutions { exclude, include };

// A solution is trivial when one of its coordinates is zero.
inline bool is_trivial(const IntPair& s) { return s.x == 0 || s.y == 0; }

// Every signed solution of the orbit whose chosen coordinate has |value| <= bound.
std::vector<IntPair> orbit_solutions(const SolutionOrbit& orbit, Coordinate c, const Integer& bound);

// Union over all classes, sorted and deduplicated.
std::vector<IntPair> solutions_up_to(const NormFormProblem& p, Coordinate c, const Integer& bound);

/// Absolute values of coordinate `c` over all solutions, restricted to
/// values <= bound. Solutions with a zero coordinate are left out unless
/// `trivial` says otherwise.
std::vector<Integer> coordinate_set(const NormFormProblem& p, Coordinate c, const Integer& bound,
                                    TrivialSolutions trivial = TrivialSolutions::exclude);

/// coordinate_a = c1 * eps^a + c2 * conj(eps)^a
struct UnitPowerForm {
  QuadNum c1;
  QuadNum c2;
  QuadNum eps;
  Coordinate coordinate = Coordinate::first;

  // Throws InvariantViolation if the result has a nonzero sqrt(d) part.
  Rational at(long a) const;
};

UnitPowerForm unit_power_form(const NormFormProblem& p, const SolutionOrbit& orbit, Coordinate c);

}  // namespace normsearch
