#include <doctest.h>

#include <algorithm>
#include <set>

#include "normsearch/error.hpp"
#include "normsearch/pell_norm.hpp"
#include "oracles.hpp"

using namespace normsearch;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::set<std::pair<std::int64_t, std::int64_t>> as_set(const std::vector<IntPair>& v) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const IntPair& s : v) out.emplace(s.x.get_si(), s.y.get_si());
  return out;
}

}  // namespace

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(NormFormProblem(13, 0), InvalidArgument);
  CHECK_THROWS_AS(NormFormProblem(12, 4), NotSquarefree);
  CHECK(NormFormProblem(13, 4).is_solution({11, 3}));
  CHECK_FALSE(NormFormProblem(13, 4).is_solution({11, 4}));
}

TEST_CASE("class representatives") {
  const NormFormProblem p13(13, 4);
  const auto reps = class_representatives(p13);
  REQUIRE(reps.size() == 1);
  // Minimal |y| in the class is the trivial solution; (11, 3) is one step away.
  CHECK(reps[0].representative == IntPair{2, 0});
  CHECK(reps[0].step({2, 0}) == IntPair{11, 3});
  CHECK(reps[0].step({11, 3}) == IntPair{119, 33});
  CHECK(reps[0].step_back({119, 33}) == IntPair{11, 3});
  CHECK(canonical_representative(p13, {1298, 360}) == IntPair{2, 0});

  const auto r2 = class_representatives(NormFormProblem(2, -1));
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].representative == IntPair{1, 1});

  CHECK(class_representatives(NormFormProblem(5, 3)).empty());
  CHECK(class_representatives(NormFormProblem(3, -1)).empty());
}

TEST_CASE("coordinate sets") {
  const NormFormProblem p13(13, 4);
  CHECK(coordinate_set(p13, Coordinate::first, Integer(2000000)) ==
        ints({11, 119, 1298, 14159, 154451, 1684802}));
  CHECK(coordinate_set(p13, Coordinate::second, Integer(500000)) == ints({3, 33, 360, 3927, 42837, 467280}));
  CHECK(coordinate_set(p13, Coordinate::first, Integer(200), TrivialSolutions::include) == ints({2, 11, 119}));

  const NormFormProblem p5(5, 4);
  CHECK(coordinate_set(p5, Coordinate::first, Integer(20), TrivialSolutions::include) == ints({2, 3, 7, 18}));
  CHECK(coordinate_set(p5, Coordinate::first, Integer(20)) == ints({3, 7, 18}));

  CHECK(coordinate_set(NormFormProblem(2, -1), Coordinate::second, Integer(200)) == ints({1, 5, 29, 169}));
  CHECK(coordinate_set(NormFormProblem(5, 3), Coordinate::first, Integer(1000)).empty());
}

TEST_CASE("orbit generation equals exhaustive search") {
  for (long d : {2L, 3L, 5L, 6L, 7L, 13L, 17L, 21L, 29L, 41L, 46L}) {
    for (long m = -20; m <= 20; ++m) {
      if (m == 0) continue;
      CAPTURE(d);
      CAPTURE(m);
      const NormFormProblem p(d, m);
      const auto got = as_set(solutions_up_to(p, Coordinate::first, Integer(20000)));
      CHECK(got == oracle::norm_solutions(d, m, 20000));
    }
  }
}

TEST_CASE("orbit steps stay integral and on the curve") {
  const NormFormProblem p(5, 4);
  for (const SolutionOrbit& o : class_representatives(p)) {
    IntPair s = o.representative;
    for (int i = 0; i < 30; ++i) {
      s = o.step(s);
      CHECK(p.is_solution(s));
    }
    for (int i = 0; i < 30; ++i) s = o.step_back(s);
    CHECK(s == o.representative);
  }
  // (1, 1) on x^2 - 5y^2 = -4 has x + y even, so the half automorph applies.
  const SolutionOrbit odd = orbit_of(NormFormProblem(5, -4), {1, 1});
  CHECK(odd.automorph == IntPair{3, 1});
  // (2, 0) on m = 4 for d = 13 keeps integrality too.
  CHECK(orbit_of(NormFormProblem(13, 4), {2, 0}).automorph == IntPair{11, 3});
  // (4, 1) on x^2 - 13 y^2 = 3 has x + y odd; the cube of the automorph is integral.
  const SolutionOrbit cubed = orbit_of(NormFormProblem(13, 3), {4, 1});
  CHECK(cubed.automorph == IntPair{1298, 360});
}

TEST_CASE("unit power form") {
  const NormFormProblem p13(13, 4);
  const SolutionOrbit o = orbit_of(p13, {11, 3});
  const UnitPowerForm f1 = unit_power_form(p13, o, Coordinate::first);
  CHECK(f1.at(0) == 11);
  CHECK(f1.at(1) == 119);
  CHECK(f1.c2 == f1.c1.conj());
  CHECK(f1.eps * f1.eps.conj() == QuadNum(1));
  const UnitPowerForm f2 = unit_power_form(p13, o, Coordinate::second);
  CHECK(f2.at(0) == 3);
  CHECK(f2.at(2) == 360);

  const NormFormProblem p2(2, -1);
  const SolutionOrbit o2 = class_representatives(p2).front();
  CHECK(unit_power_form(p2, o2, Coordinate::second).at(1) == 5);
  CHECK(unit_power_form(p2, o2, Coordinate::first).at(1) == 7);
}
