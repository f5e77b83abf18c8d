#include <doctest.h>

#include "normsearch/error.hpp"
#include "normsearch/recurrence.hpp"
#include "oracles.hpp"

using namespace normsearch;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

QuadNum q(long x, long y, long d) { return {Rational(x), Rational(y), d}; }

LinearRecurrence rec(const char* lit) { return LinearRecurrence::parse(lit); }

}  // namespace

TEST_CASE("parsing and term generation") {
  CHECK(rec("2,-1;0,2").terms_up_to(5) == ints({0, 2, 4, 6, 8, 10}));
  CHECK(rec("1,-1;0,3").terms_up_to(7) == ints({0, 3, 3, 0, -3, -3, 0, 3}));
  CHECK(rec(" 6 , -1 ; 0 , 1 ").terms_up_to(4) == ints({0, 1, 6, 35, 204}));
  CHECK(rec("3;2").terms_up_to(3) == ints({2, 6, 18, 54}));
  CHECK(rec("6,-1;0,1").literal() == "6,-1;0,1");

  CHECK_THROWS_AS(rec("1,0;0,1"), InvalidArgument);   // a_d = 0
  CHECK_THROWS_AS(rec("1,1;0,0"), InvalidArgument);   // zero initials
  CHECK_THROWS_AS(rec("1,1;0"), InvalidArgument);     // wrong count
  CHECK_THROWS_AS(rec("1,x;0,1"), InvalidArgument);
  CHECK_THROWS_AS(rec("1,1"), InvalidArgument);
}

TEST_CASE("binet forms") {
  const BinetForm b = binet(rec("6,-1;0,1"));
  CHECK(b.root1 == q(3, 2, 2));
  CHECK(b.root2 == q(3, -2, 2));
  CHECK(b.coeff1 == QuadNum(Rational(0), Rational(1, 8), 2));
  CHECK(b.coeff2 == -b.coeff1);
  // 1 / (4 sqrt 2)
  CHECK(b.coeff1 * QuadNum(4) * QuadNum::sqrt_of(2) == QuadNum(1));
  CHECK(b.discriminant == 32);

  const BinetForm r = binet(rec("1,2;1,1"));
  CHECK(r.rational_roots());
  CHECK(r.root1 == QuadNum(2));
  CHECK(r.root2 == QuadNum(-1));
  CHECK(r.coeff1 == QuadNum(Rational(2, 3)));
  CHECK(r.coeff2 == QuadNum(Rational(1, 3)));

  const auto terms = rec("1,2;1,1").terms_up_to(40);
  for (long n = 0; n <= 40; ++n) CHECK(r.value(n) == QuadNum(Rational(terms[n])));

  CHECK_THROWS_AS(binet(rec("2,-1;0,2")), RepeatedRoot);
  CHECK_THROWS_AS(binet(rec("1,1,1;0,0,1")), UnsupportedOrder);
}

TEST_CASE("characteristic roots") {
  const auto roots = characteristic_roots(rec("1,-1;0,3"));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == QuadNum(Rational(1, 2), Rational(1, 2), -3));
  CHECK(roots[1] == QuadNum(Rational(1, 2), Rational(-1, 2), -3));
  // (x - 2)(x^2 - 2x - 2) = x^3 - 4x^2 + 2x + 4
  const auto cubic = characteristic_roots(rec("4,-2,-4;0,0,1"));
  REQUIRE(cubic.size() == 3);
  CHECK(std::find(cubic.begin(), cubic.end(), QuadNum(2)) != cubic.end());
  CHECK(std::find(cubic.begin(), cubic.end(), q(1, 1, 3)) != cubic.end());
  CHECK_THROWS_AS(characteristic_roots(rec("0,0,2;0,0,1")), UnsupportedOrder);  // x^3 - 2
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity_order(QuadNum(1)) == 1);
  CHECK(root_of_unity_order(QuadNum(-1)) == 2);
  CHECK(root_of_unity_order(QuadNum::sqrt_of(-1)) == 4);
  CHECK(root_of_unity_order(QuadNum(Rational(-1, 2), Rational(1, 2), -3)) == 3);
  CHECK(root_of_unity_order(QuadNum(Rational(1, 2), Rational(1, 2), -3)) == 6);
  CHECK_FALSE(root_of_unity_order(q(1, 1, 2)));
  CHECK_FALSE(root_of_unity_order(QuadNum(2)));
}

TEST_CASE("degeneracy") {
  const DegeneracyVerdict v = is_degenerate(rec("1,-1;0,3"));
  CHECK(v.degenerate);
  CHECK(v.ratio_order == 3);
  CHECK(v.describe().find("cube root of unity") != std::string::npos);

  CHECK_FALSE(is_degenerate(rec("6,-1;0,1")).degenerate);

  const DegeneracyVerdict sq = is_degenerate(rec("0,5;0,1"));
  CHECK(sq.degenerate);
  CHECK(sq.ratio_order == 2);

  const DegeneracyVerdict rep = is_degenerate(rec("2,-1;0,2"));
  CHECK(rep.repeated_root);
  CHECK_FALSE(rep.degenerate);
}

TEST_CASE("degeneracy closed form against the ratio-power oracle") {
  for (long a1 = -10; a1 <= 10; ++a1) {
    for (long a2 = -10; a2 <= 10; ++a2) {
      if (a2 == 0) continue;
      CAPTURE(a1);
      CAPTURE(a2);
      const auto [alpha, beta] = oracle::quadratic_roots(a1, a2);
      const auto order = oracle::ratio_root_order(alpha, beta, 12);
      const DegeneracyVerdict v = is_degenerate(LinearRecurrence({a1, a2}, {0, 1}));
      CHECK(v.degenerate == order.has_value());
      if (order) CHECK(v.ratio_order == order);
      CHECK(v.repeated_root == (alpha == beta));
    }
  }
}

TEST_CASE("multiplicative dependence") {
  const DependenceVerdict d1 = roots_multiplicatively_independent(q(3, 2, 2), q(3, -2, 2), 5);
  CHECK(d1.dependent);
  CHECK(d1.witness == std::make_pair(1L, 1L));

  const DependenceVerdict d2 = roots_multiplicatively_independent(q(1, 1, 3), q(1, -1, 3), 10);
  CHECK_FALSE(d2.dependent);
  CHECK(d2.bound == 10);
  CHECK(d2.describe().find("up to 10") != std::string::npos);

  // 2^3 = 8: 2^3 * 8^-1 = 1
  const DependenceVerdict d3 = roots_multiplicatively_independent(QuadNum(2), QuadNum(8), 3);
  CHECK(d3.dependent);
  CHECK(d3.witness == std::make_pair(3L, -1L));

  CHECK_FALSE(roots_multiplicatively_independent(QuadNum(2), QuadNum(3), 6).dependent);
  CHECK(roots_multiplicatively_independent(QuadNum(-1), QuadNum(5), 2).dependent);
  CHECK_FALSE(roots_multiplicatively_independent(QuadNum(2), QuadNum(8), 2).dependent);
}

TEST_CASE("multi-recurrence evaluation and degeneracy") {
  auto base = [](long a, long b) { return std::vector<QuadNum>{QuadNum(a), QuadNum(b)}; };
  const MultiRecurrence f(2, {MultiTerm{constant_polynomial(2, 1), base(5, 6)},
                              MultiTerm{constant_polynomial(2, 1), base(10, 3)}});
  const std::vector<long> n11{1, 1}, n00{0, 0}, n21{2, 1};
  CHECK(eval_multirec(f, n11) == QuadNum(60));
  CHECK(eval_multirec(f, n00) == QuadNum(2));
  CHECK(eval_multirec(f, n21) == QuadNum(Integer(5 * 5 * 6 + 100 * 3)));
  const std::vector<long> bad{1};
  CHECK_THROWS_AS(eval_multirec(f, bad), DimensionMismatch);

  const MultiDegeneracyVerdict v = multirec_degenerate(f, 3);
  CHECK(v.degenerate);
  CHECK(v.witness == std::vector<long>{1, 1});

  const MultiRecurrence g(2, {MultiTerm{constant_polynomial(2, 1), base(2, 3)},
                              MultiTerm{constant_polynomial(2, 1), base(3, 2)}});
  const MultiDegeneracyVerdict w = multirec_degenerate(g, 5);
  CHECK(w.degenerate);
  CHECK(w.witness == std::vector<long>{1, 1});

  const MultiRecurrence single(2, {MultiTerm{constant_polynomial(2, 1), base(2, 3)}});
  CHECK_FALSE(multirec_degenerate(single, 5).degenerate);

  // polynomial coefficient: n1 * 2^n1 3^n2
  Polynomial p;
  p[{1, 0}] = QuadNum(1);
  const MultiRecurrence h(2, {MultiTerm{p, base(2, 3)}});
  const std::vector<long> n32{3, 2};
  CHECK(eval_multirec(h, n32) == QuadNum(3 * 8 * 9));
}
