#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twobridge/errors.hpp"
#include "twobridge/invariants.hpp"

using namespace twobridge;

namespace {

AdmissiblePair P(Int p, Int q) { return AdmissiblePair::make(p, q); }

std::vector<Int> V(std::initializer_list<Int> v) { return v; }

AlexanderPolynomial delta_of(Int p, Int q) { return alexander(trace_principal_underarc(P(p, q))); }

}  // namespace

TEST_CASE("alexander") {
  CHECK(delta_of(4, 3).coeffs == V({2, 2}));
  CHECK(delta_of(4, 3).to_string() == "2 - 2t");
  CHECK(delta_of(1, 1).coeffs == V({1}));
  CHECK(delta_of(5, 3).to_string() == "1 - 3t + t^2");
  CHECK(delta_of(5, 3).determinant() == 5);
  CHECK(delta_of(5, 3).at_one() == -1);
  CHECK(delta_of(4, 3).at_one() == 0);
}

TEST_CASE("shape_violation") {
  CHECK_FALSE(shape_violation(AlexanderPolynomial{V({1, 3, 1})}));
  CHECK(shape_violation(AlexanderPolynomial{V({1, 0, 1})}));
  CHECK(shape_violation(AlexanderPolynomial{V({1, 2})}));
  CHECK(shape_violation(AlexanderPolynomial{V({2, 2, 2})}));  // Delta(1) = 2
  CHECK(shape_violation(AlexanderPolynomial{}));
}

TEST_CASE("trapezoid_profile") {
  const auto a = trapezoid_profile(V({2, 2}));
  CHECK(a.is_trapezoidal);
  CHECK(a.i0 == 1);
  CHECK(a.radius_m == 1);
  CHECK(a.l == 2);

  const auto b = trapezoid_profile(V({1, 3, 1}));
  CHECK(b.is_trapezoidal);
  CHECK(b.i0 == 2);
  CHECK(b.radius_m == 0);
  CHECK(b.plateau_length() == 1);

  const auto c = trapezoid_profile(V({1, 2, 1, 2}));
  CHECK_FALSE(c.is_trapezoidal);
  CHECK_FALSE(c.i0);
  CHECK_FALSE(c.radius_m);

  CHECK(trapezoid_profile(V({1, 1, 1})).radius_m == 1);
  CHECK(trapezoid_profile(V({1, 2, 3, 3, 3, 2, 1})).i0 == 3);
  CHECK(trapezoid_profile(V({1, 2, 3, 3, 3, 2, 1})).radius_m == 1);
  CHECK_FALSE(trapezoid_profile(V({1, 2, 2})).is_trapezoidal);
  CHECK_FALSE(trapezoid_profile(V({2, 2, 1, 2, 2})).is_trapezoidal);
  CHECK(trapezoid_profile(V({7})).radius_m == 0);
}

TEST_CASE("hm_check") {
  const auto h43 = hm_check(trapezoid_profile(V({2, 2})), 1);
  CHECK(h43.holds);
  CHECK(h43.slack == 0);

  const auto h31 = hm_check(trapezoid_profile(V({1, 1, 1})), 2);
  CHECK(h31.holds);
  CHECK(h31.slack == 0);

  const auto h53 = hm_check(trapezoid_profile(V({1, 3, 1})), 0);
  CHECK(h53.holds);
  CHECK(h53.slack == 0);

  CHECK_FALSE(hm_check(trapezoid_profile(V({1, 1, 1, 1, 1})), 0).holds);
  CHECK(hm_check(trapezoid_profile(V({1, 1, 1, 1, 1})), -4).slack == 0);
  CHECK_THROWS_AS(hm_check(trapezoid_profile(V({1, 2, 1, 2})), 0), PreconditionError);
}

TEST_CASE("check_ih") {
  const auto a = check_ih(V({2, 1, 0}), 2);
  CHECK(a.all());
  REQUIRE(a.witness);
  CHECK(a.witness->h == 1);
  CHECK(a.witness->r == 1);

  const auto b = check_ih(V({1, 0, 0, 0}), 3);
  CHECK(b.all());
  CHECK(b.witness->h == 1);

  const auto c = check_ih(V({1, 0, 2, 0}), 3);
  CHECK_FALSE(c.ih1);
  CHECK_FALSE(c.witness);
  CHECK_FALSE(c.ih3);

  const auto d = check_ih(V({1, 2, 0, 0}), 3);
  CHECK(d.all());
  CHECK(d.witness->h == 2);
  CHECK(d.witness->r == 2);

  // IH2 is judged against the IH1 witness, so it cannot pass without one.
  CHECK_FALSE(c.ih2);
  CHECK_FALSE(check_ih(V({1, 2, 2}), 2).ih1);

  CHECK_THROWS_AS(check_ih(V({1, 0}), 2), DomainError);
  CHECK_THROWS_AS(check_ih(V({1, -2}), 1), DomainError);
}

TEST_CASE("check_alpha_b_relation") {
  CHECK(check_alpha_b_relation(V({2, 2}), V({2, 1, 0})));
  CHECK(check_alpha_b_relation(V({1, 3, 1}), V({1, 2, 0, 0})));
  CHECK_FALSE(check_alpha_b_relation(V({1, 2}), V({2, 1, 0})));
  CHECK_THROWS_AS(check_alpha_b_relation(V({1, 2}), V({2, 1})), DomainError);
}

TEST_CASE("radius is invariant under T2 and T3") {
  for (Int p = 2; p <= 40; ++p) {
    for (Int q = 1; q < 2 * p; q += 2) {
      if (!is_admissible(p, q)) continue;
      const auto x = P(p, q);
      const auto r = trapezoid_profile(delta_of(p, q)).radius_m;
      REQUIRE(r);
      const auto x2 = apply_move(Move::T2, x);
      CHECK(trapezoid_profile(delta_of(x2.p(), x2.q())).radius_m == r);
      if (p > q) {
        const auto x3 = apply_move(Move::T3, x);
        CHECK(trapezoid_profile(delta_of(x3.p(), x3.q())).radius_m == r);
      }
    }
  }
}
