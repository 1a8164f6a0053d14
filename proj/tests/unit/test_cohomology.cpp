#include "support.hpp"

#include "../oracle/cohomology_oracle.hpp"

using namespace endo;
using namespace oracle;

TEST_CASE("test matrix has 27 involution lattices") {
  const auto lattices = involution_matrix();
  CHECK(lattices.size() == 27);
  std::set<IntMatrix> distinct(lattices.begin(), lattices.end());
  CHECK(distinct.size() == 27);
  for (const auto& s : lattices) CHECK((s * s).is_identity());
}

TEST_CASE("h1 agrees with the brute-force oracle") {
  for (const auto& sigma : involution_matrix()) {
    CAPTURE(sigma.to_string());
    const RealTorus t(sigma);
    const BruteForce bf(sigma);
    const TateGroup g = h1(t);
    CHECK(static_cast<std::size_t>(g.order()) == bf.class_count());
    CHECK(g.elements().size() == bf.class_count());
    for (Int d : g.divisors()) CHECK(d == 2);
    const TateGroup dual = dual_component_group(t);
    CHECK(static_cast<std::size_t>(dual.order()) == BruteForce(sigma.transpose()).class_count());
  }
}

TEST_CASE("cocycle_class separates exactly the oracle classes") {
  for (const auto& sigma : involution_matrix()) {
    CAPTURE(sigma.to_string());
    const RealTorus t(sigma);
    const BruteForce bf(sigma);
    std::vector<IntVector> coords;
    for (const auto& th : bf.cocycles) {
      const TorusPoint p = TorusPoint::from_phases(th);
      REQUIRE(is_cocycle(t, p));
      coords.push_back(cocycle_class(t, p).coords);
    }
    for (std::size_t i = 0; i < bf.cocycles.size(); ++i)
      for (std::size_t j = i; j < bf.cocycles.size(); ++j)
        CHECK((coords[i] == coords[j]) == bf.cohomologous(bf.cocycles[i], bf.cocycles[j]));
  }
}

TEST_CASE("pairing equals evaluation of the character on the cocycle") {
  for (const auto& sigma : involution_matrix()) {
    CAPTURE(sigma.to_string());
    const RealTorus t(sigma);
    const BruteForce bf(sigma);
    const TateGroup dual = dual_component_group(t);
    for (const auto& kc : dual.elements()) {
      const IntVector mu = dual.representative(kc);
      const DualComponentCharacter kappa = kappa_of(t, mu);
      for (const auto& th : bf.cocycles) {
        const CohomologyClass cls = cocycle_class(t, TorusPoint::from_phases(th));
        CHECK(tate_nakayama_pair(cls, kappa) == evaluate_character(mu, th));
      }
    }
    CHECK(pairing_is_nondegenerate(t));
  }
}

TEST_CASE("cocycles and boundaries with magnitudes") {
  const RealTorus t(IntMatrix::from_rows({{0, 1}, {1, 0}}));
  // (m, 1/m) is a cocycle for the swap; so is (2, 1/2)
  TorusPoint p = TorusPoint::from_real({Rational(2), Rational(1, 2)});
  CHECK(is_cocycle(t, p));
  CHECK(cocycle_class(t, p).is_zero());
  const TorusPoint b = boundary(t, TorusPoint::from_real({Rational(3), Rational(-5)}));
  CHECK(is_cocycle(t, b));
  CHECK(cocycle_class(t, b).is_zero());
  CHECK_FALSE(is_cocycle(t, TorusPoint::from_real({Rational(2), Rational(2)})));
  CHECK_THROWS_AS(cocycle_class(t, TorusPoint::from_real({Rational(2), Rational(2)})), CohomologyError);
}

TEST_CASE("compact rank one: -1 is the nontrivial class and s = -1 the nontrivial kappa") {
  const RealTorus t = RealTorus::compact(1);
  const CohomologyClass c = cocycle_class(t, TorusPoint::from_real({Rational(-1)}));
  CHECK_FALSE(c.is_zero());
  const DualComponentCharacter k = kappa_from_s(t, {Rational(1, 2)});
  CHECK_FALSE(k.is_trivial());
  CHECK(tate_nakayama_pair(c, k) == -1);
  CHECK(kappa_from_s(t, {Rational(0)}).is_trivial());
  CHECK_THROWS_AS(kappa_from_s(t, {Rational(1, 3)}), CohomologyError);
}

TEST_CASE("kappa_from_s rejects s that is not Galois-fixed") {
  const RealTorus t(IntMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(kappa_from_s(t, {Rational(1, 2), Rational(0)}), CohomologyError);
  CHECK(kappa_from_s(RealTorus(diag({1})), {Rational(1, 2)}).is_trivial());
}

TEST_CASE("involution must square to the identity") {
  CHECK_THROWS_AS(RealTorus(IntMatrix::from_rows({{0, 1}, {-1, 0}})), CohomologyError);
}

TEST_CASE("centers of simply connected groups") {
  CHECK(center_points(IntMatrix::from_rows({{2}})).size() == 2);
  CHECK(center_points(IntMatrix::from_rows({{2, -1}, {-1, 2}})).size() == 3);
  CHECK(center_points(IntMatrix::from_rows({{2, -1}, {-2, 2}})).size() == 2);
  CHECK(center_points(IntMatrix::from_rows({{2, -1}, {-3, 2}})).size() == 1);
}

TEST_CASE("quotient torus of T x T by the antidiagonal center of SL(2)") {
  const QuotientTorus u = quotient_torus_lattice(RealTorus::compact(2), {{Rational(1, 2), Rational(1, 2)}});
  CHECK(u.torus.involution() == diag({-1, -1}));
  CHECK(h1(u.torus).order() == 4);
  CHECK_THROWS(u.cocharacter_coords({Rational(1, 2), Rational(0)}));
  const IntVector c = u.cocharacter_coords({Rational(1, 2), Rational(1, 2)});
  CHECK(c.size() == 2);
  // (1, 1) pairs integrally with (1/2, 1/2); (1, 0) does not
  CHECK(u.character_coords({1, 1}).size() == 2);
  CHECK_THROWS(u.character_coords({1, 0}));
}
