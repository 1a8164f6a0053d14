#include "support.hpp"

#include "endo/lattice.hpp"

#include <random>

using namespace endo;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

// gcd of all entries
Int gcd_of_entries(const IntMatrix& m) {
  Int g = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g = std::gcd(g, m(i, j));
  return g;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
  CHECK(determinant(IntMatrix::from_rows({{2, -1}, {-1, 2}})) == 3);
  CHECK(determinant(IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})) == 4);
  CHECK(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("unimodular inverse") {
  const IntMatrix m = IntMatrix::from_rows({{1, 2, 0}, {0, 1, 3}, {0, 0, 1}});
  CHECK((m * unimodular_inverse(m)).is_identity());
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), std::domain_error);
}

TEST_CASE("Smith form: D = U A V, unimodular transforms, divisibility chain") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    const IntMatrix a = random_matrix(rng, r, c, 6);
    const SmithForm s = smith_normal_form(a);
    CHECK(s.d == s.u * a * s.v);
    CHECK(std::abs(determinant(s.u)) == 1);
    CHECK(std::abs(determinant(s.v)) == 1);
    CHECK(is_diagonal(s.d));
    const IntVector dv = s.divisors();
    for (std::size_t i = 0; i < dv.size(); ++i) {
      CHECK(dv[i] > 0);
      if (i + 1 < dv.size()) CHECK(dv[i + 1] % dv[i] == 0);
    }
    // first divisor is the gcd of the entries
    if (!dv.empty()) CHECK(dv[0] == gcd_of_entries(a));
  }
}

TEST_CASE("Smith form of a Cartan matrix gives the center") {
  const SmithForm s = smith_normal_form(IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  const IntVector dv = s.divisors();
  REQUIRE(dv.size() == 3);
  CHECK(dv[0] == 1);
  CHECK(dv[1] == 1);
  CHECK(dv[2] == 4);
}

TEST_CASE("integer kernel is saturated and annihilated") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + trial % 3, 4, 3);
    const IntMatrix k = integer_kernel(a);
    CHECK((a * k) == IntMatrix(a.rows(), k.cols()));
    if (k.cols() > 0) {
      const SmithForm s = smith_normal_form(k);
      for (Int d : s.divisors()) CHECK(d == 1);
    }
  }
}

TEST_CASE("lattice basis of Z^2 + (1/2, 1/2)") {
  const auto basis = lattice_basis({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 2)}});
  REQUIRE(basis.size() == 2);
  // covolume 1/2
  const Rational det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
  CHECK(boost::abs(det) == Rational(1, 2));
}

TEST_CASE("frac") {
  CHECK(frac(Rational(7, 4)) == Rational(3, 4));
  CHECK(frac(Rational(-1, 4)) == Rational(3, 4));
  CHECK(frac(Rational(2)) == Rational(0));
}
