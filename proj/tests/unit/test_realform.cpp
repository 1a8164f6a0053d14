#include "support.hpp"

#include "endo/realform.hpp"

#include <cmath>
#include <set>

using namespace endo;

namespace {

constexpr auto C = Grade::compact;
constexpr auto N = Grade::noncompact;

std::complex<double> cpow_i(int k) {
  const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[((k % 4) + 4) % 4];
}

struct GradingCase {
  const char* type;
  std::vector<Grade> grades;
  std::size_t real_weyl_order;  // |W(K, T)| of the connected maximal compact
};

// sl2(R), su2, su(2,1) twice, su3, sp4(R), sp(1,1), so(5) compact, split G2, compact G2, sl2 x su2
const GradingCase kCases[] = {
    {"A1", {N}, 1},       {"A1", {C}, 2},    {"A2", {C, N}, 2},    {"A2", {N, N}, 2},
    {"A2", {C, C}, 6},    {"C2", {C, N}, 2}, {"C2", {N, C}, 4},    {"C2", {C, C}, 8},
    {"G2", {N, C}, 4},    {"G2", {C, C}, 12}, {"A1xA1", {N, C}, 2}, {"A3", {C, N, C}, 4},
};

}  // namespace

TEST_CASE("grading is additive mod 2 on root coefficients") {
  const RealFormGrading g(build_root_datum("B3"), {N, C, N});
  const auto& d = g.datum();
  for (std::size_t i = 0; i < d.num_roots(); ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += d.root_coefficients()[i][j] * (j == 1 ? 0 : 1);
    CHECK(static_cast<int>(g.grade(i)) == ((s % 2) + 2) % 2);
  }
  CHECK(g.num_compact_roots() + g.num_noncompact_roots() == d.num_roots());
}

TEST_CASE("dimension profile of sl(2, R)") {
  const auto p = dimension_profile(RealFormGrading(build_root_datum("A1"), {N}));
  CHECK(p.dim_g == 3);
  CHECK(p.dim_t == 1);
  CHECK(p.dim_k == 1);
  CHECK(p.dim_g_over_t == 2);
  CHECK(p.dim_g_over_k == 2);
}

TEST_CASE("eighth roots") {
  CHECK(EighthRoot(9) == EighthRoot(1));
  CHECK(EighthRoot(-1) == EighthRoot(7));
  CHECK((EighthRoot(3) * EighthRoot(6)).exponent() == 1);
  CHECK((EighthRoot(3) * EighthRoot(3).inverse()).exponent() == 0);
  for (int k = 0; k < 8; ++k) {
    const auto v = EighthRoot(k).value();
    CHECK(v.real() == doctest::Approx(std::cos(M_PI * k / 4)));
    CHECK(v.imag() == doctest::Approx(std::sin(M_PI * k / 4)));
  }
}

TEST_CASE("Weil constant is the product of one-dimensional Fresnel factors") {
  // each +x^2 contributes e^{i pi/4}, each -x^2 contributes e^{-i pi/4}
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      std::complex<double> prod = 1.0;
      for (int i = 0; i < p; ++i) prod *= std::polar(1.0, M_PI / 4);
      for (int i = 0; i < q; ++i) prod *= std::polar(1.0, -M_PI / 4);
      CHECK(std::abs(weil_constant(p, q).value() - prod) < 1e-14);
    }
}

TEST_CASE("prefactor equals (-i)^{|positive roots|} (-1)^{|positive noncompact roots|}") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    const RealFormGrading g(build_root_datum(c.type), c.grades);
    const int pos = static_cast<int>(g.datum().num_positive_roots());
    int pos_nc = 0;
    for (std::size_t i = 0; i < g.datum().num_positive_roots(); ++i) pos_nc += !g.is_compact(i);
    const auto expected = cpow_i(-pos) * (pos_nc % 2 ? -1.0 : 1.0);
    CHECK(std::abs(prefactor(dimension_profile(g)).value() - expected) < 1e-14);
  }
}

TEST_CASE("real Weyl group orders") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    const RealFormGrading g(build_root_datum(c.type), c.grades);
    const auto w = real_weyl_group(g);
    CHECK(w.size() == c.real_weyl_order);
    for (const auto& x : w) CHECK(preserves_grading(g, x.matrix));
  }
}

TEST_CASE("real Weyl group is the kernel of inv") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    const RealFormGrading g(build_root_datum(c.type), c.grades);
    const auto weyl = enumerate_weyl(g.datum());
    const auto real = real_weyl_group(g);
    const auto ker = inv_kernel(g, weyl);
    std::set<IntMatrix> a, b;
    for (const auto& x : real) a.insert(x.matrix);
    for (const auto& x : ker) b.insert(x.matrix);
    CHECK(a == b);
  }
}

TEST_CASE("inv is a cocycle: inv(xy) = y^-1 inv(x) + inv(y) mod 2") {
  for (const auto& c : kCases) {
    CAPTURE(c.type);
    const RealFormGrading g(build_root_datum(c.type), c.grades);
    const auto weyl = enumerate_weyl(g.datum());
    const auto inv = inv_cocycle(g, weyl);
    std::map<IntMatrix, std::size_t> index;
    for (std::size_t i = 0; i < weyl.size(); ++i) index[weyl[i].matrix] = i;
    for (std::size_t i = 0; i < weyl.size(); ++i)
      for (std::size_t j = 0; j < weyl.size(); ++j) {
        const std::size_t k = index.at(weyl[i].matrix * weyl[j].matrix);
        CHECK(inv[k] == mod2(add(inverse_of(weyl[j].matrix) * inv[i], inv[j])));
      }
  }
}

TEST_CASE("inv of a simple reflection") {
  const RealFormGrading g(build_root_datum("C2"), {C, N});
  const auto weyl = enumerate_weyl(g.datum());
  const auto inv = inv_cocycle(g, weyl);
  for (std::size_t i = 0; i < weyl.size(); ++i) {
    if (weyl[i].word.size() != 1) continue;
    const int s = weyl[i].word[0];
    IntVector expected(2, 0);
    expected[s] = static_cast<Int>(g.simple_grades()[s]);
    CHECK(inv[i] == expected);
  }
}
