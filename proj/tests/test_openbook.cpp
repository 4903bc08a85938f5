#include <doctest.h>

#include <random>

#include "spinform/openbook.hpp"

using namespace spinform;

namespace {

// Independent oracle: cofactor expansion, exact in 128-bit arithmetic.
__int128 cofactor_det(const IntMat& m) {
  const int n = int(m.rows());
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  __int128 acc = 0;
  for (int j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const __int128 term = __int128(m(0, j)) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("variation map from a monodromy matrix") {
  CHECK(variation_from_monodromy(IntMat::Identity(3, 3)).delta == IntMat::Zero(3, 3));

  IntMat minus = -IntMat::Identity(2, 2);
  CHECK(variation_from_monodromy(minus).delta == (2 * IntMat::Identity(2, 2)).eval());

  IntMat rot(2, 2);
  rot << 0, 1, -1, 0;
  IntMat expected(2, 2);
  expected << 1, -1, 1, 1;
  const VariationData v = variation_from_monodromy(rot);
  CHECK(v.delta == expected);
  CHECK(exact_determinant(v.delta) == 2);

  IntMat rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(variation_from_monodromy(rect), InvalidInputError);
}

TEST_CASE("exact determinant against cofactor expansion") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<Int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 6;
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = entry(rng);
    CHECK(exact_determinant(m) == cofactor_det(m));
  }
  IntMat singular(3, 3);
  singular << 1, 2, 3, 2, 4, 6, 0, 1, 1;
  CHECK(exact_determinant(singular) == 0);
}

TEST_CASE("homotopy sphere criterion") {
  CHECK(is_homotopy_sphere(VariationData{IntMat::Identity(4, 4)}));
  CHECK_FALSE(is_homotopy_sphere(VariationData{IntMat::Zero(2, 2)}));
  CHECK(is_homotopy_sphere(variation_from_monodromy(IntMat::Identity(0, 0))));

  IntMat rot(2, 2);
  rot << 0, 1, -1, 0;
  CHECK_FALSE(is_homotopy_sphere(variation_from_monodromy(rot)));  // det 2

  IntMat unimod(2, 2);
  unimod << 2, 1, 1, 1;
  CHECK(is_homotopy_sphere(VariationData{unimod}));
}

TEST_CASE("universality obstruction verdicts") {
  const VariationData iso{IntMat::Identity(2, 2)};
  const VariationData degenerate{IntMat::Zero(2, 2)};

  CHECK(universality_obstruction(true, true, iso, true) == Universality::NotUniversalCase1);
  CHECK(universality_obstruction(true, true, degenerate, true) ==
        Universality::NotUniversalCase1);
  CHECK(universality_obstruction(true, true, iso, false) == Universality::NotUniversalCase2);
  CHECK(universality_obstruction(true, true, degenerate, false) ==
        Universality::Inconclusive);
  CHECK(universality_obstruction(false, true, iso, false) == Universality::Inconclusive);
  CHECK(universality_obstruction(true, false, iso, true) == Universality::Inconclusive);
}
