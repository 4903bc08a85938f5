#include <doctest.h>

#include <random>

#include "spinform/quadform.hpp"
#include "spinform/spin_mcg.hpp"

using namespace spinform;

TEST_CASE("evaluation on the once-bounded torus") {
  const SurfaceSignature s{1, 1};
  const QuadraticForm q = q_standard(s);
  const auto m = HomologyClass::basis_vector(s, 0);
  const auto l = HomologyClass::basis_vector(s, 1);
  CHECK(evaluate(q, m) == 0);
  CHECK(evaluate(q, l) == 0);
  CHECK(evaluate(q, HomologyClass::from_coords(s, {1, 1})) == 1);
  CHECK(evaluate(q, HomologyClass::zero(s)) == 0);
}

TEST_CASE("arf invariant") {
  CHECK(arf(q_standard(SurfaceSignature{3, 1})) == 0);

  QuadraticForm q = q_standard(SurfaceSignature{1, 0});
  q.basis_values = Gf2Vec{0b11, 2};
  CHECK(arf(q) == 1);

  CHECK_THROWS_AS(arf(q_standard(SurfaceSignature{0, 3})), UndefinedArfError);

  // Enumerate all 16 forms at genus 2: exactly 6 have Arf 1.
  const auto [zeros, ones] = arf_census(2);
  CHECK(zeros == 10);
  CHECK(ones == 6);
}

TEST_CASE("census matches the closed formula") {
  for (int g = 1; g <= 3; ++g) {
    const auto [zeros, ones] = arf_census(g);
    const std::uint64_t half = std::uint64_t{1} << (2 * g - 1);
    const std::uint64_t quarter = std::uint64_t{1} << (g - 1);
    CHECK(zeros == half + quarter);
    CHECK(ones == half - quarter);
  }
}

TEST_CASE("quadratic relation holds for every form at rank <= 6") {
  for (const SurfaceSignature s : {SurfaceSignature{3, 0}, SurfaceSignature{1, 4},
                                   SurfaceSignature{0, 5}, SurfaceSignature{2, 3}}) {
    const auto form = IntersectionForm::standard(s);
    const int n = s.rank();
    enumerate_forms(form, [&](const QuadraticForm& q) {
      for (std::uint64_t xb = 0; xb < (std::uint64_t{1} << n); ++xb)
        for (std::uint64_t yb = 0; yb < (std::uint64_t{1} << n); ++yb) {
          const Gf2Vec x{xb, n}, y{yb, n};
          const int lhs = evaluate_bits(q, x + y);
          const int cross = parity64(x.bits & form.mod2.apply(y).bits);
          CHECK(lhs == (evaluate_bits(q, x) ^ evaluate_bits(q, y) ^ cross));
        }
    });
  }
}

TEST_CASE("pullback along transvections") {
  const SurfaceSignature s{2, 0};
  const auto form = IntersectionForm::standard(s);
  const QuadraticForm q0 = q_standard(s);

  CHECK(pullback(q0, Gf2Mat::identity(4)) == q0);

  // tau_gamma fixes q exactly when q(gamma) = 1.
  enumerate_forms(form, [&](const QuadraticForm& q) {
    for (std::uint64_t gb = 1; gb < 16; ++gb) {
      std::vector<Int> gv(4);
      for (int i = 0; i < 4; ++i) gv[size_t(i)] = Int((gb >> i) & 1);
      const auto gamma = HomologyClass::from_coords(s, gv);
      const Gf2Mat t = transvection_matrix_z2(gamma, form);
      const bool fixed = pullback(q, t) == q;
      CHECK(fixed == (evaluate(q, gamma) == 1));
      CHECK(preserves_q(t, q) == fixed);
    }
  });

  Gf2Mat collapse(4, 4);
  collapse.set(0, 0, 1);
  CHECK_THROWS_AS(pullback(q0, collapse), InvalidInputError);
}

TEST_CASE("arf is a symplectic invariant at genus 1 and 2") {
  for (int g = 1; g <= 2; ++g) {
    const SurfaceSignature s{g, 0};
    const auto form = IntersectionForm::standard(s);
    const auto group = enumerate_symplectic_group(g);
    enumerate_forms(form, [&](const QuadraticForm& q) {
      const int a = arf(q);
      for (const std::uint64_t key : group)
        CHECK(arf(pullback(q, Gf2Mat::from_key8(key, 2 * g))) == a);
    });
  }
}

TEST_CASE("the stabilizer of q is closed under products") {
  const SurfaceSignature s{2, 0};
  const auto form = IntersectionForm::standard(s);
  const QuadraticForm q = q_standard(s);

  // Collect a few stabilizing transvections, multiply random pairs.
  std::vector<Gf2Mat> stab;
  for (std::uint64_t gb = 1; gb < 16; ++gb) {
    std::vector<Int> gv(4);
    for (int i = 0; i < 4; ++i) gv[size_t(i)] = Int((gb >> i) & 1);
    const auto gamma = HomologyClass::from_coords(s, gv);
    const Gf2Mat t = transvection_matrix_z2(gamma, form);
    if (preserves_q(t, q)) stab.push_back(t);
  }
  REQUIRE(stab.size() > 1);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<size_t> pick(0, stab.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Gf2Mat m = stab[pick(rng)] * stab[pick(rng)] * stab[pick(rng)];
    CHECK(preserves_q(m, q));
  }
}

TEST_CASE("q_standard vanishes on boundary classes") {
  const SurfaceSignature s{0, 3};
  const QuadraticForm q = q_standard(s);
  for (int i = 0; i < s.rank(); ++i)
    CHECK(evaluate(q, HomologyClass::basis_vector(s, i)) == 0);
}

TEST_CASE("enumeration guard and counts") {
  int count = 0;
  enumerate_forms(IntersectionForm::standard(SurfaceSignature{1, 0}),
                  [&](const QuadraticForm&) { ++count; });
  CHECK(count == 4);

  SurfaceSignature big{13, 0};  // rank 26
  CHECK_THROWS_AS(
      enumerate_forms(IntersectionForm::standard(big), [](const QuadraticForm&) {}),
      GuardError);
}
