// Acceptance suite: runs every release criterion and prints one line per
// check. Exit code 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "spinform/data_io.hpp"
#include "spinform/extendibility.hpp"
#include "spinform/openbook.hpp"
#include "spinform/spin_mcg.hpp"

using namespace spinform;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, const char* what) : number_(number), what_(what) {
    start_ = std::chrono::steady_clock::now();
  }

  void expect(bool ok, const std::string& detail = {}) {
    if (!ok) {
      pass_ = false;
      if (!detail.empty()) details_.push_back(detail);
    }
  }

  ~Criterion() {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    std::printf("[%s] criterion %2d: %s (%lld ms)\n", pass_ ? "PASS" : "FAIL", number_,
                what_, static_cast<long long>(elapsed));
    for (const auto& d : details_) std::printf("       %s\n", d.c_str());
    if (!pass_) ++failures;
  }

 private:
  int number_;
  const char* what_;
  bool pass_ = true;
  std::vector<std::string> details_;
  std::chrono::steady_clock::time_point start_;
};

// 1. q(x+y) = q(x) + q(y) + x.y for every surface of rank <= 8, every
//    form, every pair of classes.
void criterion1() {
  Criterion c(1, "quadratic relation, exhaustive over every surface of rank <= 8");
  for (int g = 0; g <= 4; ++g)
    for (int b = 0; b <= 9; ++b) {
      const SurfaceSignature s{g, b};
      const int n = s.rank();
      if (n > 8) continue;
      const auto form = IntersectionForm::standard(s);
      const std::uint64_t total = std::uint64_t{1} << n;

      // Tabulate every form's values, then sweep all pairs once.
      std::vector<std::vector<std::uint8_t>> table;
      table.resize(size_t(total));
      {
        std::uint64_t f = 0;
        enumerate_forms(form, [&](const QuadraticForm& q) {
          auto& t = table[size_t(f++)];
          t.resize(size_t(total));
          for (std::uint64_t xb = 0; xb < total; ++xb)
            t[size_t(xb)] = std::uint8_t(evaluate_bits(q, Gf2Vec{xb, n}));
        });
      }
      for (std::uint64_t xb = 0; xb < total && failures == 0; ++xb)
        for (std::uint64_t yb = 0; yb < total; ++yb) {
          const int cross = parity64(xb & form.mod2.apply(Gf2Vec{yb, n}).bits);
          for (std::uint64_t f = 0; f < total; ++f) {
            const auto& t = table[size_t(f)];
            if (t[size_t(xb ^ yb)] != (t[size_t(xb)] ^ t[size_t(yb)] ^ cross)) {
              c.expect(false, "violation at g=" + std::to_string(g) +
                                  " b=" + std::to_string(b));
              return;
            }
          }
        }
    }
  c.expect(true);
}

// 2. Every form on every listed signature admits a q = 0 witness.
void criterion2() {
  Criterion c(2, "q = 0 witness families cover every form on the listed signatures");
  std::vector<SurfaceSignature> sigs;
  for (int b = 3; b <= 6; ++b) sigs.push_back({0, b});
  for (int b = 2; b <= 4; ++b) sigs.push_back({1, b});
  for (int g = 2; g <= 3; ++g)
    for (int b = 0; b <= 4; ++b) sigs.push_back({g, b});
  std::uint64_t checked = 0;
  for (const auto& s : sigs) {
    enumerate_forms(IntersectionForm::standard(s), [&](const QuadraticForm& q) {
      ++checked;
      const auto w = witness_q_zero(s, q);
      if (evaluate(q, w.witness) != 0)
        c.expect(false, "witness failed at g=" + std::to_string(s.genus) +
                            " b=" + std::to_string(s.boundary_components));
    });
  }
  c.expect(checked > 0);
}

// 3. Rank-2 census: three Arf-0 forms with a q = 0 basis twist each; the
//    Arf-1 form is a contradiction.
void criterion3() {
  Criterion c(3, "closed torus: 3 Arf-0 forms yield obstructed basis twists, Arf-1 rejects");
  const SurfaceSignature s{1, 0};
  int arf0 = 0, arf1 = 0;
  enumerate_forms(IntersectionForm::standard(s), [&](const QuadraticForm& q) {
    if (arf(q) == 0) {
      ++arf0;
      const auto fact = torus_case(q, Ambient::HomologySphere);
      c.expect(fact.status == Status::NotExtendible, "missing obstruction");
      c.expect(evaluate(q, fact.cls) == 0, "witness twist has q = 1");
    } else {
      ++arf1;
      bool threw = false;
      try {
        torus_case(q, Ambient::HomologySphere);
      } catch (const ContradictionError&) {
        threw = true;
      }
      c.expect(threw, "Arf-1 form did not raise the contradiction");
    }
  });
  c.expect(arf0 == 3, "expected exactly 3 Arf-0 forms");
  c.expect(arf1 == 1, "expected exactly 1 Arf-1 form");
}

// 4. Arf census at genus 1, 2, 3.
void criterion4() {
  Criterion c(4, "form census by Arf: (3,1), (10,6), (36,28) at g = 1, 2, 3");
  const std::pair<std::uint64_t, std::uint64_t> expected[] = {{3, 1}, {10, 6}, {36, 28}};
  for (int g = 1; g <= 3; ++g) {
    const auto [zeros, ones] = arf_census(g);
    c.expect(zeros == expected[g - 1].first && ones == expected[g - 1].second,
             "census mismatch at g=" + std::to_string(g));
  }
}

// 5. Every printed identity chain verifies over Z at g = 3, 4, 5.
void criterion5() {
  Criterion c(5, "printed twist identities hold in the integral symplectic representation");
  for (int g = 3; g <= 5; ++g) {
    const auto file =
        load_chains(data_dir() / "chains" / ("identities_g" + std::to_string(g) + ".json"));
    c.expect(file.genus == g, "chain file genus mismatch");
    c.expect(!file.identities.empty(), "no identities shipped");
    const CurveCatalog cat = chain_catalog(g);
    for (const auto& ident : file.identities) {
      c.expect(verify_identity_symplectic(ident.lhs, ident.rhs, cat, Ring::Z),
               "identity " + ident.name + " fails over Z at g=" + std::to_string(g));
      if (ident.chain.has_value())
        c.expect(verify_rewrite_chain(*ident.chain, cat),
                 "moves of " + ident.name + " fail at g=" + std::to_string(g));
    }
  }
}

// 6. Generation check at genus 3 against the enumeration oracle.
void criterion6() {
  Criterion c(6, "genus-3 generating sets close to the full stabilizer of order 40320");
  const CurveCatalog cat = chain_catalog(3);
  const QuadraticForm q = q_standard(SurfaceSignature{3, 0});
  const auto thm5 = generated_subgroup_order(thm5_generators(3), cat, q);
  const auto hirose = generated_subgroup_order(hirose_generators(3), cat, q);
  const std::uint64_t oracle = stabilizer_order_oracle(q, 3);
  c.expect(thm5.order == 40320, "3g-generator closure is " + std::to_string(thm5.order));
  c.expect(hirose.order == 40320, "reference closure is " + std::to_string(hirose.order));
  c.expect(oracle == 40320, "oracle stabilizer is " + std::to_string(oracle));
  c.expect(1451520 % 36 == 0 && 1451520 / 36 == 40320, "orbit-stabilizer cross-check");
}

// 7. Preservation flags for the three generating sets.
void criterion7() {
  Criterion c(7, "spin generators preserve the standard form; the full set does not");
  for (int g = 3; g <= 5; ++g) {
    const CurveCatalog cat = chain_catalog(g);
    const auto form = IntersectionForm::standard(cat.surface);
    const QuadraticForm q = q_standard(cat.surface);
    for (const auto& gens : {thm5_generators(g), hirose_generators(g)})
      for (const auto& [nm, w] : gens)
        c.expect(preserves_q(twist_word_matrix_z2(w, cat.curves, form), q),
                 nm + " fails preservation at g=" + std::to_string(g));
  }
  for (int g = 2; g <= 3; ++g) {
    const CurveCatalog cat = catalog_humphreys(g, 0);
    const auto form = IntersectionForm::standard(cat.surface);
    const QuadraticForm q = q_standard(cat.surface);
    bool some_failure = false;
    for (const auto& [nm, cls] : cat.curves) {
      TwistWord w;
      w.append(nm, 1);
      if (!preserves_q(twist_word_matrix_z2(w, cat.curves, form), q)) some_failure = true;
    }
    c.expect(some_failure,
             "every generating twist preserved the form at g=" + std::to_string(g));
  }
}

// 8. Framing rules: the one-twist update on seeded cases and the iterated
//    right-twist walk from 2m+1 down to 1.
void criterion8() {
  Criterion c(8, "framing update rule on 100 seeded cases and the iterated odd walk");
  std::mt19937 rng(271828);
  std::uniform_int_distribution<Int> dist(-50, 50);
  std::uniform_int_distribution<int> hand(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const Int nb = dist(rng), na = dist(rng);
    const int h = hand(rng) ? 1 : -1;
    c.expect(framing_after_twist(nb, na, h) == nb + na + h, "update rule mismatch");
  }
  for (Int m = 1; m <= 10; ++m) {
    Int f = 2 * m + 1;
    for (Int k = 0; k < 2 * m; ++k) f = framing_after_twist(f, 0, -1);
    c.expect(f == 1, "iterated walk from " + std::to_string(2 * m + 1) + " missed 1");
  }
}

// 9. Propagation and sliceness verdicts on the shipped charts.
void criterion9() {
  Criterion c(9, "propagation marks every chain core extendible; boundary links not slice");
  const auto right = load_descriptor(data_dir() / "descriptors" / "chain_1_m3_5.json");
  const FactStore rf = thm3_propagate(right, trick_seeds(right));
  for (const auto& n : right.nodes)
    c.expect(rf.status(n.label) == Status::Extendible, "core " + n.label + " not extendible");

  const auto left = load_descriptor(data_dir() / "descriptors" / "chain_alt_g2.json");
  const FactStore lf = thm3_propagate(left, trick_seeds(left));
  for (const auto& n : left.nodes)
    c.expect(lf.status(n.label) == Status::Extendible, "core " + n.label + " not extendible");

  for (int g = 2; g <= 3; ++g) {
    const auto d = load_descriptor(data_dir() / "descriptors" /
                                   ("humphreys_seifert_g" + std::to_string(g) + ".json"));
    const FactStore facts = thm3_propagate(d, trick_seeds(d));
    const auto verdict = slice_obstruction(d, facts, catalog_humphreys(g, 2));
    c.expect(verdict == SliceVerdict::NotSliceInAnyHomologyBall,
             "slice obstruction inconclusive at g=" + std::to_string(g));
  }
}

// 10. Weaving-curve framing tables at g = 5, 6.
void criterion10() {
  Criterion c(10, "weaving-curve framings match the stated parity tables at g = 5, 6");
  for (int g = 5; g <= 6; ++g) {
    const auto odd = load_descriptor(
        data_dir() / "descriptors" / ("hammenstadt_odd_embedding_g" + std::to_string(g) +
                                      ".json"));
    for (const auto& curve : odd.curves) {
      const int j = std::stoi(curve.name.substr(1, curve.name.size() - 2));
      const Int expected = (j == 1) ? (g % 2 == 1 ? 1 : -1) : (j % 2 == 1 ? 1 : -1);
      c.expect(traversal_framing(curve, odd) == expected,
               curve.name + " framing off at g=" + std::to_string(g));
    }
    const auto even = load_descriptor(
        data_dir() / "descriptors" / ("hammenstadt_even_embedding_g" + std::to_string(g) +
                                      ".json"));
    for (const auto& curve : even.curves) {
      const int j = std::stoi(curve.name.substr(1, curve.name.size() - 2));
      Int expected;
      if (j == 1) expected = 1;
      else if (j == g - 3) expected = (g % 2 == 0) ? -1 : 1;
      else expected = -1;
      c.expect(traversal_framing(curve, even) == expected,
               curve.name + " framing off at g=" + std::to_string(g));
    }
  }
}

// 11. Flexibility decision table on g <= 5, b <= 5.
void criterion11() {
  Criterion c(11, "flexibility table matches on all g <= 5, b <= 5 including exceptions");
  for (int g = 0; g <= 5; ++g)
    for (int b = 0; b <= 5; ++b) {
      const bool exception = (g == 1 && b == 1) || (g == 0 && b <= 2);
      for (const Ambient amb : {Ambient::HomologyBallS3, Ambient::HomologySphere}) {
        const auto v = flexibility_verdict({g, b}, amb);
        c.expect(v == (exception ? FlexVerdict::Exception
                                 : FlexVerdict::NoFlexibleEmbeddingExists),
                 "verdict mismatch at (" + std::to_string(g) + "," + std::to_string(b) + ")");
      }
      c.expect(flexibility_verdict({g, b}, Ambient::S2xS2MinusBall) == FlexVerdict::OutOfScope,
               "non-characteristic ambient must be out of scope");
    }
}

// 12. Open book verdicts.
void criterion12() {
  Criterion c(12, "variation-map criterion and universality obstruction verdicts");
  c.expect(!is_homotopy_sphere(VariationData{IntMat::Zero(2, 2)}), "zero map accepted");
  c.expect(is_homotopy_sphere(VariationData{IntMat::Identity(2, 2)}), "identity rejected");
  const VariationData iso{IntMat::Identity(2, 2)};
  c.expect(universality_obstruction(true, true, iso, true) == Universality::NotUniversalCase1,
           "kernel case");
  c.expect(universality_obstruction(true, true, iso, false) ==
               Universality::NotUniversalCase2,
           "variation case");
  c.expect(universality_obstruction(false, true, iso, true) == Universality::Inconclusive,
           "non-spin page must be inconclusive");
  c.expect(universality_obstruction(false, true, iso, false) == Universality::Inconclusive,
           "non-spin page must be inconclusive");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
