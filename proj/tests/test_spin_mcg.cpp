#include <doctest.h>

#include "spinform/data_io.hpp"
#include "spinform/spin_mcg.hpp"

using namespace spinform;

TEST_CASE("chain catalog shape") {
  const CurveCatalog cat = chain_catalog(3);
  CHECK(cat.curves.size() == 7 + 2);  // c1..c7, b2, b4
  CHECK(cat.relation("c1", "c2") == Relation::Braid);
  CHECK(cat.relation("c1", "c3") == Relation::Commute);
  CHECK(cat.relation("b4", "c4") == Relation::Braid);
  CHECK(cat.relation("b4", "c5") == Relation::Commute);
  CHECK_NOTHROW(cat.validate());
}

TEST_CASE("catalog validity rejects bad transcriptions") {
  CurveCatalog cat = chain_catalog(2);
  cat.relation_table[CurveCatalog::key("c1", "c3")] = Relation::Braid;  // disjoint pair
  CHECK_THROWS_AS(cat.validate(), InconsistentDescriptorError);

  CurveCatalog cat2 = chain_catalog(2);
  cat2.geometric_intersections[CurveCatalog::key("c1", "c2")] = 2;  // parity clash
  CHECK_THROWS_AS(cat2.validate(), InconsistentDescriptorError);
}

TEST_CASE("generator word lists") {
  const auto hirose = hirose_generators(3);
  int xs = 0, ds = 0;
  TwistWord z2;
  for (const auto& [nm, w] : hirose) {
    if (nm[0] == 'X') ++xs;
    if (nm[0] == 'D' && nm[1] != 'B') ++ds;
    if (nm == "Z2") z2 = w;
  }
  CHECK(xs == 6);
  CHECK(ds == 7);
  TwistWord expected;
  expected.append("b4", 1).append("c5", 1).append("c7", 1);
  CHECK(z2 == expected);

  const auto thm5 = thm5_generators(3);
  CHECK(thm5.size() == 9);
  TwistWord beta1, gamma1;
  for (const auto& [nm, w] : thm5) {
    if (nm == "beta1") beta1 = w;
    if (nm == "gamma1") gamma1 = w;
  }
  TwistWord eb1, eg1;
  eb1.append("c1", 1).append("c3", 1).append("b4", 1);
  eg1.append("c1", 2);
  CHECK(beta1 == eb1);
  CHECK(gamma1 == eg1);

  CHECK_THROWS_AS(hirose_generators(1), GuardError);
  CHECK_THROWS_AS(hirose_generators(2), GuardError);
  CHECK_THROWS_AS(thm5_generators(2), GuardError);
}

TEST_CASE("symplectic identity verification") {
  const CurveCatalog cat = chain_catalog(3);
  TwistWord lhs;
  lhs.append("c3", 2);
  CHECK(verify_identity_symplectic(lhs, lhs, cat, Ring::Z));

  TwistWord aba, bab;
  aba.append("c1", 1).append("c2", 1).append("c1", 1);
  bab.append("c2", 1).append("c1", 1).append("c2", 1);
  CHECK(verify_identity_symplectic(aba, bab, cat, Ring::Z));

  TwistWord rhs;
  for (int r = 0; r < 2; ++r) rhs.append("c1", 1).append("c3", 1).append("b4", 1);
  rhs.append("c1", -2).append("b4", -2);
  CHECK(verify_identity_symplectic(lhs, rhs, cat, Ring::Z));

  TwistWord wrong;
  wrong.append("c3", 1);
  CHECK_FALSE(verify_identity_symplectic(lhs, wrong, cat, Ring::Z));
}

TEST_CASE("rewrite chain checking") {
  const CurveCatalog cat = chain_catalog(3);

  RewriteChain cancel;
  cancel.name = "cancel";
  TwistWord w0, w1;
  w0.append("c1", 1).append("c2", 1).append("c2", -1).append("c5", 1);
  w1.append("c1", 1).append("c5", 1);
  cancel.steps = {w0, w1};
  cancel.moves = {{RewriteMove::Kind::FreeCancel, "", ""}};
  CHECK(verify_rewrite_chain(cancel, cat));

  RewriteChain braid;
  braid.name = "braid";
  TwistWord b0, b1;
  b0.append("c1", 1).append("c2", 1).append("c1", 1);
  b1.append("c2", 1).append("c1", 1).append("c2", 1);
  braid.steps = {b0, b1};
  braid.moves = {{RewriteMove::Kind::Braid, "c1", "c2"}};
  CHECK(verify_rewrite_chain(braid, cat));

  // A commute move declared on a braid pair is an illegal application.
  RewriteChain wrong;
  wrong.name = "wrong";
  TwistWord c0, c1;
  c0.append("c1", 1).append("c2", 1);
  c1.append("c2", 1).append("c1", 1);
  wrong.steps = {c0, c1};
  wrong.moves = {{RewriteMove::Kind::Commute, "c1", "c2"}};
  CHECK_FALSE(verify_rewrite_chain(wrong, cat));

  // A pair with no declared relation cannot license any move.
  CurveCatalog stripped = cat;
  stripped.relation_table.erase(CurveCatalog::key("c1", "c2"));
  stripped.geometric_intersections[CurveCatalog::key("c1", "c2")] = 3;
  RewriteChain untracked = braid;
  CHECK_THROWS_AS(verify_rewrite_chain(untracked, stripped), UnverifiableMoveError);

  RewriteChain lengths;
  lengths.steps = {w0};
  lengths.moves = {{RewriteMove::Kind::FreeCancel, "", ""}};
  CHECK_THROWS_AS(verify_rewrite_chain(lengths, cat), InvalidInputError);
}

TEST_CASE("every accepted braid variant is a braid-group identity") {
  // The checker's pattern table, verified against exact twist matrices
  // for a once-intersecting pair.
  const CurveCatalog cat = chain_catalog(1);
  const int variants[6][6] = {
      // e0, e1, e2 (on x y x)   f0, f1, f2 (on y x y)
      {1, 1, 1, 1, 1, 1},
      {-1, -1, -1, -1, -1, -1},
      {1, 1, -1, -1, 1, 1},
      {-1, 1, 1, 1, 1, -1},
      {1, -1, -1, -1, -1, 1},
      {-1, -1, 1, 1, -1, -1},
  };
  for (const auto& v : variants) {
    for (const auto& [x, y] : {std::pair<std::string, std::string>{"c1", "c2"},
                               {"c2", "c1"}}) {
      TwistWord lhs, rhs;
      lhs.append(x, v[0]).append(y, v[1]).append(x, v[2]);
      rhs.append(y, v[3]).append(x, v[4]).append(y, v[5]);
      CHECK(verify_identity_symplectic(lhs, rhs, cat, Ring::Z));

      RewriteChain chain;
      chain.name = "variant";
      chain.steps = {lhs, rhs};
      chain.moves = {{RewriteMove::Kind::Braid, x, y}};
      CHECK(verify_rewrite_chain(chain, cat));
    }
  }
}

TEST_CASE("conjugate rewrite against a declared alias") {
  // Two braiding curves plus the named image of one under the other.
  const SurfaceSignature s{1, 0};
  CurveCatalog cat;
  cat.name = "alias_test";
  cat.surface = s;
  cat.curves["a"] = HomologyClass::basis_vector(s, 0);
  cat.curves["b"] = HomologyClass::basis_vector(s, 1);
  cat.curves["z"] = HomologyClass::from_coords(s, {1, 1});
  for (const auto& [p, q] : {std::pair<std::string, std::string>{"a", "b"},
                             {"a", "z"},
                             {"b", "z"}}) {
    cat.geometric_intersections[CurveCatalog::key(p, q)] = 1;
    cat.relation_table[CurveCatalog::key(p, q)] = Relation::Braid;
  }
  cat.named_conjugates.push_back({"z", "a", 1, "b"});
  cat.validate();

  RewriteChain chain;
  chain.name = "alias";
  TwistWord u, v;
  u.append("a", 1).append("b", 1).append("a", -1);
  v.append("z", 1);
  chain.steps = {u, v};
  chain.moves = {{RewriteMove::Kind::ConjugateRewrite, "", ""}};
  CHECK(verify_rewrite_chain(chain, cat));

  // The alias twist really is the conjugate twist on homology.
  const auto form = IntersectionForm::standard(s);
  CHECK(twist_word_matrix_z2(u, cat.curves, form) ==
        twist_word_matrix_z2(v, cat.curves, form));

  CurveCatalog no_alias = cat;
  no_alias.named_conjugates.clear();
  CHECK_THROWS_AS(verify_rewrite_chain(chain, no_alias), UnverifiableMoveError);
}

TEST_CASE("small subgroup closures") {
  const CurveCatalog cat = chain_catalog(1);  // c1, c2, c3 on the torus
  const QuadraticForm q = q_standard(SurfaceSignature{1, 0});

  // All transvections generate the full rank-2 symplectic group.
  std::vector<std::pair<std::string, TwistWord>> all;
  for (const auto& nm : {"c1", "c2"}) {
    TwistWord w;
    w.append(nm, 1);
    all.emplace_back(nm, w);
  }
  TwistWord both;
  both.append("c1", 1).append("c2", 1);
  all.emplace_back("c1c2", both);
  CHECK(generated_subgroup_order(all, cat, q).order == 6);

  CHECK(generated_subgroup_order({}, cat, q).order == 1);

  const CurveCatalog big = chain_catalog(5);
  CHECK_THROWS_AS(generated_subgroup_order({}, big, q_standard(SurfaceSignature{5, 0})),
                  GuardError);
}

TEST_CASE("stabilizer oracle values") {
  CHECK(stabilizer_order_oracle(q_standard(SurfaceSignature{1, 0}), 1) == 2);
  CHECK(stabilizer_order_oracle(q_standard(SurfaceSignature{2, 0}), 2) == 72);
  QuadraticForm arf1 = q_standard(SurfaceSignature{2, 0});
  arf1.basis_values = Gf2Vec{0b0011, 4};
  CHECK(arf(arf1) == 1);
  CHECK(stabilizer_order_oracle(arf1, 2) == 120);
  CHECK_THROWS_AS(stabilizer_order_oracle(q_standard(SurfaceSignature{4, 0}), 4), GuardError);
}

TEST_CASE("spin generators preserve the standard form; the full set does not") {
  for (int g = 3; g <= 5; ++g) {
    const CurveCatalog cat = chain_catalog(g);
    const auto form = IntersectionForm::standard(cat.surface);
    const QuadraticForm q = q_standard(cat.surface);
    for (const auto& gens : {hirose_generators(g), thm5_generators(g)})
      for (const auto& [nm, w] : gens)
        CHECK_MESSAGE(preserves_q(twist_word_matrix_z2(w, cat.curves, form), q),
                      "generator ", nm, " at g=", g);
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
    CHECK(some_failure);
  }
}
