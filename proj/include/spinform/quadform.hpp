#pragma once

#include <utility>

#include "spinform/homology.hpp"

namespace spinform {

// Quadratic refinement of the mod-2 intersection form, stored by its
// values on the basis vectors. Evaluation re-derives all cross terms from
// the pairing, so the relation q(x+y) = q(x) + q(y) + x.y holds by
// construction and two forms are equal exactly when their value vectors
// are.
struct QuadraticForm {
  IntersectionForm form;
  Gf2Vec basis_values;

  int rank() const { return form.surface.rank(); }

  bool operator==(const QuadraticForm& o) const {
    return form.surface == o.form.surface && basis_values == o.basis_values;
  }
};

// q(sum x_i e_i) = sum x_i q(e_i) + sum_{i<j} x_i x_j (e_i . e_j).
int evaluate(const QuadraticForm& q, const HomologyClass& x);
int evaluate_bits(const QuadraticForm& q, const Gf2Vec& x);

// Arf invariant: sum over genus pairs of q(x_i) q(y_i). Boundary-parallel
// directions are excluded; undefined for genus 0.
int arf(const QuadraticForm& q);

// q'(x) = q(Mx); defined only for symplectic M.
QuadraticForm pullback(const QuadraticForm& q, const Gf2Mat& m);

bool preserves_q(const Gf2Mat& m, const QuadraticForm& q);

// The form of the trivial Seifert-type embedding: zero on every basis class.
QuadraticForm q_standard(SurfaceSignature s);

inline constexpr int kEnumerateFormsMaxRank = 24;

// Calls fn on every quadratic refinement of the given pairing, once each.
template <typename F>
void enumerate_forms(const IntersectionForm& form, F&& fn) {
  const int n = form.surface.rank();
  if (n > kEnumerateFormsMaxRank)
    throw GuardError("enumerate_forms: rank exceeds the exhaustive-search guard");
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t v = 0; v < total; ++v)
    fn(QuadraticForm{form, Gf2Vec{v, n}});
}

// Number of forms on the closed genus-g surface with Arf 0 and Arf 1.
std::pair<std::uint64_t, std::uint64_t> arf_census(int g);

}  // namespace spinform
