#pragma once

#include <string>

#include "spinform/homology.hpp"

namespace spinform {

// Variation map of an open book monodromy on middle homology, collapsed
// to a single square integer matrix (relative and absolute bases are
// identified by the identity unless the caller supplies the change of
// basis themselves).
struct VariationData {
  IntMat delta;
};

VariationData variation_from_monodromy(const IntMat& monodromy);

// Exact integer determinant by fraction-free (Bareiss) elimination.
// No floating point: intermediates are 128-bit and overflow throws.
__int128 exact_determinant(const IntMat& m);

// The total space is a homotopy sphere exactly when delta is unimodular.
bool is_homotopy_sphere(const VariationData& v);

enum class Universality { NotUniversalCase1, NotUniversalCase2, Inconclusive };
std::string universality_name(Universality u);

// Obstruction for simple spin open books of S^5: either the page class
// dies in the ambient (a curve obstruction applies on the page), or the
// variation map is an isomorphism and the monodromy moves the class.
Universality universality_obstruction(bool page_spin, bool simple, const VariationData& v,
                                      bool class_in_kernel_case);

}  // namespace spinform
