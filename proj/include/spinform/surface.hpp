#pragma once

#include <string>
#include <vector>

#include "spinform/errors.hpp"

namespace spinform {

// Compact orientable surface of genus g with b boundary components.
// First homology over GF(2) (and over Z) has rank 2g for b <= 1 and
// 2g + b - 1 otherwise; the fixed basis order is
//   (x1, y1, ..., xg, yg, d1, ..., d_{b-1})
// where the d_i are boundary-parallel classes. Every module references
// coordinates in this order.
struct SurfaceSignature {
  int genus = 0;
  int boundary_components = 0;

  SurfaceSignature() = default;
  SurfaceSignature(int g, int b) : genus(g), boundary_components(b) {
    if (g < 0 || b < 0) throw InvalidInputError("surface signature must be nonnegative");
  }

  int rank() const {
    const int extra = boundary_components >= 1 ? boundary_components - 1 : 0;
    return 2 * genus + extra;
  }

  // Coordinates spanned by the genus pairs (Arf is computed over these).
  int genus_rank() const { return 2 * genus; }

  std::vector<std::string> basis_labels() const {
    std::vector<std::string> labels;
    labels.reserve(size_t(rank()));
    for (int i = 1; i <= genus; ++i) {
      labels.push_back("x" + std::to_string(i));
      labels.push_back("y" + std::to_string(i));
    }
    for (int i = 1; i <= boundary_components - 1; ++i)
      labels.push_back("d" + std::to_string(i));
    return labels;
  }

  bool operator==(const SurfaceSignature&) const = default;
};

}  // namespace spinform
