#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spinform/gf2.hpp"
#include "spinform/surface.hpp"
#include "spinform/twist.hpp"

namespace spinform {

using Int = std::int64_t;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

enum class Ring { Z2, Z };

// First homology class of a surface, stored with integer coefficients.
// GF(2) operations reduce mod 2 on the fly.
struct HomologyClass {
  SurfaceSignature surface;
  IntVec coords;

  HomologyClass() = default;
  HomologyClass(SurfaceSignature s, IntVec c);

  static HomologyClass zero(SurfaceSignature s);
  static HomologyClass basis_vector(SurfaceSignature s, int i);
  static HomologyClass from_coords(SurfaceSignature s, const std::vector<Int>& c);

  Gf2Vec mod2() const;
  bool is_zero_mod2() const { return mod2().is_zero(); }
  // True when the class lies in the span of the boundary-parallel d_i.
  bool is_boundary_parallel() const;

  bool operator==(const HomologyClass& o) const {
    return surface == o.surface && coords == o.coords;
  }
};

// Intersection pairing in the fixed basis: x_i . y_i = 1 and all other
// basis pairings vanish; boundary-parallel classes pair to zero with
// everything. Symmetric over GF(2), antisymmetric over Z.
struct IntersectionForm {
  SurfaceSignature surface;
  IntMat z;      // antisymmetric integer matrix
  Gf2Mat mod2;   // symmetric reduction
  std::vector<std::string> basis_labels;

  static IntersectionForm standard(SurfaceSignature s);
};

// x . y, as an element of GF(2) or of Z.
Int intersect(const HomologyClass& x, const HomologyClass& y,
              const IntersectionForm& form, Ring ring = Ring::Z2);

// Action of the Dehn twist along gamma on x: x + sign * (gamma . x) * gamma.
// sign +1 is the left-handed twist, -1 the right-handed one; over GF(2)
// the sign is irrelevant.
HomologyClass transvect(const HomologyClass& gamma, const HomologyClass& x,
                        int sign, const IntersectionForm& form, Ring ring);

IntMat transvection_matrix_z(const HomologyClass& gamma, const IntersectionForm& form,
                             int sign);
Gf2Mat transvection_matrix_z2(const HomologyClass& gamma, const IntersectionForm& form);

bool is_symplectic(const IntMat& m, const IntersectionForm& form);
bool is_symplectic(const Gf2Mat& m, const IntersectionForm& form);

using CurveClassMap = std::map<std::string, HomologyClass>;

// Homology matrix of a composite of Dehn twists. The leftmost letter acts
// last, matching functional composition, so the result is the product of
// the letter matrices in word order.
IntMat twist_word_matrix_z(const TwistWord& word, const CurveClassMap& classes,
                           const IntersectionForm& form);
Gf2Mat twist_word_matrix_z2(const TwistWord& word, const CurveClassMap& classes,
                            const IntersectionForm& form);

}  // namespace spinform
