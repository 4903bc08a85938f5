#include "spinform/openbook.hpp"

#include <vector>

namespace spinform {

VariationData variation_from_monodromy(const IntMat& monodromy) {
  if (monodromy.rows() != monodromy.cols())
    throw InvalidInputError("monodromy matrix must be square");
  const Eigen::Index n = monodromy.rows();
  return VariationData{IntMat::Identity(n, n) - monodromy};
}

namespace {

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
  if (a == 0 || b == 0) return 0;
  const Wide r = a * b;
  if (r / b != a) throw OverflowError("determinant intermediate exceeds 128 bits");
  return r;
}

}  // namespace

__int128 exact_determinant(const IntMat& m) {
  if (m.rows() != m.cols()) throw InvalidInputError("determinant of a non-square matrix");
  const int n = int(m.rows());
  if (n == 0) return 1;

  std::vector<std::vector<Wide>> a(size_t(n), std::vector<Wide>(size_t(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[size_t(i)][size_t(j)] = m(i, j);

  int sign = 1;
  Wide prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[size_t(k)][size_t(k)] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[size_t(i)][size_t(k)] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[size_t(k)], a[size_t(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const Wide num = checked_mul(a[size_t(i)][size_t(j)], a[size_t(k)][size_t(k)]) -
                         checked_mul(a[size_t(i)][size_t(k)], a[size_t(k)][size_t(j)]);
        a[size_t(i)][size_t(j)] = num / prev;  // exact by the Bareiss identity
      }
    prev = a[size_t(k)][size_t(k)];
  }
  return sign > 0 ? a[size_t(n - 1)][size_t(n - 1)] : -a[size_t(n - 1)][size_t(n - 1)];
}

bool is_homotopy_sphere(const VariationData& v) {
  const __int128 d = exact_determinant(v.delta);
  return d == 1 || d == -1;
}

std::string universality_name(Universality u) {
  switch (u) {
    case Universality::NotUniversalCase1: return "NotUniversal/Case1";
    case Universality::NotUniversalCase2: return "NotUniversal/Case2";
    case Universality::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

Universality universality_obstruction(bool page_spin, bool simple, const VariationData& v,
                                      bool class_in_kernel_case) {
  if (!page_spin || !simple) return Universality::Inconclusive;
  if (class_in_kernel_case) return Universality::NotUniversalCase1;
  if (is_homotopy_sphere(v)) return Universality::NotUniversalCase2;
  return Universality::Inconclusive;
}

}  // namespace spinform
