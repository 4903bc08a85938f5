#include "spinform/quadform.hpp"

namespace spinform {

int evaluate_bits(const QuadraticForm& q, const Gf2Vec& x) {
  if (x.size != q.rank()) throw DimensionError("class/form rank mismatch");
  int acc = parity64(x.bits & q.basis_values.bits);
  // Cross terms: pairs i < j with x_i = x_j = 1 and e_i . e_j = 1.
  std::uint64_t r = x.bits;
  while (r) {
    const int i = std::countr_zero(r);
    r &= r - 1;
    acc ^= parity64(q.form.mod2.row_bits(i) & x.bits & ~((std::uint64_t{2} << i) - 1));
  }
  return acc;
}

int evaluate(const QuadraticForm& q, const HomologyClass& x) {
  if (!(x.surface == q.form.surface)) throw DimensionError("class/form surface mismatch");
  return evaluate_bits(q, x.mod2());
}

int arf(const QuadraticForm& q) {
  const int g = q.form.surface.genus;
  if (g == 0) throw UndefinedArfError("arf requires genus >= 1");
  int acc = 0;
  for (int i = 0; i < g; ++i)
    acc ^= q.basis_values.get(2 * i) & q.basis_values.get(2 * i + 1);
  return acc;
}

QuadraticForm pullback(const QuadraticForm& q, const Gf2Mat& m) {
  if (!is_symplectic(m, q.form))
    throw InvalidInputError("pullback requires a matrix preserving the pairing");
  QuadraticForm out{q.form, Gf2Vec::zero(q.rank())};
  for (int i = 0; i < q.rank(); ++i)
    out.basis_values.set(i, evaluate_bits(q, m.column(i)));
  return out;
}

bool preserves_q(const Gf2Mat& m, const QuadraticForm& q) {
  return pullback(q, m) == q;
}

QuadraticForm q_standard(SurfaceSignature s) {
  return QuadraticForm{IntersectionForm::standard(s), Gf2Vec::zero(s.rank())};
}

std::pair<std::uint64_t, std::uint64_t> arf_census(int g) {
  const SurfaceSignature s(g, 0);
  std::uint64_t zeros = 0, ones = 0;
  enumerate_forms(IntersectionForm::standard(s), [&](const QuadraticForm& q) {
    if (arf(q)) ++ones; else ++zeros;
  });
  return {zeros, ones};
}

}  // namespace spinform
