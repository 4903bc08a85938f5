#include "spinform/homology.hpp"

namespace spinform {

HomologyClass::HomologyClass(SurfaceSignature s, IntVec c) : surface(s), coords(std::move(c)) {
  if (coords.size() != surface.rank())
    throw DimensionError("homology class length does not match surface rank");
}

HomologyClass HomologyClass::zero(SurfaceSignature s) {
  return HomologyClass(s, IntVec::Zero(s.rank()));
}

HomologyClass HomologyClass::basis_vector(SurfaceSignature s, int i) {
  if (i < 0 || i >= s.rank()) throw DimensionError("basis index out of range");
  IntVec v = IntVec::Zero(s.rank());
  v[i] = 1;
  return HomologyClass(s, std::move(v));
}

HomologyClass HomologyClass::from_coords(SurfaceSignature s, const std::vector<Int>& c) {
  IntVec v(Eigen::Index(c.size()));
  for (size_t i = 0; i < c.size(); ++i) v[Eigen::Index(i)] = c[i];
  return HomologyClass(s, std::move(v));
}

Gf2Vec HomologyClass::mod2() const {
  Gf2Vec v = Gf2Vec::zero(int(coords.size()));
  for (int i = 0; i < coords.size(); ++i)
    if (coords[i] & 1) v.bits |= std::uint64_t{1} << i;
  return v;
}

bool HomologyClass::is_boundary_parallel() const {
  for (int i = 0; i < surface.genus_rank(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

IntersectionForm IntersectionForm::standard(SurfaceSignature s) {
  const int n = s.rank();
  IntersectionForm f;
  f.surface = s;
  f.z = IntMat::Zero(n, n);
  f.mod2 = Gf2Mat(n, n);
  for (int i = 0; i < s.genus; ++i) {
    f.z(2 * i, 2 * i + 1) = 1;
    f.z(2 * i + 1, 2 * i) = -1;
    f.mod2.set(2 * i, 2 * i + 1, 1);
    f.mod2.set(2 * i + 1, 2 * i, 1);
  }
  f.basis_labels = s.basis_labels();
  return f;
}

namespace {

void check_same_surface(const HomologyClass& x, const HomologyClass& y,
                        const IntersectionForm& form) {
  if (!(x.surface == y.surface) || !(x.surface == form.surface))
    throw DimensionError("classes live on different surfaces");
}

}  // namespace

Int intersect(const HomologyClass& x, const HomologyClass& y, const IntersectionForm& form,
              Ring ring) {
  check_same_surface(x, y, form);
  if (ring == Ring::Z) return x.coords.dot(form.z * y.coords);
  const Gf2Vec jx = form.mod2.apply(y.mod2());
  return parity64(x.mod2().bits & jx.bits);
}

HomologyClass transvect(const HomologyClass& gamma, const HomologyClass& x, int sign,
                        const IntersectionForm& form, Ring ring) {
  check_same_surface(gamma, x, form);
  if (sign != 1 && sign != -1) throw InvalidInputError("twist sign must be +1 or -1");
  const Int c = intersect(gamma, x, form, ring);
  if (ring == Ring::Z) return HomologyClass(x.surface, x.coords + sign * c * gamma.coords);
  IntVec v = x.coords + c * gamma.coords;
  for (int i = 0; i < v.size(); ++i) v[i] = ((v[i] % 2) + 2) % 2;
  return HomologyClass(x.surface, std::move(v));
}

IntMat transvection_matrix_z(const HomologyClass& gamma, const IntersectionForm& form,
                             int sign) {
  if (!(gamma.surface == form.surface)) throw DimensionError("curve/form surface mismatch");
  if (sign != 1 && sign != -1) throw InvalidInputError("twist sign must be +1 or -1");
  const int n = form.surface.rank();
  // T x = x + sign * (gamma . x) gamma, so T = I + sign * gamma (gamma^T J).
  IntMat t = IntMat::Identity(n, n);
  t += sign * (gamma.coords * (gamma.coords.transpose() * form.z));
  return t;
}

Gf2Mat transvection_matrix_z2(const HomologyClass& gamma, const IntersectionForm& form) {
  if (!(gamma.surface == form.surface)) throw DimensionError("curve/form surface mismatch");
  const int n = form.surface.rank();
  const Gf2Vec g = gamma.mod2();
  const Gf2Vec jg = form.mod2.apply(g);
  Gf2Mat t = Gf2Mat::identity(n);
  for (int i = 0; i < n; ++i)
    if (g.get(i)) t.set_row(i, t.row_bits(i) ^ jg.bits);
  return t;
}

bool is_symplectic(const IntMat& m, const IntersectionForm& form) {
  if (m.rows() != m.cols() || m.rows() != form.surface.rank()) return false;
  return m.transpose() * form.z * m == form.z;
}

bool is_symplectic(const Gf2Mat& m, const IntersectionForm& form) {
  if (m.rows() != m.cols() || m.rows() != form.surface.rank()) return false;
  return m.transposed() * form.mod2 * m == form.mod2;
}

namespace {

const HomologyClass& resolve(const CurveClassMap& classes, const std::string& name) {
  auto it = classes.find(name);
  if (it == classes.end()) throw UnknownCurveError("unknown curve: " + name);
  return it->second;
}

}  // namespace

IntMat twist_word_matrix_z(const TwistWord& word, const CurveClassMap& classes,
                           const IntersectionForm& form) {
  const int n = form.surface.rank();
  IntMat m = IntMat::Identity(n, n);
  for (const auto& letter : word.letters)
    m *= transvection_matrix_z(resolve(classes, letter.curve), form, letter.exponent);
  return m;
}

Gf2Mat twist_word_matrix_z2(const TwistWord& word, const CurveClassMap& classes,
                            const IntersectionForm& form) {
  Gf2Mat m = Gf2Mat::identity(form.surface.rank());
  for (const auto& letter : word.letters)
    m = m * transvection_matrix_z2(resolve(classes, letter.curve), form);
  return m;
}

}  // namespace spinform
