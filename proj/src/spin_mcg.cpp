#include "spinform/spin_mcg.hpp"

#include <deque>
#include <optional>
#include <unordered_set>

namespace spinform {

std::pair<std::string, std::string> CurveCatalog::key(const std::string& a,
                                                      const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

const HomologyClass& CurveCatalog::class_of(const std::string& curve) const {
  auto it = curves.find(curve);
  if (it == curves.end()) throw UnknownCurveError("catalog " + name + ": unknown curve " + curve);
  return it->second;
}

int CurveCatalog::geometric(const std::string& a, const std::string& b) const {
  auto it = geometric_intersections.find(key(a, b));
  return it == geometric_intersections.end() ? 0 : it->second;
}

std::optional<Relation> CurveCatalog::relation(const std::string& a,
                                               const std::string& b) const {
  auto it = relation_table.find(key(a, b));
  if (it == relation_table.end()) return std::nullopt;
  return it->second;
}

void CurveCatalog::validate() const {
  const IntersectionForm form = IntersectionForm::standard(surface);
  for (const auto& [curve, cls] : curves)
    if (!(cls.surface == surface))
      throw InconsistentDescriptorError("catalog " + name + ": curve " + curve +
                                        " lives on the wrong surface");
  std::vector<std::string> names;
  names.reserve(curves.size());
  for (const auto& [curve, _] : curves) names.push_back(curve);

  for (size_t i = 0; i < names.size(); ++i) {
    for (size_t j = i + 1; j < names.size(); ++j) {
      const int geo = geometric(names[i], names[j]);
      const Int hom = intersect(class_of(names[i]), class_of(names[j]), form);
      if (geo % 2 != hom)
        throw InconsistentDescriptorError("catalog " + name + ": pair (" + names[i] + "," +
                                          names[j] +
                                          ") geometric parity disagrees with homology");
      const auto rel = relation(names[i], names[j]);
      if (geo == 0 && rel != Relation::Commute)
        throw InconsistentDescriptorError("catalog " + name + ": disjoint pair (" + names[i] +
                                          "," + names[j] + ") must be marked commute");
      if (geo == 1 && rel != Relation::Braid)
        throw InconsistentDescriptorError("catalog " + name + ": once-intersecting pair (" +
                                          names[i] + "," + names[j] +
                                          ") must be marked braid");
      if (geo >= 2 && rel.has_value())
        throw InconsistentDescriptorError("catalog " + name + ": pair (" + names[i] + "," +
                                          names[j] +
                                          ") intersects more than once and carries a relation");
    }
  }
  for (const auto& [pair, _] : geometric_intersections)
    if (!curves.count(pair.first) || !curves.count(pair.second))
      throw UnknownCurveError("catalog " + name + ": intersection entry names unknown curve");
  for (const auto& [pair, _] : relation_table)
    if (!curves.count(pair.first) || !curves.count(pair.second))
      throw UnknownCurveError("catalog " + name + ": relation entry names unknown curve");
}

CurveCatalog chain_catalog(int g) {
  if (g < 1) throw GuardError("chain catalog needs genus >= 1");
  const SurfaceSignature s(g, 0);
  CurveCatalog cat;
  cat.name = "chain_g" + std::to_string(g);
  cat.surface = s;

  auto x = [&](int i) { return HomologyClass::basis_vector(s, 2 * (i - 1)); };
  auto y = [&](int i) { return HomologyClass::basis_vector(s, 2 * (i - 1) + 1); };

  // Chain classes: odd curves carry x_i + x_{i+1} (x_0 = x_{g+1} = 0),
  // even curves carry y_i.
  for (int i = 1; i <= 2 * g + 1; ++i) {
    const std::string nm = "c" + std::to_string(i);
    if (i % 2 == 0) {
      cat.curves[nm] = y(i / 2);
    } else {
      const int k = (i - 1) / 2;  // c_{2k+1} = x_k + x_{k+1}
      IntVec v = IntVec::Zero(s.rank());
      if (k >= 1) v[2 * (k - 1)] += 1;
      if (k + 1 <= g) v[2 * k] += 1;
      cat.curves[nm] = HomologyClass(s, v);
    }
  }
  // Off-chain b_{2j} = a meridian-type copy of x_j crossing only c_{2j}.
  for (int j = 1; j <= g - 1; ++j) cat.curves["b" + std::to_string(2 * j)] = x(j);

  std::vector<std::string> names;
  for (const auto& [nm, _] : cat.curves) names.push_back(nm);
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      cat.relation_table[CurveCatalog::key(names[i], names[j])] = Relation::Commute;

  auto mark_braid = [&](const std::string& a, const std::string& b) {
    cat.geometric_intersections[CurveCatalog::key(a, b)] = 1;
    cat.relation_table[CurveCatalog::key(a, b)] = Relation::Braid;
  };
  for (int i = 1; i <= 2 * g; ++i)
    mark_braid("c" + std::to_string(i), "c" + std::to_string(i + 1));
  for (int j = 1; j <= g - 1; ++j)
    mark_braid("b" + std::to_string(2 * j), "c" + std::to_string(2 * j));

  cat.validate();
  return cat;
}

namespace {

TwistWord conj(const std::string& outer, const std::string& inner) {
  TwistWord w;
  w.append(outer, 1).append(inner, 1).append(outer, -1);
  return w;
}

std::string cname(int i) { return "c" + std::to_string(i); }
std::string bname(int i) { return "b" + std::to_string(i); }

void require_spin_genus(int g) {
  if (g < 3)
    throw GuardError(
        "spin generating sets need genus >= 3 (the words reference b4, which "
        "first exists there)");
}

}  // namespace

std::vector<std::pair<std::string, TwistWord>> hirose_generators(int g) {
  require_spin_genus(g);
  std::vector<std::pair<std::string, TwistWord>> out;
  const std::string cat = "chain_g" + std::to_string(g);
  auto add = [&](std::string nm, TwistWord w) {
    w.catalog = cat;
    out.emplace_back(std::move(nm), std::move(w));
  };

  for (int i = 1; i <= 2 * g; ++i) add("X" + std::to_string(i), conj(cname(i + 1), cname(i)));
  for (int j = 2; j <= g - 1; ++j)
    add("Y" + std::to_string(2 * j), conj(cname(2 * j), bname(2 * j)));
  for (int i = 1; i <= 2 * g + 1; ++i) {
    TwistWord d;
    d.append(cname(i), 2);
    add("D" + std::to_string(i), d);
  }
  for (int j = 2; j <= g - 1; ++j) {
    TwistWord d;
    d.append(bname(2 * j), 2);
    add("DB" + std::to_string(2 * j), d);
  }

  TwistWord z1;
  z1.append(cname(1), 1).append(cname(3), 1).append(bname(4), 1);
  add("Z1", z1);
  TwistWord z2;
  z2.append(bname(4), 1);
  for (int i = 5; i <= 2 * g + 1; i += 2) z2.append(cname(i), 1);
  add("Z2", z2);
  return out;
}

std::vector<std::pair<std::string, TwistWord>> thm5_generators(int g) {
  require_spin_genus(g);
  std::vector<std::pair<std::string, TwistWord>> out;
  const std::string cat = "chain_g" + std::to_string(g);
  auto add = [&](std::string nm, TwistWord w) {
    w.catalog = cat;
    out.emplace_back(std::move(nm), std::move(w));
  };

  for (int i = 1; i <= g; ++i)
    add("alpha" + std::to_string(i), conj(cname(2 * i + 1), cname(2 * i)));

  // beta_1 and beta_g substitute the chain curves carrying x_1 and x_g for
  // the off-chain b_2 and the nonexistent b_{2g}; beta_{g-1} shares the
  // right-edge substitution.
  TwistWord beta1;
  beta1.append(cname(1), 1).append(cname(3), 1).append(bname(4), 1);
  add("beta1", beta1);
  for (int j = 2; j <= g - 1; ++j) {
    TwistWord w;
    w.append(bname(2 * j), 1).append(cname(2 * j + 1), 1);
    if (2 * j + 2 <= 2 * g - 2)
      w.append(bname(2 * j + 2), 1);
    else
      w.append(cname(2 * g + 1), 1);
    add("beta" + std::to_string(j), w);
  }
  TwistWord betag;
  betag.append(bname(2 * g - 2), 1).append(cname(2 * g - 1), 1).append(cname(2 * g + 1), 1);
  add("beta" + std::to_string(g), betag);

  add("gamma1", TwistWord{{{cname(1), 1}, {cname(1), 1}}});
  for (int k = 2; k <= g - 1; ++k)
    add("gamma" + std::to_string(k), TwistWord{{{bname(2 * k), 1}, {bname(2 * k), 1}}});

  TwistWord zeta;
  zeta.append(bname(4), 1);
  for (int i = 5; i <= 2 * g + 1; i += 2) zeta.append(cname(i), 1);
  add("zeta", zeta);
  return out;
}

bool verify_identity_symplectic(const TwistWord& lhs, const TwistWord& rhs,
                                const CurveCatalog& catalog, Ring ring) {
  if (!lhs.catalog.empty() && !rhs.catalog.empty() && lhs.catalog != rhs.catalog)
    throw InvalidInputError("words reference different catalogs");
  const IntersectionForm form = IntersectionForm::standard(catalog.surface);
  if (ring == Ring::Z)
    return twist_word_matrix_z(lhs, catalog.curves, form) ==
           twist_word_matrix_z(rhs, catalog.curves, form);
  return twist_word_matrix_z2(lhs, catalog.curves, form) ==
         twist_word_matrix_z2(rhs, catalog.curves, form);
}

std::string move_kind_name(RewriteMove::Kind k) {
  switch (k) {
    case RewriteMove::Kind::FreeCancel: return "free_cancel";
    case RewriteMove::Kind::Commute: return "commute";
    case RewriteMove::Kind::Braid: return "braid";
    case RewriteMove::Kind::ConjugateRewrite: return "conjugate_rewrite";
  }
  return "free_cancel";
}

namespace {

using Letters = std::vector<TwistLetter>;

bool delete_pair_somewhere(const Letters& u, const Letters& v) {
  if (u.size() != v.size() + 2) return false;
  for (size_t i = 0; i + 1 < u.size(); ++i) {
    if (u[i].curve != u[i + 1].curve || u[i].exponent != -u[i + 1].exponent) continue;
    Letters w;
    w.reserve(v.size());
    w.insert(w.end(), u.begin(), u.begin() + long(i));
    w.insert(w.end(), u.begin() + long(i) + 2, u.end());
    if (w == v) return true;
  }
  return false;
}

bool commute_somewhere(const Letters& u, const Letters& v, const std::string& a,
                       const std::string& b) {
  if (u.size() != v.size()) return false;
  for (size_t i = 0; i + 1 < u.size(); ++i) {
    const auto& p = u[i];
    const auto& q = u[i + 1];
    const bool pair_matches =
        (p.curve == a && q.curve == b) || (p.curve == b && q.curve == a);
    if (!pair_matches) continue;
    Letters w = u;
    std::swap(w[i], w[i + 1]);
    if (w == v) return true;
  }
  return false;
}

// Length-3 consequences of the braid relation xyx = yxy, with exponents.
struct BraidPattern {
  int e[3];   // exponents of (x, y, x)
  int f[3];   // exponents of (y, x, y)
};
constexpr BraidPattern kBraidPatterns[] = {
    {{1, 1, 1}, {1, 1, 1}},       // x y x = y x y
    {{-1, -1, -1}, {-1, -1, -1}}, // inverses
    {{1, 1, -1}, {-1, 1, 1}},     // x y x^-1 = y^-1 x y
    {{-1, 1, 1}, {1, 1, -1}},     // x^-1 y x = y x y^-1
    {{1, -1, -1}, {-1, -1, 1}},   // x y^-1 x^-1 = y^-1 x^-1 y
    {{-1, -1, 1}, {1, -1, -1}},   // x^-1 y^-1 x = y x^-1 y^-1
};

bool braid_window(const Letters& u, size_t i, const std::string& x, const std::string& y,
                  const BraidPattern& pat, Letters& out) {
  if (u[i].curve != x || u[i + 1].curve != y || u[i + 2].curve != x) return false;
  if (u[i].exponent != pat.e[0] || u[i + 1].exponent != pat.e[1] ||
      u[i + 2].exponent != pat.e[2])
    return false;
  out = u;
  out[i] = {y, pat.f[0]};
  out[i + 1] = {x, pat.f[1]};
  out[i + 2] = {y, pat.f[2]};
  return true;
}

bool braid_somewhere(const Letters& u, const Letters& v, const std::string& a,
                     const std::string& b) {
  if (u.size() != v.size() || u.size() < 3) return false;
  for (size_t i = 0; i + 2 < u.size(); ++i) {
    for (const auto& pat : kBraidPatterns) {
      Letters w;
      if (braid_window(u, i, a, b, pat, w) && w == v) return true;
      if (braid_window(u, i, b, a, pat, w) && w == v) return true;
    }
  }
  return false;
}

bool conjugate_somewhere(const Letters& u, const Letters& v, const CurveCatalog& catalog) {
  // Replace (s^e, t^f, s^-e) by alias^f where alias = tau_s^e(t).
  if (u.size() != v.size() + 2) return false;
  for (const auto& alias : catalog.named_conjugates) {
    for (size_t i = 0; i + 2 < u.size(); ++i) {
      if (u[i].curve != alias.by || u[i].exponent != alias.exponent) continue;
      if (u[i + 1].curve != alias.of) continue;
      if (u[i + 2].curve != alias.by || u[i + 2].exponent != -alias.exponent) continue;
      Letters w;
      w.insert(w.end(), u.begin(), u.begin() + long(i));
      w.push_back({alias.alias, u[i + 1].exponent});
      w.insert(w.end(), u.begin() + long(i) + 3, u.end());
      if (w == v) return true;
    }
  }
  return false;
}

}  // namespace

bool verify_rewrite_chain(const RewriteChain& chain, const CurveCatalog& catalog) {
  if (chain.steps.size() != chain.moves.size() + 1)
    throw InvalidInputError("chain " + chain.name + ": steps/moves length mismatch");
  for (size_t k = 0; k < chain.moves.size(); ++k) {
    const Letters& u = chain.steps[k].letters;
    const Letters& v = chain.steps[k + 1].letters;
    const RewriteMove& mv = chain.moves[k];
    switch (mv.kind) {
      case RewriteMove::Kind::FreeCancel: {
        if (!delete_pair_somewhere(u, v) && !delete_pair_somewhere(v, u)) return false;
        break;
      }
      case RewriteMove::Kind::Commute: {
        const auto rel = catalog.relation(mv.a, mv.b);
        if (!rel.has_value())
          throw UnverifiableMoveError("chain " + chain.name + ": pair (" + mv.a + "," + mv.b +
                                      ") has no declared relation");
        if (*rel != Relation::Commute) return false;
        if (!commute_somewhere(u, v, mv.a, mv.b)) return false;
        break;
      }
      case RewriteMove::Kind::Braid: {
        const auto rel = catalog.relation(mv.a, mv.b);
        if (!rel.has_value())
          throw UnverifiableMoveError("chain " + chain.name + ": pair (" + mv.a + "," + mv.b +
                                      ") has no declared relation");
        if (*rel != Relation::Braid) return false;
        if (!braid_somewhere(u, v, mv.a, mv.b) && !braid_somewhere(v, u, mv.a, mv.b))
          return false;
        break;
      }
      case RewriteMove::Kind::ConjugateRewrite: {
        if (catalog.named_conjugates.empty())
          throw UnverifiableMoveError("chain " + chain.name +
                                      ": no conjugate aliases declared in the catalog");
        if (!conjugate_somewhere(u, v, catalog) && !conjugate_somewhere(v, u, catalog))
          return false;
        break;
      }
    }
  }
  return true;
}

namespace {

// Packed-key product for rank <= 8: rows live in the low byte lanes.
std::uint64_t key_mul(std::uint64_t a, std::uint64_t b, int n) {
  std::uint64_t c = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t row = (a >> (8 * i)) & 0xffu;
    std::uint64_t acc = 0;
    while (row) {
      const int j = std::countr_zero(row);
      row &= row - 1;
      acc ^= (b >> (8 * j)) & 0xffu;
    }
    c |= acc << (8 * i);
  }
  return c;
}

std::vector<std::uint64_t> bfs_closure(const std::vector<std::uint64_t>& generators, int n) {
  const std::uint64_t identity = Gf2Mat::identity(n).key8();
  std::unordered_set<std::uint64_t> seen{identity};
  std::deque<std::uint64_t> frontier{identity};
  std::vector<std::uint64_t> order{identity};
  while (!frontier.empty()) {
    const std::uint64_t m = frontier.front();
    frontier.pop_front();
    for (const std::uint64_t g : generators) {
      const std::uint64_t next = key_mul(m, g, n);
      if (seen.insert(next).second) {
        frontier.push_back(next);
        order.push_back(next);
      }
    }
  }
  return order;
}

}  // namespace

GenerationReport generated_subgroup_order(
    const std::vector<std::pair<std::string, TwistWord>>& words, const CurveCatalog& catalog,
    const QuadraticForm& q) {
  const int n = catalog.surface.rank();
  if (n > kBfsMaxRank)
    throw GuardError("subgroup closure is limited to rank <= 8; genus 4 and up is out of "
                     "reach for naive enumeration");
  const IntersectionForm form = IntersectionForm::standard(catalog.surface);

  GenerationReport report;
  std::vector<std::uint64_t> gens;
  gens.reserve(words.size());
  bool all = true;
  for (const auto& [nm, word] : words) {
    const Gf2Mat m = twist_word_matrix_z2(word, catalog.curves, form);
    gens.push_back(m.key8());
    const bool ok = preserves_q(m, q);
    report.preserves.emplace_back(nm, ok);
    all = all && ok;
  }
  report.preserves_all = all;
  report.order = bfs_closure(gens, n).size();
  return report;
}

std::vector<std::uint64_t> enumerate_symplectic_group(int g) {
  const int n = 2 * g;
  if (n > kBfsMaxRank) throw GuardError("full symplectic enumeration is limited to genus 3");
  const SurfaceSignature s(g, 0);
  const IntersectionForm form = IntersectionForm::standard(s);
  std::vector<std::uint64_t> gens;
  gens.reserve((std::uint64_t{1} << n) - 1);
  for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
    IntVec coords = IntVec::Zero(n);
    for (int i = 0; i < n; ++i) coords[i] = Int((v >> i) & 1u);
    gens.push_back(transvection_matrix_z2(HomologyClass(s, coords), form).key8());
  }
  return bfs_closure(gens, n);
}

std::uint64_t stabilizer_order_oracle(const QuadraticForm& q, int g) {
  if (g > 3) throw GuardError("stabilizer oracle is limited to genus <= 3");
  if (!(q.form.surface == SurfaceSignature(g, 0)))
    throw DimensionError("oracle expects a form on the closed genus-g surface");
  const auto group = enumerate_symplectic_group(g);
  const int n = 2 * g;
  std::uint64_t count = 0;
  for (const std::uint64_t key : group)
    if (preserves_q(Gf2Mat::from_key8(key, n), q)) ++count;
  return count;
}

}  // namespace spinform
