#include "spinform/extendibility.hpp"

#include <algorithm>

#include "spinform/spin_mcg.hpp"

namespace spinform {

std::string status_name(Status s) {
  switch (s) {
    case Status::Unknown: return "Unknown";
    case Status::SquareExtendible: return "SquareExtendible";
    case Status::Extendible: return "Extendible";
    case Status::NotExtendible: return "NotExtendible";
  }
  return "Unknown";
}

std::string rationale_name(Rationale r) {
  switch (r) {
    case Rationale::None: return "None";
    case Rationale::Input: return "Input";
    case Rationale::HopfTrick: return "HopfTrick";
    case Rationale::TubeTrick: return "TubeTrick";
    case Rationale::HandleTrick: return "HandleTrick";
    case Rationale::Thm3a: return "Thm3a";
    case Rationale::Thm3b: return "Thm3b";
    case Rationale::Thm3c: return "Thm3c";
    case Rationale::QZeroObstruction: return "QZeroObstruction";
    case Rationale::BoundaryParallelObstruction: return "BoundaryParallelObstruction";
    case Rationale::Closure: return "Closure";
  }
  return "None";
}

void FactStore::ensure(const std::string& curve, const HomologyClass& cls) {
  auto it = facts_.find(curve);
  if (it == facts_.end())
    facts_[curve] = ExtendibilityFact{curve, cls, Status::Unknown, Rationale::None};
}

void FactStore::upgrade(const std::string& curve, Status status, Rationale rationale) {
  auto it = facts_.find(curve);
  if (it == facts_.end()) throw UnknownCurveError("no fact slot for curve: " + curve);
  ExtendibilityFact& f = it->second;
  if (status == Status::Unknown) return;
  if (f.status == status) return;
  // Only full extendibility clashes with the obstruction; an extendible
  // square is a statement about a different mapping class and coexists
  // with an obstructed twist (the sharper twist-level fact wins).
  const bool clash = (f.status == Status::NotExtendible && status == Status::Extendible) ||
                     (status == Status::NotExtendible && f.status == Status::Extendible);
  if (clash)
    throw InconsistentDescriptorError("curve " + curve +
                                      " is both extendible and obstructed");
  if (f.status == Status::NotExtendible) return;
  if (f.status == Status::Unknown || f.status == Status::SquareExtendible) {
    f.status = status;
    f.rationale = rationale;
  }
}

const ExtendibilityFact& FactStore::fact(const std::string& curve) const {
  auto it = facts_.find(curve);
  if (it == facts_.end()) throw UnknownCurveError("no fact for curve: " + curve);
  return it->second;
}

Status FactStore::status(const std::string& curve) const {
  auto it = facts_.find(curve);
  return it == facts_.end() ? Status::Unknown : it->second.status;
}

std::vector<ExtendibilityFact> FactStore::all() const {
  std::vector<ExtendibilityFact> out;
  out.reserve(facts_.size());
  for (const auto& [_, f] : facts_) out.push_back(f);
  return out;
}

ExtendibilityFact obstruct_essential(const QuadraticForm& q, const std::string& name,
                                     const HomologyClass& gamma, bool essential,
                                     bool characteristic) {
  if (!characteristic)
    throw InapplicableError("obstruction needs a characteristic embedding");
  if (!essential) throw InvalidInputError("obstruct_essential expects an essential curve");
  if (gamma.is_zero_mod2())
    throw InvalidInputError("the zero class cannot be flagged essential");
  if (evaluate(q, gamma) == 0)
    return {name, gamma, Status::NotExtendible, Rationale::QZeroObstruction};
  return {name, gamma, Status::Unknown, Rationale::None};
}

ExtendibilityFact obstruct_boundary_parallel(const QuadraticForm& q, const std::string& name,
                                             const HomologyClass& gamma, Ambient ambient) {
  if (ambient != Ambient::HomologyBallS3)
    throw InapplicableError(
        "boundary-parallel obstruction needs an ambient bounded by a homology sphere");
  if (gamma.is_zero_mod2())
    throw InvalidInputError("boundary-parallel curve must be non-nullhomologous");
  if (!gamma.is_boundary_parallel())
    throw InvalidInputError("class is not in the boundary-parallel span");
  if (evaluate(q, gamma) == 0)
    return {name, gamma, Status::NotExtendible, Rationale::BoundaryParallelObstruction};
  return {name, gamma, Status::Unknown, Rationale::None};
}

WitnessResult witness_q_zero(SurfaceSignature s, const QuadraticForm& q) {
  const int g = s.genus, b = s.boundary_components;
  const bool applicable = (g >= 2) || (g == 0 && b >= 3) || (g == 1 && b >= 2);
  if (!applicable)
    throw InapplicableError("no q = 0 witness family for signature (" + std::to_string(g) +
                            "," + std::to_string(b) + ")");

  // Three disjoint curves with u = v + w; disjointness kills the cross
  // term, so q(u) = q(v) + q(w) and one of the three values is zero.
  HomologyClass v = HomologyClass::zero(s), w = HomologyClass::zero(s);
  std::string family;
  if (g >= 2) {
    family = "genus2plus";
    v = HomologyClass::basis_vector(s, 1);   // y1
    w = HomologyClass::basis_vector(s, 3);   // y2
  } else if (g == 0) {
    family = "planar";
    v = HomologyClass::basis_vector(s, 0);   // d1
    w = HomologyClass::basis_vector(s, 1);   // d2
  } else {
    family = "genus1";
    v = HomologyClass::basis_vector(s, 1);             // y1
    w = HomologyClass::basis_vector(s, s.genus_rank());  // d1
  }
  HomologyClass u(s, v.coords + w.coords);

  // Lowest basis index first for determinism.
  for (const HomologyClass* cand : {&v, &w, &u})
    if (evaluate(q, *cand) == 0) return {*cand, family, {u, v, w}};
  throw ContradictionError("witness family produced no q = 0 class");
}

ExtendibilityFact torus_case(const QuadraticForm& q, Ambient ambient) {
  const SurfaceSignature s = q.form.surface;
  if (!(s == SurfaceSignature(1, 0)))
    throw InapplicableError("torus case needs the closed torus");
  if (ambient != Ambient::HomologySphere)
    throw InapplicableError("torus case needs a homology 4-sphere ambient");
  if (arf(q) != 0)
    throw ContradictionError(
        "Arf 1 on a characteristic torus in a homology 4-sphere is impossible");
  for (int i = 0; i < 2; ++i) {
    HomologyClass c = HomologyClass::basis_vector(s, i);
    if (evaluate(q, c) == 0)
      return {i == 0 ? "m" : "l", c, Status::NotExtendible, Rationale::QZeroObstruction};
  }
  throw ContradictionError("Arf 0 torus form with no vanishing basis value");
}

int rokhlin_arf(Int sigma, Int self_intersection) {
  const Int d = sigma - self_intersection;
  if (d % 8 != 0)
    throw InvalidInputError("signature minus self-intersection must be divisible by 8");
  return int(((d / 8) % 2 + 2) % 2);
}

std::optional<ExtendibilityFact> hopf_trick(const AnnulusNode& node, const HomologyClass& cls) {
  if ((node.twist == 1 || node.twist == -1) && node.core_unknotted)
    return ExtendibilityFact{node.label, cls, Status::Extendible, Rationale::HopfTrick};
  return std::nullopt;
}

std::optional<ExtendibilityFact> tube_trick(const AnnulusNode& node, const HomologyClass& cls) {
  if (node.twist == 0 && node.core_unknotted)
    return ExtendibilityFact{node.label, cls, Status::SquareExtendible, Rationale::TubeTrick};
  return std::nullopt;
}

std::optional<ExtendibilityFact> handle_trick(const AnnulusNode& node, const HomologyClass& cls) {
  if (node.bounds_handle.has_value()) {
    const Int h = *node.bounds_handle;
    if (node.twist == h - 1 || node.twist == h + 1)
      return ExtendibilityFact{node.label, cls, Status::Extendible, Rationale::HandleTrick};
  }
  return std::nullopt;
}

FactStore trick_seeds(const PlumbingDescriptor& d) {
  FactStore facts;
  for (const auto& n : d.nodes) {
    const HomologyClass& cls = d.class_of(n.label);
    facts.ensure(n.label, cls);
    for (const auto& f : {hopf_trick(n, cls), tube_trick(n, cls), handle_trick(n, cls)})
      if (f) facts.upgrade(f->curve, f->status, f->rationale);
  }
  return facts;
}

namespace {

bool is_odd(Int n) { return ((n % 2) + 2) % 2 == 1; }

// twist_b == -k * twist_a for some positive odd k.
bool odd_negative_multiple(Int twist_a, Int twist_b) {
  if (twist_a == 0) return false;
  if ((twist_b > 0) == (twist_a > 0)) return false;
  if (twist_b % twist_a != 0) return false;
  const Int k = -(twist_b / twist_a);
  return k > 0 && k % 2 == 1;
}

}  // namespace

FactStore thm3_propagate(const PlumbingDescriptor& d, FactStore facts) {
  for (const auto& n : d.nodes) facts.ensure(n.label, d.class_of(n.label));

  const int max_sweeps = 3 * int(d.nodes.size()) + 1;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    auto mark = [&](const std::string& curve, Rationale why) {
      if (facts.status(curve) != Status::Extendible) {
        facts.upgrade(curve, Status::Extendible, why);
        changed = true;
      }
    };
    for (const auto& e : d.edges) {
      const AnnulusNode& na = d.node(e.a);
      const AnnulusNode& nb = d.node(e.b);
      if (!na.core_unknotted || !nb.core_unknotted) continue;

      // (a) odd twist next to a zero-framed neighbour whose single twist
      // carries the curve to an unknot.
      if (is_odd(na.twist) && nb.twist == 0 && e.tau_ba_unknot) mark(e.a, Rationale::Thm3a);
      if (is_odd(nb.twist) && na.twist == 0 && e.tau_ab_unknot) mark(e.b, Rationale::Thm3a);

      // (b) odd twist with an odd-negative-multiple partner.
      if (is_odd(na.twist) && odd_negative_multiple(na.twist, nb.twist) &&
          facts.status(e.a) == Status::Extendible && e.tau_ab_unknot)
        mark(e.b, Rationale::Thm3b);
      if (is_odd(nb.twist) && odd_negative_multiple(nb.twist, na.twist) &&
          facts.status(e.b) == Status::Extendible && e.tau_ba_unknot)
        mark(e.a, Rationale::Thm3b);

      // (c) odd twists summing to +-2: the two twists extend together.
      if (is_odd(na.twist) && is_odd(nb.twist) &&
          (na.twist + nb.twist == 2 || na.twist + nb.twist == -2) && e.tau_ab_unknot &&
          e.tau_ba_unknot) {
        if (facts.status(e.a) == Status::Extendible) mark(e.b, Rationale::Thm3c);
        if (facts.status(e.b) == Status::Extendible) mark(e.a, Rationale::Thm3c);
      }
    }
    if (!changed) break;
  }
  return facts;
}

std::string flexibility_name(Flexibility f) {
  switch (f) {
    case Flexibility::Flexible: return "Flexible";
    case Flexibility::NotFlexible: return "NotFlexible";
    case Flexibility::Unknown: return "Unknown";
  }
  return "Unknown";
}

Flexibility parity_flexibility(const PlumbingDescriptor& d) {
  if (d.nodes.size() != 1)
    throw InvalidInputError("parity_flexibility expects a single-annulus descriptor");
  const AnnulusNode& n = d.nodes.front();
  if (!ambient_has_s3_boundary(d.ambient)) return Flexibility::Unknown;
  if (!is_odd(n.twist)) return Flexibility::NotFlexible;
  if ((n.twist == 1 || n.twist == -1) && n.core_slice) return Flexibility::Flexible;
  return Flexibility::Unknown;
}

std::string flex_verdict_name(FlexVerdict v) {
  switch (v) {
    case FlexVerdict::NoFlexibleEmbeddingExists: return "NoFlexibleEmbeddingExists";
    case FlexVerdict::Exception: return "Exception";
    case FlexVerdict::OutOfScope: return "OutOfScope";
  }
  return "OutOfScope";
}

FlexVerdict flexibility_verdict(SurfaceSignature s, Ambient ambient) {
  if (!ambient_guarantees_characteristic(ambient)) return FlexVerdict::OutOfScope;
  const int g = s.genus, b = s.boundary_components;
  const bool exception = (g == 1 && b == 1) || (g == 0 && b <= 2);
  return exception ? FlexVerdict::Exception : FlexVerdict::NoFlexibleEmbeddingExists;
}

std::string slice_verdict_name(SliceVerdict v) {
  return v == SliceVerdict::NotSliceInAnyHomologyBall ? "NotSliceInAnyHomologyBall"
                                                      : "Inconclusive";
}

SliceVerdict slice_obstruction(const PlumbingDescriptor& d, const FactStore& facts,
                               const CurveCatalog& humphreys) {
  if (d.ambient != Ambient::HomologyBallS3)
    throw InapplicableError("slice obstruction needs a homology ball with S^3 boundary");
  if (!(humphreys.surface == d.surface))
    throw InvalidInputError("catalog surface does not match the descriptor");
  for (const auto& [name, cls] : humphreys.curves) {
    (void)cls;
    if (!facts.contains(name))
      throw InvalidInputError("catalog curve " + name + " has no fact in the descriptor");
    if (facts.status(name) != Status::Extendible) return SliceVerdict::Inconclusive;
  }
  return SliceVerdict::NotSliceInAnyHomologyBall;
}

std::map<std::string, Status> closure(
    const FactStore& facts, const std::vector<std::pair<std::string, TwistWord>>& words) {
  std::map<std::string, Status> out;
  for (const auto& [name, word] : words) {
    bool ok = true;
    for (size_t i = 0; i < word.letters.size() && ok;) {
      const auto& l = word.letters[i];
      const Status st = facts.status(l.curve);
      if (st == Status::Extendible) {
        ++i;
        continue;
      }
      // Square-extendible twists enter only as adjacent equal pairs.
      if (st == Status::SquareExtendible && i + 1 < word.letters.size() &&
          word.letters[i + 1].curve == l.curve &&
          word.letters[i + 1].exponent == l.exponent) {
        i += 2;
        continue;
      }
      ok = false;
    }
    out[name] = ok ? Status::Extendible : Status::Unknown;
  }
  return out;
}

}  // namespace spinform
