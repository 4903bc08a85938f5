#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinform/plumbing.hpp"
#include "spinform/twist.hpp"

namespace spinform {

// Status lattice: Unknown < SquareExtendible < Extendible, with
// NotExtendible incompatible with both upgrades. The obstruction lemmas
// are one-directional, so q = 1 never promotes a curve by itself.
enum class Status { Unknown, SquareExtendible, Extendible, NotExtendible };

enum class Rationale {
  None,
  Input,
  HopfTrick,
  TubeTrick,
  HandleTrick,
  Thm3a,
  Thm3b,
  Thm3c,
  QZeroObstruction,
  BoundaryParallelObstruction,
  Closure,
};

std::string status_name(Status s);
std::string rationale_name(Rationale r);

struct ExtendibilityFact {
  std::string curve;
  HomologyClass cls;
  Status status = Status::Unknown;
  Rationale rationale = Rationale::None;
};

// Per-curve fact map. Upgrades are monotone; a clash between Extendible
// and NotExtendible signals an inconsistent descriptor.
class FactStore {
 public:
  void ensure(const std::string& curve, const HomologyClass& cls);
  void upgrade(const std::string& curve, Status status, Rationale rationale);
  const ExtendibilityFact& fact(const std::string& curve) const;
  Status status(const std::string& curve) const;
  std::vector<ExtendibilityFact> all() const;
  bool contains(const std::string& curve) const { return facts_.count(curve) != 0; }

 private:
  std::map<std::string, ExtendibilityFact> facts_;
};

// Twist along an essential curve with q = 0 cannot extend; q = 1 decides
// nothing.
ExtendibilityFact obstruct_essential(const QuadraticForm& q, const std::string& name,
                                     const HomologyClass& gamma, bool essential,
                                     bool characteristic);

// Boundary-parallel variant; needs an ambient bounded by an integral
// homology sphere.
ExtendibilityFact obstruct_boundary_parallel(const QuadraticForm& q, const std::string& name,
                                             const HomologyClass& gamma, Ambient ambient);

// A q = 0 curve from the three disjoint-triple witness families. Defined
// for every signature except (1,1), (0,2), (1,0) and the trivial (0,b<=2).
struct WitnessResult {
  HomologyClass witness;
  std::string family;
  std::array<HomologyClass, 3> triple;  // (u, v, w) with u = v + w
};
WitnessResult witness_q_zero(SurfaceSignature s, const QuadraticForm& q);

// Closed torus in a homology 4-sphere: Arf vanishes, so some basis twist
// is obstructed. Arf 1 input is a contradiction, not a verdict.
ExtendibilityFact torus_case(const QuadraticForm& q, Ambient ambient);

// ((sigma - self_intersection) / 8) mod 2; the difference must be
// divisible by 8.
int rokhlin_arf(Int sigma, Int self_intersection);

// Framing +-1 over an unknotted, nullhomologous-in-the-ambient core gives
// an extendible twist; framing 0 gives the square.
std::optional<ExtendibilityFact> hopf_trick(const AnnulusNode& node, const HomologyClass& cls);
std::optional<ExtendibilityFact> tube_trick(const AnnulusNode& node, const HomologyClass& cls);
std::optional<ExtendibilityFact> handle_trick(const AnnulusNode& node, const HomologyClass& cls);

// Seed facts from the three tricks over all nodes of a descriptor.
FactStore trick_seeds(const PlumbingDescriptor& d);

// Close a fact set under the twist-propagation rules along plumbing
// edges:
//  (a) odd framing next to zero framing, image unknotted => extendible;
//  (b) framings (2n+1, -k(2n+1)), k odd, source extendible,
//      image unknotted => target extendible;
//  (c) odd framings with |sum| = 2, both images unknotted =>
//      the two twists are extendible together.
// Monotone; terminates within 3 * |nodes| sweeps.
FactStore thm3_propagate(const PlumbingDescriptor& d, FactStore facts);

enum class Flexibility { Flexible, NotFlexible, Unknown };
std::string flexibility_name(Flexibility f);

// Single-annulus verdicts: even framing is never flexible over an S^3
// boundary; framing +-1 over a slice core is.
Flexibility parity_flexibility(const PlumbingDescriptor& d);

enum class FlexVerdict { NoFlexibleEmbeddingExists, Exception, OutOfScope };
std::string flex_verdict_name(FlexVerdict v);

// Decision table for flexible embeddings in homology balls/spheres.
FlexVerdict flexibility_verdict(SurfaceSignature s, Ambient ambient);

enum class SliceVerdict { NotSliceInAnyHomologyBall, Inconclusive };
std::string slice_verdict_name(SliceVerdict v);

class CurveCatalog;  // spin_mcg.hpp

// If every twist in the generating catalog is extendible for this
// Seifert-type embedding, the boundary link cannot be slice in any
// homology ball with the same boundary.
SliceVerdict slice_obstruction(const PlumbingDescriptor& d, const FactStore& facts,
                               const CurveCatalog& humphreys);

// Word-level closure under the subgroup structure: products of extendible
// twists extend; square-extendible letters are usable in adjacent equal
// pairs.
std::map<std::string, Status> closure(const FactStore& facts,
                                      const std::vector<std::pair<std::string, TwistWord>>& words);

}  // namespace spinform
