#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinform/quadform.hpp"

namespace spinform {

// Twisted annulus in a plumbing chart: the core carries `twist` full
// twists of surface framing. Unknottedness and sliceness of the core are
// hypotheses supplied with the chart, never computed.
struct AnnulusNode {
  std::string label;
  Int twist = 0;
  bool core_unknotted = false;
  bool core_slice = false;
  // Framing of a 2-handle whose core disk the core bounds, if declared.
  std::optional<Int> bounds_handle;
};

struct PlumbingEdge {
  std::string a;
  std::string b;
  int sign = 1;
  bool tau_ab_unknot = false;  // image twist_a(b) declared unknotted
  bool tau_ba_unknot = false;  // image twist_b(a) declared unknotted
};

enum class Ambient {
  HomologyBallS3,   // integral homology 4-ball with S^3 boundary
  HomologySphere,   // closed integral homology 4-sphere
  S2xS2MinusBall,
  CP2MinusBall,
  Other,
};

std::string ambient_name(Ambient a);
Ambient ambient_from_string(const std::string& s);

// Ambients whose homology forces every proper embedding to be characteristic.
bool ambient_guarantees_characteristic(Ambient a);
// Ambients with boundary S^3 (or an integral homology 3-sphere).
bool ambient_has_s3_boundary(Ambient a);

// One pass of a curve through a node's annulus. A pass contributes
// multiplicity^2 * twist to the surface framing only when it runs through
// the twisted region; that positioning is chart data, not derivable from
// the graph.
struct CurvePass {
  std::string node;
  int multiplicity = 1;
  bool crosses_twist = true;
};

struct TraversalCurve {
  std::string name;
  std::vector<CurvePass> passes;
  // Net contribution of plumbing crossings, transcribed from the chart.
  Int declared_crossing_sum = 0;
  HomologyClass homology;
};

// Plumbing graph of twisted annuli modeling a Seifert-type embedding.
struct PlumbingDescriptor {
  std::string name;
  SurfaceSignature surface;
  Ambient ambient = Ambient::HomologyBallS3;
  std::string ambient_other_name;
  bool assert_characteristic = false;
  std::vector<AnnulusNode> nodes;
  std::vector<PlumbingEdge> edges;
  std::vector<TraversalCurve> curves;
  std::map<std::string, HomologyClass> homology_assignment;

  const AnnulusNode& node(const std::string& label) const;
  const HomologyClass& class_of(const std::string& label) const;
  bool adjacent(const std::string& a, const std::string& b) const;
  bool characteristic() const {
    return ambient_guarantees_characteristic(ambient) || assert_characteristic;
  }

  // Connectivity, edge/non-edge intersection parity, label uniqueness.
  void validate() const;
};

// Mod-2 surface framing of a core: q of the core class for unknotted cores.
int rokhlin_value(const AnnulusNode& node);

// The unique quadratic refinement with q(core class) = twist mod 2 for
// every node, obtained by solving for the basis values over GF(2).
// Throws IncompleteBasisError when the assignment does not span and
// InconsistentDescriptorError when the parities cannot be realized.
QuadraticForm rokhlin_form(const PlumbingDescriptor& d);

// Surface framing of the image of a once-intersecting curve under one
// Dehn twist: left-handed (+1) adds one, right-handed (-1) subtracts one.
Int framing_after_twist(Int n_target, Int n_twister, int handedness);

// Sum the framing ledger of a traversal curve.
Int traversal_framing(const TraversalCurve& curve, const PlumbingDescriptor& d);

}  // namespace spinform
