#include "spinform/plumbing.hpp"

#include <algorithm>
#include <set>

namespace spinform {

std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::HomologyBallS3: return "homology_ball_with_S3_boundary";
    case Ambient::HomologySphere: return "homology_sphere";
    case Ambient::S2xS2MinusBall: return "S2xS2_minus_ball";
    case Ambient::CP2MinusBall: return "CP2_minus_ball";
    case Ambient::Other: return "other";
  }
  return "other";
}

Ambient ambient_from_string(const std::string& s) {
  if (s == "homology_ball_with_S3_boundary") return Ambient::HomologyBallS3;
  if (s == "homology_sphere") return Ambient::HomologySphere;
  if (s == "S2xS2_minus_ball") return Ambient::S2xS2MinusBall;
  if (s == "CP2_minus_ball") return Ambient::CP2MinusBall;
  throw SchemaError("unknown ambient: " + s);
}

bool ambient_guarantees_characteristic(Ambient a) {
  return a == Ambient::HomologyBallS3 || a == Ambient::HomologySphere;
}

bool ambient_has_s3_boundary(Ambient a) {
  return a == Ambient::HomologyBallS3 || a == Ambient::S2xS2MinusBall ||
         a == Ambient::CP2MinusBall;
}

const AnnulusNode& PlumbingDescriptor::node(const std::string& label) const {
  for (const auto& n : nodes)
    if (n.label == label) return n;
  throw UnknownCurveError("unknown node: " + label);
}

const HomologyClass& PlumbingDescriptor::class_of(const std::string& label) const {
  auto it = homology_assignment.find(label);
  if (it == homology_assignment.end())
    throw UnknownCurveError("no homology class assigned to: " + label);
  return it->second;
}

bool PlumbingDescriptor::adjacent(const std::string& a, const std::string& b) const {
  for (const auto& e : edges)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
  return false;
}

void PlumbingDescriptor::validate() const {
  std::set<std::string> labels;
  for (const auto& n : nodes)
    if (!labels.insert(n.label).second)
      throw InconsistentDescriptorError("duplicate node label: " + n.label);
  if (nodes.empty()) throw InconsistentDescriptorError("descriptor has no nodes");

  const IntersectionForm form = IntersectionForm::standard(surface);
  for (const auto& e : edges) {
    if (!labels.count(e.a) || !labels.count(e.b))
      throw UnknownCurveError("edge references unknown node");
    if (e.sign != 1 && e.sign != -1)
      throw SchemaError("plumbing sign must be +1 or -1");
    if (intersect(class_of(e.a), class_of(e.b), form) != 1)
      throw InconsistentDescriptorError("plumbed cores " + e.a + "," + e.b +
                                        " must intersect once mod 2");
  }
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (adjacent(nodes[i].label, nodes[j].label)) continue;
      if (intersect(class_of(nodes[i].label), class_of(nodes[j].label), form) != 0)
        throw InconsistentDescriptorError("non-adjacent cores " + nodes[i].label + "," +
                                          nodes[j].label + " must not intersect mod 2");
    }

  // Connectivity of the plumbing graph.
  if (nodes.size() > 1) {
    std::set<std::string> seen{nodes.front().label};
    std::vector<std::string> frontier{nodes.front().label};
    while (!frontier.empty()) {
      const std::string cur = frontier.back();
      frontier.pop_back();
      for (const auto& e : edges) {
        std::string other;
        if (e.a == cur) other = e.b;
        else if (e.b == cur) other = e.a;
        else continue;
        if (seen.insert(other).second) frontier.push_back(other);
      }
    }
    if (seen.size() != nodes.size())
      throw InconsistentDescriptorError("plumbing graph is not connected");
  }

  for (const auto& c : curves) {
    for (const auto& p : c.passes) {
      if (!labels.count(p.node))
        throw UnknownCurveError("curve " + c.name + " passes unknown node " + p.node);
      if (p.multiplicity <= 0)
        throw SchemaError("pass multiplicity must be positive");
    }
  }
}

int rokhlin_value(const AnnulusNode& node) { return int(((node.twist % 2) + 2) % 2); }

QuadraticForm rokhlin_form(const PlumbingDescriptor& d) {
  if (!d.characteristic())
    throw InapplicableError(
        "rokhlin_form needs a characteristic embedding; ambient " + ambient_name(d.ambient) +
        " does not guarantee it and the descriptor does not assert it");

  QuadraticForm q{IntersectionForm::standard(d.surface), Gf2Vec::zero(d.surface.rank())};
  const int n = d.surface.rank();

  // Each node imposes a GF(2)-linear condition on the basis values:
  //   sum_{i in supp} u_i = twist + cross-terms of the support.
  // Solve by elimination, then re-check every node against the result.
  struct Row {
    std::uint64_t lhs;
    int rhs;
  };
  std::vector<Row> rows;
  rows.reserve(d.nodes.size());
  for (const auto& node : d.nodes) {
    const Gf2Vec s = d.class_of(node.label).mod2();
    QuadraticForm zero_vals{q.form, Gf2Vec::zero(n)};
    const int cross = evaluate_bits(zero_vals, s);
    rows.push_back({s.bits, rokhlin_value(node) ^ cross});
  }

  std::vector<Row> pivots;
  for (Row r : rows) {
    for (const Row& p : pivots) {
      const int lead = 63 - std::countl_zero(p.lhs);
      if ((r.lhs >> lead) & 1u) {
        r.lhs ^= p.lhs;
        r.rhs ^= p.rhs;
      }
    }
    if (r.lhs == 0) {
      if (r.rhs != 0)
        throw InconsistentDescriptorError("twist parities contradict the homology assignment");
      continue;
    }
    pivots.push_back(r);
    std::sort(pivots.begin(), pivots.end(),
              [](const Row& a, const Row& b) { return a.lhs > b.lhs; });
  }
  if (int(pivots.size()) < n)
    throw IncompleteBasisError("homology assignment does not span H_1; form underdetermined");

  Gf2Vec values = Gf2Vec::zero(n);
  // Back-substitute from the lowest-rank pivot upward.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    const int lead = 63 - std::countl_zero(it->lhs);
    const std::uint64_t rest = it->lhs & ~(std::uint64_t{1} << lead);
    const int v = it->rhs ^ parity64(rest & values.bits);
    values.set(lead, v);
  }
  q.basis_values = values;

  for (const auto& node : d.nodes)
    if (evaluate(q, d.class_of(node.label)) != rokhlin_value(node))
      throw InconsistentDescriptorError("node " + node.label +
                                        " twist parity inconsistent with the solved form");
  return q;
}

Int framing_after_twist(Int n_target, Int n_twister, int handedness) {
  if (handedness != 1 && handedness != -1)
    throw InvalidInputError("handedness must be +1 or -1");
  return n_target + n_twister + handedness;
}

Int traversal_framing(const TraversalCurve& curve, const PlumbingDescriptor& d) {
  Int total = curve.declared_crossing_sum;
  for (const auto& p : curve.passes) {
    const AnnulusNode& n = d.node(p.node);
    if (p.crosses_twist) total += Int(p.multiplicity) * Int(p.multiplicity) * n.twist;
  }
  return total;
}

}  // namespace spinform
