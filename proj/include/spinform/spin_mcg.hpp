#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinform/quadform.hpp"
#include "spinform/twist.hpp"

namespace spinform {

enum class Relation { Commute, Braid };

// Named simple closed curves on a fixed surface, with their homology
// classes, pairwise geometric intersection counts and the twist relations
// those counts license. Catalogs are transcribed chart data; validate()
// cross-checks the three layers against each other.
class CurveCatalog {
 public:
  std::string name;
  SurfaceSignature surface;
  CurveClassMap curves;
  std::map<std::pair<std::string, std::string>, int> geometric_intersections;
  std::map<std::pair<std::string, std::string>, Relation> relation_table;
  // Optional aliases: alias = tau_s^e (t), for conjugate-rewrite moves.
  struct ConjugateAlias {
    std::string alias;
    std::string by;
    int exponent = 1;
    std::string of;
  };
  std::vector<ConjugateAlias> named_conjugates;

  const HomologyClass& class_of(const std::string& curve) const;
  int geometric(const std::string& a, const std::string& b) const;
  // Relation for the pair, if one is declared.
  std::optional<Relation> relation(const std::string& a, const std::string& b) const;

  // Geometric counts mod 2 must match homology pairings; relations must
  // be commute exactly at count 0 and braid exactly at count 1.
  void validate() const;

  static std::pair<std::string, std::string> key(const std::string& a, const std::string& b);
};

// Standard chain catalog c1..c_{2g+1} plus the off-chain curves
// b2, b4, ..., b_{2g-2} used by the spin generating sets on closed
// genus-g surfaces.
CurveCatalog chain_catalog(int g);

// Generating set of the twist stabilizer of the standard form, as listed
// by Hirose: X_i, Y_{2j}, D_i, DB_{2j}, Z1, Z2 over the chain catalog.
std::vector<std::pair<std::string, TwistWord>> hirose_generators(int g);

// The 3g-element generating set: alpha_i, beta_j, gamma_k, zeta.
std::vector<std::pair<std::string, TwistWord>> thm5_generators(int g);

// True when both words act identically on homology in the chosen ring.
// Necessary only: the homology representation kills the Torelli group, so
// reports label these results "verified in the symplectic representation".
bool verify_identity_symplectic(const TwistWord& lhs, const TwistWord& rhs,
                                const CurveCatalog& catalog, Ring ring);

struct RewriteMove {
  enum class Kind { FreeCancel, Commute, Braid, ConjugateRewrite };
  Kind kind = Kind::FreeCancel;
  std::string a;
  std::string b;
};

std::string move_kind_name(RewriteMove::Kind k);

// A printed derivation: consecutive steps must differ by exactly the
// declared elementary move.
struct RewriteChain {
  std::string name;
  std::vector<TwistWord> steps;
  std::vector<RewriteMove> moves;
};

// Checks each declared move. Returns false on an illegal application;
// throws UnverifiableMoveError when a move touches a pair with no
// declared relation.
bool verify_rewrite_chain(const RewriteChain& chain, const CurveCatalog& catalog);

struct GenerationReport {
  std::uint64_t order = 0;
  bool preserves_all = false;
  std::vector<std::pair<std::string, bool>> preserves;
};

inline constexpr int kBfsMaxRank = 8;

// Order of the subgroup of Sp(rank, 2) generated by the homology images
// of the given words, by breadth-first closure over packed bit matrices;
// also reports which generators stabilize q.
GenerationReport generated_subgroup_order(
    const std::vector<std::pair<std::string, TwistWord>>& words, const CurveCatalog& catalog,
    const QuadraticForm& q);

// All of Sp(2g, 2) by closure over the full transvection set.
std::vector<std::uint64_t> enumerate_symplectic_group(int g);

// |{M in Sp(2g,2) : q(Mx) = q(x)}| by full enumeration; independent of
// any generating set.
std::uint64_t stabilizer_order_oracle(const QuadraticForm& q, int g);

}  // namespace spinform
