#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringgraph/graph.hpp"
#include "ringgraph/rings.hpp"
#include "ringgraph/subring.hpp"

namespace ringgraph {

// Largest classical commuting graph we are willing to materialise.
inline constexpr std::size_t kMaxGammaVertices = 20000;

// Weighted (unital) compressed commuting graph. Vertex i is classes[i] of the
// partition; its weight is the class size and every vertex is looped.
struct CompressedGraph {
  WeightedLoopGraph graph;
  CompressionPartition partition;
  bool unital = false;
  std::string ring;

  std::size_t vertex_count() const { return graph.graph.size(); }
};

// An element map between rings, validated before use.
struct RingMorphism {
  RingPtr source;
  RingPtr target;
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
};

struct GraphMorphism {
  std::vector<std::uint32_t> vertex_map;

  friend bool operator==(const GraphMorphism&, const GraphMorphism&) = default;
};

// Vertices are the non-central elements in ascending code order; distinct
// commuting elements are adjacent; no loops.
LoopGraph commuting_graph(const FiniteRing& ring);

CompressedGraph compressed_graph(const FiniteRing& ring, bool unital, unsigned threads = 0);

// Exhaustive check of additivity, multiplicativity and (when unital) f(1) = 1.
// Throws MorphismError on the first violation.
void validate_morphism(const RingMorphism& f, bool unital);

RingMorphism identity_morphism(RingPtr ring);
// f after g.
RingMorphism compose(const RingMorphism& f, const RingMorphism& g);

// [r] -> [f(r)]. Validates f first; source/target must agree on unitality.
GraphMorphism induced_morphism(const RingMorphism& f, const CompressedGraph& source, const CompressedGraph& target);
// after o before.
GraphMorphism compose(const GraphMorphism& after, const GraphMorphism& before);
bool is_homomorphism(const GraphMorphism& m, const LoopGraph& source, const LoopGraph& target);
bool is_injective(const GraphMorphism& m);

// Witness of Lambda(R) ~ Lambda^1(R^1) via [a] -> [i(a)]_1.
struct UnitalizationIso {
  RingPtr unitalized;
  CompressedGraph lambda;    // of R
  CompressedGraph lambda1;   // of R^1
  GraphMorphism forward;     // lambda -> lambda1
  GraphMorphism inverse;     // lambda1 -> lambda
};
// Throws std::logic_error if the map fails to be a bijective isomorphism.
UnitalizationIso unitalization_iso(RingPtr ring, std::uint64_t max_order = kDefaultMaxOrder);

// Drops vertices adjacent to everything, blows each remaining vertex up into
// weight-many mutually adjacent copies, then removes loops.
LoopGraph reconstruct_gamma(const CompressedGraph& cg);

}  // namespace ringgraph
