#include "ringgraph/lambda.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ringgraph/errors.hpp"

namespace ringgraph {

LoopGraph commuting_graph(const FiniteRing& ring) {
  const auto central = center(ring);
  std::vector<Element> vertices;
  vertices.reserve(ring.order() - central.size());
  for (Element x = 0; x < ring.order(); ++x) {
    if (!std::binary_search(central.begin(), central.end(), x)) vertices.push_back(x);
  }
  if (vertices.size() > kMaxGammaVertices) {
    throw SizeLimitError("commuting graph of " + ring.descriptor() + " would have " + std::to_string(vertices.size()) +
                         " vertices");
  }
  LoopGraph g(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (ring.commute(vertices[i], vertices[j])) g.connect(i, j);
  return g;
}

CompressedGraph compressed_graph(const FiniteRing& ring, bool unital, unsigned threads) {
  CompressedGraph cg;
  cg.unital = unital;
  cg.ring = ring.descriptor();
  cg.partition = compression_classes(ring, unital, threads);
  const auto& classes = cg.partition.classes;
  const std::size_t n = classes.size();
  LoopGraph g(n);
  std::vector<std::string> labels(n);
  cg.graph.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element a = classes[i].representative();
    g.connect(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ring.commute(a, classes[j].representative())) g.connect(i, j);
    }
    cg.graph.weights[i] = classes[i].weight();
    labels[i] = "|S|=" + std::to_string(classes[i].subring.size()) + ",w=" + std::to_string(classes[i].weight());
  }
  g.set_labels(std::move(labels));
  cg.graph.graph = std::move(g);
  return cg;
}

void validate_morphism(const RingMorphism& f, bool unital) {
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  if (f.map.size() != src.order()) throw MorphismError("morphism table size does not match the source order");
  for (Element x : f.map) {
    if (x >= tgt.order()) throw MorphismError("morphism value outside the target ring");
  }
  if (unital) {
    if (!src.is_unital() || !tgt.is_unital()) throw MorphismError("unital morphism between non-unital rings");
    if (f(*src.one()) != *tgt.one()) throw MorphismError("morphism does not preserve the identity");
  }
  for (Element a = 0; a < src.order(); ++a) {
    for (Element b = 0; b < src.order(); ++b) {
      if (f(src.add(a, b)) != tgt.add(f(a), f(b))) {
        throw MorphismError("not additive at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
      if (f(src.mul(a, b)) != tgt.mul(f(a), f(b))) {
        throw MorphismError("not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  }
}

RingMorphism identity_morphism(RingPtr ring) {
  std::vector<Element> map(ring->order());
  for (Element x = 0; x < map.size(); ++x) map[x] = x;
  return {ring, ring, std::move(map)};
}

RingMorphism compose(const RingMorphism& f, const RingMorphism& g) {
  if (g.target->order() != f.source->order()) throw MorphismError("morphisms are not composable");
  std::vector<Element> map(g.map.size());
  for (std::size_t x = 0; x < map.size(); ++x) map[x] = f(g(static_cast<Element>(x)));
  return {g.source, f.target, std::move(map)};
}

GraphMorphism induced_morphism(const RingMorphism& f, const CompressedGraph& source, const CompressedGraph& target) {
  if (source.unital != target.unital) throw MorphismError("unital and non-unital compressed graphs cannot be mixed");
  if (source.partition.class_of.size() != f.source->order() || target.partition.class_of.size() != f.target->order()) {
    throw MorphismError("compressed graphs do not belong to the morphism's rings");
  }
  validate_morphism(f, source.unital);
  GraphMorphism m;
  m.vertex_map.resize(source.vertex_count());
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    m.vertex_map[v] = target.partition.class_of[f(source.partition.classes[v].representative())];
  }
  // Independent of the representative for a genuine morphism.
  for (Element r = 0; r < f.source->order(); ++r) {
    if (m.vertex_map[source.partition.class_of[r]] != target.partition.class_of[f(r)]) {
      throw std::logic_error("induced vertex map depends on the class representative");
    }
  }
  return m;
}

GraphMorphism compose(const GraphMorphism& after, const GraphMorphism& before) {
  GraphMorphism m;
  m.vertex_map.resize(before.vertex_map.size());
  for (std::size_t v = 0; v < m.vertex_map.size(); ++v) m.vertex_map[v] = after.vertex_map.at(before.vertex_map[v]);
  return m;
}

bool is_homomorphism(const GraphMorphism& m, const LoopGraph& source, const LoopGraph& target) {
  if (m.vertex_map.size() != source.size()) return false;
  for (auto v : m.vertex_map) {
    if (v >= target.size()) return false;
  }
  for (std::size_t u = 0; u < source.size(); ++u)
    for (std::size_t v = u; v < source.size(); ++v)
      if (source.adjacent(u, v) && !target.adjacent(m.vertex_map[u], m.vertex_map[v])) return false;
  return true;
}

bool is_injective(const GraphMorphism& m) {
  auto sorted = m.vertex_map;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

UnitalizationIso unitalization_iso(RingPtr ring, std::uint64_t max_order) {
  UnitalizationIso iso;
  iso.unitalized = unitalization(ring, max_order);
  iso.lambda = compressed_graph(*ring, false);
  iso.lambda1 = compressed_graph(*iso.unitalized, true);
  const std::size_t n = iso.lambda.vertex_count();
  if (iso.lambda1.vertex_count() != n) {
    throw std::logic_error("unitalization: vertex counts differ (" + std::to_string(n) + " vs " +
                           std::to_string(iso.lambda1.vertex_count()) + ")");
  }
  iso.forward.vertex_map.resize(n);
  iso.inverse.vertex_map.assign(n, static_cast<std::uint32_t>(n));
  for (std::size_t v = 0; v < n; ++v) {
    const Element a = iso.lambda.partition.classes[v].representative();
    const auto image = iso.lambda1.partition.class_of[unitalization_embed(*ring, a)];
    iso.forward.vertex_map[v] = image;
    if (iso.inverse.vertex_map[image] != n) throw std::logic_error("unitalization: vertex map is not injective");
    iso.inverse.vertex_map[image] = static_cast<std::uint32_t>(v);
  }
  const auto& g = iso.lambda.graph.graph;
  const auto& h = iso.lambda1.graph.graph;
  if (!is_homomorphism(iso.forward, g, h) || !is_homomorphism(iso.inverse, h, g)) {
    throw std::logic_error("unitalization: vertex bijection does not preserve adjacency");
  }
  return iso;
}

LoopGraph reconstruct_gamma(const CompressedGraph& cg) {
  const auto& g = cg.graph.graph;
  const auto& w = cg.graph.weights;
  if (w.size() != g.size()) throw std::invalid_argument("reconstruct_gamma: compressed graph carries no weights");
  std::vector<std::size_t> kept;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.has_loop(v) && g.degree(v) == g.size() - 1) continue;
    kept.push_back(v);
    offset.push_back(total);
    total += w[v];
  }
  LoopGraph out(total);
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i; j < kept.size(); ++j) {
      if (!g.adjacent(kept[i], kept[j])) continue;
      for (std::size_t a = 0; a < w[kept[i]]; ++a)
        for (std::size_t b = 0; b < w[kept[j]]; ++b) {
          const std::size_t u = offset[i] + a, v = offset[j] + b;
          if (u != v) out.connect(u, v);
        }
    }
  return out;
}

}  // namespace ringgraph
