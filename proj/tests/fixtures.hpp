#pragma once

// Rings and ring morphisms shared by the unit tests and the acceptance suite.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ringgraph/gf.hpp"
#include "ringgraph/lambda.hpp"
#include "ringgraph/rings.hpp"

namespace ringgraph::fixture {

inline FieldPtr field(std::uint32_t p, std::uint32_t n) { return std::make_shared<const gf::FiniteField>(p, n); }

// Mixed test matrix: fields, matrix rings, products, quotients, non-unital rings.
inline std::vector<RingPtr> test_matrix() {
  return {ring_zmod(1),
          ring_field(2, 1),
          ring_field(2, 6),
          ring_field(3, 4),
          ring_zmod(12),
          ring_zmod(16),
          ring_matrix2(field(2, 1)),
          ring_matrix2(field(3, 1)),
          ring_matrix2(field(2, 2)),
          ring_matrix2(field(5, 1)),
          ring_matrix2(field(7, 1)),
          ring_matrix2(field(2, 3)),
          ring_product(ring_field(2, 2), ring_field(2, 2)),
          ring_product(ring_matrix2(field(2, 1)), ring_field(3, 1)),
          ring_product(ring_matrix2(field(2, 1)), ring_matrix2(field(2, 1))),
          ring_polyquot_x2(field(2, 3)),
          ring_polyquot_x2(field(3, 2)),
          ring_subring(ring_zmod(4), {0, 2}),
          ring_subring(ring_zmod(16), {0, 4, 8, 12}),
          unitalization(ring_subring(ring_zmod(4), {0, 2})),
          unitalization(ring_matrix2(field(2, 1)))};
}

inline RingMorphism table_morphism(RingPtr source, RingPtr target, auto&& fn) {
  std::vector<Element> map(source->order());
  for (Element x = 0; x < map.size(); ++x) map[x] = fn(x);
  return {std::move(source), std::move(target), std::move(map)};
}

// GF(q) -> M2(GF(q)), a -> aI.
inline RingMorphism scalar_embedding(const FieldPtr& f, RingPtr field_ring, RingPtr matrix_ring) {
  const auto q = static_cast<std::uint32_t>(f->order());
  return table_morphism(std::move(field_ring), std::move(matrix_ring), [q](Element a) { return matrix_code(q, a, 0, 0, a); });
}

inline RingMorphism subfield_inclusion(const FieldPtr& small, const FieldPtr& big, RingPtr small_ring, RingPtr big_ring) {
  const auto table = gf::embedding(*small, *big);
  return table_morphism(std::move(small_ring), std::move(big_ring), [&](Element a) { return table[a]; });
}

inline RingMorphism frobenius(const FieldPtr& f, RingPtr ring) {
  return table_morphism(ring, ring, [&](Element a) { return f->frobenius(a, 1); });
}

// X -> P X P^-1 on M2(F) with P = (1 1; 0 1).
inline RingMorphism conjugation(const FieldPtr& f, const RingPtr& m2) {
  const auto q = static_cast<std::uint32_t>(f->order());
  const Element p = matrix_code(q, 1, 1, 0, 1);
  const Element p_inv = matrix_code(q, 1, f->neg(1), 0, 1);
  return table_morphism(m2, m2, [&](Element x) { return m2->mul(m2->mul(p, x), p_inv); });
}

// (r, s) -> r.
inline RingMorphism first_projection(const RingPtr& product, const RingPtr& lhs) {
  return table_morphism(product, lhs, [&](Element x) { return static_cast<Element>(x % lhs->order()); });
}

inline RingMorphism swap_factors(const RingPtr& product, const RingPtr& factor) {
  const auto n = static_cast<Element>(factor->order());
  return table_morphism(product, product, [n](Element x) { return x / n + n * (x % n); });
}

inline RingMorphism diagonal(const RingPtr& factor, const RingPtr& product) {
  const auto n = static_cast<Element>(factor->order());
  return table_morphism(factor, product, [n](Element x) { return x + n * x; });
}

// Checks reconstruct_gamma(cg) against commuting_graph(ring) through the
// bijection sending the k-th copy of a class to its k-th member.
inline bool reconstruction_matches(const FiniteRing& ring, const CompressedGraph& cg) {
  const LoopGraph rebuilt = reconstruct_gamma(cg);
  const LoopGraph gamma = commuting_graph(ring);
  if (rebuilt.size() != gamma.size()) return false;
  const auto central = center(ring);
  std::vector<std::size_t> gamma_index(ring.order(), 0);
  for (Element x = 0, i = 0; x < ring.order(); ++x) {
    if (!std::binary_search(central.begin(), central.end(), x)) gamma_index[x] = i++;
  }
  std::vector<std::size_t> perm;
  for (const auto& cls : cg.partition.classes) {
    const bool is_central = std::binary_search(central.begin(), central.end(), cls.representative());
    if (is_central) continue;
    for (Element m : cls.members) perm.push_back(gamma_index[m]);
  }
  if (perm.size() != gamma.size()) return false;
  std::vector<std::size_t> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
  return permute(rebuilt, inverse) == gamma;
}

struct MorphismPair {
  std::string name;
  RingMorphism f;  // applied second
  RingMorphism g;  // applied first
  bool unital;
};

// Composable pairs (f after g) of validated morphisms.
inline std::vector<MorphismPair> composable_pairs() {
  const auto f2 = field(2, 1), f4 = field(2, 2), f16 = field(2, 4), f3 = field(3, 1);
  const auto r2 = ring_field(f2), r4 = ring_field(f4), r16 = ring_field(f16), r3 = ring_field(f3);
  const auto m4 = ring_matrix2(f4);
  const auto m3 = ring_matrix2(f3);
  const auto r6 = ring_product(r2, r3);
  const auto r33 = ring_product(r3, r3);
  std::vector<MorphismPair> pairs;
  pairs.push_back({"GF(2)->GF(4)->GF(16)", subfield_inclusion(f4, f16, r4, r16), subfield_inclusion(f2, f4, r2, r4), true});
  pairs.push_back({"GF(4)->GF(16)->GF(16) frobenius", frobenius(f16, r16), subfield_inclusion(f4, f16, r4, r16), true});
  pairs.push_back({"frobenius twice on GF(16)", frobenius(f16, r16), frobenius(f16, r16), true});
  pairs.push_back({"GF(4)->M2(GF(4)) then conjugation", conjugation(f4, m4), scalar_embedding(f4, r4, m4), true});
  pairs.push_back({"conjugation twice on M2(GF(3))", conjugation(f3, m3), conjugation(f3, m3), true});
  pairs.push_back({"GF(2)xGF(3)->GF(2)->GF(4)", subfield_inclusion(f2, f4, r2, r4), first_projection(r6, r2), true});
  pairs.push_back({"GF(3) diagonal then swap", swap_factors(r33, r3), diagonal(r3, r33), true});
  pairs.push_back({"GF(3)->M2(GF(3)) then conjugation, non-unital graphs", conjugation(f3, m3),
                   scalar_embedding(f3, r3, m3), false});
  return pairs;
}

}  // namespace ringgraph::fixture
