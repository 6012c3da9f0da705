#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringgraph/gf.hpp"

namespace ringgraph {

// Ring elements are dense codes in [0, order). Code 0 is always the zero.
using Element = std::uint32_t;

// A finite, possibly non-unital ring. Instances are immutable once built by
// one of the ring_* factories below and may be shared across threads.
class FiniteRing {
 public:
  virtual ~FiniteRing() = default;

  std::uint64_t order() const { return order_; }
  Element zero() const { return 0; }
  const std::optional<Element>& one() const { return one_; }
  bool is_unital() const { return one_.has_value(); }
  std::uint64_t characteristic() const { return characteristic_; }
  const std::string& descriptor() const { return descriptor_; }

  // Nonzero when the base-p digits of a code are coordinates over GF(p) and
  // addition is digit-wise mod p. Enables linear-algebra closures.
  std::uint32_t digit_prime() const { return digit_prime_; }

  virtual Element add(Element a, Element b) const = 0;
  virtual Element neg(Element a) const = 0;
  virtual Element mul(Element a, Element b) const = 0;

  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  // k * a by repeated doubling.
  Element scale(std::uint64_t k, Element a) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }

 protected:
  FiniteRing(std::uint64_t order, std::optional<Element> one, std::string descriptor, std::uint32_t digit_prime)
      : order_(order), one_(one), descriptor_(std::move(descriptor)), digit_prime_(digit_prime) {}

 private:
  friend std::shared_ptr<const FiniteRing> detail_finalize(std::shared_ptr<FiniteRing> ring);

  std::uint64_t order_;
  std::optional<Element> one_;
  std::uint64_t characteristic_ = 0;
  std::string descriptor_;
  std::uint32_t digit_prime_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;
using FieldPtr = std::shared_ptr<const gf::FiniteField>;

// Rings of at most this order get precomputed add/neg/mul tables.
inline constexpr std::uint64_t kTabulationLimit = 4096;

RingPtr ring_field(FieldPtr field);
RingPtr ring_field(std::uint32_t p, std::uint32_t n, std::uint64_t max_order = kDefaultMaxOrder);
RingPtr ring_zmod(std::uint64_t m, std::uint64_t max_order = kDefaultMaxOrder);
RingPtr ring_matrix2(FieldPtr field, std::uint64_t max_order = kDefaultMaxOrder);
RingPtr ring_product(RingPtr lhs, RingPtr rhs, std::uint64_t max_order = kDefaultMaxOrder);
RingPtr ring_polyquot_x2(FieldPtr field, std::uint64_t max_order = kDefaultMaxOrder);
// R^1 = Z_m x R, m = char R, with (k,a)(n,b) = (kn, na + kb + ab).
// Codes pack as k + m * a; i(r) = (0, r) has code m * r.
RingPtr unitalization(RingPtr ring, std::uint64_t max_order = kDefaultMaxOrder);
// The subring on a closed carrier, recoded by position in the sorted carrier.
RingPtr ring_subring(RingPtr ring, std::vector<Element> carrier, std::string descriptor = {});

// Element code of the 2x2 matrix (a b; c d) in ring_matrix2 over a field of order q.
inline Element matrix_code(std::uint32_t q, Element a, Element b, Element c, Element d) {
  return a + q * (b + q * (c + q * d));
}
// Code of (r, s) in ring_product(R, S).
inline Element product_code(const FiniteRing& lhs, Element r, Element s) {
  return r + static_cast<Element>(lhs.order()) * s;
}
// Code of the canonical embedding i(r) = (0, r) in unitalization(R).
inline Element unitalization_embed(const FiniteRing& ring, Element r) {
  return static_cast<Element>(ring.characteristic()) * r;
}

std::vector<Element> center(const FiniteRing& ring);
std::vector<Element> centralizer(const FiniteRing& ring, Element a);

// A small generating set of the additive group, chosen greedily by code.
std::vector<Element> additive_generators(const FiniteRing& ring);

// Summary of a ring-axiom check; empty message means all checks passed.
struct AxiomReport {
  std::uint64_t triples_checked = 0;
  std::string failure;
  bool ok() const { return failure.empty(); }
};
// Exhaustive for order <= 256, otherwise `samples` random triples.
AxiomReport check_ring_axioms(const FiniteRing& ring, std::uint64_t samples = 10000, std::uint64_t seed = 1);

}  // namespace ringgraph
