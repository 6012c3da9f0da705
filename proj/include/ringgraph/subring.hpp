#pragma once

#include <cstdint>
#include <vector>

#include "ringgraph/rings.hpp"

namespace ringgraph {

// A one-generated (unital) subring, identified by its sorted carrier.
struct SubringId {
  std::vector<Element> carrier;
  bool unital = false;

  std::size_t size() const { return carrier.size(); }
  bool contains(Element x) const;
  friend bool operator==(const SubringId&, const SubringId&) = default;
};

// Elements that generate the same subring. Members are sorted, so the
// representative is the least code.
struct CompressionClass {
  SubringId subring;
  std::vector<Element> members;

  std::uint64_t weight() const { return members.size(); }
  Element representative() const { return members.front(); }
};

struct CompressionPartition {
  bool unital = false;
  // Ordered by (carrier size, carrier lexicographically).
  std::vector<CompressionClass> classes;
  // Element code -> index into classes.
  std::vector<std::uint32_t> class_of;
};

// <a>: additive span of a, a^2, a^3, ...
SubringId subring_generated(const FiniteRing& ring, Element a);
// <a>_1: additive span of 1, a, a^2, ...; throws NotUnitalError without identity.
SubringId unital_subring_generated(const FiniteRing& ring, Element a);

// Same closures computed by Gaussian elimination over GF(p); requires
// ring.digit_prime() != 0.
SubringId subring_generated_linear(const FiniteRing& ring, Element a, bool unital);

// Partition of the carrier into classes of equal closure. Uses the linear
// closure when the ring has digit coordinates, the worklist closure otherwise.
// threads == 0 picks the hardware concurrency; the result never depends on it.
CompressionPartition compression_classes(const FiniteRing& ring, bool unital, unsigned threads = 0);

}  // namespace ringgraph
