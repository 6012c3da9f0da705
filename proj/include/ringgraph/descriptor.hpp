#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringgraph/rings.hpp"

namespace ringgraph {

// Parsed form of the ring grammar
//   gf:p^n | zmod:m | m2:gf:p^n | prod:(D,D) | polyquot:gf:p^n | unitalize:(D)
//   A field base may be a prime power: gf:4^1 reads as gf:2^2.
struct RingDescriptor {
  enum class Kind { kField, kZmod, kMatrix2, kProduct, kPolyQuot, kUnitalize };

  Kind kind = Kind::kField;
  std::uint32_t p = 0;  // field characteristic for kField, kMatrix2, kPolyQuot
  std::uint32_t n = 0;  // field degree
  std::uint64_t m = 0;  // modulus for kZmod
  std::vector<RingDescriptor> children;

  std::string canonical() const;
  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

// Whitespace is ignored. Throws ParseError.
RingDescriptor parse_descriptor(std::string_view text);

RingPtr build_ring(const RingDescriptor& d, std::uint64_t max_order = kDefaultMaxOrder);

}  // namespace ringgraph
