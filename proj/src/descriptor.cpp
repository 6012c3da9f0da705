#include "ringgraph/descriptor.hpp"

#include <cctype>
#include <charconv>
#include <memory>

#include "ringgraph/errors.hpp"
#include "ringgraph/numtheory.hpp"

namespace ringgraph {
namespace {

class Parser {
 public:
  explicit Parser(std::string text) : text_(std::move(text)) {}

  RingDescriptor parse() {
    RingDescriptor d = descriptor();
    if (pos_ != text_.size()) fail("trailing input");
    return d;
  }

 private:
  RingDescriptor descriptor() {
    RingDescriptor d;
    if (accept("gf:")) {
      d.kind = RingDescriptor::Kind::kField;
      field(d);
    } else if (accept("zmod:")) {
      d.kind = RingDescriptor::Kind::kZmod;
      d.m = number();
      if (d.m == 0) fail("zmod modulus must be positive");
    } else if (accept("m2:gf:")) {
      d.kind = RingDescriptor::Kind::kMatrix2;
      field(d);
    } else if (accept("polyquot:gf:")) {
      d.kind = RingDescriptor::Kind::kPolyQuot;
      field(d);
    } else if (accept("prod:(")) {
      d.kind = RingDescriptor::Kind::kProduct;
      d.children.push_back(descriptor());
      expect(",");
      d.children.push_back(descriptor());
      expect(")");
    } else if (accept("unitalize:(")) {
      d.kind = RingDescriptor::Kind::kUnitalize;
      d.children.push_back(descriptor());
      expect(")");
    } else {
      fail("unknown ring kind");
    }
    return d;
  }

  void field(RingDescriptor& d) {
    const std::uint64_t p = number();
    expect("^");
    const std::uint64_t n = number();
    // A prime-power base q = r^k is read as GF(r^(k n)).
    std::uint64_t r = 0, k = 0;
    for (std::uint64_t f = 2; f * f <= p && r == 0; ++f)
      if (p % f == 0) r = f;
    if (p >= 2 && r == 0) r = p;
    std::uint64_t rest = p;
    while (r != 0 && rest % r == 0) rest /= r, ++k;
    if (r == 0 || rest != 1) fail(std::to_string(p) + " is not a prime power");
    if (n == 0 || k * n > 64) fail("field degree out of range");
    d.p = static_cast<std::uint32_t>(r);
    d.n = static_cast<std::uint32_t>(k * n);
  }

  std::uint64_t number() {
    std::uint64_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    if (value > 0xffffffffu) fail("number too large");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  bool accept(std::string_view token) {
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }
  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("ring descriptor '" + text_ + "': " + what + " at position " + std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

std::string field_text(const RingDescriptor& d) { return "gf:" + std::to_string(d.p) + "^" + std::to_string(d.n); }

}  // namespace

std::string RingDescriptor::canonical() const {
  switch (kind) {
    case Kind::kField: return field_text(*this);
    case Kind::kZmod: return "zmod:" + std::to_string(m);
    case Kind::kMatrix2: return "m2:" + field_text(*this);
    case Kind::kPolyQuot: return "polyquot:" + field_text(*this);
    case Kind::kProduct: return "prod:(" + children[0].canonical() + "," + children[1].canonical() + ")";
    case Kind::kUnitalize: return "unitalize:(" + children[0].canonical() + ")";
  }
  return {};
}

RingDescriptor parse_descriptor(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return Parser(std::move(compact)).parse();
}

RingPtr build_ring(const RingDescriptor& d, std::uint64_t max_order) {
  auto field = [&] { return std::make_shared<const gf::FiniteField>(d.p, d.n, max_order); };
  switch (d.kind) {
    case RingDescriptor::Kind::kField: return ring_field(field());
    case RingDescriptor::Kind::kZmod: return ring_zmod(d.m, max_order);
    case RingDescriptor::Kind::kMatrix2: return ring_matrix2(field(), max_order);
    case RingDescriptor::Kind::kPolyQuot: return ring_polyquot_x2(field(), max_order);
    case RingDescriptor::Kind::kProduct:
      return ring_product(build_ring(d.children[0], max_order), build_ring(d.children[1], max_order), max_order);
    case RingDescriptor::Kind::kUnitalize: return unitalization(build_ring(d.children[0], max_order), max_order);
  }
  throw std::logic_error("build_ring: unknown descriptor kind");
}

}  // namespace ringgraph
