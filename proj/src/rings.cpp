#include "ringgraph/rings.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <string>

#include "ringgraph/errors.hpp"
#include "ringgraph/numtheory.hpp"

namespace ringgraph {

Element FiniteRing::scale(std::uint64_t k, Element a) const {
  Element result = 0;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = add(result, a);
    a = add(a, a);
  }
  return result;
}

namespace {

std::uint64_t additive_order(const FiniteRing& ring, Element a) {
  std::uint64_t k = 1;
  for (Element x = a; x != 0; x = ring.add(x, a)) ++k;
  return k;
}

void check_limit(std::uint64_t order, std::uint64_t max_order, const std::string& what) {
  if (order > max_order) {
    throw SizeLimitError(what + " has " + std::to_string(order) + " elements, above the enumeration limit of " +
                         std::to_string(max_order));
  }
}

std::uint64_t product_order(std::uint64_t a, std::uint64_t b, std::uint64_t max_order, const std::string& what) {
  std::uint64_t order = 0;
  try {
    order = numtheory::checked_mul(a, b);
  } catch (const std::overflow_error&) {
    throw SizeLimitError(what + " is too large to enumerate");
  }
  check_limit(order, max_order, what);
  return order;
}

class FieldRing final : public FiniteRing {
 public:
  explicit FieldRing(FieldPtr field)
      : FiniteRing(field->order(), Element{1}, "gf:" + std::to_string(field->characteristic()) + "^" + std::to_string(field->degree()),
                   field->characteristic()),
        field_(std::move(field)) {}

  Element add(Element a, Element b) const override { return field_->add(a, b); }
  Element neg(Element a) const override { return field_->neg(a); }
  Element mul(Element a, Element b) const override { return field_->mul(a, b); }

 private:
  FieldPtr field_;
};

class ZmodRing final : public FiniteRing {
 public:
  explicit ZmodRing(std::uint64_t m)
      : FiniteRing(m, Element{m == 1 ? 0u : 1u}, "zmod:" + std::to_string(m),
                   numtheory::is_prime(m) ? static_cast<std::uint32_t>(m) : 0),
        m_(m) {}

  Element add(Element a, Element b) const override { return static_cast<Element>((std::uint64_t{a} + b) % m_); }
  Element neg(Element a) const override { return static_cast<Element>((m_ - a) % m_); }
  Element mul(Element a, Element b) const override { return static_cast<Element>(std::uint64_t{a} * b % m_); }

 private:
  std::uint64_t m_;
};

class MatrixRing final : public FiniteRing {
 public:
  MatrixRing(FieldPtr field, std::uint64_t order)
      : FiniteRing(order, matrix_code(field->order(), 1, 0, 0, 1),
                   "m2:gf:" + std::to_string(field->characteristic()) + "^" + std::to_string(field->degree()),
                   field->characteristic()),
        field_(std::move(field)),
        q_(field_->order()) {}

  Element add(Element x, Element y) const override {
    const auto a = split(x), b = split(y);
    return join({field_->add(a[0], b[0]), field_->add(a[1], b[1]), field_->add(a[2], b[2]), field_->add(a[3], b[3])});
  }
  Element neg(Element x) const override {
    const auto a = split(x);
    return join({field_->neg(a[0]), field_->neg(a[1]), field_->neg(a[2]), field_->neg(a[3])});
  }
  Element mul(Element x, Element y) const override {
    const auto a = split(x), b = split(y);
    const auto& f = *field_;
    return join({f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
                 f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))});
  }

 private:
  std::array<Element, 4> split(Element x) const {
    return {x % q_, (x / q_) % q_, (x / (q_ * q_)) % q_, x / (q_ * q_ * q_)};
  }
  Element join(const std::array<Element, 4>& e) const { return matrix_code(q_, e[0], e[1], e[2], e[3]); }

  FieldPtr field_;
  Element q_;
};

class ProductRing final : public FiniteRing {
 public:
  ProductRing(RingPtr lhs, RingPtr rhs, std::uint64_t order)
      : FiniteRing(order, both_ones(*lhs, *rhs), "prod:(" + lhs->descriptor() + "," + rhs->descriptor() + ")",
                   lhs->digit_prime() == rhs->digit_prime() ? lhs->digit_prime() : 0),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)),
        stride_(static_cast<Element>(lhs_->order())) {}

  Element add(Element x, Element y) const override {
    return pack(lhs_->add(x % stride_, y % stride_), rhs_->add(x / stride_, y / stride_));
  }
  Element neg(Element x) const override { return pack(lhs_->neg(x % stride_), rhs_->neg(x / stride_)); }
  Element mul(Element x, Element y) const override {
    return pack(lhs_->mul(x % stride_, y % stride_), rhs_->mul(x / stride_, y / stride_));
  }

 private:
  static std::optional<Element> both_ones(const FiniteRing& lhs, const FiniteRing& rhs) {
    if (!lhs.one() || !rhs.one()) return std::nullopt;
    return product_code(lhs, *lhs.one(), *rhs.one());
  }
  Element pack(Element r, Element s) const { return r + stride_ * s; }

  RingPtr lhs_, rhs_;
  Element stride_;
};

// a + bX with X^2 = 0, code a + q b.
class PolyQuotRing final : public FiniteRing {
 public:
  PolyQuotRing(FieldPtr field, std::uint64_t order)
      : FiniteRing(order, Element{1},
                   "polyquot:gf:" + std::to_string(field->characteristic()) + "^" + std::to_string(field->degree()),
                   field->characteristic()),
        field_(std::move(field)),
        q_(field_->order()) {}

  Element add(Element x, Element y) const override {
    return pack(field_->add(x % q_, y % q_), field_->add(x / q_, y / q_));
  }
  Element neg(Element x) const override { return pack(field_->neg(x % q_), field_->neg(x / q_)); }
  Element mul(Element x, Element y) const override {
    const Element a = x % q_, b = x / q_, c = y % q_, d = y / q_;
    const auto& f = *field_;
    return pack(f.mul(a, c), f.add(f.mul(a, d), f.mul(b, c)));
  }

 private:
  Element pack(Element a, Element b) const { return a + q_ * b; }

  FieldPtr field_;
  Element q_;
};

class UnitalizationRing final : public FiniteRing {
 public:
  UnitalizationRing(RingPtr inner, std::uint64_t order)
      : FiniteRing(order, Element{inner->characteristic() == 1 ? 0u : 1u}, "unitalize:(" + inner->descriptor() + ")",
                   inner->characteristic() == inner->digit_prime() ? inner->digit_prime() : 0),
        inner_(std::move(inner)),
        m_(static_cast<Element>(inner_->characteristic())) {}

  Element add(Element x, Element y) const override {
    return pack((x % m_ + y % m_) % m_, inner_->add(x / m_, y / m_));
  }
  Element neg(Element x) const override { return pack((m_ - x % m_) % m_, inner_->neg(x / m_)); }
  Element mul(Element x, Element y) const override {
    const Element k = x % m_, a = x / m_, n = y % m_, b = y / m_;
    const Element scalar = static_cast<Element>(std::uint64_t{k} * n % m_);
    const Element body = inner_->add(inner_->add(inner_->scale(n, a), inner_->scale(k, b)), inner_->mul(a, b));
    return pack(scalar, body);
  }

 private:
  Element pack(Element k, Element a) const { return k + m_ * a; }

  RingPtr inner_;
  Element m_;
};

class SubRing final : public FiniteRing {
 public:
  SubRing(RingPtr ambient, std::vector<Element> carrier, std::optional<Element> one, std::string descriptor)
      : FiniteRing(carrier.size(), one, std::move(descriptor), 0), ambient_(std::move(ambient)), carrier_(std::move(carrier)) {}

  Element add(Element a, Element b) const override { return index(ambient_->add(carrier_[a], carrier_[b])); }
  Element neg(Element a) const override { return index(ambient_->neg(carrier_[a])); }
  Element mul(Element a, Element b) const override { return index(ambient_->mul(carrier_[a], carrier_[b])); }

 private:
  Element index(Element x) const {
    auto it = std::lower_bound(carrier_.begin(), carrier_.end(), x);
    if (it == carrier_.end() || *it != x) throw std::logic_error("subring carrier is not closed");
    return static_cast<Element>(it - carrier_.begin());
  }

  RingPtr ambient_;
  std::vector<Element> carrier_;
};

class TabulatedRing final : public FiniteRing {
 public:
  explicit TabulatedRing(const FiniteRing& inner)
      : FiniteRing(inner.order(), inner.one(), inner.descriptor(), inner.digit_prime()), n_(inner.order()) {
    add_.resize(n_ * n_);
    mul_.resize(n_ * n_);
    neg_.resize(n_);
    for (Element a = 0; a < n_; ++a) {
      neg_[a] = static_cast<std::uint16_t>(inner.neg(a));
      for (Element b = 0; b < n_; ++b) {
        add_[a * n_ + b] = static_cast<std::uint16_t>(inner.add(a, b));
        mul_[a * n_ + b] = static_cast<std::uint16_t>(inner.mul(a, b));
      }
    }
  }

  Element add(Element a, Element b) const override { return add_[a * n_ + b]; }
  Element neg(Element a) const override { return neg_[a]; }
  Element mul(Element a, Element b) const override { return mul_[a * n_ + b]; }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> add_, mul_, neg_;
};

}  // namespace

// Computes the characteristic and swaps in lookup tables for small rings.
RingPtr detail_finalize(std::shared_ptr<FiniteRing> ring) {
  std::uint64_t characteristic = 1;
  if (ring->one()) {
    characteristic = additive_order(*ring, *ring->one());
  } else {
    for (Element g : additive_generators(*ring)) {
      characteristic = numtheory::lcm(characteristic, additive_order(*ring, g));
    }
  }
  if (ring->order() <= kTabulationLimit) {
    auto table = std::make_shared<TabulatedRing>(*ring);
    table->characteristic_ = characteristic;
    return table;
  }
  ring->characteristic_ = characteristic;
  return ring;
}

RingPtr ring_field(FieldPtr field) { return detail_finalize(std::make_shared<FieldRing>(std::move(field))); }

RingPtr ring_field(std::uint32_t p, std::uint32_t n, std::uint64_t max_order) {
  return ring_field(std::make_shared<const gf::FiniteField>(p, n, max_order));
}

RingPtr ring_zmod(std::uint64_t m, std::uint64_t max_order) {
  if (m == 0) throw std::invalid_argument("zmod:0 is infinite and cannot be enumerated");
  check_limit(m, max_order, "zmod:" + std::to_string(m));
  return detail_finalize(std::make_shared<ZmodRing>(m));
}

RingPtr ring_matrix2(FieldPtr field, std::uint64_t max_order) {
  const std::uint64_t q = field->order();
  const std::uint64_t order = product_order(q * q, q * q, max_order, "M2(" + field->name() + ")");
  return detail_finalize(std::make_shared<MatrixRing>(std::move(field), order));
}

RingPtr ring_product(RingPtr lhs, RingPtr rhs, std::uint64_t max_order) {
  const std::uint64_t order =
      product_order(lhs->order(), rhs->order(), max_order, lhs->descriptor() + " x " + rhs->descriptor());
  return detail_finalize(std::make_shared<ProductRing>(std::move(lhs), std::move(rhs), order));
}

RingPtr ring_polyquot_x2(FieldPtr field, std::uint64_t max_order) {
  const std::uint64_t order = product_order(field->order(), field->order(), max_order, field->name() + "[x]/(x^2)");
  return detail_finalize(std::make_shared<PolyQuotRing>(std::move(field), order));
}

RingPtr unitalization(RingPtr ring, std::uint64_t max_order) {
  if (ring->characteristic() == 0) throw std::invalid_argument("unitalization: characteristic 0 is unrepresentable");
  const std::uint64_t order =
      product_order(ring->characteristic(), ring->order(), max_order, "unitalization of " + ring->descriptor());
  return detail_finalize(std::make_shared<UnitalizationRing>(std::move(ring), order));
}

RingPtr ring_subring(RingPtr ring, std::vector<Element> carrier, std::string descriptor) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  if (carrier.empty() || carrier.front() != 0) throw std::invalid_argument("ring_subring: carrier must contain zero");
  auto member = [&](Element x) { return std::binary_search(carrier.begin(), carrier.end(), x); };
  for (Element a : carrier) {
    if (!member(ring->neg(a))) throw std::invalid_argument("ring_subring: carrier not closed under negation");
    for (Element b : carrier) {
      if (!member(ring->add(a, b)) || !member(ring->mul(a, b))) {
        throw std::invalid_argument("ring_subring: carrier not closed under the ring operations");
      }
    }
  }
  std::optional<Element> one;
  for (std::size_t i = 0; i < carrier.size() && !one; ++i) {
    const Element e = carrier[i];
    const bool identity = std::all_of(carrier.begin(), carrier.end(),
                                      [&](Element x) { return ring->mul(e, x) == x && ring->mul(x, e) == x; });
    if (identity) one = static_cast<Element>(i);
  }
  if (descriptor.empty()) descriptor = "sub:(" + ring->descriptor() + ")";
  return detail_finalize(std::make_shared<SubRing>(std::move(ring), std::move(carrier), one, std::move(descriptor)));
}

std::vector<Element> additive_generators(const FiniteRing& ring) {
  const auto n = static_cast<Element>(ring.order());
  std::vector<char> in_span(n, 0);
  std::vector<Element> span{0};
  in_span[0] = 1;
  std::vector<Element> gens;
  for (Element x = 1; x < n; ++x) {
    if (in_span[x]) continue;
    gens.push_back(x);
    const std::size_t base = span.size();
    for (Element t = x; !in_span[t]; t = ring.add(t, x)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Element y = ring.add(span[i], t);
        in_span[y] = 1;
        span.push_back(y);
      }
    }
  }
  return gens;
}

std::vector<Element> center(const FiniteRing& ring) {
  const auto gens = additive_generators(ring);
  std::vector<Element> out;
  for (Element z = 0; z < ring.order(); ++z) {
    if (std::all_of(gens.begin(), gens.end(), [&](Element g) { return ring.commute(z, g); })) out.push_back(z);
  }
  return out;
}

std::vector<Element> centralizer(const FiniteRing& ring, Element a) {
  std::vector<Element> out;
  for (Element x = 0; x < ring.order(); ++x) {
    if (ring.commute(a, x)) out.push_back(x);
  }
  return out;
}

AxiomReport check_ring_axioms(const FiniteRing& ring, std::uint64_t samples, std::uint64_t seed) {
  AxiomReport report;
  const auto n = static_cast<Element>(ring.order());
  auto fail = [&](const std::string& what, Element a, Element b, Element c) {
    report.failure = what + " fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  auto check = [&](Element a, Element b, Element c) {
    ++report.triples_checked;
    if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) return fail("additive associativity", a, b, c), false;
    if (ring.add(a, b) != ring.add(b, a)) return fail("additive commutativity", a, b, c), false;
    if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) return fail("multiplicative associativity", a, b, c), false;
    if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) return fail("left distributivity", a, b, c), false;
    if (ring.mul(ring.add(a, b), c) != ring.add(ring.mul(a, c), ring.mul(b, c))) return fail("right distributivity", a, b, c), false;
    return true;
  };
  for (Element a = 0; a < n; ++a) {
    if (ring.add(a, 0) != a || ring.add(a, ring.neg(a)) != 0) {
      fail("additive identity/inverse", a, 0, 0);
      return report;
    }
    if (ring.one() && (ring.mul(*ring.one(), a) != a || ring.mul(a, *ring.one()) != a)) {
      fail("multiplicative identity", a, *ring.one(), 0);
      return report;
    }
  }
  if (n <= 256) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (!check(a, b, c)) return report;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (std::uint64_t i = 0; i < samples; ++i) {
      if (!check(pick(rng), pick(rng), pick(rng))) return report;
    }
  }
  return report;
}

}  // namespace ringgraph
