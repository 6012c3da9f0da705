#include "ringgraph/subring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <thread>

#include "ringgraph/errors.hpp"

namespace ringgraph {
namespace {

// Epoch-stamped membership set; one per thread, reused across closures.
class Marker {
 public:
  void reset(std::size_t n) {
    if (stamp_.size() != n) {
      stamp_.assign(n, 0);
      epoch_ = 0;
    }
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }
  bool test(Element x) const { return stamp_[x] == epoch_; }
  void set(Element x) { stamp_[x] = epoch_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

std::vector<Element> closure_worklist(const FiniteRing& ring, Element a, bool unital) {
  thread_local Marker mark;
  mark.reset(ring.order());
  std::vector<Element> span{0};
  mark.set(0);
  // Extends the additive subgroup by g; false when g is already inside.
  auto absorb = [&](Element g) {
    if (mark.test(g)) return false;
    const std::size_t base = span.size();
    for (Element t = g; !mark.test(t); t = ring.add(t, g)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Element y = ring.add(span[i], t);
        mark.set(y);
        span.push_back(y);
      }
    }
    return true;
  };
  if (unital) absorb(*ring.one());
  // Once a^k lies in the span of lower powers, so do all higher powers.
  for (Element power = a; absorb(power);) power = ring.mul(power, a);
  std::sort(span.begin(), span.end());
  return span;
}

constexpr std::size_t kMaxDigits = 64;
using Digits = std::array<std::uint32_t, kMaxDigits>;

// Subspace of GF(p)^dim in reduced row echelon form.
class EchelonSpan {
 public:
  EchelonSpan(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {
    inverse_.assign(p, 0);
    for (std::uint64_t x = 1; x < p; ++x) {
      for (std::uint64_t y = 1; y < p; ++y) {
        if (x * y % p == 1) {
          inverse_[x] = static_cast<std::uint32_t>(y);
          break;
        }
      }
    }
  }

  // False when code is already in the span.
  bool insert(Element code) {
    Digits v = to_digits(code);
    for (const auto& row : rows_) {
      const std::uint32_t c = v[row.pivot];
      if (c != 0) axpy(v, p_ - c, row.digits);
    }
    std::size_t pivot = dim_;
    for (std::size_t i = dim_; i-- > 0;) {
      if (v[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == dim_) return false;
    const std::uint32_t scale = inverse_[v[pivot]];
    for (std::size_t i = 0; i < dim_; ++i) v[i] = static_cast<std::uint32_t>(std::uint64_t{v[i]} * scale % p_);
    for (auto& row : rows_) {
      const std::uint32_t c = row.digits[pivot];
      if (c != 0) axpy(row.digits, p_ - c, v);
    }
    rows_.push_back({pivot, v});
    return true;
  }

  // Canonical: the reduced echelon rows of a subspace are unique.
  std::vector<Element> key() const {
    std::vector<Element> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_) out.push_back(from_digits(row.digits));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct Row {
    std::size_t pivot;
    Digits digits;
  };

  Digits to_digits(Element code) const {
    Digits d{};
    for (std::size_t i = 0; i < dim_; ++i, code /= p_) d[i] = code % p_;
    return d;
  }
  Element from_digits(const Digits& d) const {
    Element code = 0;
    for (std::size_t i = dim_; i-- > 0;) code = code * p_ + d[i];
    return code;
  }
  void axpy(Digits& y, std::uint32_t c, const Digits& x) const {
    for (std::size_t i = 0; i < dim_; ++i) y[i] = static_cast<std::uint32_t>((y[i] + std::uint64_t{c} * x[i]) % p_);
  }

  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::uint32_t> inverse_;
  std::vector<Row> rows_;
};

std::size_t digit_count(const FiniteRing& ring) {
  const std::uint32_t p = ring.digit_prime();
  std::size_t dim = 0;
  for (std::uint64_t size = 1; size < ring.order(); size *= p) ++dim;
  if (dim > kMaxDigits) throw std::length_error("ring has too many digit coordinates");
  return dim;
}

std::vector<Element> linear_key(const FiniteRing& ring, std::size_t dim, Element a, bool unital) {
  EchelonSpan span(ring.digit_prime(), dim);
  if (unital) span.insert(*ring.one());
  for (Element power = a; span.insert(power);) power = ring.mul(power, a);
  return span.key();
}

// All GF(p)-combinations of the basis; digit addition is ring addition.
std::vector<Element> expand_span(const FiniteRing& ring, const std::vector<Element>& basis) {
  std::vector<Element> span{0};
  for (Element b : basis) {
    const std::size_t base = span.size();
    for (Element t = b; t != 0; t = ring.add(t, b)) {
      for (std::size_t i = 0; i < base; ++i) span.push_back(ring.add(span[i], t));
    }
  }
  std::sort(span.begin(), span.end());
  return span;
}

void require_unital(const FiniteRing& ring) {
  if (!ring.is_unital()) throw NotUnitalError(ring.descriptor() + " has no identity element");
}

}  // namespace

bool SubringId::contains(Element x) const { return std::binary_search(carrier.begin(), carrier.end(), x); }

SubringId subring_generated(const FiniteRing& ring, Element a) { return {closure_worklist(ring, a, false), false}; }

SubringId unital_subring_generated(const FiniteRing& ring, Element a) {
  require_unital(ring);
  return {closure_worklist(ring, a, true), true};
}

SubringId subring_generated_linear(const FiniteRing& ring, Element a, bool unital) {
  if (ring.digit_prime() == 0) throw std::invalid_argument(ring.descriptor() + " has no GF(p) digit coordinates");
  if (unital) require_unital(ring);
  return {expand_span(ring, linear_key(ring, digit_count(ring), a, unital)), unital};
}

CompressionPartition compression_classes(const FiniteRing& ring, bool unital, unsigned threads) {
  if (unital) require_unital(ring);
  const auto n = static_cast<Element>(ring.order());
  const bool linear = ring.digit_prime() != 0;
  const std::size_t dim = linear ? digit_count(ring) : 0;

  // Per-element keys are independent; merging below is sequential by code.
  std::vector<std::vector<Element>> keys(n);
  auto work = [&](Element begin, Element end) {
    for (Element a = begin; a < end; ++a) {
      keys[a] = linear ? linear_key(ring, dim, a, unital) : closure_worklist(ring, a, unital);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<Element>(1, n / 256));
  if (threads <= 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    const Element chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const Element begin = std::min(n, t * chunk), end = std::min(n, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
  }

  std::map<std::vector<Element>, std::vector<Element>> groups;
  for (Element a = 0; a < n; ++a) groups[keys[a]].push_back(a);
  keys.clear();

  CompressionPartition out;
  out.unital = unital;
  out.classes.reserve(groups.size());
  for (auto& [key, members] : groups) {
    SubringId id{linear ? expand_span(ring, key) : key, unital};
    out.classes.push_back({std::move(id), std::move(members)});
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const CompressionClass& x, const CompressionClass& y) {
    if (x.subring.size() != y.subring.size()) return x.subring.size() < y.subring.size();
    return x.subring.carrier < y.subring.carrier;
  });
  out.class_of.assign(n, 0);
  for (std::uint32_t i = 0; i < out.classes.size(); ++i) {
    for (Element a : out.classes[i].members) out.class_of[a] = i;
  }
  return out;
}

}  // namespace ringgraph
