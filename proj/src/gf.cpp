#include "ringgraph/gf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ringgraph/errors.hpp"
#include "ringgraph/numtheory.hpp"

namespace ringgraph::gf {
namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^{p-2} is the inverse.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(std::vector<std::uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly make_monic(Poly f) {
  if (f.is_zero()) return f;
  const std::uint32_t lead_inv = inv_mod(f.coeffs.back(), f.p);
  for (auto& c : f.coeffs) c = static_cast<std::uint32_t>(std::uint64_t{c} * lead_inv % f.p);
  return f;
}

Poly x_poly(std::uint32_t p) { return Poly(p, {0, 1}); }

}  // namespace

Poly::Poly(std::uint32_t prime, std::vector<std::uint32_t> c) : p(prime), coeffs(std::move(c)) {
  for (auto& x : coeffs) x %= p;
  trim(coeffs);
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const std::uint32_t c = coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % a.p;
  return Poly(a.p, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  std::vector<std::uint32_t> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + a.p - b[i]) % a.p;
  return Poly(a.p, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.p, {});
  std::vector<std::uint64_t> acc(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % a.p;
    }
  }
  return Poly(a.p, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

Poly poly_mod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_mod: division by the zero polynomial");
  std::vector<std::uint32_t> r = a.coeffs;
  const std::size_t db = b.coeffs.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.coeffs.back(), a.p);
  while (r.size() > db) {
    const std::size_t shift = r.size() - 1 - db;
    const std::uint64_t factor = r.back() * lead_inv % a.p;
    for (std::size_t i = 0; i <= db; ++i) {
      r[shift + i] = static_cast<std::uint32_t>((r[shift + i] + a.p - factor * b.coeffs[i] % a.p) % a.p);
    }
    trim(r);
  }
  return Poly(a.p, std::move(r));
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

bool is_irreducible(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  // Ben-Or: f has no factor of degree i <= d/2 iff gcd(x^{p^i} - x, f) = 1.
  const Poly x = x_poly(f.p);
  Poly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    Poly power(f.p, {1});
    Poly base = h;
    for (std::uint32_t e = f.p; e > 0; e >>= 1) {
      if (e & 1) power = poly_mod(poly_mul(power, base), f);
      base = poly_mod(poly_mul(base, base), f);
    }
    h = power;
    if (poly_gcd(f, poly_sub(h, x)).degree() != 0) return false;
  }
  return true;
}

Poly irreducible_poly(std::uint32_t p, std::uint32_t d) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("irreducible_poly: " + std::to_string(p) + " is not prime");
  if (d == 0) throw std::invalid_argument("irreducible_poly: degree must be positive");
  const std::uint64_t count = numtheory::checked_pow(p, d);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<std::uint32_t> c(d + 1, 0);
    std::uint64_t rest = k;
    for (std::uint32_t i = 0; i < d; ++i, rest /= p) c[i] = static_cast<std::uint32_t>(rest % p);
    c[d] = 1;
    Poly f(p, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw std::logic_error("irreducible_poly: no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t n, std::uint64_t max_order) : p_(p), n_(n) {
  if (!numtheory::is_prime(p)) throw std::invalid_argument("GF(" + std::to_string(p) + "^n): characteristic is not prime");
  if (n == 0) throw std::invalid_argument("GF(p^0) is not a field");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= p;
    if (order > max_order) {
      throw SizeLimitError("GF(" + std::to_string(p) + "^" + std::to_string(n) + ") exceeds the enumeration limit of " +
                           std::to_string(max_order) + " elements");
    }
  }
  order_ = static_cast<std::uint32_t>(order);
  modulus_ = irreducible_poly(p, n);

  neg_.resize(order_);
  for (Element a = 0; a < order_; ++a) {
    auto c = coefficients(a);
    for (auto& x : c) x = (p_ - x) % p_;
    neg_[a] = from_coefficients(c);
  }
  if (order_ <= 256) {
    add_table_.resize(std::size_t{order_} * order_);
    for (Element a = 0; a < order_; ++a) {
      auto ca = coefficients(a);
      for (Element b = 0; b < order_; ++b) {
        auto cb = coefficients(b);
        for (std::size_t i = 0; i < ca.size(); ++i) cb[i] = (cb[i] + ca[i]) % p_;
        add_table_[std::size_t{a} * order_ + b] = static_cast<std::uint16_t>(from_coefficients(cb));
      }
    }
  }

  // Primitive element: order of g is q-1 iff g^{(q-1)/r} != 1 for every prime r | q-1.
  const std::uint32_t group = order_ - 1;
  std::vector<std::uint32_t> prime_factors;
  for (auto r : numtheory::divisors(group)) {
    if (numtheory::is_prime(r)) prime_factors.push_back(static_cast<std::uint32_t>(r));
  }
  auto slow_pow = [this](Element a, std::uint64_t e) {
    Element result = 1;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = mul_slow(result, a);
      a = mul_slow(a, a);
    }
    return result;
  };
  for (Element g = 1; g < order_; ++g) {
    bool primitive = true;
    for (auto r : prime_factors) {
      if (slow_pow(g, group / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      primitive_ = g;
      break;
    }
  }

  if (order_ <= (1u << 16)) {
    log_.assign(order_, 0);
    antilog_.assign(2 * std::size_t{group}, 0);
    Element x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      antilog_[i] = x;
      antilog_[i + group] = x;
      log_[x] = i;
      x = mul_slow(x, primitive_);
    }
  }
}

Element FiniteField::add(Element a, Element b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * order_ + b];
  if (p_ == 2) return a ^ b;
  Element result = 0, place = 1;
  while (a != 0 || b != 0) {
    result += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return result;
}

Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (!log_.empty()) return antilog_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

Element FiniteField::mul_slow(Element a, Element b) const {
  Poly pa(p_, coefficients(a));
  Poly pb(p_, coefficients(b));
  Poly r = poly_mod(poly_mul(pa, pb), modulus_);
  r.coeffs.resize(n_, 0);
  return from_coefficients(r.coeffs);
}

Element FiniteField::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  return pow(a, order_ - 2);
}

Element FiniteField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  for (; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
  }
  return result;
}

std::vector<std::uint32_t> FiniteField::coefficients(Element a) const {
  std::vector<std::uint32_t> c(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i, a /= p_) c[i] = a % p_;
  return c;
}

Element FiniteField::from_coefficients(std::span<const std::uint32_t> c) const {
  Element code = 0;
  for (std::size_t i = std::min<std::size_t>(c.size(), n_); i-- > 0;) code = code * p_ + c[i] % p_;
  return code;
}

Element FiniteField::evaluate(const Poly& f, Element a) const {
  Element acc = 0;
  for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = add(mul(acc, a), f.coeffs[i]);
  return acc;
}

Poly FiniteField::minimal_polynomial(Element a) const {
  std::vector<Element> conjugates{a};
  for (Element c = frobenius_power(a, 1); c != a; c = frobenius_power(c, 1)) conjugates.push_back(c);
  // prod (x - c) with coefficients in F; they land in the prime field.
  std::vector<Element> acc{1};
  for (Element c : conjugates) {
    std::vector<Element> next(acc.size() + 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] = add(next[i + 1], acc[i]);
      next[i] = add(next[i], mul(neg(c), acc[i]));
    }
    acc = std::move(next);
  }
  std::vector<std::uint32_t> coeffs(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] >= p_) throw std::logic_error("minimal_polynomial: coefficient outside the prime field");
    coeffs[i] = acc[i];
  }
  return Poly(p_, std::move(coeffs));
}

Element FiniteField::frobenius(Element a, std::uint32_t j) const {
  if (j >= n_) throw std::invalid_argument("frobenius: exponent index must be below the field degree");
  return frobenius_power(a, j);
}

Element FiniteField::frobenius_power(Element a, std::uint32_t j) const {
  for (std::uint32_t i = 0; i < j; ++i) a = pow(a, p_);
  return a;
}

std::vector<Element> FiniteField::subfield_elements(std::uint32_t d) const {
  if (d == 0 || n_ % d != 0) {
    throw std::invalid_argument("subfield_elements: " + std::to_string(d) + " does not divide " + std::to_string(n_));
  }
  std::vector<Element> out;
  for (Element a = 0; a < order_; ++a) {
    if (frobenius_power(a, d) == a) out.push_back(a);
  }
  return out;
}

std::string FiniteField::name() const { return "GF(" + std::to_string(p_) + "^" + std::to_string(n_) + ")"; }

std::vector<Element> embedding(const FiniteField& small, const FiniteField& big) {
  if (small.characteristic() != big.characteristic() || big.degree() % small.degree() != 0) {
    throw std::invalid_argument("embedding: " + small.name() + " is not a subfield of " + big.name());
  }
  Element root = 0;
  bool found = false;
  for (Element b = 0; b < big.order() && !found; ++b) {
    if (big.evaluate(small.modulus(), b) == 0) {
      root = b;
      found = true;
    }
  }
  if (!found) throw std::logic_error("embedding: no root of the defining polynomial");
  std::vector<Element> table(small.order());
  for (Element a = 0; a < small.order(); ++a) {
    Poly as_poly(small.characteristic(), small.coefficients(a));
    table[a] = big.evaluate(as_poly, root);
  }
  return table;
}

}  // namespace ringgraph::gf
