#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ringgraph {

// Default cap on the number of elements any enumerated structure may have.
inline constexpr std::uint64_t kDefaultMaxOrder = 70000;

}  // namespace ringgraph

namespace ringgraph::gf {

// An element of GF(p^n) is identified by its integer code sum c_i p^i, where
// c_i are the coefficients of its residue modulo the field's modulus.
using Element = std::uint32_t;

// Polynomial over the prime field GF(p), coefficients ascending by degree.
// The zero polynomial has no coefficients.
struct Poly {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> coeffs;

  Poly() = default;
  Poly(std::uint32_t prime, std::vector<std::uint32_t> c);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  std::uint32_t operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// Remainder of a modulo a nonzero polynomial b.
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic, or zero

bool is_irreducible(const Poly& f);

// Smallest monic irreducible polynomial of degree d over GF(p), ordering the
// coefficient tuples (c_{d-1}, ..., c_0) as base-p integers.
Poly irreducible_poly(std::uint32_t p, std::uint32_t d);

class FiniteField {
 public:
  // Throws std::invalid_argument for composite p or n == 0, SizeLimitError
  // when p^n exceeds max_order.
  FiniteField(std::uint32_t p, std::uint32_t n, std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint32_t order() const { return order_; }
  const Poly& modulus() const { return modulus_; }
  // A generator of the multiplicative group.
  Element primitive() const { return primitive_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const { return neg_[a]; }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(std::span<const std::uint32_t> c) const;
  // Coefficients of a polynomial with entries in GF(p) embedded as constants.
  Element evaluate(const Poly& f, Element a) const;

  Poly minimal_polynomial(Element a) const;
  // a^{p^j}, 0 <= j < n.
  Element frobenius(Element a, std::uint32_t j) const;
  // The p^d elements fixed by a -> a^{p^d}; d must divide n.
  std::vector<Element> subfield_elements(std::uint32_t d) const;

  std::string name() const;

 private:
  Element mul_slow(Element a, Element b) const;
  Element frobenius_power(Element a, std::uint32_t j) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t order_;
  Poly modulus_;
  Element primitive_ = 1;
  std::vector<Element> neg_;
  std::vector<std::uint16_t> add_table_;  // order <= 256 only
  std::vector<std::uint32_t> log_;        // order <= 2^16 only
  std::vector<Element> antilog_;          // doubled length, avoids a modulo
};

// Table of an injective ring morphism GF(p^k) -> GF(p^n) for k | n, sending the
// small field's defining root to the least-coded root in the large field.
std::vector<Element> embedding(const FiniteField& small, const FiniteField& big);

}  // namespace ringgraph::gf
