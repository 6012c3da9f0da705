#pragma once

#include <cstdint>
#include <vector>

// Small exact integer utilities: divisors, d(n), sigma(n), Moebius mu and the
// number of monic irreducible polynomials of a given degree over GF(p).
namespace ringgraph::numtheory {

struct DivisorProfile {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> divisors;  // ascending
  std::uint64_t d = 0;                  // number of divisors
  std::uint64_t sigma = 0;              // sum of divisors
};

std::vector<std::uint64_t> divisors(std::uint64_t n);
DivisorProfile divisor_profile(std::uint64_t n);

std::uint64_t divisor_count(std::uint64_t n);
std::uint64_t divisor_sum(std::uint64_t n);

int mobius(std::uint64_t r);

// Deterministic trial division; adequate for the p <= 10^6 used here.
bool is_prime(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// base^exp, throwing std::overflow_error instead of wrapping.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

// N_p(d) = (1/d) sum_{r | d} mu(r) p^{d/r}.
std::uint64_t count_irreducible(std::uint64_t p, std::uint64_t d);

}  // namespace ringgraph::numtheory
