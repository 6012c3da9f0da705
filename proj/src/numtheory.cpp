#include "ringgraph/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ringgraph::numtheory {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    low.push_back(i);
    if (i != n / i) high.push_back(n / i);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

DivisorProfile divisor_profile(std::uint64_t n) {
  DivisorProfile profile;
  profile.n = n;
  profile.divisors = divisors(n);
  profile.d = profile.divisors.size();
  profile.sigma = std::accumulate(profile.divisors.begin(), profile.divisors.end(), std::uint64_t{0});
  return profile;
}

std::uint64_t divisor_count(std::uint64_t n) { return divisors(n).size(); }

std::uint64_t divisor_sum(std::uint64_t n) { return divisor_profile(n).sigma; }

int mobius(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("mobius: r must be positive");
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= r; ++f) {
    if (r % f != 0) continue;
    r /= f;
    if (r % f == 0) return 0;
    sign = -sign;
  }
  if (r > 1) sign = -sign;
  return sign;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) result = checked_mul(result, base);
  return result;
}

std::uint64_t count_irreducible(std::uint64_t p, std::uint64_t d) {
  if (!is_prime(p)) throw std::invalid_argument("count_irreducible: " + std::to_string(p) + " is not prime");
  if (d == 0) throw std::invalid_argument("count_irreducible: degree must be positive");
  // Terms are accumulated signed; p^d bounds every partial sum.
  const std::uint64_t top = checked_pow(p, d);
  if (top > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw std::overflow_error("count_irreducible: p^d exceeds the signed 64-bit range");
  }
  std::int64_t total = 0;
  for (std::uint64_t r : divisors(d)) {
    total += mobius(r) * static_cast<std::int64_t>(checked_pow(p, d / r));
  }
  return static_cast<std::uint64_t>(total) / d;
}

}  // namespace ringgraph::numtheory
