#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringgraph/descriptor.hpp"
#include "ringgraph/graph.hpp"

// Closed-form predictions for fields, products of fields, GF(p^n)[x]/(x^2)
// and 2x2 matrix rings, and a harness comparing them with brute force.
namespace ringgraph::verify {

// Clique sizes in the M2(GF(p^n)) structure formulas. The unital sizes are
// a, b, c; the non-unital ones a', b' and the shared c.
std::uint64_t clique_a(std::uint32_t p, std::uint32_t n);
std::uint64_t clique_b(std::uint32_t p, std::uint32_t n);
std::uint64_t clique_c(std::uint32_t n);
std::uint64_t clique_a_nonunital(std::uint32_t p, std::uint32_t n);
std::uint64_t clique_b_nonunital(std::uint32_t p, std::uint32_t n);

struct VertexCounts {
  std::uint64_t v1 = 0;  // unital graph
  std::uint64_t v = 0;   // non-unital graph
  friend bool operator==(const VertexCounts&, const VertexCounts&) = default;
};

struct Prediction {
  std::string ring;
  bool unital = false;
  std::uint64_t vertices = 0;
  std::optional<StructuralExpr> structure;
  // Expected class sizes, descending, when the theory pins them down.
  std::optional<std::vector<std::uint64_t>> weights;
  std::string provenance;
};

Prediction predict_field(std::uint32_t p, std::uint32_t n, bool unital);
VertexCounts predict_product_counts(std::uint32_t p, std::uint32_t n, std::uint32_t q, std::uint32_t m);
VertexCounts predict_polyquot_counts(std::uint32_t p, std::uint32_t n);
Prediction predict_m2(std::uint32_t p, std::uint32_t n, bool unital);
// Row formulas of the small-field table for M2(F), F = GF(p) or GF(p^2).
// Throws std::invalid_argument for any other field.
VertexCounts predict_table1(std::uint32_t p, std::uint32_t n);

// Dispatches on the descriptor; throws std::invalid_argument when no closed
// form covers the ring.
Prediction predict(const RingDescriptor& ring, bool unital);

struct Case {
  std::string ring;
  bool unital = false;
  // Take the predicted count from the small-field table instead of the general formula.
  bool table1 = false;
};

struct CaseResult {
  std::string ring;
  bool unital = false;
  std::uint64_t predicted = 0;
  std::uint64_t computed = 0;
  std::optional<bool> structure_ok;
  std::optional<bool> weights_ok;
  std::int64_t ms = 0;
  std::string error;

  bool pass() const;
};

struct VerificationReport {
  std::vector<CaseResult> cases;

  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

VerificationReport run_verification(const std::vector<Case>& cases, bool check_structure,
                                    std::uint64_t max_order = kDefaultMaxOrder, unsigned threads = 0);

// table1, fields, products, polyquot, m2, all. Cases above max_order are
// skipped. Throws std::invalid_argument for an unknown name.
std::vector<Case> suite_cases(std::string_view name, std::uint64_t max_order = kDefaultMaxOrder);

// v1(M2(GF(p^n))) / (sigma(n) p^{2n} / 2) from the closed form.
struct RatioRow {
  std::uint32_t n = 0;
  std::uint64_t v1 = 0;
  double ratio = 0.0;
};
std::vector<RatioRow> asymptotic_ratios(std::uint32_t p, std::uint32_t max_n);

}  // namespace ringgraph::verify
