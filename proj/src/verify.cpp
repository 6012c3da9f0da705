#include "ringgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "ringgraph/lambda.hpp"
#include "ringgraph/numtheory.hpp"

namespace ringgraph::verify {
namespace {

using numtheory::checked_pow;
using numtheory::divisor_count;
using numtheory::divisor_sum;

std::uint64_t subspace_sum(std::uint32_t p, std::uint32_t n) {
  // sum_{d | n} (p^n - 1) / (p^d - 1)
  const std::uint64_t top = checked_pow(p, n) - 1;
  std::uint64_t total = 0;
  for (auto d : numtheory::divisors(n)) total += top / (checked_pow(p, d) - 1);
  return total;
}

std::string field_name(std::uint32_t p, std::uint32_t n) {
  return "gf:" + std::to_string(p) + "^" + std::to_string(n);
}

// (p, n) when the descriptor is a field, counting zmod:p as GF(p).
std::optional<std::pair<std::uint32_t, std::uint32_t>> as_field(const RingDescriptor& d) {
  if (d.kind == RingDescriptor::Kind::kField) return std::pair{d.p, d.n};
  if (d.kind == RingDescriptor::Kind::kZmod && numtheory::is_prime(d.m)) {
    return std::pair{static_cast<std::uint32_t>(d.m), 1u};
  }
  return std::nullopt;
}

Prediction clique_prediction(std::string ring, bool unital, std::uint64_t v, std::string provenance) {
  return {std::move(ring), unital, v, StructuralExpr::kcirc(v), std::nullopt, std::move(provenance)};
}

}  // namespace

std::uint64_t clique_a(std::uint32_t p, std::uint32_t n) {
  const std::uint64_t d = divisor_count(n);
  const std::uint64_t base = d * d - d + divisor_sum(n);
  return (p == 2 && n % 2 == 0) ? base - 1 : base;
}

std::uint64_t clique_b(std::uint32_t p, std::uint32_t n) { return subspace_sum(p, n); }

std::uint64_t clique_c(std::uint32_t n) { return divisor_count(2 * std::uint64_t{n}) - divisor_count(n); }

std::uint64_t clique_a_nonunital(std::uint32_t p, std::uint32_t n) {
  const std::uint64_t d = divisor_count(n);
  const std::uint64_t base = d * d + d + divisor_sum(n);
  if (p != 2) return base;
  return n % 2 == 0 ? base - 2 : base - 1;
}

std::uint64_t clique_b_nonunital(std::uint32_t p, std::uint32_t n) {
  return (checked_pow(p, n) - 1) / (p - 1) + subspace_sum(p, n);
}

Prediction predict_field(std::uint32_t p, std::uint32_t n, bool unital) {
  const std::uint64_t d = divisor_count(n);
  Prediction pred = clique_prediction(field_name(p, n), unital, unital ? d : d + 1, "field formula");
  // Class of the subfield GF(p^e) = elements of minimal-polynomial degree e;
  // the prime field class also absorbs 0 in the unital case.
  std::vector<std::uint64_t> weights;
  for (auto e : numtheory::divisors(n)) {
    if (e == 1) {
      if (unital) {
        weights.push_back(p);
      } else {
        weights.push_back(1);
        weights.push_back(p - 1);
      }
    } else {
      weights.push_back(e * numtheory::count_irreducible(p, e));
    }
  }
  std::sort(weights.rbegin(), weights.rend());
  pred.weights = std::move(weights);
  return pred;
}

VertexCounts predict_product_counts(std::uint32_t p, std::uint32_t n, std::uint32_t q, std::uint32_t m) {
  const std::uint64_t dn = divisor_count(n), dm = divisor_count(m);
  if (p != q) return {dn * dm, (dn + 1) * (dm + 1)};
  const std::uint64_t s = numtheory::gcd(n, m);
  const std::uint64_t sigma = divisor_sum(s);
  VertexCounts out{dn * dm + sigma, (dn + 1) * (dm + 1) + sigma};
  if (p == 2) {
    if (s % 2 == 0) {
      out.v1 -= 1;
      out.v -= 2;
    } else {
      out.v -= 1;
    }
  }
  return out;
}

VertexCounts predict_polyquot_counts(std::uint32_t p, std::uint32_t n) {
  const std::uint64_t d = divisor_count(n);
  const std::uint64_t sum = subspace_sum(p, n);
  return {d + sum, 1 + d + (checked_pow(p, n) - 1) / (p - 1) + sum};
}

Prediction predict_m2(std::uint32_t p, std::uint32_t n, bool unital) {
  const std::uint64_t q = checked_pow(p, n);
  const std::uint64_t split = (q * q + q) / 2, nonsplit = (q * q - q) / 2;
  const std::uint64_t d = divisor_count(n);
  const std::uint64_t center = unital ? d : d + 1;
  const std::uint64_t a = unital ? clique_a(p, n) : clique_a_nonunital(p, n);
  const std::uint64_t b = unital ? clique_b(p, n) : clique_b_nonunital(p, n);
  const std::uint64_t c = clique_c(n);
  auto expr = StructuralExpr::join(StructuralExpr::kcirc(center),
                                   StructuralExpr::disjoint({{StructuralExpr::kcirc(a), split},
                                                             {StructuralExpr::kcirc(b), q + 1},
                                                             {StructuralExpr::kcirc(c), nonsplit}}));
  Prediction pred;
  pred.ring = "m2:" + field_name(p, n);
  pred.unital = unital;
  pred.vertices = expr.vertex_count();
  pred.structure = std::move(expr);
  pred.provenance = unital ? "M2 formula (unital)" : "M2 formula (non-unital)";
  return pred;
}

VertexCounts predict_table1(std::uint32_t p, std::uint32_t n) {
  if (!numtheory::is_prime(p) || (n != 1 && n != 2)) {
    throw std::invalid_argument("the small-field table covers GF(p) and GF(p^2) only");
  }
  const std::uint64_t x = p;
  if (n == 1) {
    if (p == 2) return {8, 15};
    return {x * x + x + 2, 2 * x * x + 3 * x + 4};
  }
  if (p == 2) return {68, 114};
  const std::uint64_t x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  return {3 * x4 + x3 + 4 * x2 + x + 4, 5 * x4 + 2 * x3 + 7 * x2 + 2 * x + 6};
}

Prediction predict(const RingDescriptor& ring, bool unital) {
  using Kind = RingDescriptor::Kind;
  const std::string name = ring.canonical();
  if (auto f = as_field(ring)) {
    Prediction pred = predict_field(f->first, f->second, unital);
    pred.ring = name;
    return pred;
  }
  switch (ring.kind) {
    case Kind::kProduct: {
      auto lhs = as_field(ring.children[0]), rhs = as_field(ring.children[1]);
      if (!lhs || !rhs) break;
      const auto counts = predict_product_counts(lhs->first, lhs->second, rhs->first, rhs->second);
      return clique_prediction(name, unital, unital ? counts.v1 : counts.v, "direct product formula");
    }
    case Kind::kPolyQuot: {
      const auto counts = predict_polyquot_counts(ring.p, ring.n);
      return clique_prediction(name, unital, unital ? counts.v1 : counts.v, "GF(p^n)[x]/(x^2) formula");
    }
    case Kind::kMatrix2: return predict_m2(ring.p, ring.n, unital);
    case Kind::kUnitalize:
      // Lambda^1(R^1) is isomorphic to Lambda(R).
      if (unital) {
        Prediction pred = predict(ring.children[0], false);
        pred.ring = name;
        pred.unital = true;
        pred.weights.reset();
        pred.provenance += " via unitalization";
        return pred;
      }
      break;
    default: break;
  }
  throw std::invalid_argument("no closed form for " + name + (unital ? " (unital)" : " (non-unital)"));
}

bool CaseResult::pass() const {
  return error.empty() && predicted == computed && structure_ok.value_or(true) && weights_ok.value_or(true);
}

bool VerificationReport::pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass(); });
}

nlohmann::json VerificationReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json j{{"ring", c.ring}, {"unital", c.unital}, {"predicted", c.predicted}, {"computed", c.computed}, {"ms", c.ms}};
    j["structure_ok"] = c.structure_ok ? nlohmann::json(*c.structure_ok) : nlohmann::json(nullptr);
    if (!c.error.empty()) j["error"] = c.error;
    arr.push_back(std::move(j));
  }
  return {{"cases", std::move(arr)}, {"pass", pass()}};
}

std::string VerificationReport::to_table() const {
  std::ostringstream out;
  out << std::left << std::setw(34) << "ring" << std::setw(8) << "unital" << std::setw(11) << "predicted"
      << std::setw(10) << "computed" << std::setw(11) << "structure" << std::setw(9) << "ms" << "result\n";
  for (const auto& c : cases) {
    out << std::left << std::setw(34) << c.ring << std::setw(8) << (c.unital ? "yes" : "no") << std::setw(11)
        << c.predicted << std::setw(10) << c.computed << std::setw(11)
        << (c.structure_ok ? (*c.structure_ok ? "ok" : "MISMATCH") : "-") << std::setw(9) << c.ms
        << (c.pass() ? "pass" : "FAIL");
    if (!c.error.empty()) out << "  (" << c.error << ")";
    out << "\n";
  }
  out << (pass() ? "PASS" : "FAIL") << " " << cases.size() << " cases\n";
  return out.str();
}

VerificationReport run_verification(const std::vector<Case>& cases, bool check_structure, std::uint64_t max_order,
                                    unsigned threads) {
  VerificationReport report;
  for (const auto& c : cases) {
    CaseResult result;
    result.ring = c.ring;
    result.unital = c.unital;
    const auto start = std::chrono::steady_clock::now();
    try {
      const RingDescriptor desc = parse_descriptor(c.ring);
      result.ring = desc.canonical();
      Prediction pred = predict(desc, c.unital);
      result.predicted = pred.vertices;
      if (c.table1) {
        if (desc.kind != RingDescriptor::Kind::kMatrix2) throw std::invalid_argument("table cases must be m2 rings");
        const auto row = predict_table1(desc.p, desc.n);
        result.predicted = c.unital ? row.v1 : row.v;
      }
      const RingPtr ring = build_ring(desc, max_order);
      const CompressedGraph cg = compressed_graph(*ring, c.unital, threads);
      result.computed = cg.vertex_count();
      if (pred.weights) {
        auto weights = cg.graph.weights;
        std::sort(weights.rbegin(), weights.rend());
        result.weights_ok = weights == *pred.weights;
      }
      if (check_structure && pred.structure) {
        result.structure_ok = is_isomorphic(cg.graph.graph, pred.structure->realize());
      }
    } catch (const std::exception& e) {
      result.error = e.what();
    }
    result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report.cases.push_back(std::move(result));
  }
  return report;
}

std::vector<Case> suite_cases(std::string_view name, std::uint64_t max_order) {
  std::vector<Case> out;
  auto both = [&](const std::string& ring, std::uint64_t order, bool table1 = false) {
    if (order > max_order) return;
    out.push_back({ring, true, table1});
    out.push_back({ring, false, table1});
  };
  auto pow = [](std::uint64_t p, std::uint64_t n) { return checked_pow(p, n); };
  const bool all = name == "all";
  bool known = all;
  if (all || name == "table1") {
    known = true;
    for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {3u, 2u}}) {
      both("m2:" + field_name(p, n), pow(p, 4 * n), true);
    }
  }
  if (all || name == "fields") {
    known = true;
    for (std::uint32_t p : {2u, 3u, 5u})
      for (std::uint32_t n = 1; pow(p, n) <= max_order; ++n) both(field_name(p, n), pow(p, n));
  }
  if (all || name == "products") {
    known = true;
    for (std::uint32_t p : {2u, 3u})
      for (std::uint32_t q : {2u, 3u})
        for (std::uint32_t n = 1; n <= 3; ++n)
          for (std::uint32_t m = 1; m <= 3; ++m)
            both("prod:(" + field_name(p, n) + "," + field_name(q, m) + ")", pow(p, n) * pow(q, m));
  }
  if (all || name == "polyquot") {
    known = true;
    for (std::uint32_t p : {2u, 3u, 5u})
      for (std::uint32_t n = 1; pow(p, 2 * n) <= max_order; ++n) both("polyquot:" + field_name(p, n), pow(p, 2 * n));
  }
  if (all || name == "m2") {
    known = true;
    for (auto [p, n] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}, {5u, 1u}, {2u, 3u}, {3u, 2u}}) {
      both("m2:" + field_name(p, n), pow(p, 4 * n));
    }
  }
  if (!known) throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
  return out;
}

std::vector<RatioRow> asymptotic_ratios(std::uint32_t p, std::uint32_t max_n) {
  std::vector<RatioRow> rows;
  for (std::uint32_t n = 1; n <= max_n; ++n) {
    const std::uint64_t v1 = predict_m2(p, n, true).vertices;
    const double denom = 0.5 * static_cast<double>(divisor_sum(n)) * static_cast<double>(checked_pow(p, 2 * n));
    rows.push_back({n, v1, static_cast<double>(v1) / denom});
  }
  return rows;
}

}  // namespace ringgraph::verify
