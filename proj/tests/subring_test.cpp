#include "ringgraph/subring.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "ringgraph/errors.hpp"
#include "ringgraph/numtheory.hpp"

namespace ringgraph {
namespace {

FieldPtr field(std::uint32_t p, std::uint32_t n) { return std::make_shared<const gf::FiniteField>(p, n); }

std::vector<RingPtr> small_rings() {
  return {ring_field(2, 4),
          ring_field(3, 2),
          ring_zmod(12),
          ring_zmod(9),
          ring_matrix2(field(2, 1)),
          ring_matrix2(field(3, 1)),
          ring_product(ring_field(2, 2), ring_field(3, 1)),
          ring_polyquot_x2(field(2, 2)),
          ring_subring(ring_zmod(8), {0, 2, 4, 6}),
          unitalization(ring_subring(ring_zmod(4), {0, 2}))};
}

TEST(Closure, MatchesPolynomialOracle) {
  for (const auto& r : small_rings()) {
    for (Element a = 0; a < r->order(); ++a) {
      const auto expected = oracle::closure_by_polynomials(*r, a, false);
      ASSERT_EQ(subring_generated(*r, a).carrier, expected) << r->descriptor() << " a=" << a;
      if (r->is_unital()) {
        ASSERT_EQ(unital_subring_generated(*r, a).carrier, oracle::closure_by_polynomials(*r, a, true))
            << r->descriptor() << " a=" << a;
      }
    }
  }
}

TEST(Closure, LinearPathAgrees) {
  for (const auto& r : {ring_field(2, 6), ring_field(5, 2), ring_matrix2(field(2, 2)), ring_matrix2(field(5, 1)),
                        ring_polyquot_x2(field(3, 2)), ring_zmod(7)}) {
    ASSERT_NE(r->digit_prime(), 0u) << r->descriptor();
    for (Element a = 0; a < r->order(); ++a) {
      ASSERT_EQ(subring_generated_linear(*r, a, false), subring_generated(*r, a)) << r->descriptor() << " a=" << a;
      ASSERT_EQ(subring_generated_linear(*r, a, true), unital_subring_generated(*r, a)) << r->descriptor() << " a=" << a;
    }
  }
}

TEST(Closure, Basics) {
  const auto z12 = ring_zmod(12);
  EXPECT_EQ(subring_generated(*z12, 4).carrier, (std::vector<Element>{0, 4, 8}));
  EXPECT_TRUE(subring_generated(*z12, 4).contains(8));
  EXPECT_FALSE(subring_generated(*z12, 4).contains(6));
  EXPECT_EQ(subring_generated(*z12, 0).size(), 1u);
  EXPECT_EQ(unital_subring_generated(*z12, 0).size(), 12u);
  EXPECT_THROW(unital_subring_generated(*ring_subring(ring_zmod(4), {0, 2}), 1), NotUnitalError);
  EXPECT_THROW(subring_generated_linear(*z12, 1, false), std::invalid_argument);
}

TEST(Closure, IsASubring) {
  for (const auto& r : small_rings()) {
    for (Element a = 0; a < r->order(); a += 3) {
      const auto s = subring_generated(*r, a);
      EXPECT_TRUE(s.contains(a));
      for (Element x : s.carrier)
        for (Element y : s.carrier) {
          ASSERT_TRUE(s.contains(r->add(x, y)));
          ASSERT_TRUE(s.contains(r->mul(x, y)));
        }
    }
  }
}

// Reference partition grouping elements by oracle closure.
std::map<std::vector<Element>, std::vector<Element>> oracle_partition(const FiniteRing& r, bool unital) {
  std::map<std::vector<Element>, std::vector<Element>> groups;
  for (Element a = 0; a < r.order(); ++a) groups[oracle::closure_by_polynomials(r, a, unital)].push_back(a);
  return groups;
}

TEST(Compression, MatchesOraclePartition) {
  for (const auto& r : small_rings()) {
    for (bool unital : {false, true}) {
      if (unital && !r->is_unital()) continue;
      const auto part = compression_classes(*r, unital, 1);
      const auto groups = oracle_partition(*r, unital);
      ASSERT_EQ(part.classes.size(), groups.size()) << r->descriptor();
      for (const auto& cls : part.classes) {
        auto it = groups.find(cls.subring.carrier);
        ASSERT_NE(it, groups.end());
        EXPECT_EQ(cls.members, it->second);
        for (Element m : cls.members) EXPECT_EQ(&part.classes[part.class_of[m]], &cls);
      }
      for (std::size_t i = 1; i < part.classes.size(); ++i) {
        const auto& prev = part.classes[i - 1].subring.carrier;
        const auto& cur = part.classes[i].subring.carrier;
        EXPECT_TRUE(prev.size() < cur.size() || (prev.size() == cur.size() && prev < cur));
      }
    }
  }
}

TEST(Compression, ThreadCountIndependent) {
  const auto r = ring_matrix2(field(2, 2));
  const auto one = compression_classes(*r, true, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto many = compression_classes(*r, true, threads);
    ASSERT_EQ(many.classes.size(), one.classes.size());
    EXPECT_EQ(many.class_of, one.class_of);
    for (std::size_t i = 0; i < one.classes.size(); ++i) EXPECT_EQ(many.classes[i].members, one.classes[i].members);
  }
}

TEST(Compression, FieldWeights) {
  const auto r = ring_field(2, 6);
  for (bool unital : {true, false}) {
    std::vector<std::uint64_t> weights;
    for (const auto& c : compression_classes(*r, unital).classes) weights.push_back(c.weight());
    std::sort(weights.rbegin(), weights.rend());
    // Elements generating exactly GF(2^d) number d * N_2(d).
    std::vector<std::uint64_t> expected;
    for (std::uint64_t d : numtheory::divisors(6)) expected.push_back(d * numtheory::count_irreducible(2, d));
    if (!unital) {
      expected.erase(std::find(expected.begin(), expected.end(), 2u));
      expected.push_back(1);  // {0}
      expected.push_back(1);  // {1}
    }
    std::sort(expected.rbegin(), expected.rend());
    EXPECT_EQ(weights, expected) << "unital=" << unital;
  }
}

TEST(Compression, EquivalentElementsShareCentralizers) {
  for (const auto& r : {ring_matrix2(field(2, 1)), ring_matrix2(field(3, 1)), ring_polyquot_x2(field(2, 2))}) {
    for (bool unital : {false, true}) {
      for (const auto& cls : compression_classes(*r, unital).classes) {
        const auto c0 = centralizer(*r, cls.representative());
        for (Element m : cls.members) ASSERT_EQ(centralizer(*r, m), c0);
      }
    }
  }
}

TEST(Compression, NotUnital) {
  EXPECT_THROW(compression_classes(*ring_subring(ring_zmod(4), {0, 2}), true), NotUnitalError);
}

}  // namespace
}  // namespace ringgraph
