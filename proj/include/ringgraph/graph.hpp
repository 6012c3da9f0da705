#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ringgraph {

// Undirected simple graph in which any vertex may carry a loop. Adjacency is
// stored as bitset rows; bit (u, u) is the loop on u.
class LoopGraph {
 public:
  LoopGraph() = default;
  explicit LoopGraph(std::size_t n);

  std::size_t size() const { return n_; }

  void connect(std::size_t u, std::size_t v);
  void disconnect(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  bool has_loop(std::size_t u) const { return adjacent(u, u); }

  // Neighbours other than u itself.
  std::size_t degree(std::size_t u) const;
  std::vector<std::size_t> neighbors(std::size_t u) const;
  std::size_t edge_count() const;  // loops excluded
  std::size_t loop_count() const;

  // Optional vertex names; empty or one per vertex.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Adjacency equality; labels are ignored.
  friend bool operator==(const LoopGraph& a, const LoopGraph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  friend struct GraphAccess;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::string> labels_;
};

struct WeightedLoopGraph {
  LoopGraph graph;
  std::vector<std::uint64_t> weights;  // one per vertex, each >= 1
};

LoopGraph complete_with_loops(std::size_t n);
LoopGraph disjoint_union(const LoopGraph& g, const LoopGraph& h);
LoopGraph join(const LoopGraph& g, const LoopGraph& h);
// (g,h) ~ (g',h') iff g ~ g' and h ~ h'; vertex (g,h) has index g * |H| + h.
LoopGraph tensor_product(const LoopGraph& g, const LoopGraph& h);
LoopGraph remove_loops(const LoopGraph& g);
LoopGraph induced_subgraph(const LoopGraph& g, const std::vector<std::size_t>& vertices);
// Vertex i of the result is vertex perm[i] of g.
LoopGraph permute(const LoopGraph& g, const std::vector<std::size_t>& perm);

// Symbolic graph built from K_n (with loops), disjoint unions with
// multiplicity, joins and tensor products.
class StructuralExpr {
 public:
  using Term = std::pair<StructuralExpr, std::size_t>;

  static StructuralExpr kcirc(std::size_t n);
  static StructuralExpr disjoint(const std::vector<Term>& terms);
  static StructuralExpr join(const StructuralExpr& lhs, const StructuralExpr& rhs);
  static StructuralExpr tensor(const StructuralExpr& lhs, const StructuralExpr& rhs);

  std::size_t vertex_count() const;
  // Depth-first, left to right vertex order.
  LoopGraph realize() const;
  std::string to_string() const;

 private:
  struct Kcirc {
    std::size_t n;
  };
  struct Union {
    std::vector<std::pair<std::shared_ptr<const StructuralExpr>, std::size_t>> terms;
  };
  struct Join {
    std::shared_ptr<const StructuralExpr> lhs, rhs;
  };
  struct Tensor {
    std::shared_ptr<const StructuralExpr> lhs, rhs;
  };

  explicit StructuralExpr(std::variant<Kcirc, Union, Join, Tensor> node) : node_(std::move(node)) {}

  std::variant<Kcirc, Union, Join, Tensor> node_;
};

// Canonical form of K_u (looped) joined with a disjoint union of looped
// cliques. A pure looped clique K_n decomposes as (n, {}).
struct CliqueJoinForm {
  std::size_t universal = 0;
  std::vector<std::size_t> cliques;  // ascending

  std::string to_string() const;
  friend bool operator==(const CliqueJoinForm&, const CliqueJoinForm&) = default;
};

// Throws NotInFamilyError outside the family.
CliqueJoinForm clique_join_decompose(const LoopGraph& g);

// Clique sizes (ascending) of a loop-free disjoint union of complete graphs,
// the shape of every classical commuting graph here. Throws NotInFamilyError.
std::vector<std::size_t> clique_union_decompose(const LoopGraph& g);

// Family decomposition first, then exhaustive search for at most
// kBruteForceLimit vertices; UndecidedError otherwise.
inline constexpr std::size_t kBruteForceLimit = 12;
bool is_isomorphic(const LoopGraph& g, const LoopGraph& h);
bool is_isomorphic_brute_force(const LoopGraph& g, const LoopGraph& h);

}  // namespace ringgraph
