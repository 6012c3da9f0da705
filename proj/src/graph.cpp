#include "ringgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <stdexcept>

#include "ringgraph/errors.hpp"

namespace ringgraph {

struct GraphAccess {
  static const std::uint64_t* row(const LoopGraph& g, std::size_t u) { return g.bits_.data() + u * g.words_; }
  static std::size_t words(const LoopGraph& g) { return g.words_; }
};

namespace {

std::size_t popcount_row(const std::uint64_t* row, const std::uint64_t* mask, std::size_t words) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) count += static_cast<std::size_t>(std::popcount(row[w] & mask[w]));
  return count;
}

}  // namespace

LoopGraph::LoopGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void LoopGraph::connect(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("LoopGraph::connect: vertex out of range");
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void LoopGraph::disconnect(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("LoopGraph::disconnect: vertex out of range");
  bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t LoopGraph::degree(std::size_t u) const {
  std::size_t count = 0;
  for (std::size_t w = 0; w < words_; ++w) count += static_cast<std::size_t>(std::popcount(bits_[u * words_ + w]));
  return count - (has_loop(u) ? 1 : 0);
}

std::vector<std::size_t> LoopGraph::neighbors(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v) {
    if (v != u && adjacent(u, v)) out.push_back(v);
  }
  return out;
}

std::size_t LoopGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::size_t LoopGraph::loop_count() const {
  std::size_t total = 0;
  for (std::size_t u = 0; u < n_; ++u) total += has_loop(u) ? 1 : 0;
  return total;
}

void LoopGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw std::invalid_argument("LoopGraph: one label per vertex required");
  labels_ = std::move(labels);
}

LoopGraph complete_with_loops(std::size_t n) {
  LoopGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) g.connect(u, v);
  return g;
}

LoopGraph disjoint_union(const LoopGraph& g, const LoopGraph& h) {
  LoopGraph out(g.size() + h.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u; v < g.size(); ++v)
      if (g.adjacent(u, v)) out.connect(u, v);
  const std::size_t shift = g.size();
  for (std::size_t u = 0; u < h.size(); ++u)
    for (std::size_t v = u; v < h.size(); ++v)
      if (h.adjacent(u, v)) out.connect(shift + u, shift + v);
  return out;
}

LoopGraph join(const LoopGraph& g, const LoopGraph& h) {
  LoopGraph out = disjoint_union(g, h);
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < h.size(); ++v) out.connect(u, g.size() + v);
  return out;
}

LoopGraph tensor_product(const LoopGraph& g, const LoopGraph& h) {
  const std::size_t m = h.size();
  LoopGraph out(g.size() * m);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d)
          if (h.adjacent(c, d)) out.connect(a * m + c, b * m + d);
    }
  return out;
}

LoopGraph remove_loops(const LoopGraph& g) {
  LoopGraph out = g;
  for (std::size_t u = 0; u < g.size(); ++u) out.disconnect(u, u);
  return out;
}

LoopGraph induced_subgraph(const LoopGraph& g, const std::vector<std::size_t>& vertices) {
  LoopGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) out.connect(i, j);
  return out;
}

LoopGraph permute(const LoopGraph& g, const std::vector<std::size_t>& perm) {
  if (perm.size() != g.size()) throw std::invalid_argument("permute: permutation size mismatch");
  return induced_subgraph(g, perm);
}

StructuralExpr StructuralExpr::kcirc(std::size_t n) { return StructuralExpr(Kcirc{n}); }

StructuralExpr StructuralExpr::disjoint(const std::vector<Term>& terms) {
  Union u;
  for (const auto& [expr, multiplicity] : terms) {
    u.terms.emplace_back(std::make_shared<const StructuralExpr>(expr), multiplicity);
  }
  return StructuralExpr(std::move(u));
}

StructuralExpr StructuralExpr::join(const StructuralExpr& lhs, const StructuralExpr& rhs) {
  return StructuralExpr(Join{std::make_shared<const StructuralExpr>(lhs), std::make_shared<const StructuralExpr>(rhs)});
}

StructuralExpr StructuralExpr::tensor(const StructuralExpr& lhs, const StructuralExpr& rhs) {
  return StructuralExpr(Tensor{std::make_shared<const StructuralExpr>(lhs), std::make_shared<const StructuralExpr>(rhs)});
}

std::size_t StructuralExpr::vertex_count() const {
  struct Visitor {
    std::size_t operator()(const Kcirc& k) const { return k.n; }
    std::size_t operator()(const Union& u) const {
      std::size_t total = 0;
      for (const auto& [expr, mult] : u.terms) total += mult * expr->vertex_count();
      return total;
    }
    std::size_t operator()(const Join& j) const { return j.lhs->vertex_count() + j.rhs->vertex_count(); }
    std::size_t operator()(const Tensor& t) const { return t.lhs->vertex_count() * t.rhs->vertex_count(); }
  };
  return std::visit(Visitor{}, node_);
}

LoopGraph StructuralExpr::realize() const {
  struct Visitor {
    LoopGraph operator()(const Kcirc& k) const { return complete_with_loops(k.n); }
    LoopGraph operator()(const Union& u) const {
      // Assemble directly: repeated disjoint_union calls are quadratic.
      std::vector<LoopGraph> parts;
      std::size_t total = 0;
      for (const auto& [expr, mult] : u.terms) {
        if (mult == 0) continue;
        parts.push_back(expr->realize());
        total += mult * parts.back().size();
      }
      LoopGraph out(total);
      std::size_t shift = 0;
      std::size_t part = 0;
      for (const auto& [expr, mult] : u.terms) {
        if (mult == 0) continue;
        const LoopGraph& piece = parts[part++];
        for (std::size_t copy = 0; copy < mult; ++copy, shift += piece.size()) {
          for (std::size_t a = 0; a < piece.size(); ++a)
            for (std::size_t b = a; b < piece.size(); ++b)
              if (piece.adjacent(a, b)) out.connect(shift + a, shift + b);
        }
      }
      return out;
    }
    LoopGraph operator()(const Join& j) const { return ringgraph::join(j.lhs->realize(), j.rhs->realize()); }
    LoopGraph operator()(const Tensor& t) const { return tensor_product(t.lhs->realize(), t.rhs->realize()); }
  };
  return std::visit(Visitor{}, node_);
}

std::string StructuralExpr::to_string() const {
  struct Visitor {
    std::string operator()(const Kcirc& k) const { return "K" + std::to_string(k.n) + "°"; }
    std::string operator()(const Union& u) const {
      std::string out;
      for (const auto& [expr, mult] : u.terms) {
        if (!out.empty()) out += " u ";
        out += std::to_string(mult) + " " + expr->to_string();
      }
      return "(" + out + ")";
    }
    std::string operator()(const Join& j) const { return j.lhs->to_string() + " v " + j.rhs->to_string(); }
    std::string operator()(const Tensor& t) const { return "(" + t.lhs->to_string() + " x " + t.rhs->to_string() + ")"; }
  };
  return std::visit(Visitor{}, node_);
}

std::string CliqueJoinForm::to_string() const {
  std::map<std::size_t, std::size_t> counts;
  for (auto c : cliques) ++counts[c];
  std::string out = "K" + std::to_string(universal) + "° v (";
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (!first) out += " u ";
    first = false;
    out += std::to_string(it->second) + " K" + std::to_string(it->first) + "°";
  }
  return out + ")";
}

namespace {

// Connected components of the vertices selected by mask, each ascending.
std::vector<std::vector<std::size_t>> components(const LoopGraph& g, const std::vector<std::uint64_t>& mask) {
  const std::size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || !((mask[s / 64] >> (s % 64)) & 1u)) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const std::uint64_t* row = GraphAccess::row(g, comp[i]);
      for (std::size_t w = 0; w < mask.size(); ++w) {
        std::uint64_t bits = row[w] & mask[w];
        while (bits) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          if (!seen[v]) {
            seen[v] = 1;
            comp.push_back(v);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::uint64_t> full_mask(std::size_t n) {
  std::vector<std::uint64_t> mask((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) mask.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return mask;
}

}  // namespace

CliqueJoinForm clique_join_decompose(const LoopGraph& g) {
  const std::size_t n = g.size();
  const std::size_t words = GraphAccess::words(g);
  std::vector<std::uint64_t> rest = full_mask(n);
  CliqueJoinForm form;
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) != n - 1) continue;
    if (!g.has_loop(u)) throw NotInFamilyError("universal vertex " + std::to_string(u) + " has no loop");
    ++form.universal;
    rest[u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }
  for (const auto& comp : components(g, rest)) {
    for (std::size_t v : comp) {
      if (!g.has_loop(v) || popcount_row(GraphAccess::row(g, v), rest.data(), words) != comp.size()) {
        throw NotInFamilyError("component containing vertex " + std::to_string(v) + " is not a looped clique");
      }
    }
    form.cliques.push_back(comp.size());
  }
  std::sort(form.cliques.begin(), form.cliques.end());
  return form;
}

std::vector<std::size_t> clique_union_decompose(const LoopGraph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& comp : components(g, full_mask(g.size()))) {
    for (std::size_t v : comp) {
      if (g.has_loop(v) || g.degree(v) != comp.size() - 1) {
        throw NotInFamilyError("component containing vertex " + std::to_string(v) + " is not a loop-free clique");
      }
    }
    sizes.push_back(comp.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_isomorphic_brute_force(const LoopGraph& g, const LoopGraph& h) {
  const std::size_t n = g.size();
  if (n != h.size()) return false;
  if (n > kBruteForceLimit) {
    throw UndecidedError("brute-force isomorphism limited to " + std::to_string(kBruteForceLimit) + " vertices");
  }
  auto invariant = [](const LoopGraph& x, std::size_t u) { return std::pair{x.degree(u), x.has_loop(u)}; };
  std::vector<std::pair<std::size_t, bool>> ig(n), ih(n);
  for (std::size_t u = 0; u < n; ++u) {
    ig[u] = invariant(g, u);
    ih[u] = invariant(h, u);
  }
  {
    auto sg = ig, sh = ih;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::vector<std::size_t> image(n);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, std::size_t u) -> bool {
    if (u == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || ih[v] != ig[u]) continue;
      bool consistent = true;
      for (std::size_t w = 0; w < u && consistent; ++w) consistent = g.adjacent(u, w) == h.adjacent(v, image[w]);
      if (!consistent) continue;
      used[v] = 1;
      image[u] = v;
      if (self(self, u + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return extend(extend, 0);
}

bool is_isomorphic(const LoopGraph& g, const LoopGraph& h) {
  if (g.size() != h.size()) return false;
  // Both families are closed under isomorphism, so membership of exactly one
  // graph already decides the question.
  auto try_family = [&](auto decompose) -> std::optional<bool> {
    std::optional<decltype(decompose(g))> fg, fh;
    try {
      fg = decompose(g);
    } catch (const NotInFamilyError&) {
    }
    try {
      fh = decompose(h);
    } catch (const NotInFamilyError&) {
    }
    if (fg && fh) return *fg == *fh;
    if (fg || fh) return false;
    return std::nullopt;
  };
  if (auto r = try_family([](const LoopGraph& x) { return clique_join_decompose(x); })) return *r;
  if (auto r = try_family([](const LoopGraph& x) { return clique_union_decompose(x); })) return *r;
  if (g.size() <= kBruteForceLimit) return is_isomorphic_brute_force(g, h);
  throw UndecidedError("graphs with " + std::to_string(g.size()) + " vertices are outside the clique-join family");
}

}  // namespace ringgraph
