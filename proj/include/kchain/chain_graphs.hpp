#pragma once

// Linear crossed polyomino chains: n copies of K4 glued along vertical rungs,
// and the subgraphs obtained by deleting some of those rungs.
//
// Vertex encoding: index i-1 is top vertex i (1 <= i <= n+1) and index n+i is
// its bottom twin i'. The Laplacian blocks are therefore index-range slices.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kchain/errors.hpp"
#include "kchain/matrix.hpp"
#include "kchain/rational.hpp"

namespace kchain {

/// (n, deleted verticals). Deletion indices are 1-based and kept sorted.
class ChainSpec {
 public:
  explicit ChainSpec(int n, std::vector<int> deleted = {}) : n_(n), deleted_(std::move(deleted)) {
    if (n_ < 1) throw InvalidArgument("chain length n must be >= 1, got " + std::to_string(n_));
    std::sort(deleted_.begin(), deleted_.end());
    for (std::size_t k = 0; k < deleted_.size(); ++k) {
      const int i = deleted_[k];
      if (i < 1 || i > n_ + 1) {
        throw InvalidArgument("deleted vertical " + std::to_string(i) + " out of range [1, " +
                              std::to_string(n_ + 1) + "]");
      }
      if (k > 0 && deleted_[k - 1] == i) {
        throw InvalidArgument("deleted vertical " + std::to_string(i) + " listed twice");
      }
    }
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int r() const noexcept { return static_cast<int>(deleted_.size()); }
  [[nodiscard]] std::span<const int> deleted() const noexcept { return deleted_; }
  [[nodiscard]] bool is_deleted(int i) const { return std::binary_search(deleted_.begin(), deleted_.end(), i); }
  [[nodiscard]] bool is_base_chain() const noexcept { return deleted_.empty(); }

  /// Comma-separated deletion list, e.g. "1,3"; empty for G_n.
  [[nodiscard]] std::string deleted_string() const {
    std::string out;
    for (std::size_t k = 0; k < deleted_.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(deleted_[k]);
    }
    return out;
  }

  /// Ordered by n, then r, then lexicographically by deletion set.
  friend std::strong_ordering operator<=>(const ChainSpec& a, const ChainSpec& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.r() <=> b.r(); c != 0) return c;
    return a.deleted_ <=> b.deleted_;
  }
  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  int n_;
  std::vector<int> deleted_;
};

/// Simple undirected graph with sorted edge list and adjacency lists.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  /// Throws InvalidArgument on loops, repeated edges or out-of-range endpoints.
  static Graph from_edges(int num_vertices, std::vector<Edge> edges) {
    Graph g;
    g.num_vertices_ = num_vertices;
    g.adjacency_.assign(static_cast<std::size_t>(num_vertices), {});
    for (auto& [u, v] : edges) {
      if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
        throw InvalidArgument("edge endpoint out of range");
      }
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
      throw InvalidArgument("repeated edge");
    }
    for (const auto& [u, v] : edges) {
      g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
      g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.edges_ = std::move(edges);
    return g;
  }

  [[nodiscard]] int num_vertices() const noexcept { return num_vertices_; }
  [[nodiscard]] std::size_t num_edges() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] std::span<const int> neighbors(int v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  [[nodiscard]] int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> d;
    d.reserve(adjacency_.size());
    for (const auto& list : adjacency_) d.push_back(static_cast<int>(list.size()));
    return d;
  }

  [[nodiscard]] bool has_edge(int u, int v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  [[nodiscard]] bool is_connected() const {
    if (num_vertices_ == 0) return true;
    std::vector<bool> seen(adjacency_.size(), false);
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++reached;
          frontier.push(w);
        }
      }
    }
    return reached == num_vertices_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// 0-based vertex index of top vertex i (1-based) in a chain of length n.
constexpr int top_vertex(int /*n*/, int i) { return i - 1; }
/// 0-based vertex index of bottom vertex i' (1-based) in a chain of length n.
constexpr int bottom_vertex(int n, int i) { return n + i; }

/// G_n minus the vertical edges ii' listed in the spec.
inline Graph build_subchain(const ChainSpec& spec) {
  const int n = spec.n();
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(5 * n + 1));
  for (int i = 1; i <= n + 1; ++i) {
    if (!spec.is_deleted(i)) edges.emplace_back(top_vertex(n, i), bottom_vertex(n, i));
    if (i <= n) {
      edges.emplace_back(top_vertex(n, i), top_vertex(n, i + 1));
      edges.emplace_back(bottom_vertex(n, i), bottom_vertex(n, i + 1));
      edges.emplace_back(top_vertex(n, i), bottom_vertex(n, i + 1));
      edges.emplace_back(bottom_vertex(n, i), top_vertex(n, i + 1));
    }
  }
  return Graph::from_edges(2 * n + 2, std::move(edges));
}

/// The linear crossed polyomino chain G_n.
inline Graph build_chain(int n) { return build_subchain(ChainSpec(n)); }

/// d_1 + d_{n+1} counted on the top row; 6 when both end rungs survive.
struct EndDegreeSum {
  int value;
  friend bool operator==(const EndDegreeSum&, const EndDegreeSum&) = default;
};

inline EndDegreeSum end_degree_sum(const ChainSpec& spec) {
  return {6 - (spec.is_deleted(1) ? 1 : 0) - (spec.is_deleted(spec.n() + 1) ? 1 : 0)};
}

/// All C(n+1, r) deletion sets of size r, lexicographic.
inline std::vector<ChainSpec> enumerate_subchains(int n, int r) {
  if (n < 1) throw InvalidArgument("enumerate_subchains: n must be >= 1");
  if (r < 0 || r > n + 1) {
    throw InvalidArgument("enumerate_subchains: r = " + std::to_string(r) + " outside [0, " +
                          std::to_string(n + 1) + "]");
  }
  std::vector<ChainSpec> out;
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) pick[static_cast<std::size_t>(k)] = k + 1;
  while (true) {
    out.emplace_back(n, pick);
    int k = r - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == n + 1 - (r - 1 - k)) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < r; ++m) pick[static_cast<std::size_t>(m)] = pick[static_cast<std::size_t>(m - 1)] + 1;
  }
  return out;
}

/// Every deletion set for chain length n, ordered by r then lexicographically.
inline std::vector<ChainSpec> enumerate_all_subchains(int n) {
  std::vector<ChainSpec> out;
  for (int r = 0; r <= n + 1; ++r) {
    auto part = enumerate_subchains(n, r);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// L = D - A.
inline IntMatrix laplacian(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  IntMatrix m(n, n);
  for (const auto& [u, v] : g.edges()) {
    const auto a = static_cast<std::size_t>(u);
    const auto b = static_cast<std::size_t>(v);
    m(a, b) -= 1;
    m(b, a) -= 1;
    m(a, a) += 1;
    m(b, b) += 1;
  }
  return m;
}

struct LaplacianBlocks {
  IntMatrix l11;  ///< top-top
  IntMatrix l12;  ///< top-bottom
};

/// Top-left and top-right (n+1)x(n+1) blocks of the Laplacian. Throws
/// InternalError unless L11 == L22 and L12 == L21.
inline LaplacianBlocks laplacian_blocks(const Graph& g, const ChainSpec& spec) {
  const auto half = static_cast<std::size_t>(spec.n() + 1);
  if (static_cast<std::size_t>(g.num_vertices()) != 2 * half) {
    throw InvalidArgument("laplacian_blocks: graph does not match spec");
  }
  const IntMatrix l = laplacian(g);
  LaplacianBlocks blocks{l.block(0, 0, half, half), l.block(0, half, half, half)};
  if (l.block(half, half, half, half) != blocks.l11 || l.block(half, 0, half, half) != blocks.l12) {
    throw InternalError("laplacian_blocks: top/bottom pairing symmetry violated");
  }
  return blocks;
}

}  // namespace kchain
