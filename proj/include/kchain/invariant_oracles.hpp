#pragma once

// Brute-force ground truth: BFS distances and exact resistance distances for
// any connected graph. Nothing in here knows about the closed forms.

#include <cstddef>
#include <queue>
#include <vector>

#include "kchain/chain_graphs.hpp"
#include "kchain/errors.hpp"
#include "kchain/exact_linalg.hpp"
#include "kchain/rational.hpp"

namespace kchain {

/// All-pairs shortest path lengths by BFS from every vertex.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& row = dist[static_cast<std::size_t>(s)];
    std::queue<int> frontier;
    row[static_cast<std::size_t>(s)] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (row[static_cast<std::size_t>(w)] < 0) {
          row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(u)] + 1;
          frontier.push(w);
        }
      }
    }
    for (int d : row)
      if (d < 0) throw DisconnectedGraph("graph is disconnected");
  }
  return dist;
}

inline BigInt wiener(const Graph& g) {
  const auto dist = distance_matrix(g);
  BigInt total = 0;
  for (std::size_t i = 0; i < dist.size(); ++i)
    for (std::size_t j = i + 1; j < dist.size(); ++j) total += dist[i][j];
  return total;
}

inline BigInt gutman(const Graph& g) {
  const auto dist = distance_matrix(g);
  const auto deg = g.degrees();
  BigInt total = 0;
  for (std::size_t i = 0; i < dist.size(); ++i)
    for (std::size_t j = i + 1; j < dist.size(); ++j) total += deg[i] * deg[j] * dist[i][j];
  return total;
}

/// Exact all-pairs resistance distances; rejects disconnected graphs.
inline RationalMatrix resistance_distances(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraph("resistance distance undefined on a disconnected graph");
  return resistance_table(laplacian(g)).resistance;
}

inline Rational kirchhoff(const Graph& g) {
  const RationalMatrix r = resistance_distances(g);
  Rational total = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = i + 1; j < r.cols(); ++j) total += r(i, j);
  return total;
}

inline Rational mult_deg_kirchhoff(const Graph& g) {
  const RationalMatrix r = resistance_distances(g);
  const auto deg = g.degrees();
  Rational total = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = i + 1; j < r.cols(); ++j) total += deg[i] * deg[j] * r(i, j);
  return total;
}

/// Matrix-tree theorem: determinant of the Laplacian with vertex 0 removed.
/// A disconnected graph has no spanning tree and yields 0.
inline BigInt spanning_trees(const Graph& g) {
  if (g.num_vertices() <= 1) return 1;
  return determinant(laplacian(g).without(0));
}

struct InvariantReport {
  ChainSpec spec;
  BigInt wiener;
  BigInt gutman;
  Rational kirchhoff;
  Rational mult_deg_kirchhoff;
  BigInt spanning_trees;
};

/// Builds the graph once and evaluates every oracle on it. The resistance
/// table and the spanning-tree count share one grounded elimination.
inline InvariantReport full_report(const ChainSpec& spec) {
  const Graph g = build_subchain(spec);
  if (!g.is_connected()) throw DisconnectedGraph("chain graph unexpectedly disconnected");
  const auto dist = distance_matrix(g);
  const auto deg = g.degrees();
  const ResistanceTable table = resistance_table(laplacian(g));

  InvariantReport report{spec, 0, 0, 0, 0, table.grounded_det};
  const std::size_t n = dist.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int dd = deg[i] * deg[j];
      report.wiener += dist[i][j];
      report.gutman += dd * dist[i][j];
      report.kirchhoff += table.resistance(i, j);
      report.mult_deg_kirchhoff += dd * table.resistance(i, j);
    }
  return report;
}

}  // namespace kchain
