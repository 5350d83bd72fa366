#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "dsrnet/errors.hpp"

namespace dsr {

/// Directed edge (from, to, weight): `to` listens to `from`, i.e. the stored
/// pair means information flows from -> to and `from` is a neighbor of `to`.
struct Edge {
  int from = 0;  // 1-based node index
  int to = 0;    // 1-based node index
  double weight = 0.0;
};

/// Raw user-facing graph description. Node indices are 1-based; exactly one
/// node is the source. Weights are strictly positive, no self-edges, no
/// duplicate (from, to) pairs.
struct GraphSpec {
  int node_count = 0;  // n+1, source included
  int source = 0;      // 1-based
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // empty or node_count entries

  [[nodiscard]] int agent_count() const { return node_count - 1; }
};

/// Full (n+1)x(n+1) graph Laplacian in the original node order.
/// Every row sums to zero; off-diagonal entries are <= 0.
struct Laplacian {
  Eigen::MatrixXd entries;
  int source = 0;  // 1-based, carried from the GraphSpec
  std::vector<std::string> labels;
};

/// The Laplacian with the source row and column removed, plus the source
/// coupling vector B (B_i = w_{i,source} >= 0). Rows keep the non-source
/// nodes' relative order. Satisfies K^{-1} B = 1 whenever the source can
/// reach every node.
struct PinnedSystem {
  Eigen::MatrixXd K;
  Eigen::VectorXd B;
  int source = 0;                   // 1-based original index
  std::vector<std::string> labels;  // non-source node labels, same order as rows

  [[nodiscard]] int size() const { return static_cast<int>(K.rows()); }
};

/// Validates every GraphSpec invariant; throws GraphError naming the
/// offending entry.
void validate(const GraphSpec& spec);

/// Parses the JSON graph document (fields: nodes, source, edges, labels).
/// Throws GraphError with a distinct diagnostic per defect: malformed
/// document, nonpositive weight, self-edge, out-of-range index, duplicate
/// edge, missing source.
GraphSpec parse_graph(const std::string& text);

/// True iff every non-source node is reachable from the source along the
/// direction of information flow.
[[nodiscard]] bool check_source_connected(const GraphSpec& spec);

[[nodiscard]] Laplacian build_laplacian(const GraphSpec& spec);

/// Removes the source row/column and extracts B. Throws NumericalError when
/// the pinned block is singular (pivot magnitude < 1e-10), which indicates a
/// connectivity violation; the message carries the offending pivot.
[[nodiscard]] PinnedSystem pin(const Laplacian& lap, int source);
[[nodiscard]] PinnedSystem pin(const Laplacian& lap);

/// n agents in a ring (each listens to both neighbors, unit weights); the
/// leader additionally listens to the source node n+1. Requires n >= 3.
[[nodiscard]] GraphSpec ring_with_leader(int n, int leader);

/// Fixed 7-node network of three topologically-ordered subgraphs
/// (one singleton, one symmetric pair, one acyclic triple); its pinned
/// Laplacian has the real spectrum {1, 1, 1, 1, 3, 4}.
[[nodiscard]] GraphSpec fig2_fixture();

}  // namespace dsr
