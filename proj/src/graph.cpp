#include "dsrnet/graph.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <nlohmann/json.hpp>
#include <queue>
#include <set>
#include <sstream>

namespace dsr {

namespace {

constexpr double kSingularPivot = 1e-10;

[[nodiscard]] std::string edge_name(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.from << "->" << e.to << ", w=" << e.weight << ")";
  return os.str();
}

}  // namespace

void validate(const GraphSpec& spec) {
  if (spec.node_count < 2)
    throw GraphError("graph must have at least 2 nodes (one agent plus the source)");
  if (spec.source < 1 || spec.source > spec.node_count) {
    std::ostringstream os;
    os << "source index " << spec.source << " out of range [1, "
       << spec.node_count << "]";
    throw GraphError(os.str());
  }
  if (!spec.labels.empty() &&
      static_cast<int>(spec.labels.size()) != spec.node_count)
    throw GraphError("labels must be empty or have one entry per node");

  std::set<std::pair<int, int>> seen;
  for (const Edge& e : spec.edges) {
    if (e.from < 1 || e.from > spec.node_count || e.to < 1 ||
        e.to > spec.node_count)
      throw GraphError("out-of-range index in edge " + edge_name(e));
    if (e.from == e.to) throw GraphError("self-edge " + edge_name(e));
    if (!(e.weight > 0.0))
      throw GraphError("nonpositive weight in edge " + edge_name(e));
    if (!seen.insert({e.from, e.to}).second)
      throw GraphError("duplicate edge " + edge_name(e));
  }
}

GraphSpec parse_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph document: ") + e.what());
  }
  if (!doc.is_object())
    throw GraphError("malformed graph document: top level must be an object");
  if (!doc.contains("nodes") || !doc["nodes"].is_number_integer())
    throw GraphError("malformed graph document: missing integer field 'nodes'");
  if (!doc.contains("source"))
    throw GraphError("missing source node");
  if (!doc["source"].is_number_integer())
    throw GraphError("malformed graph document: 'source' must be an integer");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw GraphError("malformed graph document: missing array field 'edges'");

  GraphSpec spec;
  spec.node_count = doc["nodes"].get<int>();
  spec.source = doc["source"].get<int>();
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number())
      throw GraphError(
          "malformed graph document: each edge must be [from, to, weight]");
    spec.edges.push_back(
        {item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array())
      throw GraphError("malformed graph document: 'labels' must be an array");
    for (const auto& item : doc["labels"]) {
      if (!item.is_string())
        throw GraphError("malformed graph document: labels must be strings");
      spec.labels.push_back(item.get<std::string>());
    }
  }
  validate(spec);
  return spec;
}

bool check_source_connected(const GraphSpec& spec) {
  std::vector<std::vector<int>> listeners(spec.node_count + 1);
  for (const Edge& e : spec.edges) listeners[e.from].push_back(e.to);

  std::vector<bool> reached(spec.node_count + 1, false);
  std::queue<int> frontier;
  reached[spec.source] = true;
  frontier.push(spec.source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : listeners[v]) {
      if (!reached[w]) {
        reached[w] = true;
        frontier.push(w);
      }
    }
  }
  for (int v = 1; v <= spec.node_count; ++v)
    if (!reached[v]) return false;
  return true;
}

Laplacian build_laplacian(const GraphSpec& spec) {
  validate(spec);
  const int n1 = spec.node_count;
  Laplacian lap;
  lap.entries = Eigen::MatrixXd::Zero(n1, n1);
  for (const Edge& e : spec.edges) {
    const int i = e.to - 1;    // listener row
    const int j = e.from - 1;  // neighbor column
    lap.entries(i, j) -= e.weight;
    lap.entries(i, i) += e.weight;
  }
  lap.source = spec.source;
  lap.labels = spec.labels;
  return lap;
}

PinnedSystem pin(const Laplacian& lap, int source) {
  const int n1 = static_cast<int>(lap.entries.rows());
  if (source < 1 || source > n1)
    throw GraphError("pin: source index out of range");
  const int s = source - 1;
  const int n = n1 - 1;

  PinnedSystem sys;
  sys.K.resize(n, n);
  sys.B.resize(n);
  sys.source = source;
  for (int i = 0, ip = 0; i < n1; ++i) {
    if (i == s) continue;
    for (int j = 0, jp = 0; j < n1; ++j) {
      if (j == s) continue;
      sys.K(ip, jp++) = lap.entries(i, j);
    }
    sys.B(ip++) = -lap.entries(i, s);
  }
  if (!lap.labels.empty()) {
    for (int i = 0; i < n1; ++i)
      if (i != s) sys.labels.push_back(lap.labels[static_cast<std::size_t>(i)]);
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.K);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (min_pivot < kSingularPivot) {
    std::ostringstream os;
    os << "pinned Laplacian is singular (smallest pivot " << min_pivot
       << "); the source cannot reach every node";
    throw NumericalError(os.str());
  }
  return sys;
}

PinnedSystem pin(const Laplacian& lap) { return pin(lap, lap.source); }

GraphSpec ring_with_leader(int n, int leader) {
  if (n < 3) throw GraphError("ring_with_leader: need at least 3 agents");
  if (leader < 1 || leader > n)
    throw GraphError("ring_with_leader: leader index out of range");

  GraphSpec spec;
  spec.node_count = n + 1;
  spec.source = n + 1;
  for (int i = 1; i <= n; ++i) {
    const int prev = (i - 2 + n) % n + 1;
    const int next = i % n + 1;
    spec.edges.push_back({prev, i, 1.0});
    spec.edges.push_back({next, i, 1.0});
  }
  spec.edges.push_back({n + 1, leader, 1.0});
  validate(spec);
  return spec;
}

GraphSpec fig2_fixture() {
  GraphSpec spec;
  spec.node_count = 7;
  spec.source = 7;
  // one singleton fed by the source, one symmetric pair, one acyclic triple
  spec.edges = {
      {7, 1, 1.0},
      {1, 2, 1.0}, {3, 2, 1.0},
      {1, 3, 1.0}, {2, 3, 1.0},
      {2, 4, 1.0},
      {3, 5, 1.0},
      {2, 6, 1.0}, {3, 6, 1.0}, {4, 6, 1.0}, {5, 6, 1.0},
  };
  validate(spec);
  return spec;
}

}  // namespace dsr
