#include "qspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qspec {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_ = Adjacency::Constant(n, n, false);
}

Graph Graph::from_adjacency(Adjacency adj) {
  if (adj.rows() != adj.cols()) throw std::invalid_argument("adjacency must be square");
  const auto n = adj.rows();
  Graph g;
  int twice_m = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (adj(i, i)) throw std::invalid_argument("adjacency has a self-loop");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (adj(i, j) != adj(j, i)) throw std::invalid_argument("adjacency is not symmetric");
      twice_m += adj(i, j) ? 1 : 0;
    }
  }
  g.adj_ = std::move(adj);
  g.m_ = twice_m / 2;
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
    if (!g.add_edge(u, v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  return g;
}

bool Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (adj_(u, v)) return false;
  adj_(u, v) = adj_(v, u) = true;
  ++m_;
  return true;
}

int Graph::degree(int v) const { return static_cast<int>(adj_.row(v).count()); }

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order());
  for (int v = 0; v < order(); ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < order(); ++u)
    if (adj_(v, u)) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (adj_(u, v)) out.emplace_back(u, v);
  return out;
}

Graph complete_graph(int n) {
  Adjacency a = Adjacency::Constant(n, n, true);
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) = false;
  return Graph::from_adjacency(std::move(a));
}

Graph empty_graph(int n) { return Graph(n); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  Adjacency a = Adjacency::Constant(n1 + n2, n1 + n2, false);
  a.topLeftCorner(n1, n1) = g1.adjacency();
  a.bottomRightCorner(n2, n2) = g2.adjacency();
  return Graph::from_adjacency(std::move(a));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order(), n2 = g2.order();
  Adjacency a = Adjacency::Constant(n1 + n2, n1 + n2, true);
  a.topLeftCorner(n1, n1) = g1.adjacency();
  a.bottomRightCorner(n2, n2) = g2.adjacency();
  return Graph::from_adjacency(std::move(a));
}

Graph complement(const Graph& g) {
  Adjacency a = !g.adjacency();
  for (Eigen::Index i = 0; i < a.rows(); ++i) a(i, i) = false;
  return Graph::from_adjacency(std::move(a));
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  const int k = static_cast<int>(s.size());
  for (int v : s)
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  Adjacency a = Adjacency::Constant(k, k, false);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) a(i, j) = g.adjacent(s[i], s[j]);
  return Graph::from_adjacency(std::move(a));
}

VertexPartition components(const Graph& g) {
  VertexPartition out;
  std::vector<bool> seen(g.order(), false);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet block;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      block.push_back(v);
      for (int u = 0; u < g.order(); ++u)
        if (g.adjacent(v, u) && !seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
    }
    std::sort(block.begin(), block.end());
    out.blocks.push_back(std::move(block));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && components(g).blocks.size() == 1; }

namespace {

// Colours one component starting from `s`; false on an odd cycle.
bool two_colour(const Graph& g, int s, std::vector<int>& colour) {
  std::deque<int> queue{s};
  colour[s] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int u = 0; u < g.order(); ++u) {
      if (!g.adjacent(v, u)) continue;
      if (colour[u] < 0) {
        colour[u] = 1 - colour[v];
        queue.push_back(u);
      } else if (colour[u] == colour[v]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<VertexPartition> bipartition(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (int s = 0; s < g.order(); ++s)
    if (colour[s] < 0 && !two_colour(g, s, colour)) return std::nullopt;
  VertexPartition out;
  out.blocks.resize(2);
  for (int v = 0; v < g.order(); ++v) out.blocks[colour[v]].push_back(v);
  return out;
}

int bipartite_component_count(const Graph& g) {
  int count = 0;
  for (const auto& block : components(g).blocks)
    if (bipartition(induced_subgraph(g, block))) ++count;
  return count;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return std::istringstream(line);
    }
    throw std::invalid_argument("edge list: unexpected end of input after line " + std::to_string(line_no));
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + what);
  };

  long n = -1, m = -1;
  {
    auto header = next_line();
    if (!(header >> n >> m) || n < 0 || m < 0) fail("expected header \"n m\"");
    std::string extra;
    if (header >> extra) fail("trailing tokens in header");
  }
  Graph g(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    auto row = next_line();
    long u = -1, v = -1;
    if (!(row >> u >> v)) fail("expected \"u v\"");
    std::string extra;
    if (row >> extra) fail("trailing tokens");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
    if (u == v) fail("self-loop");
    if (u > v) fail("expected u < v");
    if (!g.add_edge(static_cast<int>(u), static_cast<int>(v))) fail("duplicate edge");
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) fail("more edges than declared");
  }
  return g;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace qspec
