#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qspec {

using Adjacency = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense simple undirected graph on vertices 0..n-1.
///
/// The adjacency array is symmetric with a false diagonal. The order may be
/// zero; spectral routines reject that case.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws std::invalid_argument if `adj` is not square, symmetric and loop free.
  static Graph from_adjacency(Adjacency adj);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.rows()); }
  int size() const { return m_; }
  bool empty() const { return order() == 0; }

  bool adjacent(int u, int v) const { return adj_(u, v); }
  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  const Adjacency& adjacency() const { return adj_; }

  /// Inserts the edge {u, v}; returns false if it was already present.
  bool add_edge(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && (a.adj_ == b.adj_).all();
  }

 private:
  Adjacency adj_ = Adjacency(0, 0);
  int m_ = 0;
};

using VertexSet = std::vector<int>;

/// Disjoint vertex blocks covering every vertex.
struct VertexPartition {
  std::vector<VertexSet> blocks;
};

Graph complete_graph(int n);
Graph empty_graph(int n);

/// Disjoint union; vertices of `g1` come first.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every cross edge; vertices of `g1` come first.
Graph join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);
/// Subgraph induced by `s`, relabelled 0..|s|-1 in the order given.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// Connected components in order of their smallest vertex.
VertexPartition components(const Graph& g);
bool is_connected(const Graph& g);

/// Two colour classes (per-component 2-colouring, smallest vertex of each
/// component coloured 0), or nullopt if `g` has an odd cycle.
std::optional<VertexPartition> bipartition(const Graph& g);
int bipartite_component_count(const Graph& g);

/// Edge-list text: "n m" then m lines "u v" with u < v.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace qspec
