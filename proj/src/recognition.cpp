#include "qspec/recognition.hpp"

#include "qspec/cotree.hpp"
#include "qspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace qspec {

namespace {

// Orders a 4-vertex induced P4 along the path.
std::array<int, 4> path_order(const Graph& g, const std::array<int, 4>& q) {
  auto local_degree = [&](int x) {
    int d = 0;
    for (int y : q) d += (x != y && g.adjacent(x, y)) ? 1 : 0;
    return d;
  };
  std::array<int, 4> out{};
  int cur = *std::find_if(q.begin(), q.end(), [&](int x) { return local_degree(x) == 1; });
  int prev = -1;
  for (int k = 0; k < 4; ++k) {
    out[k] = cur;
    for (int y : q)
      if (y != cur && y != prev && g.adjacent(cur, y)) {
        prev = cur;
        cur = y;
        break;
      }
  }
  return out;
}

bool matches(const Graph& g, const std::array<int, 4>& q, Pattern pattern) {
  std::array<int, 4> deg{};
  int m = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.adjacent(q[i], q[j])) {
        ++m;
        ++deg[i];
        ++deg[j];
      }
  std::sort(deg.begin(), deg.end());
  switch (pattern) {
    case Pattern::P4:
      return m == 3 && deg == std::array<int, 4>{1, 1, 2, 2};
    case Pattern::C4:
      return m == 4 && deg == std::array<int, 4>{2, 2, 2, 2};
    case Pattern::TwoK2:
      return m == 2 && deg == std::array<int, 4>{1, 1, 1, 1};
  }
  return false;
}

const char* pattern_name(Pattern p) {
  switch (p) {
    case Pattern::P4:
      return "P4";
    case Pattern::C4:
      return "C4";
    case Pattern::TwoK2:
      return "2K2";
  }
  return "?";
}

}  // namespace

std::optional<std::array<int, 4>> find_induced(const Graph& g, Pattern pattern) {
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::array<int, 4> q{a, b, c, d};
          if (matches(g, q, pattern)) return pattern == Pattern::P4 ? path_order(g, q) : q;
        }
  return std::nullopt;
}

ChordalityResult chordality(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering iff g is chordal.
  std::vector<int> weight(n, 0), visit;
  std::vector<bool> done(n, false);
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    done[best] = true;
    visit.push_back(best);
    for (int u = 0; u < n; ++u)
      if (!done[u] && g.adjacent(best, u)) ++weight[u];
  }
  std::vector<int> peo(visit.rbegin(), visit.rend());
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[peo[i]] = i;

  for (int i = 0; i < n; ++i) {
    std::vector<int> later;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(peo[i], u) && position[u] > i) later.push_back(u);
    for (std::size_t x = 0; x < later.size(); ++x)
      for (std::size_t y = x + 1; y < later.size(); ++y)
        if (!g.adjacent(later[x], later[y])) return {false, {}};
  }
  return {true, std::move(peo)};
}

bool is_chordal(const Graph& g) { return chordality(g).chordal; }

bool is_regular(const Graph& g) {
  const auto d = g.degrees();
  return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_cograph(const Graph& g) { return std::holds_alternative<Cotree>(from_graph(g)); }

bool is_quasi_threshold(const Graph& g) { return is_cograph(g) && is_chordal(g); }

bool is_threshold(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg = g.degrees();
  std::vector<bool> gone(n, false);
  for (int left = n; left > 0; --left) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!gone[v] && (deg[v] == 0 || deg[v] == left - 1)) pick = v;
    if (pick < 0) return false;
    gone[pick] = true;
    for (int u = 0; u < n; ++u)
      if (!gone[u] && g.adjacent(pick, u)) --deg[u];
  }
  return true;
}

ClassificationReport classify(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("classify: empty graph");
  ClassificationReport r;
  const auto tree = from_graph(g);
  r.is_cograph = std::holds_alternative<Cotree>(tree);
  r.is_chordal = is_chordal(g);
  r.is_quasi_threshold = r.is_cograph && r.is_chordal;
  r.is_threshold = r.is_quasi_threshold && is_threshold(g);
  r.is_bipartite = bipartition(g).has_value();
  r.is_regular = is_regular(g);
  r.is_complete = is_complete(g);
  r.is_connected = is_connected(g);

  if (!r.is_cograph) {
    r.witness = std::get<NotCograph>(tree).witness;
    r.witness_pattern = Pattern::P4;
  } else if (!r.is_chordal) {
    r.witness = find_induced(g, Pattern::C4);
    r.witness_pattern = Pattern::C4;
  } else if (!r.is_threshold) {
    r.witness = find_induced(g, Pattern::TwoK2);
    r.witness_pattern = Pattern::TwoK2;
  }
  return r;
}

std::string to_json(const ClassificationReport& r) {
  auto flag = [](const char* key, bool v) { return std::string("\"") + key + "\":" + (v ? "true" : "false") + ","; };
  std::string s = "{";
  s += flag("is_cograph", r.is_cograph);
  s += flag("is_chordal", r.is_chordal);
  s += flag("is_quasi_threshold", r.is_quasi_threshold);
  s += flag("is_threshold", r.is_threshold);
  s += flag("is_bipartite", r.is_bipartite);
  s += flag("is_regular", r.is_regular);
  s += flag("is_complete", r.is_complete);
  s += flag("is_connected", r.is_connected);
  s += "\"witness\":";
  if (r.witness) {
    s += '[';
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string((*r.witness)[i]);
    s += "],\"witness_pattern\":\"" + std::string(pattern_name(*r.witness_pattern)) + "\"";
  } else {
    s += "null,\"witness_pattern\":null";
  }
  s += '}';
  return s;
}

namespace {

// Vertex-disjoint u-v paths, via unit-capacity vertex splitting. Stops
// once `cap` paths are found.
int disjoint_paths(const Graph& g, int source, int sink, int cap) {
  const int n = g.order();
  const int nodes = 2 * n;  // in(x) = 2x, out(x) = 2x + 1
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  Eigen::MatrixXi residual = Eigen::MatrixXi::Zero(nodes, nodes);
  for (int x = 0; x < n; ++x) {
    residual(2 * x, 2 * x + 1) = (x == source || x == sink) ? kInf : 1;
    for (int y = 0; y < n; ++y)
      if (g.adjacent(x, y)) residual(2 * x + 1, 2 * y) = kInf;
  }
  const int s = 2 * source + 1, t = 2 * sink;
  int flow = 0;
  std::vector<int> parent(nodes);
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::deque<int> queue{s};
    while (!queue.empty() && parent[t] < 0) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y)
        if (parent[y] < 0 && residual(x, y) > 0) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (parent[t] < 0) break;
    // Every augmenting path crosses a unit split edge, so it carries one unit.
    for (int y = t; y != s; y = parent[y]) {
      residual(parent[y], y) -= 1;
      residual(y, parent[y]) += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("vertex_connectivity needs at least two vertices");
  if (is_complete(g)) return n - 1;
  if (!is_connected(g)) return 0;
  // Some vertex among the first best+1 lies outside a minimum separator;
  // the smallest such index i pairs with a separated vertex of index > i.
  int best = n - 1;
  for (int i = 0; i <= best && i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) best = std::min(best, disjoint_paths(g, i, j, best));
  return best;
}

ConnectivityReport connectivity_report(const Graph& g, double tol) {
  ConnectivityReport r;
  r.kappa = vertex_connectivity(g);
  r.algebraic = algebraic_connectivity(g);
  r.equal = std::abs(r.kappa - r.algebraic) <= tol;
  return r;
}

std::vector<int> universal_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  return out;
}

UniversalCliqueDecomposition split_universal(const Graph& g) {
  UniversalCliqueDecomposition d;
  d.clique = universal_vertices(g);
  if (d.clique.empty()) throw NotApplicable("graph has no universal vertex");
  if (static_cast<int>(d.clique.size()) == g.order()) throw NotApplicable("graph is complete");
  d.clique_order = static_cast<int>(d.clique.size());
  for (int v = 0, k = 0; v < g.order(); ++v) {
    if (k < d.clique_order && d.clique[k] == v) {
      ++k;
      continue;
    }
    d.rest.push_back(v);
  }
  d.remainder = induced_subgraph(g, d.rest);
  return d;
}

UniversalCliqueDecomposition universal_clique_decomposition(const Graph& g) {
  if (g.empty()) throw NotApplicable("empty graph");
  if (is_complete(g)) throw NotApplicable("graph is complete");
  if (!is_connected(g)) throw NotApplicable("graph is disconnected");
  if (!is_quasi_threshold(g)) throw NotApplicable("graph is not quasi-threshold");
  if (universal_vertices(g).empty())
    throw InternalContradiction("connected non-complete quasi-threshold graph without a universal vertex");
  auto d = split_universal(g);
  if (is_connected(d.remainder))
    throw InternalContradiction("remainder after removing all universal vertices is connected");
  return d;
}

std::optional<family::GeneralizedCoreSatellite> parse_generalized_core_satellite(const Graph& g) {
  if (g.empty() || is_complete(g) || !is_connected(g)) return std::nullopt;
  UniversalCliqueDecomposition d;
  try {
    d = universal_clique_decomposition(g);
  } catch (const NotApplicable&) {
    return std::nullopt;
  }
  std::map<int, int> by_order;
  for (const auto& block : components(d.remainder).blocks) {
    if (!is_complete(induced_subgraph(d.remainder, block))) return std::nullopt;
    ++by_order[static_cast<int>(block.size())];
  }
  family::GeneralizedCoreSatellite spec;
  spec.n0 = d.clique_order;
  for (auto [order, count] : by_order) spec.satellites.push_back({count, order});
  return spec;
}

}  // namespace qspec
