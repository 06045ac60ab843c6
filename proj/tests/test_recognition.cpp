#include "qspec/enumerate.hpp"
#include "qspec/families.hpp"
#include "qspec/recognition.hpp"
#include "qspec/spectra.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>

using namespace qspec;
using qspec::test::cg;
using qspec::test::cycle_graph;
using qspec::test::path_graph;
using doctest::Approx;

namespace {

// Smallest vertex set whose removal disconnects g or leaves one vertex.
int brute_kappa(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int removed = __builtin_popcount(mask);
    if (removed >= best || removed > n - 2) continue;
    VertexSet keep;
    for (int v = 0; v < n; ++v)
      if (!(mask >> v & 1u)) keep.push_back(v);
    if (!is_connected(induced_subgraph(g, keep))) best = removed;
  }
  return best;
}

bool free_of(const Graph& g, std::initializer_list<Pattern> patterns) {
  return std::all_of(patterns.begin(), patterns.end(), [&](Pattern p) { return !find_induced(g, p); });
}

}  // namespace

TEST_CASE("find_induced") {
  CHECK(find_induced(path_graph(4), Pattern::P4) == std::array<int, 4>{0, 1, 2, 3});
  for (auto p : {Pattern::P4, Pattern::C4, Pattern::TwoK2}) CHECK_FALSE(find_induced(complete_graph(5), p));
  CHECK(find_induced(cg("J(U(1,1),U(1,1))"), Pattern::C4));
  CHECK(find_induced(cg("U(J(2),J(2))"), Pattern::TwoK2));
  CHECK_FALSE(find_induced(cg("U(J(2),J(2))"), Pattern::C4));
  CHECK_FALSE(find_induced(complete_graph(3), Pattern::P4));
  // Path order for P4 hits on a longer path.
  const auto hit = find_induced(path_graph(6), Pattern::P4);
  REQUIRE(hit);
  for (int i = 0; i < 3; ++i) CHECK(path_graph(6).adjacent((*hit)[i], (*hit)[i + 1]));
}

TEST_CASE("chordality") {
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK(is_chordal(cg("J(2,U(1,J(3)))")));
  CHECK_FALSE(is_chordal(cg("J(U(2),U(1,J(2)))")));
  CHECK_FALSE(is_chordal(cycle_graph(6)));
  CHECK(is_chordal(path_graph(6)));
  const auto r = chordality(cg("J(1,U(1,J(2)))"));
  CHECK(r.chordal);
  CHECK(r.elimination_order.size() == 4);
}

TEST_CASE("classify") {
  const auto a = classify(cg("J(2,U(1,J(3)))"));
  CHECK(a.is_quasi_threshold);
  CHECK(a.is_threshold);
  CHECK(a.is_connected);
  CHECK_FALSE(a.witness);

  const auto b = classify(cg("J(1,U(J(2),J(3)))"));
  CHECK(b.is_quasi_threshold);
  CHECK_FALSE(b.is_threshold);
  CHECK(b.witness_pattern == Pattern::TwoK2);

  const auto c = classify(cycle_graph(4));
  CHECK(c.is_cograph);
  CHECK_FALSE(c.is_chordal);
  CHECK_FALSE(c.is_quasi_threshold);
  CHECK(c.witness_pattern == Pattern::C4);

  const auto d = classify(path_graph(5));
  CHECK_FALSE(d.is_cograph);
  CHECK(d.witness_pattern == Pattern::P4);

  const auto j = nlohmann::json::parse(to_json(c));
  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(to_json(c));
  for (const auto& [k, v] : ordered.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"is_cograph", "is_chordal", "is_quasi_threshold", "is_threshold",
                                         "is_bipartite", "is_regular", "is_complete", "is_connected", "witness",
                                         "witness_pattern"});
  CHECK(j["witness_pattern"] == "C4");
  CHECK(nlohmann::json::parse(to_json(a))["witness"].is_null());
}

TEST_CASE("regular and complete") {
  CHECK(is_regular(cg("J(U(2),U(2))")));
  CHECK_FALSE(is_complete(cg("J(U(2),U(2))")));
  CHECK(is_regular(complete_graph(4)));
  CHECK(is_complete(complete_graph(4)));
  const Graph paw = cg("J(1,U(1,J(2)))");
  CHECK_FALSE(is_regular(paw));
  CHECK_FALSE(is_complete(paw));
}

TEST_CASE("vertex connectivity examples") {
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(cg("J(1,U(1,J(2)))")) == 1);
  CHECK(vertex_connectivity(cg("J(U(2),U(3))")) == 2);
  CHECK(vertex_connectivity(cg("U(J(3),J(2))")) == 0);
  CHECK(vertex_connectivity(cycle_graph(7)) == 2);
  CHECK_THROWS_AS(vertex_connectivity(complete_graph(1)), std::invalid_argument);

  const auto p4 = connectivity_report(path_graph(4));
  CHECK(p4.kappa == 1);
  CHECK(p4.algebraic == Approx(2 - std::sqrt(2.0)));
  CHECK_FALSE(p4.equal);
  const auto k5 = connectivity_report(complete_graph(5));
  CHECK(k5.kappa == 4);
  CHECK(k5.algebraic == Approx(5));
  CHECK_FALSE(k5.equal);
}

TEST_CASE("vertex connectivity matches brute force") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = qspec::test::random_graph(rng, n, 0.3 + 0.5 * (trial % 3) / 2.0);
    CAPTURE(n);
    CHECK(vertex_connectivity(g) == brute_kappa(g));
    if (is_connected(g) && !is_complete(g)) CHECK(algebraic_connectivity(g) <= vertex_connectivity(g) + 1e-8);
  }
  for (int n = 2; n <= 7; ++n)
    for (const auto& t : enumerate_cotrees(n)) {
      const Graph g = to_graph(t);
      CHECK(vertex_connectivity(g) == brute_kappa(g));
    }
}

TEST_CASE("universal clique decomposition") {
  const auto paw = universal_clique_decomposition(cg("J(1,U(1,J(2)))"));
  CHECK(paw.clique_order == 1);
  CHECK(paw.clique == std::vector<int>{0});
  CHECK(paw.remainder == disjoint_union(complete_graph(1), complete_graph(2)));

  const auto cs = universal_clique_decomposition(cg("J(2,U(3*J(2)))"));
  CHECK(cs.clique_order == 2);
  CHECK(cs.remainder.order() == 6);
  CHECK(components(cs.remainder).blocks.size() == 3);

  CHECK_THROWS_AS(universal_clique_decomposition(complete_graph(4)), NotApplicable);
  CHECK_THROWS_AS(universal_clique_decomposition(cg("U(1,J(2))")), NotApplicable);
  CHECK_THROWS_AS(universal_clique_decomposition(cycle_graph(4)), NotApplicable);
  CHECK_THROWS_AS(split_universal(cycle_graph(4)), NotApplicable);
  CHECK(split_universal(cg("J(1,U(2),U(1,J(2)))")).clique_order == 1);
}

TEST_CASE("generalized core-satellite parse") {
  const auto s = parse_generalized_core_satellite(cg("J(1,U(J(2),2*J(3)))"));
  REQUIRE(s);
  CHECK(s->n0 == 1);
  CHECK(s->satellites == std::vector<family::Satellite>{{1, 2}, {2, 3}});
  CHECK_FALSE(parse_generalized_core_satellite(cg("J(2,U(1,J(1,U(2))))")));
  CHECK_FALSE(parse_generalized_core_satellite(cycle_graph(4)));
  CHECK_FALSE(parse_generalized_core_satellite(complete_graph(4)));
  CHECK_FALSE(parse_generalized_core_satellite(cg("U(J(2),J(3))")));
}

TEST_CASE("structural laws over enumerated cographs") {
  std::mt19937 rng(29);
  for (int n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_cotrees(n)) {
      CAPTURE(canonical_string(t));
      const Graph g = to_graph(t);
      const auto r = classify(g);
      CHECK(r.is_cograph);
      CHECK(r.is_quasi_threshold == (r.is_cograph && r.is_chordal));
      CHECK(r.is_quasi_threshold == free_of(g, {Pattern::P4, Pattern::C4}));
      CHECK(r.is_threshold == free_of(g, {Pattern::P4, Pattern::C4, Pattern::TwoK2}));
      if (r.is_threshold) CHECK(r.is_quasi_threshold);
      if (r.is_complete) CHECK((r.is_regular && r.is_chordal));
      if (!r.is_connected) continue;
      if (r.is_regular && r.is_chordal) CHECK(r.is_complete);
      // kappa(K_n) = n - 1 while a(K_n) = n.
      if (n >= 2) CHECK(connectivity_report(g).equal != r.is_complete);

      if (r.is_quasi_threshold) {
        // Hereditary closure on a random induced subgraph.
        VertexSet s;
        for (int v = 0; v < n; ++v)
          if (rng() % 3) s.push_back(v);
        if (!s.empty()) CHECK(is_quasi_threshold(induced_subgraph(g, s)));
        if (r.is_complete) continue;
        const auto d = universal_clique_decomposition(g);
        CHECK_FALSE(is_connected(d.remainder));
        VertexSet order = d.clique;
        order.insert(order.end(), d.rest.begin(), d.rest.end());
        CHECK(join(complete_graph(d.clique_order), d.remainder) == induced_subgraph(g, order));
        if (const auto spec = parse_generalized_core_satellite(g))
          CHECK(canonical_string(build(*spec).tree) == canonical_string(t));
      }
    }
}

TEST_CASE("fast recognizers agree with forbidden-subgraph scans on random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = qspec::test::random_graph(rng, 1 + trial % 9, 0.2 + 0.6 * (trial % 4) / 3.0);
    CHECK(is_cograph(g) == free_of(g, {Pattern::P4}));
    CHECK(is_quasi_threshold(g) == free_of(g, {Pattern::P4, Pattern::C4}));
    CHECK(is_threshold(g) == free_of(g, {Pattern::P4, Pattern::C4, Pattern::TwoK2}));
  }
}
