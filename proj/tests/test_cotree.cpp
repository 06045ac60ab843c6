#include "qspec/cotree.hpp"
#include "qspec/enumerate.hpp"
#include "qspec/recognition.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qspec;
using qspec::test::cg;
using qspec::test::cycle_graph;
using qspec::test::path_graph;
using Kind = Cotree::Kind;

TEST_CASE("parse examples") {
  const Cotree k3 = parse_cotree("J(3)");
  CHECK(k3.kind == Kind::Join);
  CHECK(k3.children.size() == 3);
  CHECK(to_graph(k3) == complete_graph(3));

  const Graph paw = cg("J(1, U(J(1), J(2)))");
  CHECK(paw == join(complete_graph(1), disjoint_union(complete_graph(1), complete_graph(2))));

  const Graph three_k2 = cg("U(3*J(2))");
  CHECK(three_k2.order() == 6);
  CHECK(three_k2.size() == 3);
}

TEST_CASE("parse shorthands") {
  CHECK(parse_cotree("K(1)").is_leaf());
  CHECK(parse_cotree("E(1)").is_leaf());
  CHECK(cg("K(4)") == complete_graph(4));
  CHECK(cg("E(4)") == empty_graph(4));
  CHECK(cg(" J ( 2 , E( 2 ) ) ") == join(complete_graph(2), empty_graph(2)));
  CHECK(canonical_string(parse_cotree("U(2*K(2), 1)")) == "U(1,J(2),J(2))");
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_cotree(text);
      return -1;
    } catch (const CotreeParseError& e) {
      return static_cast<long>(e.offset());
    }
  };
  CHECK(offset_of("J(") == 2);
  CHECK(offset_of("X(1)") == 0);
  CHECK(offset_of("J(1") == 3);
  CHECK(offset_of("J()") >= 0);
  CHECK(offset_of("J(1) U(1)") >= 5);
  CHECK(offset_of("J(0)") >= 0);
  CHECK(offset_of("U(0*J(2))") >= 0);
  CHECK(offset_of("K(0)") >= 0);
  CHECK(offset_of("") == 0);
  CHECK_THROWS_WITH_AS(parse_cotree("J(0)"), doctest::Contains("zero"), CotreeParseError);
}

TEST_CASE("normalize") {
  auto leaves = [](int n) { return std::vector<Cotree>(n, Cotree::leaf()); };
  const Cotree raw = Cotree::node(Kind::Join, {Cotree::leaf(), Cotree::leaf(), Cotree::node(Kind::Join, leaves(3))});
  CHECK(normalize(raw) == Cotree::node(Kind::Join, leaves(5)));

  const Cotree u = Cotree::node(Kind::Union, {Cotree::node(Kind::Union, leaves(2)), Cotree::leaf()});
  CHECK(normalize(u) == Cotree::node(Kind::Union, leaves(3)));

  const Cotree chain =
      Cotree::node(Kind::Join, {Cotree::node(Kind::Union, {Cotree::node(Kind::Join, leaves(2))})});
  CHECK(normalize(chain) == Cotree::node(Kind::Join, leaves(2)));
  CHECK_FALSE(is_normalized(chain));
  CHECK(is_normalized(normalize(chain)));
  CHECK(normalize(normalize(raw)) == normalize(raw));
}

TEST_CASE("canonical strings") {
  CHECK(canonical_string(parse_cotree("J(3)")) == "J(3)");
  CHECK(canonical_string(parse_cotree("J(1,U(J(2),1))")) == canonical_string(parse_cotree("J(1,U(1,J(2)))")));
  const auto c4 = from_graph(cycle_graph(4));
  REQUIRE(std::holds_alternative<Cotree>(c4));
  CHECK(canonical_string(std::get<Cotree>(c4)) == canonical_string(parse_cotree("J(U(2),U(2))")));
  CHECK(canonical_string(Cotree::leaf()) == "J(1)");
  CHECK(parse_cotree(canonical_string(Cotree::leaf())).is_leaf());
}

TEST_CASE("to_graph") {
  CHECK(cg("J(4)") == complete_graph(4));
  const Graph kb = cg("J(U(2),U(3))");
  CHECK(kb.order() == 5);
  CHECK(kb.size() == 6);
  const Graph ku = cg("U(J(2),J(3))");
  CHECK(ku.order() == 5);
  CHECK(ku.size() == 4);
}

TEST_CASE("from_graph") {
  const auto p4 = from_graph(path_graph(4));
  REQUIRE(std::holds_alternative<NotCograph>(p4));
  auto w = std::get<NotCograph>(p4).witness;
  std::sort(w.begin(), w.end());
  CHECK(w == std::array<int, 4>{0, 1, 2, 3});

  const auto paw = from_graph(cg("J(1,U(1,J(2)))"));
  REQUIRE(std::holds_alternative<Cotree>(paw));
  CHECK(canonical_string(std::get<Cotree>(paw)) == "J(1,U(1,J(2)))");

  const auto c5 = from_graph(cycle_graph(5));
  REQUIRE(std::holds_alternative<NotCograph>(c5));
  const auto wit = std::get<NotCograph>(c5).witness;
  const Graph h = induced_subgraph(cycle_graph(5), {wit.begin(), wit.end()});
  CHECK(h.size() == 3);
  CHECK(is_connected(h));
  CHECK_FALSE(is_complete(h));
  // A P4 witness must come back in path order.
  for (int i = 0; i < 3; ++i) CHECK(cycle_graph(5).adjacent(wit[i], wit[i + 1]));
}

TEST_CASE("bags") {
  // K_c + (K_a u K_b) with c=2, a=2, b=3.
  const auto cu = bags(parse_cotree("J(2,U(J(2),J(3)))"));
  REQUIRE(cu.width() == 3);
  CHECK(cu.bags[0].kind == BagKind::J);
  CHECK(cu.bags[0].size == 2);
  CHECK(cu.bags[0].degree == 6);
  CHECK(cu.bags[1].size == 2);
  CHECK(cu.bags[1].degree == 3);
  CHECK(cu.bags[2].size == 3);
  CHECK(cu.bags[2].degree == 4);
  CHECK(cu.linked(0, 1));
  CHECK(cu.linked(0, 2));
  CHECK_FALSE(cu.linked(1, 2));

  const auto kb = bags(parse_cotree("J(U(2),U(3))"));
  REQUIRE(kb.width() == 2);
  CHECK(kb.bags[0].kind == BagKind::U);
  CHECK(kb.bags[0].size == 2);
  CHECK(kb.bags[0].degree == 3);
  CHECK(kb.bags[1].degree == 2);
  CHECK(kb.linked(0, 1));

  const auto kn = bags(parse_cotree("J(5)"));
  REQUIRE(kn.width() == 1);
  CHECK(kn.bags[0].size == 5);
  CHECK(kn.bags[0].degree == 4);

  const auto k1 = bags(Cotree::leaf());
  REQUIRE(k1.width() == 1);
  CHECK(k1.bags[0].kind == BagKind::J);
  CHECK(k1.bags[0].size == 1);
  CHECK(k1.bags[0].degree == 0);
  CHECK(k1.bags[0].members == std::vector<int>{0});
}

TEST_CASE("complement of a cotree swaps labels") {
  for (const char* expr : {"J(1,U(1,J(2)))", "U(3*J(2))", "J(U(2),U(3))", "U(1,J(1,U(1,J(2))))"})
    CHECK(to_graph(complement(parse_cotree(expr))) == complement(cg(expr)));
}

TEST_CASE("enumerated cotree invariants") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 9; ++n)
    for (const auto& t : enumerate_cotrees(n)) {
      CAPTURE(canonical_string(t));
      REQUIRE(is_normalized(t));
      const Graph g = to_graph(t);
      const auto back = from_graph(g);
      REQUIRE(std::holds_alternative<Cotree>(back));
      CHECK(canonical_string(std::get<Cotree>(back)) == canonical_string(t));

      const auto rep = bags(t);
      int total = 0;
      for (const auto& b : rep.bags) {
        total += b.size;
        CHECK(static_cast<int>(b.members.size()) == b.size);
        for (int v : b.members) CHECK(g.degree(v) == b.degree);
      }
      CHECK(total == n);
      for (int i = 0; i < rep.width(); ++i)
        for (int j = 0; j < rep.width(); ++j)
          if (i != j) CHECK(rep.linked(i, j) == g.adjacent(rep.bags[i].members[0], rep.bags[j].members[0]));

      // Flipping every label keeps bag membership and complements degrees.
      const auto co = bags(complement(t));
      REQUIRE(co.width() == rep.width());
      for (const auto& b : rep.bags) {
        const auto it = std::find_if(co.bags.begin(), co.bags.end(),
                                     [&](const Bag& c) { return c.members == b.members; });
        REQUIRE(it != co.bags.end());
        CHECK(it->degree == n - 1 - b.degree);
        if (n >= 2) CHECK(it->kind != b.kind);
      }

      if (n >= 3) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
          if (rng() % 2) s.push_back(v);
        if (!s.empty()) CHECK(std::holds_alternative<Cotree>(from_graph(induced_subgraph(g, s))));
      }
    }
}
