#include "qspec/enumerate.hpp"
#include "qspec/recognition.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

using namespace qspec;

namespace {

// Small graphs as per-vertex neighbour bitmasks.
using Rows = std::vector<std::uint32_t>;

bool induced_p4(const Rows& g, int a, int b, int c, int d) {
  const int v[4] = {a, b, c, d};
  int deg[4] = {0, 0, 0, 0}, edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g[v[i]] >> v[j] & 1u) ++deg[i], ++deg[j], ++edges;
  std::sort(deg, deg + 4);
  return edges == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2 && deg[3] == 2;
}

// Only 4-sets through the newest vertex can be new P4s.
bool p4_through(const Rows& g, int x) {
  const int n = static_cast<int>(g.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (a != x && b != x && c != x && induced_p4(g, a, b, c, x)) return true;
  return false;
}

// Minimum upper-triangle code over orderings that list vertices by degree;
// only permutations inside each degree class are tried.
std::uint64_t canonical_code(const Rows& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto deg = [&](int v) { return __builtin_popcount(g[v]); };
  std::sort(order.begin(), order.end(), [&](int x, int y) { return deg(x) < deg(y); });
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && deg(order[j]) == deg(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~0ull;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == classes.size()) {
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) code = code << 1 | (g[order[i]] >> order[j] & 1u);
      best = std::min(best, code);
      return;
    }
    auto first = order.begin() + classes[k].first, last = order.begin() + classes[k].second;
    std::sort(first, last);
    do rec(k + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

Rows decode(std::uint64_t code, int n) {
  Rows g(n, 0);
  int bit = n * (n - 1) / 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (code >> --bit & 1u) g[i] |= 1u << j, g[j] |= 1u << i;
  return g;
}

// Unlabeled P4-free graphs on n vertices, grown one vertex at a time.
std::vector<int> census(int max_n) {
  std::vector<int> counts;
  std::set<std::uint64_t> level{canonical_code(Rows(1, 0))};
  counts.push_back(1);
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::uint64_t> next;
    for (auto code : level) {
      const Rows base = decode(code, n - 1);
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        Rows g = base;
        g.push_back(nb);
        for (int v = 0; v < n - 1; ++v)
          if (nb >> v & 1u) g[v] |= 1u << (n - 1);
        if (!p4_through(g, n - 1)) next.insert(canonical_code(g));
      }
    }
    level = std::move(next);
    counts.push_back(static_cast<int>(level.size()));
  }
  return counts;
}

}  // namespace

TEST_CASE("cograph counts") {
  const std::vector<int> expected{1, 2, 4, 10, 24, 66, 180, 522, 1532, 4624, 14136};
  for (int n = 1; n <= kMaxEnumerationOrder; ++n) {
    CAPTURE(n);
    CHECK(enumerate_cographs(n).count() == expected[n - 1]);
  }
}

TEST_CASE("counts agree with an independent census") {
  const auto counts = census(7);
  for (int n = 1; n <= 7; ++n) CHECK(enumerate_cographs(n).count() == counts[n - 1]);
}

TEST_CASE("small orders") {
  CHECK(enumerate_cographs(1).keys == std::vector<std::string>{"J(1)"});
  CHECK(enumerate_cographs(2).keys == std::vector<std::string>{"J(2)", "U(2)"});
  CHECK(enumerate_cographs(4).count() == 10);
}

TEST_CASE("index invariants") {
  for (int n = 1; n <= 8; ++n) {
    const auto index = enumerate_cographs(n);
    CHECK(std::is_sorted(index.keys.begin(), index.keys.end()));
    CHECK(std::adjacent_find(index.keys.begin(), index.keys.end()) == index.keys.end());
    const std::set<std::string> keys(index.keys.begin(), index.keys.end());
    for (const auto& key : index.keys) {
      const Cotree t = parse_cotree(key);
      CHECK(canonical_string(t) == key);
      CHECK(to_graph(t).order() == n);
      CHECK(is_cograph(to_graph(t)));
      CHECK(keys.count(canonical_string(complement(t))) == 1);
    }
  }
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(enumerate_cographs(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_cographs(kMaxEnumerationOrder + 1), std::out_of_range);
}
