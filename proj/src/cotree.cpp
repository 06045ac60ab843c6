#include "qspec/cotree.hpp"

#include "qspec/recognition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <utility>

namespace qspec {

Cotree Cotree::node(Kind kind, std::vector<Cotree> children) {
  if (kind == Kind::Leaf) throw std::invalid_argument("Cotree::node needs an internal kind");
  Cotree t;
  t.kind = kind;
  t.children = std::move(children);
  return t;
}

int Cotree::leaf_count() const {
  if (is_leaf()) return 1;
  int total = 0;
  for (const auto& c : children) total += c.leaf_count();
  return total;
}

CotreeParseError::CotreeParseError(const std::string& what, std::size_t offset)
    : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

constexpr long kMaxLeaves = 1L << 20;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Cotree parse() {
    Cotree t = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw CotreeParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxLeaves) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    if (value == 0) {
      pos_ = start;
      fail("zero multiplicity");
    }
    return value;
  }

  static std::vector<Cotree> leaves(long n) { return std::vector<Cotree>(static_cast<std::size_t>(n)); }

  Cotree expr() {
    const char c = peek();
    if (c == 'K' || c == 'E') {
      ++pos_;
      expect('(');
      const long n = integer();
      expect(')');
      count(n);
      if (n == 1) return Cotree::leaf();
      return Cotree::node(c == 'K' ? Cotree::Kind::Join : Cotree::Kind::Union, leaves(n));
    }
    if (c == 'U' || c == 'J') {
      ++pos_;
      expect('(');
      if (peek() == ')') fail("node needs at least one item");
      std::vector<Cotree> children;
      item(children);
      while (peek() == ',') {
        ++pos_;
        item(children);
      }
      expect(')');
      return Cotree::node(c == 'J' ? Cotree::Kind::Join : Cotree::Kind::Union, std::move(children));
    }
    fail("expected U(, J(, K( or E(");
  }

  void item(std::vector<Cotree>& children) {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const long k = integer();
      if (peek() == '*') {
        ++pos_;
        const long before = leaves_;
        Cotree sub = expr();
        count((k - 1) * (leaves_ - before));
        for (long i = 0; i < k; ++i) children.push_back(sub);
        return;
      }
      count(k);
      for (long i = 0; i < k; ++i) children.push_back(Cotree::leaf());
      return;
    }
    children.push_back(expr());
  }

  void count(long added) {
    leaves_ += added;
    if (leaves_ > kMaxLeaves) fail("expression too large");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  long leaves_ = 0;
};

// Appends the normalized form of `t` to `out`, splicing it in when it has
// the same kind as the parent.
void append_normalized(const Cotree& t, Cotree::Kind parent, std::vector<Cotree>& out) {
  Cotree n = normalize(t);
  if (!n.is_leaf() && n.kind == parent) {
    for (auto& c : n.children) out.push_back(std::move(c));
  } else {
    out.push_back(std::move(n));
  }
}

}  // namespace

Cotree parse_cotree(std::string_view text) { return normalize(Parser(text).parse()); }

Cotree normalize(const Cotree& t) {
  if (t.is_leaf()) return t;
  std::vector<Cotree> kids;
  for (const auto& c : t.children) append_normalized(c, t.kind, kids);
  if (kids.size() == 1) return std::move(kids.front());
  return Cotree::node(t.kind, std::move(kids));
}

bool is_normalized(const Cotree& t) {
  if (t.is_leaf()) return true;
  if (t.children.size() < 2) return false;
  return std::all_of(t.children.begin(), t.children.end(),
                     [&](const Cotree& c) { return (c.is_leaf() || c.kind != t.kind) && is_normalized(c); });
}

namespace {

struct Keyed {
  int leaves;
  std::string key;
  Cotree tree;
};

Keyed canonical_keyed(const Cotree& t) {
  if (t.is_leaf()) return {1, "J(1)", t};
  std::vector<Keyed> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) kids.push_back(canonical_keyed(c));
  std::sort(kids.begin(), kids.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.leaves, a.key) < std::tie(b.leaves, b.key);
  });

  // Leaf children sort first and print as a single count.
  Keyed out;
  out.leaves = 0;
  out.key = t.kind == Cotree::Kind::Join ? "J(" : "U(";
  int leaf_children = 0;
  bool first = true;
  std::vector<Cotree> ordered;
  for (auto& k : kids) {
    out.leaves += k.leaves;
    if (k.tree.is_leaf()) {
      ++leaf_children;
    } else {
      if (leaf_children > 0 && first) {
        out.key += std::to_string(leaf_children);
        first = false;
      }
      if (!first) out.key += ',';
      out.key += k.key;
      first = false;
    }
    ordered.push_back(std::move(k.tree));
  }
  if (first) out.key += std::to_string(leaf_children);
  out.key += ')';
  out.tree = Cotree::node(t.kind, std::move(ordered));
  return out;
}

}  // namespace

Cotree canonicalize(const Cotree& t) { return canonical_keyed(t).tree; }

std::string canonical_string(const Cotree& t) { return canonical_keyed(t).key; }

Cotree complement(const Cotree& t) {
  if (t.is_leaf()) return t;
  std::vector<Cotree> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) kids.push_back(complement(c));
  return Cotree::node(t.kind == Cotree::Kind::Join ? Cotree::Kind::Union : Cotree::Kind::Join, std::move(kids));
}

Graph to_graph(const Cotree& t) {
  const int n = t.leaf_count();
  Adjacency a = Adjacency::Constant(n, n, false);
  // Returns the leaf range [first, last) covered by `node`.
  std::function<std::pair<int, int>(const Cotree&, int)> fill = [&](const Cotree& node, int first) {
    if (node.is_leaf()) return std::pair{first, first + 1};
    std::vector<std::pair<int, int>> ranges;
    int next = first;
    for (const auto& c : node.children) {
      ranges.push_back(fill(c, next));
      next = ranges.back().second;
    }
    if (node.kind == Cotree::Kind::Join) {
      for (std::size_t i = 0; i < ranges.size(); ++i)
        for (std::size_t j = i + 1; j < ranges.size(); ++j) {
          const auto [a0, a1] = ranges[i];
          const auto [b0, b1] = ranges[j];
          a.block(a0, b0, a1 - a0, b1 - b0).setConstant(true);
          a.block(b0, a0, b1 - b0, a1 - a0).setConstant(true);
        }
    }
    return std::pair{first, next};
  };
  fill(t, 0);
  return Graph::from_adjacency(std::move(a));
}

namespace {

std::variant<Cotree, NotCograph> decompose(const Graph& g, const VertexSet& vertices) {
  if (vertices.size() == 1) return Cotree::leaf();
  const Graph sub = induced_subgraph(g, vertices);

  auto recurse = [&](const VertexPartition& parts, Cotree::Kind kind) -> std::variant<Cotree, NotCograph> {
    std::vector<Cotree> kids;
    for (const auto& block : parts.blocks) {
      VertexSet mapped;
      for (int v : block) mapped.push_back(vertices[v]);
      auto r = decompose(g, mapped);
      if (std::holds_alternative<NotCograph>(r)) return r;
      // Children of a union node are connected, hence never unions
      // themselves; likewise for join. No splicing needed.
      kids.push_back(std::get<Cotree>(std::move(r)));
    }
    return Cotree::node(kind, std::move(kids));
  };

  const auto comps = components(sub);
  if (comps.blocks.size() > 1) return recurse(comps, Cotree::Kind::Union);
  const auto cocomps = components(complement(sub));
  if (cocomps.blocks.size() > 1) return recurse(cocomps, Cotree::Kind::Join);

  const auto p4 = find_induced(sub, Pattern::P4);
  if (!p4) throw std::logic_error("connected and co-connected graph without an induced P4");
  NotCograph out{};
  for (int i = 0; i < 4; ++i) out.witness[i] = vertices[(*p4)[i]];
  return out;
}

}  // namespace

std::variant<Cotree, NotCograph> from_graph(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("from_graph needs at least one vertex");
  VertexSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return decompose(g, all);
}

BagRepresentation bags(const Cotree& t) {
  BagRepresentation rep;
  if (t.is_leaf()) {
    rep.bags.push_back(Bag{0, BagKind::J, 1, 0, {0}});
    rep.linked = Adjacency::Constant(1, 1, false);
    return rep;
  }

  // Per bag, the preorder ids of internal nodes from the root down to its
  // parent, and the kind of each id.
  std::vector<std::vector<int>> paths;
  std::vector<Cotree::Kind> node_kind;
  std::vector<int> path;
  int next_leaf = 0;

  std::function<void(const Cotree&, int)> walk = [&](const Cotree& node, int extra) {
    const int id = static_cast<int>(node_kind.size());
    node_kind.push_back(node.kind);
    path.push_back(id);
    const int total = node.leaf_count();
    const bool is_join = node.kind == Cotree::Kind::Join;

    Bag bag;
    bag.kind = is_join ? BagKind::J : BagKind::U;
    bag.degree = extra + (is_join ? total - 1 : 0);
    int leaf_index = next_leaf;
    for (const auto& c : node.children) {
      if (c.is_leaf()) bag.members.push_back(leaf_index);
      leaf_index += c.leaf_count();
    }
    if (!bag.members.empty()) {
      bag.id = rep.width();
      bag.size = static_cast<int>(bag.members.size());
      rep.bags.push_back(std::move(bag));
      paths.push_back(path);
    }

    for (const auto& c : node.children) {
      if (c.is_leaf()) {
        ++next_leaf;
        continue;
      }
      walk(c, extra + (is_join ? total - c.leaf_count() : 0));
    }
    path.pop_back();
  };
  walk(t, 0);

  const int r = rep.width();
  rep.linked = Adjacency::Constant(r, r, false);
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const auto& a = paths[i];
      const auto& b = paths[j];
      std::size_t k = 0;
      while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
      const bool joined = node_kind[a[k - 1]] == Cotree::Kind::Join;
      rep.linked(i, j) = rep.linked(j, i) = joined;
    }
  return rep;
}

}  // namespace qspec
