#pragma once

#include "qspec/graph.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qspec {

/// Rooted cotree. Internal nodes are labelled union or join; leaves are
/// vertices, numbered by left-to-right depth-first order.
struct Cotree {
  enum class Kind { Leaf, Union, Join };

  Kind kind = Kind::Leaf;
  std::vector<Cotree> children;

  static Cotree leaf() { return {}; }
  static Cotree node(Kind kind, std::vector<Cotree> children);

  bool is_leaf() const { return kind == Kind::Leaf; }
  int leaf_count() const;

  friend bool operator==(const Cotree&, const Cotree&) = default;
};

/// Syntax or arity error in a cotree expression; `offset` is the byte
/// position where parsing stopped.
class CotreeParseError : public std::invalid_argument {
 public:
  CotreeParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the cotree DSL described in the README and normalizes the result.
Cotree parse_cotree(std::string_view text);

/// Collapses same-kind parent/child chains and elides single-child nodes.
/// Preserves the left-to-right leaf order.
Cotree normalize(const Cotree& t);
bool is_normalized(const Cotree& t);

/// Sorts children by (leaf count, canonical string). Changes leaf order.
Cotree canonicalize(const Cotree& t);
/// Isomorphism-invariant key; parses back to an equivalent cotree.
std::string canonical_string(const Cotree& t);

/// Swaps every union/join label. The result is still normalized.
Cotree complement(const Cotree& t);

Graph to_graph(const Cotree& t);

struct NotCograph {
  /// Vertices (in the input labelling) that induce a P4, in path order.
  std::array<int, 4> witness;
};

std::variant<Cotree, NotCograph> from_graph(const Graph& g);

enum class BagKind { J, U };

struct Bag {
  int id = 0;
  BagKind kind = BagKind::J;
  int size = 0;    // t
  int degree = 0;  // p, shared by every member
  std::vector<int> members;
};

/// Sibling-leaf groups of a normalized cotree, in preorder of their parent.
struct BagRepresentation {
  std::vector<Bag> bags;
  /// z(i, j): members of bag i are adjacent to members of bag j. The
  /// diagonal is false and carries no meaning.
  Adjacency linked;

  int width() const { return static_cast<int>(bags.size()); }
};

BagRepresentation bags(const Cotree& t);

}  // namespace qspec
