#pragma once

#include "qspec/cotree.hpp"

#include <string>
#include <vector>

namespace qspec {

constexpr int kMaxEnumerationOrder = 11;

/// Canonical strings of every unlabeled cograph on n vertices, sorted.
struct EnumerationIndex {
  int n = 0;
  std::vector<std::string> keys;
  int count() const { return static_cast<int>(keys.size()); }
};

/// One canonical cotree per unlabeled cograph on n vertices, ordered by
/// canonical string. Throws std::out_of_range outside 1..kMaxEnumerationOrder.
std::vector<Cotree> enumerate_cotrees(int n);
EnumerationIndex enumerate_cographs(int n);

}  // namespace qspec
