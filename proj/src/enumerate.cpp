#include "qspec/enumerate.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace qspec {

namespace {

using Kind = Cotree::Kind;

class Generator {
 public:
  // Normalized cotrees on `size` leaves whose root has label `kind`.
  const std::vector<Cotree>& rooted(int size, Kind kind) {
    const auto key = std::pair{size, kind};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Candidate children: a leaf, or a tree of the other kind with at most
    // size-1 leaves, listed by increasing size.
    const Kind other = kind == Kind::Join ? Kind::Union : Kind::Join;
    std::vector<std::pair<int, const Cotree*>> pool;
    static const Cotree leaf = Cotree::leaf();
    pool.emplace_back(1, &leaf);
    for (int s = 2; s < size; ++s)
      for (const auto& t : rooted(s, other)) pool.emplace_back(s, &t);

    std::vector<Cotree> out;
    std::vector<const Cotree*> chosen;
    // Multisets as non-decreasing index sequences into the pool.
    auto pick = [&](auto&& self, std::size_t start, int remaining) -> void {
      if (remaining == 0) {
        std::vector<Cotree> kids;
        kids.reserve(chosen.size());
        for (const auto* c : chosen) kids.push_back(*c);
        out.push_back(Cotree::node(kind, std::move(kids)));
        return;
      }
      for (std::size_t i = start; i < pool.size() && pool[i].first <= remaining; ++i) {
        chosen.push_back(pool[i].second);
        self(self, i, remaining - pool[i].first);
        chosen.pop_back();
      }
    };
    pick(pick, 0, size);
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::map<std::pair<int, Kind>, std::vector<Cotree>> memo_;
};

}  // namespace

std::vector<Cotree> enumerate_cotrees(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::out_of_range("enumeration order must lie in 1.." + std::to_string(kMaxEnumerationOrder));
  std::map<std::string, Cotree> unique;
  if (n == 1) {
    unique.emplace(canonical_string(Cotree::leaf()), Cotree::leaf());
  } else {
    Generator gen;
    for (Kind kind : {Kind::Union, Kind::Join})
      for (const auto& t : gen.rooted(n, kind)) {
        Cotree c = canonicalize(t);
        unique.emplace(canonical_string(c), std::move(c));
      }
  }
  std::vector<Cotree> out;
  out.reserve(unique.size());
  for (auto& [key, tree] : unique) out.push_back(std::move(tree));
  return out;
}

EnumerationIndex enumerate_cographs(int n) {
  EnumerationIndex index;
  index.n = n;
  for (const auto& t : enumerate_cotrees(n)) index.keys.push_back(canonical_string(t));
  return index;
}

}  // namespace qspec
