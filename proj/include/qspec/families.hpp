#pragma once

#include "qspec/cotree.hpp"
#include "qspec/graph.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

namespace qspec {

namespace family {

/// K_n
struct Complete {
  int n = 1;
  static constexpr std::string_view name = "Complete";
  static constexpr std::array<std::string_view, 1> keys{"n"};
  auto tie() { return std::tie(n); }
  friend bool operator==(const Complete&, const Complete&) = default;
};

/// complement of K_n
struct Empty {
  int n = 1;
  static constexpr std::string_view name = "Empty";
  static constexpr std::array<std::string_view, 1> keys{"n"};
  auto tie() { return std::tie(n); }
  friend bool operator==(const Empty&, const Empty&) = default;
};

/// K_a + Kbar_b
struct CompleteSplit {
  int a = 1, b = 1;
  static constexpr std::string_view name = "CompleteSplit";
  static constexpr std::array<std::string_view, 2> keys{"a", "b"};
  auto tie() { return std::tie(a, b); }
  friend bool operator==(const CompleteSplit&, const CompleteSplit&) = default;
};

/// Kbar_a + Kbar_b
struct BipartiteJoin {
  int a = 1, b = 1;
  static constexpr std::string_view name = "BipartiteJoin";
  static constexpr std::array<std::string_view, 2> keys{"a", "b"};
  auto tie() { return std::tie(a, b); }
  friend bool operator==(const BipartiteJoin&, const BipartiteJoin&) = default;
};

/// K_c + (K_a u K_b)
struct CoreUnion {
  int c = 1, a = 1, b = 1;
  static constexpr std::string_view name = "CoreUnion";
  static constexpr std::array<std::string_view, 3> keys{"c", "a", "b"};
  auto tie() { return std::tie(c, a, b); }
  friend bool operator==(const CoreUnion&, const CoreUnion&) = default;
};

/// K_c + t K_a
struct CoreSatellite {
  int c = 1, t = 1, a = 1;
  static constexpr std::string_view name = "CoreSatellite";
  static constexpr std::array<std::string_view, 3> keys{"c", "t", "a"};
  auto tie() { return std::tie(c, t, a); }
  friend bool operator==(const CoreSatellite&, const CoreSatellite&) = default;
};

struct Satellite {
  int count = 1;  // a_i
  int order = 1;  // n_i
  friend bool operator==(const Satellite&, const Satellite&) = default;
};

/// K_n0 + (a_1 K_n1 u ... u a_p K_np), the n_i pairwise distinct.
struct GeneralizedCoreSatellite {
  int n0 = 1;
  std::vector<Satellite> satellites;
  static constexpr std::string_view name = "GeneralizedCoreSatellite";
  friend bool operator==(const GeneralizedCoreSatellite&, const GeneralizedCoreSatellite&) = default;
};

/// K_1 + t K_a
struct Windmill {
  int t = 1, a = 1;
  static constexpr std::string_view name = "Windmill";
  static constexpr std::array<std::string_view, 2> keys{"t", "a"};
  auto tie() { return std::tie(t, a); }
  friend bool operator==(const Windmill&, const Windmill&) = default;
};

/// Kbar_a u p K_b
struct H1 {
  int a = 1, b = 2, p = 1;
  static constexpr std::string_view name = "H1";
  static constexpr std::array<std::string_view, 3> keys{"a", "b", "p"};
  auto tie() { return std::tie(a, b, p); }
  friend bool operator==(const H1&, const H1&) = default;
};

/// p (K_a + Kbar_b)
struct H2 {
  int a = 2, b = 2, p = 2;
  static constexpr std::string_view name = "H2";
  static constexpr std::array<std::string_view, 3> keys{"a", "b", "p"};
  auto tie() { return std::tie(a, b, p); }
  friend bool operator==(const H2&, const H2&) = default;
};

/// p (K_1 + Kbar_b)
struct H2p {
  int b = 2, p = 2;
  static constexpr std::string_view name = "H2p";
  static constexpr std::array<std::string_view, 2> keys{"b", "p"};
  auto tie() { return std::tie(b, p); }
  friend bool operator==(const H2p&, const H2p&) = default;
};

/// Kbar_p1 u p2 (K_1 + Kbar_b)
struct H2pp {
  int b = 2, p1 = 1, p2 = 2;
  static constexpr std::string_view name = "H2pp";
  static constexpr std::array<std::string_view, 3> keys{"b", "p1", "p2"};
  auto tie() { return std::tie(b, p1, p2); }
  friend bool operator==(const H2pp&, const H2pp&) = default;
};

/// p (K_s + (K_a1 u K_a2))
struct H3 {
  int s = 1, a1 = 2, a2 = 1, p = 2;
  static constexpr std::string_view name = "H3";
  static constexpr std::array<std::string_view, 4> keys{"s", "a1", "a2", "p"};
  auto tie() { return std::tie(s, a1, a2, p); }
  friend bool operator==(const H3&, const H3&) = default;
};

/// p1 K_a u p2 (K_1 + Kbar_{2a-3})
struct H4 {
  int a = 2, p1 = 1, p2 = 1;
  static constexpr std::string_view name = "H4";
  static constexpr std::array<std::string_view, 3> keys{"a", "p1", "p2"};
  auto tie() { return std::tie(a, p1, p2); }
  friend bool operator==(const H4&, const H4&) = default;
};

/// H4 u Kbar_p3
struct H5 {
  int a = 2, p1 = 1, p2 = 1, p3 = 1;
  static constexpr std::string_view name = "H5";
  static constexpr std::array<std::string_view, 4> keys{"a", "p1", "p2", "p3"};
  auto tie() { return std::tie(a, p1, p2, p3); }
  friend bool operator==(const H5&, const H5&) = default;
};

/// p1 (K_{2s-1} + Kbar_{3s}) u p2 K_{4s-1} u p3 K_{(s+1)/2}, s odd
struct H6 {
  int s = 1, p1 = 1, p2 = 1, p3 = 1;
  static constexpr std::string_view name = "H6";
  static constexpr std::array<std::string_view, 4> keys{"s", "p1", "p2", "p3"};
  auto tie() { return std::tie(s, p1, p2, p3); }
  friend bool operator==(const H6&, const H6&) = default;
};

/// p1 (K_s + (K_{s+1} u K_{s+2})) u p2 K_{(5s+4)/2} u p3 K_{s+1}, s even
struct H7 {
  int s = 2, p1 = 1, p2 = 1, p3 = 1;
  static constexpr std::string_view name = "H7";
  static constexpr std::array<std::string_view, 4> keys{"s", "p1", "p2", "p3"};
  auto tie() { return std::tie(s, p1, p2, p3); }
  friend bool operator==(const H7&, const H7&) = default;
};

/// p1 (K_s + 2 K_s) u p2 K_{5s/2} u p3 K_s, s even
struct H8 {
  int s = 2, p1 = 1, p2 = 1, p3 = 1;
  static constexpr std::string_view name = "H8";
  static constexpr std::array<std::string_view, 4> keys{"s", "p1", "p2", "p3"};
  auto tie() { return std::tie(s, p1, p2, p3); }
  friend bool operator==(const H8&, const H8&) = default;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Complete, family::Empty, family::CompleteSplit, family::BipartiteJoin, family::CoreUnion,
                 family::CoreSatellite, family::GeneralizedCoreSatellite, family::Windmill, family::H1, family::H2,
                 family::H2p, family::H2pp, family::H3, family::H4, family::H5, family::H6, family::H7, family::H8>;

/// Invalid family parameters; the message names the violated condition.
class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string_view family_name(const FamilySpec& spec);
/// Throws FamilyError when a parameter constraint fails.
void validate(const FamilySpec& spec);
bool is_valid(const FamilySpec& spec);

/// Named integer parameters in declaration order (empty for
/// GeneralizedCoreSatellite, whose satellites are not scalar).
std::vector<std::pair<std::string, int>> parameters(const FamilySpec& spec);
/// Builds a scalar-parameter spec by family name; missing keys throw.
FamilySpec make_family(std::string_view name, const std::vector<std::pair<std::string, int>>& params);
/// Scalar parameter keys of a named family; throws FamilyError on unknown names.
std::vector<std::string> parameter_keys(std::string_view name);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);
FamilySpec parse_family(const std::string& json_text);

struct FamilyBuild {
  Cotree tree;  // normalized, canonical child order
  Graph graph;  // to_graph(tree)
  std::string tag;
};

FamilyBuild build(const FamilySpec& spec);

/// Closed-form main Q-eigenvalues (ascending, distinct) where one is known.
std::optional<std::vector<double>> expected_mains(const FamilySpec& spec);

}  // namespace qspec
