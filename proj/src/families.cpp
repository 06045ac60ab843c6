#include "qspec/families.hpp"

#include "qspec/oracle.hpp"
#include "qspec/spectra.hpp"

#include <algorithm>
#include <set>

namespace qspec {

namespace {

template <typename T>
concept ScalarFamily = requires(T t) {
  T::keys;
  t.tie();
};

template <typename T>
std::vector<std::pair<std::string, int>> scalar_params(T spec) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  std::apply([&](auto&... field) { ((out.emplace_back(std::string(T::keys[i++]), field)), ...); }, spec.tie());
  return out;
}

template <typename T>
T assign_params(const std::vector<std::pair<std::string, int>>& params) {
  T spec;
  std::size_t i = 0;
  std::apply(
      [&](auto&... field) {
        (
            [&](int& f) {
              const auto key = T::keys[i++];
              auto it = std::find_if(params.begin(), params.end(), [&](const auto& kv) { return kv.first == key; });
              if (it == params.end())
                throw FamilyError(std::string(T::name) + ": missing parameter '" + std::string(key) + "'");
              f = it->second;
            }(field),
            ...);
      },
      spec.tie());
  for (const auto& [key, value] : params)
    if (std::find(T::keys.begin(), T::keys.end(), key) == T::keys.end())
      throw FamilyError(std::string(T::name) + ": unknown parameter '" + key + "'");
  return spec;
}

template <typename F>
void for_each_alternative(F&& f) {
  [&]<std::size_t... I>(std::index_sequence<I...>) {
    (f(std::variant_alternative_t<I, FamilySpec>{}), ...);
  }(std::make_index_sequence<std::variant_size_v<FamilySpec>>{});
}

void require(bool ok, std::string_view family, const char* clause) {
  if (!ok) throw FamilyError(std::string(family) + ": requires " + clause);
}

// Cotree construction helpers.
Cotree K(int n) {
  if (n == 1) return Cotree::leaf();
  return Cotree::node(Cotree::Kind::Join, std::vector<Cotree>(n));
}

Cotree E(int n) {
  if (n == 1) return Cotree::leaf();
  return Cotree::node(Cotree::Kind::Union, std::vector<Cotree>(n));
}

void append(std::vector<Cotree>& out, int copies, const Cotree& t) {
  for (int i = 0; i < copies; ++i) out.push_back(t);
}

std::vector<Cotree> leaves(int n) { return std::vector<Cotree>(n); }

Cotree J(std::vector<Cotree> kids) { return Cotree::node(Cotree::Kind::Join, std::move(kids)); }
Cotree U(std::vector<Cotree> kids) { return Cotree::node(Cotree::Kind::Union, std::move(kids)); }

// K_a + Kbar_b
Cotree complete_split(int a, int b) {
  auto kids = leaves(a);
  kids.push_back(E(b));
  return J(std::move(kids));
}

// K_c + (K_a u K_b)
Cotree core_union(int c, int a, int b) {
  auto kids = leaves(c);
  kids.push_back(U({K(a), K(b)}));
  return J(std::move(kids));
}

// K_c + t K_a
Cotree core_satellite(int c, int t, int a) {
  std::vector<Cotree> sats;
  append(sats, t, K(a));
  auto kids = leaves(c);
  kids.push_back(U(std::move(sats)));
  return J(std::move(kids));
}

Cotree star_block(int b) { return complete_split(1, b); }

}  // namespace

std::string_view family_name(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return std::decay_t<decltype(s)>::name; }, spec);
}

std::vector<std::string> parameter_keys(std::string_view name) {
  std::optional<std::vector<std::string>> out;
  for_each_alternative([&](auto alt) {
    using T = decltype(alt);
    if (T::name != name) return;
    std::vector<std::string> keys;
    if constexpr (ScalarFamily<T>)
      for (auto k : T::keys) keys.emplace_back(k);
    out = std::move(keys);
  });
  if (!out) throw FamilyError("unknown family '" + std::string(name) + "'");
  return *out;
}

std::vector<std::pair<std::string, int>> parameters(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::vector<std::pair<std::string, int>> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (ScalarFamily<T>)
          return scalar_params(s);
        else
          return {{"n0", s.n0}};
      },
      spec);
}

FamilySpec make_family(std::string_view name, const std::vector<std::pair<std::string, int>>& params) {
  std::optional<FamilySpec> out;
  for_each_alternative([&](auto alt) {
    using T = decltype(alt);
    if (T::name != name) return;
    if constexpr (ScalarFamily<T>)
      out = assign_params<T>(params);
    else
      throw FamilyError(std::string(T::name) + " needs a satellite list");
  });
  if (!out) throw FamilyError("unknown family '" + std::string(name) + "'");
  return *out;
}

void validate(const FamilySpec& spec) {
  using namespace family;
  const auto name = family_name(spec);
  for (const auto& [key, value] : parameters(spec))
    if (value < 1) throw FamilyError(std::string(name) + ": requires " + key + " >= 1");

  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GeneralizedCoreSatellite>) {
          require(!s.satellites.empty(), name, "at least one satellite class");
          std::set<int> orders;
          for (const auto& sat : s.satellites) {
            require(sat.count >= 1 && sat.order >= 1, name, "satellite count and order >= 1");
            require(orders.insert(sat.order).second, name, "pairwise distinct satellite orders");
          }
        } else if constexpr (std::is_same_v<T, H1>) {
          require(s.b >= 2, name, "b >= 2");
        } else if constexpr (std::is_same_v<T, H2>) {
          require(s.b >= 2, name, "b >= 2");
          require(s.p >= 2, name, "p >= 2");
        } else if constexpr (std::is_same_v<T, H2p>) {
          require(s.b >= 2, name, "b >= 2");
          require(s.p >= 2, name, "p >= 2");
        } else if constexpr (std::is_same_v<T, H2pp>) {
          require(s.b >= 2, name, "b >= 2");
          require(s.p1 >= 2 || s.p2 >= 2, name, "p1 >= 2 or p2 >= 2");
        } else if constexpr (std::is_same_v<T, H3>) {
          require(s.p >= 2, name, "p >= 2");
          require(s.a1 >= 2 || s.a2 >= 2, name, "a1 >= 2 or a2 >= 2");
        } else if constexpr (std::is_same_v<T, H4> || std::is_same_v<T, H5>) {
          require(s.a >= 2, name, "a >= 2");
        } else if constexpr (std::is_same_v<T, H6>) {
          require(s.s % 2 == 1, name, "s odd");
        } else if constexpr (std::is_same_v<T, H7> || std::is_same_v<T, H8>) {
          require(s.s % 2 == 0, name, "s even");
        }
      },
      spec);
}

bool is_valid(const FamilySpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const FamilyError&) {
    return false;
  }
}

nlohmann::json to_json(const FamilySpec& spec) {
  nlohmann::json params = nlohmann::json::object();
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (ScalarFamily<T>) {
          for (const auto& [k, v] : scalar_params(s)) params[k] = v;
        } else {
          params["n0"] = s.n0;
          params["satellites"] = nlohmann::json::array();
          for (const auto& sat : s.satellites) params["satellites"].push_back({sat.count, sat.order});
        }
      },
      spec);
  return {{"family", std::string(family_name(spec))}, {"params", params}};
}

FamilySpec family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw FamilyError("family spec needs a string \"family\" field");
  const std::string name = j["family"].get<std::string>();
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  if (!params.is_object()) throw FamilyError("\"params\" must be an object");

  auto as_int = [&](const std::string& key, const nlohmann::json& v) {
    if (!v.is_number_integer()) throw FamilyError(name + ": parameter '" + key + "' must be an integer");
    return v.get<int>();
  };

  if (name == family::GeneralizedCoreSatellite::name) {
    family::GeneralizedCoreSatellite s;
    if (!params.contains("n0")) throw FamilyError(name + ": missing parameter 'n0'");
    s.n0 = as_int("n0", params["n0"]);
    const auto& sats = params.value("satellites", nlohmann::json::array());
    if (!sats.is_array()) throw FamilyError(name + ": 'satellites' must be an array of [count, order]");
    for (const auto& pair : sats) {
      if (!pair.is_array() || pair.size() != 2)
        throw FamilyError(name + ": each satellite must be a [count, order] pair");
      s.satellites.push_back({as_int("count", pair[0]), as_int("order", pair[1])});
    }
    for (const auto& [key, value] : params.items())
      if (key != "n0" && key != "satellites") throw FamilyError(name + ": unknown parameter '" + key + "'");
    validate(s);
    return s;
  }

  std::vector<std::pair<std::string, int>> kv;
  for (const auto& [key, value] : params.items()) kv.emplace_back(key, as_int(key, value));
  FamilySpec spec = make_family(name, kv);
  validate(spec);
  return spec;
}

FamilySpec parse_family(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FamilyError(std::string("malformed family JSON: ") + e.what());
  }
  return family_from_json(j);
}

FamilyBuild build(const FamilySpec& spec) {
  using namespace family;
  validate(spec);
  FamilyBuild out;
  out.tag = std::string(family_name(spec));
  Cotree raw = std::visit(
      [](const auto& s) -> Cotree {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Complete>) {
          return K(s.n);
        } else if constexpr (std::is_same_v<T, Empty>) {
          return E(s.n);
        } else if constexpr (std::is_same_v<T, CompleteSplit>) {
          return complete_split(s.a, s.b);
        } else if constexpr (std::is_same_v<T, BipartiteJoin>) {
          return J({E(s.a), E(s.b)});
        } else if constexpr (std::is_same_v<T, CoreUnion>) {
          return core_union(s.c, s.a, s.b);
        } else if constexpr (std::is_same_v<T, CoreSatellite>) {
          return core_satellite(s.c, s.t, s.a);
        } else if constexpr (std::is_same_v<T, GeneralizedCoreSatellite>) {
          std::vector<Cotree> sats;
          for (const auto& sat : s.satellites) append(sats, sat.count, K(sat.order));
          auto kids = leaves(s.n0);
          kids.push_back(U(std::move(sats)));
          return J(std::move(kids));
        } else if constexpr (std::is_same_v<T, Windmill>) {
          return core_satellite(1, s.t, s.a);
        } else if constexpr (std::is_same_v<T, H1>) {
          std::vector<Cotree> kids{E(s.a)};
          append(kids, s.p, K(s.b));
          return U(std::move(kids));
        } else if constexpr (std::is_same_v<T, H2>) {
          std::vector<Cotree> kids;
          append(kids, s.p, complete_split(s.a, s.b));
          return U(std::move(kids));
        } else if constexpr (std::is_same_v<T, H2p>) {
          std::vector<Cotree> kids;
          append(kids, s.p, star_block(s.b));
          return U(std::move(kids));
        } else if constexpr (std::is_same_v<T, H2pp>) {
          std::vector<Cotree> kids{E(s.p1)};
          append(kids, s.p2, star_block(s.b));
          return U(std::move(kids));
        } else if constexpr (std::is_same_v<T, H3>) {
          std::vector<Cotree> kids;
          append(kids, s.p, core_union(s.s, s.a1, s.a2));
          return U(std::move(kids));
        } else if constexpr (std::is_same_v<T, H4> || std::is_same_v<T, H5>) {
          std::vector<Cotree> kids;
          append(kids, s.p1, K(s.a));
          append(kids, s.p2, star_block(2 * s.a - 3));
          if constexpr (std::is_same_v<T, H5>) kids.push_back(E(s.p3));
          return U(std::move(kids));
        } else if constexpr (std::is_same_v<T, H6>) {
          std::vector<Cotree> kids;
          append(kids, s.p1, complete_split(2 * s.s - 1, 3 * s.s));
          append(kids, s.p2, K(4 * s.s - 1));
          append(kids, s.p3, K((s.s + 1) / 2));
          return U(std::move(kids));
        } else if constexpr (std::is_same_v<T, H7>) {
          std::vector<Cotree> kids;
          append(kids, s.p1, core_union(s.s, s.s + 1, s.s + 2));
          append(kids, s.p2, K((5 * s.s + 4) / 2));
          append(kids, s.p3, K(s.s + 1));
          return U(std::move(kids));
        } else {
          static_assert(std::is_same_v<T, H8>);
          std::vector<Cotree> kids;
          append(kids, s.p1, core_satellite(s.s, 2, s.s));
          append(kids, s.p2, K(5 * s.s / 2));
          append(kids, s.p3, K(s.s));
          return U(std::move(kids));
        }
      },
      spec);
  out.tree = canonicalize(normalize(raw));
  out.graph = to_graph(out.tree);
  return out;
}

namespace {

std::vector<double> sorted_distinct(std::vector<double> v) { return merge_values(std::move(v), {}, 1e-9); }

std::vector<double> roots(const QuadraticRoots& r) { return sorted_distinct({r.smaller, r.larger}); }

// Mains of the connected block K_c + t K_a, covering the complete case t = 1.
std::vector<double> core_satellite_mains(int c, int t, int a) {
  if (t == 1) return {2.0 * (c + a) - 2};
  return roots(mains_core_satellite(c, t, a));
}

std::vector<double> core_union_mains(int c, int a, int b) {
  if (a == b) return core_satellite_mains(c, 2, a);
  return roots(mains_core_union(c, a, b).mains);
}

std::vector<double> complete_split_mains(int a, int b) {
  if (b == 1) return {2.0 * a};  // K_{a+1}
  return roots(mains_complete_split(a, b));
}

}  // namespace

std::optional<std::vector<double>> expected_mains(const FamilySpec& spec) {
  using namespace family;
  validate(spec);
  return std::visit(
      [](const auto& s) -> std::optional<std::vector<double>> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Complete>) {
          return std::vector<double>{2.0 * s.n - 2};
        } else if constexpr (std::is_same_v<T, Empty>) {
          return std::vector<double>{0.0};
        } else if constexpr (std::is_same_v<T, CompleteSplit>) {
          return complete_split_mains(s.a, s.b);
        } else if constexpr (std::is_same_v<T, BipartiteJoin>) {
          if (s.a == s.b) return std::vector<double>{2.0 * s.a};
          return std::vector<double>{0.0, double(s.a + s.b)};
        } else if constexpr (std::is_same_v<T, CoreUnion>) {
          return core_union_mains(s.c, s.a, s.b);
        } else if constexpr (std::is_same_v<T, CoreSatellite>) {
          return core_satellite_mains(s.c, s.t, s.a);
        } else if constexpr (std::is_same_v<T, Windmill>) {
          return core_satellite_mains(1, s.t, s.a);
        } else if constexpr (std::is_same_v<T, GeneralizedCoreSatellite>) {
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, H1>) {
          return std::vector<double>{0.0, 2.0 * s.b - 2};
        } else if constexpr (std::is_same_v<T, H2>) {
          if (s.a == 1) return std::vector<double>{0.0, 1.0 + s.b};
          return complete_split_mains(s.a, s.b);
        } else if constexpr (std::is_same_v<T, H2p> || std::is_same_v<T, H2pp>) {
          return std::vector<double>{0.0, 1.0 + s.b};
        } else if constexpr (std::is_same_v<T, H3>) {
          return core_union_mains(s.s, s.a1, s.a2);
        } else if constexpr (std::is_same_v<T, H4> || std::is_same_v<T, H5>) {
          return std::vector<double>{0.0, 2.0 * s.a - 2};
        } else if constexpr (std::is_same_v<T, H6>) {
          return sorted_distinct({8.0 * s.s - 4, s.s - 1.0});
        } else if constexpr (std::is_same_v<T, H7>) {
          return sorted_distinct({5.0 * s.s + 2, 2.0 * s.s});
        } else {
          static_assert(std::is_same_v<T, H8>);
          return sorted_distinct({5.0 * s.s - 2, 2.0 * s.s - 2});
        }
      },
      spec);
}

}  // namespace qspec
