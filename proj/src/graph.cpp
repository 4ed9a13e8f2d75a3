#include "turan/graph.hpp"

#include <algorithm>
#include <numeric>

#include "turan/errors.hpp"

namespace turan {

ThreeGraph::ThreeGraph(int n, std::vector<Triple> edges) : n_(n) {
  if (n < 0) throw InvalidInput("vertex count must be non-negative");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2])
      throw InvalidInput("edge has a repeated vertex");
    if (e[0] < 0 || e[2] >= n)
      throw InvalidInput("edge vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool ThreeGraph::has_edge(const Triple& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<Pair> ThreeGraph::shadow() const {
  std::vector<Pair> pairs;
  pairs.reserve(edges_.size() * 3);
  for (const auto& e : edges_) {
    pairs.push_back({e[0], e[1]});
    pairs.push_back({e[0], e[2]});
    pairs.push_back({e[1], e[2]});
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<Pair> ThreeGraph::link(int v) const {
  if (v < 0 || v >= n_) throw InvalidInput("link: vertex out of range");
  std::vector<Pair> pairs;
  for (const auto& e : edges_) {
    if (e[0] == v) pairs.push_back({e[1], e[2]});
    else if (e[1] == v) pairs.push_back({e[0], e[2]});
    else if (e[2] == v) pairs.push_back({e[0], e[1]});
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

ThreeGraph ThreeGraph::blow_up(int t) const {
  if (t < 1) throw InvalidInput("blow_up: t must be at least 1");
  std::vector<Triple> out;
  out.reserve(edges_.size() * t * t * t);
  for (const auto& e : edges_)
    for (int a = 0; a < t; ++a)
      for (int b = 0; b < t; ++b)
        for (int c = 0; c < t; ++c)
          out.push_back({e[0] * t + a, e[1] * t + b, e[2] * t + c});
  return ThreeGraph(n_ * t, std::move(out));
}

ThreeGraph ThreeGraph::induced(std::vector<int> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<int> relabel(n_, -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n_) throw InvalidInput("induced: vertex out of range");
    relabel[v] = static_cast<int>(i);
  }
  std::vector<Triple> out;
  for (const auto& e : edges_) {
    if (relabel[e[0]] >= 0 && relabel[e[1]] >= 0 && relabel[e[2]] >= 0)
      out.push_back({relabel[e[0]], relabel[e[1]], relabel[e[2]]});
  }
  return ThreeGraph(static_cast<int>(vertices.size()), std::move(out));
}

std::vector<int> ThreeGraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_)
    for (int v : e) ++deg[v];
  return deg;
}

namespace {

bool extend_map(const ThreeGraph& host, const ThreeGraph& pattern,
                const std::vector<int>& host_deg, const std::vector<int>& pat_deg,
                const std::vector<int>& order, size_t depth,
                std::vector<int>& map, std::vector<char>& used) {
  if (depth == order.size()) return true;
  int pv = order[depth];
  for (int hv = 0; hv < host.vertex_count(); ++hv) {
    if (used[hv] || host_deg[hv] < pat_deg[pv]) continue;
    map[pv] = hv;
    bool ok = true;
    for (const auto& e : pattern.edges()) {
      int a = map[e[0]], b = map[e[1]], c = map[e[2]];
      if (a < 0 || b < 0 || c < 0) continue;
      Triple img{a, b, c};
      std::sort(img.begin(), img.end());
      if (!host.has_edge(img)) { ok = false; break; }
    }
    if (ok) {
      used[hv] = 1;
      if (extend_map(host, pattern, host_deg, pat_deg, order, depth + 1, map,
                     used))
        return true;
      used[hv] = 0;
    }
    map[pv] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_sub(const ThreeGraph& host,
                                             const ThreeGraph& pattern) {
  if (pattern.vertex_count() > 12)
    throw GuardExceeded("contains_sub: pattern exceeds 12 vertices");
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  if (pattern.edge_count() > host.edge_count()) return std::nullopt;

  // Assign high-degree pattern vertices first so edge checks kick in early.
  std::vector<int> order(pattern.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  const auto deg = pattern.degrees();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });

  std::vector<int> map(pattern.vertex_count(), -1);
  std::vector<char> used(host.vertex_count(), 0);
  if (extend_map(host, pattern, host.degrees(), deg, order, 0, map, used))
    return map;
  return std::nullopt;
}

namespace {

ThreeGraph make_wheel(int t) {
  if (t < 3) throw InvalidInput("wheel: t must be at least 3");
  std::vector<Triple> edges;
  for (int i = 1; i <= t - 1; ++i) {
    int next = (i == t - 1) ? 1 : i + 1;  // rim cycle on 1..t-1
    edges.push_back({0, i, next});
  }
  return ThreeGraph(t, std::move(edges));
}

ThreeGraph make_double_pyramid(int t) {
  if (t < 4) throw InvalidInput("double_pyramid: t must be at least 4");
  // apexes 0 and 1, rim vertices v_i -> i+1 for i in 1..t-1
  std::vector<Triple> edges;
  for (int i = 1; i <= t - 1; ++i) {
    int next = (i == t - 1) ? 1 : i + 1;
    edges.push_back({0, i + 1, next + 1});
    edges.push_back({1, i + 1, next + 1});
  }
  return ThreeGraph(t + 1, std::move(edges));
}

// a,b,c,d,x,y,z -> 0..6
constexpr int A = 0, B = 1, C = 2, D = 3, X = 4, Y = 5, Z = 6;

ThreeGraph make_k4minus() {
  return ThreeGraph(4, {{A, B, C}, {A, B, D}, {A, C, D}});
}

ThreeGraph make_fstar(int t) {
  // k4minus plus extra vertices whose links are the three disjoint perfect
  // matchings of the K4 shadow: x -> {ab, cd}, y -> {ac, bd}, z -> {ad, bc}.
  std::vector<Triple> edges{{A, B, C}, {A, B, D}, {A, C, D}};
  if (t >= 5) { edges.push_back({A, B, X}); edges.push_back({C, D, X}); }
  if (t >= 6) { edges.push_back({A, C, Y}); edges.push_back({B, D, Y}); }
  if (t >= 7) { edges.push_back({A, D, Z}); edges.push_back({B, C, Z}); }
  return ThreeGraph(t, std::move(edges));
}

ThreeGraph make_f7star_hat() {
  auto base = make_fstar(7);
  auto edges = base.edges();
  edges.push_back({X, Y, Z});
  return ThreeGraph(7, std::move(edges));
}

}  // namespace

ThreeGraph catalog(const std::string& name, std::optional<int> param) {
  auto need = [&](const char* what) -> int {
    if (!param) throw InvalidInput(std::string("catalog: ") + name +
                                   " requires a parameter (" + what + ")");
    return *param;
  };
  auto no_param = [&]() {
    if (param) throw InvalidInput("catalog: " + name + " takes no parameter");
  };
  if (name == "k4minus") { no_param(); return make_k4minus(); }
  if (name == "f5star") { no_param(); return make_fstar(5); }
  if (name == "f6star") { no_param(); return make_fstar(6); }
  if (name == "f7star") { no_param(); return make_fstar(7); }
  if (name == "f7star_hat") { no_param(); return make_f7star_hat(); }
  if (name == "single_edge") { no_param(); return ThreeGraph(3, {{0, 1, 2}}); }
  if (name == "wheel") return make_wheel(need("t"));
  if (name == "double_pyramid") return make_double_pyramid(need("t"));
  if (name == "edgeless") {
    int n = need("n");
    if (n < 0) throw InvalidInput("edgeless: n must be non-negative");
    return ThreeGraph(n, {});
  }
  throw InvalidInput("catalog: unknown name '" + name + "'");
}

ThreeGraph catalog_spec(const std::string& spec) {
  std::string s = spec;
  if (s.rfind("name:", 0) == 0) s = s.substr(5);
  auto colon = s.find(':');
  if (colon == std::string::npos) return catalog(s);
  std::string name = s.substr(0, colon);
  std::string arg = s.substr(colon + 1);
  try {
    size_t pos = 0;
    int value = std::stoi(arg, &pos);
    if (pos != arg.size()) throw std::invalid_argument(arg);
    return catalog(name, value);
  } catch (const std::logic_error&) {
    throw InvalidInput("catalog: bad parameter '" + arg + "' for " + name);
  }
}

std::vector<std::string> catalog_names() {
  return {"k4minus",     "f5star",         "f6star",      "f7star",
          "f7star_hat",  "single_edge",    "wheel:<t>",   "double_pyramid:<t>",
          "edgeless:<n>"};
}

}  // namespace turan
