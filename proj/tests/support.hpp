#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "turan/construction.hpp"
#include "turan/graph.hpp"
#include "turan/palette.hpp"

namespace testsupport {

inline std::string data_path(const std::string& rel) {
  return std::string(TURAN_DATA_DIR) + "/" + rel;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Named vertices of the catalog: a,b,c,d,x,y,z -> 0..6.
constexpr int A = 0, B = 1, C = 2, D = 3, X = 4, Y = 5, Z = 6;

// The explicit spades certificate for f7star_hat: sigma = (a,y,z,b,x,c,d),
// i* = 6, pair classes E1..E6.
inline turan::PaletteCertificate golden_f7star_hat(turan::PropertyKind kind) {
  using turan::Color;
  turan::PaletteCertificate cert;
  cert.kind = kind;
  cert.ordering = {A, Y, Z, B, X, C, D};
  cert.istar = 6;
  auto paint = [&](std::initializer_list<std::pair<int, int>> pairs, Color c) {
    for (auto [u, v] : pairs)
      cert.coloring.emplace_back(turan::Pair{std::min(u, v), std::max(u, v)}, c);
  };
  paint({{A, D}, {Y, D}, {X, D}}, Color::Red);
  paint({{A, Z}, {A, X}, {A, C}, {Y, X}, {Z, C}, {X, C}}, Color::Blue);
  paint({{A, Y}, {A, B}, {Y, Z}, {Y, B}, {Z, B}}, Color::Green);
  paint({{Z, D}, {C, D}}, Color::Violet);
  paint({{Y, C}, {B, X}, {B, C}, {Z, X}}, Color::Cyan);
  paint({{B, D}}, Color::Black);
  std::sort(cert.coloring.begin(), cert.coloring.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cert;
}

// Vanishing certificate of the odd wheel on t = 2m+1 vertices: hub first,
// then the odd rim vertices ascending, then the even ones; hub-odd pairs
// red, hub-even green, rim pairs blue.
inline turan::PaletteCertificate golden_wheel_vanishing(int t) {
  using turan::Color;
  const int m = (t - 1) / 2;
  turan::PaletteCertificate cert;
  cert.kind = turan::PropertyKind::Vanishing;
  cert.ordering.push_back(0);
  for (int i = 1; i <= 2 * m - 1; i += 2) cert.ordering.push_back(i);
  for (int i = 2; i <= 2 * m; i += 2) cert.ordering.push_back(i);
  for (int i = 1; i < t; ++i)
    cert.coloring.emplace_back(turan::Pair{0, i},
                               i % 2 == 1 ? Color::Red : Color::Green);
  for (int i = 1; i < t - 1; ++i)
    cert.coloring.emplace_back(turan::Pair{i, i + 1}, Color::Blue);
  cert.coloring.emplace_back(turan::Pair{1, t - 1}, Color::Blue);
  std::sort(cert.coloring.begin(), cert.coloring.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cert;
}

// Spades certificate of the even wheel on t = 2m+2 vertices with i* = 2m+1.
inline turan::PaletteCertificate golden_wheel_spades(int t) {
  using turan::Color;
  const int m = (t - 2) / 2;
  turan::PaletteCertificate cert;
  cert.kind = turan::PropertyKind::Spades;
  cert.istar = 2 * m + 1;
  cert.ordering.push_back(0);
  for (int i = 1; i <= 2 * m - 1; i += 2) cert.ordering.push_back(i);
  for (int i = 2; i <= 2 * m; i += 2) cert.ordering.push_back(i);
  cert.ordering.push_back(2 * m + 1);
  auto paint = [&](int u, int v, Color c) {
    cert.coloring.emplace_back(turan::Pair{std::min(u, v), std::max(u, v)}, c);
  };
  paint(0, 2 * m + 1, Color::Red);
  for (int j = 2; j <= 2 * m; j += 2) paint(0, j, Color::Blue);
  for (int i = 1; i <= 2 * m - 1; i += 2) paint(0, i, Color::Green);
  paint(2 * m, 2 * m + 1, Color::Violet);
  for (int ell = 2; ell <= m; ++ell) {
    paint(2 * ell - 3, 2 * ell - 2, Color::Cyan);
    paint(2 * ell - 2, 2 * ell - 1, Color::Cyan);
  }
  paint(2 * m - 1, 2 * m, Color::Cyan);
  paint(1, 2 * m + 1, Color::Black);
  std::sort(cert.coloring.begin(), cert.coloring.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cert;
}

// Seeded random 3-graph: each of the C(n,3) triples kept with the given
// per-mille probability.
inline turan::ThreeGraph random_graph(int n, int permille, uint64_t seed) {
  std::vector<turan::Triple> edges;
  uint64_t counter = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (turan::splitmix64_at(seed, counter++) % 1000 <
            static_cast<uint64_t>(permille))
          edges.push_back({i, j, k});
  return turan::ThreeGraph(n, edges);
}

// Random permutation of 0..n-1 from the pinned stream.
inline std::vector<int> random_permutation(int n, uint64_t seed) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = 0; i < n - 1; ++i) {
    int j = i + static_cast<int>(turan::splitmix64_at(seed, i) % (n - i));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

inline turan::ThreeGraph relabel(const turan::ThreeGraph& g,
                                 const std::vector<int>& perm) {
  std::vector<turan::Triple> edges;
  for (const auto& e : g.edges())
    edges.push_back({perm[e[0]], perm[e[1]], perm[e[2]]});
  return turan::ThreeGraph(g.vertex_count(), edges);
}

}  // namespace testsupport
