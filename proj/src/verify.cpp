#include <algorithm>
#include <sstream>

#include "turan/errors.hpp"
#include "turan/palette.hpp"

namespace turan {

namespace {

std::string pattern_to_string(const Color* slot) {
  std::ostringstream os;
  os << "(" << to_string(slot[0]) << ", " << to_string(slot[1]) << ", "
     << to_string(slot[2]) << ")";
  return os.str();
}

}  // namespace

VerifyResult verify(const ThreeGraph& g, const PaletteCertificate& cert) {
  const int n = g.vertex_count();

  if (static_cast<int>(cert.ordering.size()) != n)
    throw InvalidInput("certificate ordering has wrong length");
  std::vector<int> pos(n, 0);  // 1-based position per vertex
  for (int p = 0; p < n; ++p) {
    int v = cert.ordering[p];
    if (v < 0 || v >= n || pos[v] != 0)
      throw InvalidInput("certificate ordering is not a permutation");
    pos[v] = p + 1;
  }

  if (requires_istar(cert.kind)) {
    if (!cert.istar) throw InvalidInput("certificate is missing istar");
    if (n == 0 ? *cert.istar != 0 : (*cert.istar < 1 || *cert.istar > n))
      throw InvalidInput("certificate istar out of range");
  } else if (cert.istar) {
    throw InvalidInput("certificate has istar but its kind takes none");
  }

  // Coloring domain must be exactly the shadow, colors from the palette.
  const auto pairs = g.shadow();
  if (cert.coloring.size() != pairs.size() ||
      !std::is_sorted(cert.coloring.begin(), cert.coloring.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; }))
    throw InvalidInput("certificate coloring domain differs from the shadow");
  const auto& pal = palette(cert.kind);
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (cert.coloring[i].first != pairs[i])
      throw InvalidInput("certificate coloring domain differs from the shadow");
    if (std::find(pal.begin(), pal.end(), cert.coloring[i].second) == pal.end())
      throw InvalidInput("certificate uses a color outside the palette");
  }

  const int istar = cert.istar.value_or(0);
  bool class_used[3] = {false, false, false};

  for (const auto& e : g.edges()) {
    // Arrange the edge by position: i < j < k.
    std::array<std::pair<int, int>, 3> by_pos{
        std::pair{pos[e[0]], e[0]}, {pos[e[1]], e[1]}, {pos[e[2]], e[2]}};
    std::sort(by_pos.begin(), by_pos.end());
    const int vi = by_pos[0].second, vj = by_pos[1].second, vk = by_pos[2].second;
    auto color_at = [&](int a, int b) {
      Pair p{std::min(a, b), std::max(a, b)};
      return *cert.color_of(p);
    };
    const Color found[3] = {color_at(vi, vj), color_at(vj, vk), color_at(vi, vk)};
    const auto patterns = allowed_patterns(cert.kind, by_pos[0].first,
                                           by_pos[1].first, by_pos[2].first, istar);
    const Pattern* match = nullptr;
    for (const auto& p : patterns) {
      if (p.slot[0] == found[0] && p.slot[1] == found[1] && p.slot[2] == found[2]) {
        match = &p;
        break;
      }
    }
    if (!match) {
      VerifyResult r;
      r.accepted = false;
      r.violating_edge = e;
      r.found_pattern = pattern_to_string(found);
      std::ostringstream expected;
      for (size_t i = 0; i < patterns.size(); ++i) {
        if (i) expected << " or ";
        expected << pattern_to_string(patterns[i].slot);
      }
      r.expected_patterns = expected.str();
      std::ostringstream reason;
      reason << "edge {" << e[0] << "," << e[1] << "," << e[2]
             << "} at positions (" << by_pos[0].first << "," << by_pos[1].first
             << "," << by_pos[2].first << ") is colored " << r.found_pattern
             << " but only " << r.expected_patterns << " is permitted";
      r.reason = reason.str();
      return r;
    }
    class_used[match->cls] = true;
  }

  if (cert.kind == PropertyKind::SpadesStar) {
    for (int c = 0; c < 3; ++c) {
      if (!class_used[c]) {
        VerifyResult r;
        r.accepted = false;
        std::ostringstream reason;
        reason << "pattern class " << (c + 1)
               << " is used by no edge; all three classes must be non-empty";
        r.reason = reason.str();
        return r;
      }
    }
  }

  return VerifyResult{true, "", std::nullopt, "", ""};
}

}  // namespace turan
