#include "turan/palette.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "turan/errors.hpp"

namespace turan {

const char* to_string(Color c) {
  switch (c) {
    case Color::Red: return "red";
    case Color::Blue: return "blue";
    case Color::Green: return "green";
    case Color::Violet: return "violet";
    case Color::Cyan: return "cyan";
    case Color::Black: return "black";
  }
  return "?";
}

const char* to_string(PropertyKind k) {
  switch (k) {
    case PropertyKind::Vanishing: return "vanishing";
    case PropertyKind::Clubs: return "clubs";
    case PropertyKind::Spades: return "spades";
    case PropertyKind::SpadesStar: return "spades-star";
    case PropertyKind::FiveColor: return "five-color";
  }
  return "?";
}

std::optional<Color> color_from_string(const std::string& s) {
  for (Color c : {Color::Red, Color::Blue, Color::Green, Color::Violet,
                  Color::Cyan, Color::Black})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

std::optional<PropertyKind> kind_from_string(const std::string& s) {
  for (PropertyKind k : kAllKinds)
    if (s == to_string(k)) return k;
  if (s == "spades_star") return PropertyKind::SpadesStar;
  if (s == "five_color") return PropertyKind::FiveColor;
  return std::nullopt;
}

const std::vector<Color>& palette(PropertyKind k) {
  static const std::vector<Color> three{Color::Red, Color::Blue, Color::Green};
  static const std::vector<Color> two{Color::Red, Color::Blue};
  static const std::vector<Color> six{Color::Red,    Color::Blue, Color::Green,
                                      Color::Violet, Color::Cyan, Color::Black};
  static const std::vector<Color> five{Color::Red, Color::Blue, Color::Green,
                                       Color::Violet, Color::Cyan};
  switch (k) {
    case PropertyKind::Vanishing: return three;
    case PropertyKind::Clubs: return two;
    case PropertyKind::Spades:
    case PropertyKind::SpadesStar: return six;
    case PropertyKind::FiveColor: return five;
  }
  return six;
}

bool requires_istar(PropertyKind k) {
  return k == PropertyKind::Spades || k == PropertyKind::SpadesStar;
}

std::vector<Pattern> allowed_patterns(PropertyKind kind, int i, int j, int k,
                                      int istar) {
  std::vector<Pattern> out;
  switch (kind) {
    case PropertyKind::Vanishing:
      out.push_back({{Color::Red, Color::Blue, Color::Green}, 0});
      break;
    case PropertyKind::Clubs:
      out.push_back({{Color::Red, Color::Red, Color::Blue}, 0});
      out.push_back({{Color::Blue, Color::Blue, Color::Red}, 0});
      break;
    case PropertyKind::FiveColor:
      out.push_back({{Color::Blue, Color::Violet, Color::Red}, 0});
      out.push_back({{Color::Green, Color::Cyan, Color::Blue}, 0});
      break;
    case PropertyKind::Spades:
    case PropertyKind::SpadesStar:
      out.push_back({{Color::Blue, Color::Violet, Color::Red}, 0});
      if (k <= istar)
        out.push_back({{Color::Green, Color::Cyan, Color::Blue}, 1});
      if (j < istar && istar < k)
        out.push_back({{Color::Green, Color::Black, Color::Red}, 2});
      break;
  }
  (void)i;
  return out;
}

std::optional<Color> PaletteCertificate::color_of(const Pair& p) const {
  auto it = std::lower_bound(
      coloring.begin(), coloring.end(), p,
      [](const std::pair<Pair, Color>& a, const Pair& b) { return a.first < b; });
  if (it != coloring.end() && it->first == p) return it->second;
  return std::nullopt;
}

DStar d_star() {
  auto g = [](double x) { return (2.0 - x) * (2.0 - x) * (2.0 - x) - 27.0 * x; };
  double lo = 0.2, hi = 0.25;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) lo = mid; else hi = mid;
    if (hi - lo < 1e-16) break;
  }
  DStar d;
  d.value = 0.5 * (lo + hi);
  d.residual = std::fabs(g(d.value));
  return d;
}

PaletteCertificate lift_certificate(const ThreeGraph& base,
                                    const PaletteCertificate& cert, int t) {
  if (t < 1) throw InvalidInput("lift_certificate: t must be at least 1");
  const int n = base.vertex_count();
  PaletteCertificate out;
  out.kind = cert.kind;
  out.ordering.reserve(static_cast<size_t>(n) * t);
  for (int v : cert.ordering)
    for (int c = 0; c < t; ++c) out.ordering.push_back(v * t + c);
  if (cert.istar) out.istar = *cert.istar * t;

  const auto pairs = base.blow_up(t).shadow();
  out.coloring.reserve(pairs.size());
  for (const auto& p : pairs) {
    Pair orig{p[0] / t, p[1] / t};
    auto col = cert.color_of(orig);
    if (!col)
      throw InvalidInput("lift_certificate: pair missing from base coloring");
    out.coloring.emplace_back(p, *col);
  }
  return out;
}

PaletteCertificate restrict_certificate(const ThreeGraph& base,
                                        const PaletteCertificate& cert,
                                        const std::vector<int>& vertices) {
  std::vector<int> kept = vertices;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<int> relabel(base.vertex_count(), -1);
  for (size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] < 0 || kept[i] >= base.vertex_count())
      throw InvalidInput("restrict_certificate: vertex out of range");
    relabel[kept[i]] = static_cast<int>(i);
  }

  PaletteCertificate out;
  out.kind = cert.kind;
  std::vector<char> keep_mask(base.vertex_count(), 0);
  for (int v : kept) keep_mask[v] = 1;
  int kept_before_istar = 0;
  for (size_t p = 0; p < cert.ordering.size(); ++p) {
    int v = cert.ordering[p];
    if (keep_mask[v]) {
      out.ordering.push_back(relabel[v]);
      if (cert.istar && static_cast<int>(p) + 1 <= *cert.istar)
        ++kept_before_istar;
    }
  }
  if (cert.istar) {
    // No kept position <= i* means no surviving case-2/3 edge, so any split
    // position works; 1 keeps the certificate structurally valid.
    out.istar = kept.empty() ? 0 : std::max(1, kept_before_istar);
  }

  const auto sub = base.induced(kept);
  for (const auto& p : sub.shadow()) {
    Pair orig{kept[p[0]], kept[p[1]]};
    auto col = cert.color_of(orig);
    if (!col)
      throw InvalidInput("restrict_certificate: pair missing from coloring");
    out.coloring.emplace_back(p, *col);
  }
  return out;
}

}  // namespace turan
