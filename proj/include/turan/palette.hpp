#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class Color : uint8_t { Red = 0, Blue, Green, Violet, Cyan, Black };

// The ordering+coloring properties decided by this module, each with its own
// palette and per-edge pattern table (patterns read off the three shadow
// pairs of an edge in position order):
//   Vanishing  3 colors, every edge (red, blue, green)
//   Clubs      2 colors, every edge (red, red, blue) or (blue, blue, red)
//   Spades     6 colors and a split index i*; every edge matches one of
//              (blue, violet, red)               any positions
//              (green, cyan, blue)               k <= i*
//              (green, black, red)               j < i* < k
//   SpadesStar Spades with each of the three pattern classes used by at
//              least one edge
//   FiveColor  5 colors, every edge (blue, violet, red) or (green, cyan, blue)
enum class PropertyKind : uint8_t {
  Vanishing = 0,
  Clubs,
  Spades,
  SpadesStar,
  FiveColor,
};

constexpr PropertyKind kAllKinds[] = {
    PropertyKind::Vanishing, PropertyKind::Clubs, PropertyKind::Spades,
    PropertyKind::SpadesStar, PropertyKind::FiveColor};

const char* to_string(Color c);
const char* to_string(PropertyKind k);
std::optional<Color> color_from_string(const std::string& s);
std::optional<PropertyKind> kind_from_string(const std::string& s);

// The colors a certificate of this kind may use, in canonical rank order.
const std::vector<Color>& palette(PropertyKind k);
bool requires_istar(PropertyKind k);

// Allowed patterns for an edge whose vertices sit at 1-based positions
// i < j < k in an ordering of f vertices. Each entry is the color triple
// (chi(v_i,v_j), chi(v_j,v_k), chi(v_i,v_k)) plus the pattern class it
// belongs to (meaningful for Spades/SpadesStar).
struct Pattern {
  Color slot[3];
  int cls;
};
// istar is ignored for kinds without one.
std::vector<Pattern> allowed_patterns(PropertyKind kind, int i, int j, int k,
                                      int istar);

struct PaletteCertificate {
  PropertyKind kind = PropertyKind::Vanishing;
  std::vector<int> ordering;  // vertex at position p+1, a permutation of 0..n-1
  std::optional<int> istar;   // present iff kind is Spades or SpadesStar
  std::vector<std::pair<Pair, Color>> coloring;  // sorted by pair

  std::optional<Color> color_of(const Pair& p) const;
};

struct VerifyResult {
  bool accepted = false;
  std::string reason;  // empty when accepted
  std::optional<Triple> violating_edge;
  std::string found_pattern;     // colors seen on the violating edge
  std::string expected_patterns; // patterns permitted at those positions
};

// Checks a structurally valid certificate against the pattern tables.
// Structural defects (ordering not a permutation, coloring domain different
// from the shadow, colors outside the palette, missing/extra/out-of-range
// istar) throw InvalidInput; a pattern violation is a regular reject.
VerifyResult verify(const ThreeGraph& g, const PaletteCertificate& cert);

enum class SolveStatus { Sat, Unsat, Timeout };

struct SolveOptions {
  int max_vertices = 10;
  std::chrono::milliseconds timeout{60000};
  int threads = 1;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<PaletteCertificate> certificate;
};

// Decides the property by backtracking over orderings with pattern-constraint
// propagation on the shadow coloring. Search order (which also fixes the
// certificate returned on Sat): i* descending from f where applicable, then
// vertices placed position by position in ascending vertex order, then pair
// colors in ascending palette rank by ascending pair. Non-isolated vertices
// are enumerated; isolated vertices are appended at the end of the ordering.
// For Clubs the lexicographically first shadow pair is pinned to red (the
// pattern set is closed under the red/blue swap). Unsat means the search was
// exhausted; running out of time yields Timeout, never Unsat. Throws
// GuardExceeded when the graph has more than options.max_vertices vertices.
SolveResult solve(const ThreeGraph& g, PropertyKind kind,
                  const SolveOptions& options = {});

// Independent correctness oracle: plain nested enumeration over all n!
// orderings (lexicographic), then all palette^|shadow| colorings (odometer
// over pairs in lex order), then all i* in [f]. No pruning beyond stopping at
// the first satisfying combination, no symmetry reduction. Guarded to
// n <= 5 and |shadow| <= 10.
SolveStatus oracle_solve(const ThreeGraph& g, PropertyKind kind);

struct DStar {
  double value = 0.0;     // root of (2-x)^3 = 27x in (0.211, 0.212)
  double residual = 0.0;  // |(2-value)^3 - 27*value|
};

// Bisection on (2-x)^3 - 27x over [0.2, 0.25] to residual < 1e-12. The result
// also satisfies 3*cbrt(value) + value = 2 within 1e-10.
DStar d_star();

// Certificate for blow_up(base, t) obtained by ordering the t copies of each
// vertex consecutively, copying each pair color from the original pair, and
// scaling i* to t*i*. The result verifies whenever the input does (not
// guaranteed for SpadesStar, whose class non-emptiness is not a per-edge
// condition, although copies preserve it).
PaletteCertificate lift_certificate(const ThreeGraph& base,
                                    const PaletteCertificate& cert, int t);

// Certificate for base.induced(vertices): ordering and coloring restricted to
// the kept vertices, i* replaced by the number of kept positions <= i*. The
// result verifies for Vanishing, Clubs and FiveColor; for Spades it verifies
// whenever the vertex at position i* is kept (dropping it can leave a
// class-3 edge with no integral split position).
PaletteCertificate restrict_certificate(const ThreeGraph& base,
                                        const PaletteCertificate& cert,
                                        const std::vector<int>& vertices);

}  // namespace turan
