#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "turan/errors.hpp"
#include "turan/palette.hpp"

namespace turan {

// The oracle re-states the pattern tables on its own instead of reusing the
// solver's, so a typo in either copy shows up as an equivalence failure.
// Color values double as palette ranks: red 0, blue 1, green 2, violet 3,
// cyan 4, black 5; every kind's palette is a prefix of that list.
//
// Enumeration: for each ordering (lexicographic) and each coloring (odometer
// over the shadow pairs in lex order), check every edge; i* is handled per
// coloring as a feasibility bitmask over [f], which is the innermost loop in
// disguise. The verdict of edges not involving the last two odometer digits
// is computed once per setting of the outer digits; nothing is skipped on
// constraint grounds. Status only, so the enumeration order is unobservable.

namespace {

int palette_size(PropertyKind k) {
  switch (k) {
    case PropertyKind::Vanishing: return 3;
    case PropertyKind::Clubs: return 2;
    case PropertyKind::Spades:
    case PropertyKind::SpadesStar: return 6;
    case PropertyKind::FiveColor: return 5;
  }
  return 0;
}

struct RankTriple { int a, b, c; };

// Patterns without side conditions, as palette ranks (slot1, slot2, slot3).
std::vector<RankTriple> plain_patterns(PropertyKind k) {
  switch (k) {
    case PropertyKind::Vanishing: return {{0, 1, 2}};          // red blue green
    case PropertyKind::Clubs: return {{0, 0, 1}, {1, 1, 0}};   // rrb, bbr
    case PropertyKind::FiveColor: return {{1, 3, 0}, {2, 4, 1}};
    default: return {};
  }
}

// Per-edge lookup over the B^3 colorings of its slot pairs. For the Spades
// kinds `mask` holds the feasible i* values (bit t-1 for i* = t) and `cls`
// the pattern class; for the rest `mask` is 1 on the allowed triples.
struct EdgeTab {
  int s0 = 0, s1 = 0, s2 = 0;
  std::vector<uint8_t> mask;
  std::vector<int8_t> cls;
};

}  // namespace

SolveStatus oracle_solve(const ThreeGraph& g, PropertyKind kind) {
  const int n = g.vertex_count();
  const auto pairs = g.shadow();
  const int m = static_cast<int>(pairs.size());
  if (n > 5) throw GuardExceeded("oracle_solve: more than 5 vertices");
  if (m > 10) throw GuardExceeded("oracle_solve: shadow larger than 10 pairs");

  // Vacuous case, by the same convention as solve: no edges means every
  // kind except SpadesStar holds with the empty coloring.
  if (g.edges().empty())
    return kind == PropertyKind::SpadesStar ? SolveStatus::Unsat
                                            : SolveStatus::Sat;

  const int B = palette_size(kind);
  const bool spades = requires_istar(kind);
  const bool star = kind == PropertyKind::SpadesStar;
  const int ecount = g.edge_count();
  const int cube = B * B * B;
  const uint8_t all_istar = spades ? static_cast<uint8_t>((1u << n) - 1) : 1;

  std::vector<int> pair_idx(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < m; ++i)
    pair_idx[static_cast<size_t>(pairs[i][0]) * n + pairs[i][1]] = i;
  auto pidx = [&](int a, int b) {
    return pair_idx[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
  };

  const auto plain = plain_patterns(kind);
  std::vector<EdgeTab> tabs(ecount);
  for (auto& t : tabs) {
    t.mask.assign(cube, 0);
    t.cls.assign(cube, -1);
  }

  const int head_count = std::max(0, m - 2);  // digits outside the hoisted tail
  std::vector<int> head_edges, tail_edges;
  std::vector<int> colors(m, 0);

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  do {
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[perm[p]] = p + 1;

    head_edges.clear();
    tail_edges.clear();
    for (int e = 0; e < ecount; ++e) {
      const auto& ed = g.edges()[e];
      std::array<std::pair<int, int>, 3> bp{
          std::pair{pos[ed[0]], ed[0]}, {pos[ed[1]], ed[1]}, {pos[ed[2]], ed[2]}};
      std::sort(bp.begin(), bp.end());
      auto& t = tabs[e];
      t.s0 = pidx(bp[0].second, bp[1].second);
      t.s1 = pidx(bp[1].second, bp[2].second);
      t.s2 = pidx(bp[0].second, bp[2].second);
      std::fill(t.mask.begin(), t.mask.end(), 0);
      std::fill(t.cls.begin(), t.cls.end(), -1);
      if (!spades) {
        for (const auto& p : plain) {
          t.mask[p.a * B * B + p.b * B + p.c] = 1;
          t.cls[p.a * B * B + p.b * B + p.c] = 0;
        }
      } else {
        const int pj = bp[1].first, pk = bp[2].first;
        // (blue, violet, red): any i*
        t.mask[1 * 36 + 3 * 6 + 0] = all_istar;
        t.cls[1 * 36 + 3 * 6 + 0] = 0;
        // (green, cyan, blue): i* >= k
        t.mask[2 * 36 + 4 * 6 + 1] =
            static_cast<uint8_t>(all_istar & ~((1u << (pk - 1)) - 1));
        t.cls[2 * 36 + 4 * 6 + 1] = 1;
        // (green, black, red): j < i* < k
        uint8_t between = 0;
        for (int is = pj + 1; is <= pk - 1; ++is)
          between |= static_cast<uint8_t>(1u << (is - 1));
        t.mask[2 * 36 + 5 * 6 + 0] = between;
        t.cls[2 * 36 + 5 * 6 + 0] = 2;
      }
      const bool in_tail = t.s0 >= head_count || t.s1 >= head_count ||
                           t.s2 >= head_count;
      (in_tail ? tail_edges : head_edges).push_back(e);
    }

    std::fill(colors.begin(), colors.end(), 0);
    const int tail0 = head_count < m ? head_count : -1;
    const int tail1 = head_count + 1 < m ? head_count + 1 : -1;
    for (;;) {
      // Verdict of the edges fully determined by the outer digits.
      uint8_t head_mask = all_istar;
      uint8_t head_used = 0;
      for (int e : head_edges) {
        const auto& t = tabs[e];
        const int ix = colors[t.s0] * B * B + colors[t.s1] * B + colors[t.s2];
        head_mask &= t.mask[ix];
        if (!head_mask) break;
        head_used |= static_cast<uint8_t>(1u << t.cls[ix]);
      }
      if (head_mask) {
        // Run the tail digits; every combination is a full coloring.
        const int lim0 = tail0 >= 0 ? B : 1;
        const int lim1 = tail1 >= 0 ? B : 1;
        for (int c0 = 0; c0 < lim0; ++c0) {
          if (tail0 >= 0) colors[tail0] = c0;
          for (int c1 = 0; c1 < lim1; ++c1) {
            if (tail1 >= 0) colors[tail1] = c1;
            uint8_t mask = head_mask;
            uint8_t used = head_used;
            for (int e : tail_edges) {
              const auto& t = tabs[e];
              const int ix =
                  colors[t.s0] * B * B + colors[t.s1] * B + colors[t.s2];
              mask &= t.mask[ix];
              if (!mask) break;
              used |= static_cast<uint8_t>(1u << t.cls[ix]);
            }
            if (mask && (!star || used == 0b111)) return SolveStatus::Sat;
          }
        }
        if (tail0 >= 0) colors[tail0] = 0;
        if (tail1 >= 0) colors[tail1] = 0;
      }
      // Advance the outer digits.
      int d = head_count - 1;
      while (d >= 0 && colors[d] == B - 1) colors[d--] = 0;
      if (d < 0) break;
      ++colors[d];
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  return SolveStatus::Unsat;
}

}  // namespace turan
