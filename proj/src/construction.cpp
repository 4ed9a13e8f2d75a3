#include "turan/construction.hpp"

#include <algorithm>
#include <numeric>

#include "turan/errors.hpp"

namespace turan {

namespace {

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long long choose3(long long u) { return u * (u - 1) * (u - 2) / 6; }

// Triple rank in colex order: {i<j<k} -> C(k,3)+C(j,2)+i.
size_t triple_rank(int i, int j, int k) {
  return static_cast<size_t>(choose3(k)) + static_cast<size_t>(j) * (j - 1) / 2 + i;
}

}  // namespace

uint64_t splitmix64_at(uint64_t seed, uint64_t index) {
  return mix64(seed + (index + 1) * 0x9e3779b97f4a7c15ULL);
}

PairColoringSource::PairColoringSource(int n, uint64_t seed)
    : n_(n), seeded_(true), seed_(seed) {
  if (n < 0) throw InvalidInput("pair coloring: n must be non-negative");
}

PairColoringSource PairColoringSource::fixed(int n,
                                             std::function<Color(int, int)> fn) {
  PairColoringSource s;
  s.n_ = n;
  s.seeded_ = false;
  s.fn_ = std::move(fn);
  return s;
}

Color PairColoringSource::color(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n_ || i == j)
    throw InvalidInput("pair coloring: bad pair");
  if (!seeded_) {
    Color c = fn_(i, j);
    if (c != Color::Red && c != Color::Blue)
      throw InvalidInput("pair coloring: hook must return red or blue");
    return c;
  }
  uint64_t rank = static_cast<uint64_t>(j) * (j - 1) / 2 + i;
  return (splitmix64_at(seed_, rank) & 1u) == 0 ? Color::Red : Color::Blue;
}

ThreeGraph construction_from(const PairColoringSource& source) {
  const int n = source.size();
  std::vector<Triple> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Color cij = source.color(i, j);
      for (int k = j + 1; k < n; ++k) {
        Color cjk = source.color(j, k);
        Color cik = source.color(i, k);
        bool rrb = cij == Color::Red && cjk == Color::Red && cik == Color::Blue;
        bool bbr = cij == Color::Blue && cjk == Color::Blue && cik == Color::Red;
        if (rrb || bbr) edges.push_back({i, j, k});
      }
    }
  }
  return ThreeGraph(n, std::move(edges));
}

ThreeGraph random_construction(int n, uint64_t seed) {
  return construction_from(PairColoringSource(n, seed));
}

PaletteCertificate inherited_certificate(const PairColoringSource& source,
                                         const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= source.size())
      throw InvalidInput("inherited_certificate: vertex out of range");

  const ThreeGraph sub = construction_from(source).induced(s);
  PaletteCertificate cert;
  cert.kind = PropertyKind::Clubs;
  cert.ordering.resize(s.size());
  std::iota(cert.ordering.begin(), cert.ordering.end(), 0);
  for (const auto& p : sub.shadow())
    cert.coloring.emplace_back(p, source.color(s[p[0]], s[p[1]]));
  return cert;
}

DensityAudit density_audit(const ThreeGraph& g, const DensityAuditOptions& opt) {
  if (opt.samples < 1) throw InvalidInput("density_audit: samples must be >= 1");
  const int n = g.vertex_count();

  // Edge membership bitmap over colex triple ranks for O(1) subset counting.
  std::vector<char> edge_bit(n >= 3 ? triple_rank(n - 3, n - 2, n - 1) + 1 : 0, 0);
  for (const auto& e : g.edges()) edge_bit[triple_rank(e[0], e[1], e[2])] = 1;

  auto count_in = [&](const std::vector<int>& u) {
    long long count = 0;
    for (size_t a = 0; a < u.size(); ++a)
      for (size_t b = a + 1; b < u.size(); ++b)
        for (size_t c = b + 1; c < u.size(); ++c)
          count += edge_bit[triple_rank(u[a], u[b], u[c])];
    return count;
  };

  const double mu_term = opt.mu * static_cast<double>(n) * n * n;
  DensityAudit audit;
  audit.d = opt.d;
  audit.mu = opt.mu;
  audit.samples = opt.samples;
  audit.worst_deficit = -mu_term;  // deficit of an empty selection

  for (int size : opt.sizes) {
    if (size > n) throw InvalidInput("density_audit: subset size exceeds n");
    SizeAudit sa;
    sa.size = size;
    const double target = opt.d * static_cast<double>(choose3(size));

    // C(n, size), saturating at the sampling threshold.
    long long total = 1;
    for (int i = 0; i < size && total <= opt.exact_threshold; ++i)
      total = total * (n - i) / (i + 1);
    sa.exact = total <= opt.exact_threshold;

    double worst = -1e300;
    if (sa.exact) {
      std::vector<int> u(size);
      std::iota(u.begin(), u.end(), 0);
      for (;;) {
        worst = std::max(worst, target - count_in(u) - mu_term);
        ++sa.tested;
        int i = size - 1;
        while (i >= 0 && u[i] == n - size + i) --i;
        if (i < 0) break;
        ++u[i];
        for (int t = i + 1; t < size; ++t) u[t] = u[t - 1] + 1;
      }
    } else {
      // Partial Fisher-Yates with a per-sample splitmix substream keyed on
      // (seed, size, sample) keeps the audit deterministic and schedulable
      // in any order.
      std::vector<int> deck(n);
      for (int t = 0; t < opt.samples; ++t) {
        uint64_t sub_seed =
            splitmix64_at(opt.seed, (static_cast<uint64_t>(size) << 32) | t);
        std::iota(deck.begin(), deck.end(), 0);
        std::vector<int> u(size);
        for (int i = 0; i < size; ++i) {
          uint64_t r = splitmix64_at(sub_seed, i) % (n - i);
          std::swap(deck[i], deck[i + r]);
          u[i] = deck[i];
        }
        std::sort(u.begin(), u.end());
        worst = std::max(worst, target - count_in(u) - mu_term);
        ++sa.tested;
      }
    }
    sa.worst_deficit = worst;
    audit.worst_deficit = std::max(audit.worst_deficit, worst);
    audit.per_size.push_back(sa);
  }

  audit.pass = audit.worst_deficit <= 0.0;
  return audit;
}

}  // namespace turan
