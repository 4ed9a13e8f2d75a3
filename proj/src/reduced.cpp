#include "turan/reduced.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "turan/construction.hpp"
#include "turan/errors.hpp"

namespace turan {

ReducedThreeGraph::ReducedThreeGraph(
    std::vector<int> indices, std::map<Pair, int> class_sizes,
    std::map<Triple, std::vector<std::array<int, 3>>> constituents)
    : indices_(std::move(indices)),
      class_sizes_(std::move(class_sizes)),
      constituents_(std::move(constituents)) {
  if (!std::is_sorted(indices_.begin(), indices_.end()) ||
      std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw InvalidInput("reduced graph: indices must be sorted and distinct");
  std::set<int> iset(indices_.begin(), indices_.end());

  size_t expected_pairs = indices_.size() * (indices_.size() - 1) / 2;
  if (class_sizes_.size() != expected_pairs)
    throw InvalidInput("reduced graph: one class size per index pair required");
  for (const auto& [pair, size] : class_sizes_) {
    if (pair[0] >= pair[1] || !iset.count(pair[0]) || !iset.count(pair[1]))
      throw InvalidInput("reduced graph: class key is not an index pair");
    if (size < 0) throw InvalidInput("reduced graph: negative class size");
  }

  for (auto& [triple, edges] : constituents_) {
    if (triple[0] >= triple[1] || triple[1] >= triple[2] ||
        !iset.count(triple[0]) || !iset.count(triple[1]) || !iset.count(triple[2]))
      throw InvalidInput("reduced graph: constituent key is not an index triple");
    const int ls = class_sizes_.at({triple[0], triple[1]});
    const int rs = class_sizes_.at({triple[1], triple[2]});
    const int ts = class_sizes_.at({triple[0], triple[2]});
    for (const auto& e : edges) {
      if (e[0] < 0 || e[0] >= ls || e[1] < 0 || e[1] >= rs || e[2] < 0 ||
          e[2] >= ts)
        throw InvalidInput("reduced graph: constituent edge out of class bounds");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
}

int ReducedThreeGraph::class_size(int i, int j) const {
  auto it = class_sizes_.find({std::min(i, j), std::max(i, j)});
  if (it == class_sizes_.end())
    throw InvalidInput("reduced graph: no class for that index pair");
  return it->second;
}

const std::vector<std::array<int, 3>>& ReducedThreeGraph::constituent(
    int i, int j, int k) const {
  static const std::vector<std::array<int, 3>> empty;
  auto it = constituents_.find({i, j, k});
  return it == constituents_.end() ? empty : it->second;
}

bool ReducedThreeGraph::has_constituent_edge(int i, int j, int k, int l, int r,
                                             int t) const {
  const auto& edges = constituent(i, j, k);
  return std::binary_search(edges.begin(), edges.end(),
                            std::array<int, 3>{l, r, t});
}

DenseCheck is_d_dense(const ReducedThreeGraph& a, double d) {
  DenseCheck out;
  out.dense = true;
  out.worst_density = 2.0;
  const auto& idx = a.indices();
  const int n = static_cast<int>(idx.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        const int i = idx[x], j = idx[y], k = idx[z];
        const double cap = static_cast<double>(a.class_size(i, j)) *
                           a.class_size(j, k) * a.class_size(i, k);
        if (cap == 0.0)
          throw InvalidInput("is_d_dense: empty class, density undefined");
        const double density = a.constituent(i, j, k).size() / cap;
        if (density < out.worst_density) {
          out.worst_density = density;
          out.worst_triple = {i, j, k};
        }
        if (density < d) out.dense = false;
      }
  if (n < 3) {
    out.worst_density = 0.0;
    out.worst_triple = {0, 0, 0};
  }
  return out;
}

namespace {

struct EmbedProblem {
  const ReducedThreeGraph* a;
  const ThreeGraph* f;
  std::vector<Pair> shadow;
  // For each F edge, the positions of its three pairs in `shadow`.
  struct EdgeRef { Triple v; int p01, p02, p12; };
  std::vector<EdgeRef> edges;
};

// Constituent membership test for one F edge under (phi, psi slice). The
// constituent key is the sorted phi-image; the left/right/top slots are the
// psi values of the F pairs whose images are {i,j}, {j,k} and {i,k}.
bool edge_embedded(const EmbedProblem& P, const std::vector<int>& phi,
                   const std::vector<int>& psi, const EmbedProblem::EdgeRef& er) {
  const int u = er.v[0], v = er.v[1], w = er.v[2];
  std::array<std::pair<int, int>, 3> by_idx{
      std::pair{phi[u], u}, {phi[v], v}, {phi[w], w}};
  std::sort(by_idx.begin(), by_idx.end());
  auto shadow_pos = [&](int x, int y) {
    if ((x == u && y == v) || (x == v && y == u)) return er.p01;
    if ((x == u && y == w) || (x == w && y == u)) return er.p02;
    return er.p12;
  };
  const int left = psi[shadow_pos(by_idx[0].second, by_idx[1].second)];
  const int right = psi[shadow_pos(by_idx[1].second, by_idx[2].second)];
  const int top = psi[shadow_pos(by_idx[0].second, by_idx[2].second)];
  return P.a->has_constituent_edge(by_idx[0].first, by_idx[1].first,
                                   by_idx[2].first, left, right, top);
}

// Backtracking over the shadow pairs in lex order; each F edge is tested the
// moment its last pair is assigned.
bool assign_psi(const EmbedProblem& P, const std::vector<int>& phi,
                size_t pair_pos, std::vector<int>& psi) {
  if (pair_pos == P.shadow.size()) return true;
  const Pair& uv = P.shadow[pair_pos];
  const int size = P.a->class_size(phi[uv[0]], phi[uv[1]]);
  for (int cand = 0; cand < size; ++cand) {
    psi[pair_pos] = cand;
    bool ok = true;
    for (const auto& er : P.edges) {
      const int last = std::max({er.p01, er.p02, er.p12});
      if (last != static_cast<int>(pair_pos)) continue;
      if (!edge_embedded(P, phi, psi, er)) { ok = false; break; }
    }
    if (ok && assign_psi(P, phi, pair_pos + 1, psi)) return true;
  }
  psi[pair_pos] = -1;
  return false;
}

}  // namespace

std::optional<EmbeddingWitness> embeds(const ReducedThreeGraph& a,
                                       const ThreeGraph& f, bool all_orderings) {
  const int fv = f.vertex_count();
  const int ni = static_cast<int>(a.indices().size());
  if (ni > 8) throw GuardExceeded("embeds: more than 8 indices");
  if (fv > ni) return std::nullopt;
  for (const auto& [pair, size] : a.class_sizes())
    if (size > 16) throw GuardExceeded("embeds: class larger than 16");

  EmbedProblem P;
  P.a = &a;
  P.f = &f;
  P.shadow = f.shadow();
  auto pair_pos = [&](int x, int y) {
    Pair p{std::min(x, y), std::max(x, y)};
    return static_cast<int>(std::lower_bound(P.shadow.begin(), P.shadow.end(), p) -
                            P.shadow.begin());
  };
  for (const auto& e : f.edges())
    P.edges.push_back({e, pair_pos(e[0], e[1]), pair_pos(e[0], e[2]),
                       pair_pos(e[1], e[2])});

  std::vector<int> psi(P.shadow.size(), -1);
  auto try_phi = [&](const std::vector<int>& phi) -> bool {
    std::fill(psi.begin(), psi.end(), -1);
    return assign_psi(P, phi, 0, psi);
  };

  std::vector<int> phi(fv);
  if (fv == 0) {
    EmbeddingWitness w;
    return w;
  }

  // phi candidates in lexicographic order: increasing injections by default,
  // every injection when all_orderings is set.
  std::vector<int> tuple(fv, -1);
  std::vector<char> used(ni, 0);
  std::optional<EmbeddingWitness> result;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == fv) {
      for (int x = 0; x < fv; ++x) phi[x] = a.indices()[tuple[x]];
      if (!try_phi(phi)) return false;
      EmbeddingWitness w;
      w.phi = phi;
      for (size_t p = 0; p < P.shadow.size(); ++p)
        w.psi.emplace_back(P.shadow[p], psi[p]);
      if (!check_embedding(a, f, w))
        throw std::logic_error("embeds: witness failed its re-verification");
      result = std::move(w);
      return true;
    }
    for (int pos = 0; pos < ni; ++pos) {
      if (used[pos]) continue;
      if (!all_orderings && depth > 0 && pos < tuple[depth - 1]) continue;
      tuple[depth] = pos;
      used[pos] = 1;
      if (self(self, depth + 1)) return true;
      used[pos] = 0;
      tuple[depth] = -1;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

bool check_embedding(const ReducedThreeGraph& a, const ThreeGraph& f,
                     const EmbeddingWitness& w) {
  const int fv = f.vertex_count();
  if (static_cast<int>(w.phi.size()) != fv) return false;
  std::set<int> iset(a.indices().begin(), a.indices().end());
  for (int x : w.phi)
    if (!iset.count(x)) return false;

  const auto shadow = f.shadow();
  if (w.psi.size() != shadow.size()) return false;
  std::map<Pair, int> psi;
  for (const auto& [pair, vertex] : w.psi) psi[pair] = vertex;

  for (const auto& p : shadow) {
    auto it = psi.find(p);
    if (it == psi.end()) return false;
    int i = w.phi[p[0]], j = w.phi[p[1]];
    if (i == j) return false;
    const int size = a.class_size(i, j);
    if (it->second < 0 || it->second >= size) return false;
  }

  for (const auto& e : f.edges()) {
    const int u = e[0], v = e[1], x = e[2];
    // Sort the three index images; psi of the pair between the first two is
    // the left vertex, between the last two the right, outer pair the top.
    std::array<std::pair<int, int>, 3> by_idx{
        std::pair{w.phi[u], u}, {w.phi[v], v}, {w.phi[x], x}};
    std::sort(by_idx.begin(), by_idx.end());
    if (by_idx[0].first == by_idx[1].first || by_idx[1].first == by_idx[2].first)
      return false;
    auto psi_of = [&](int p, int q) {
      return psi.at({std::min(p, q), std::max(p, q)});
    };
    if (!a.has_constituent_edge(
            by_idx[0].first, by_idx[1].first, by_idx[2].first,
            psi_of(by_idx[0].second, by_idx[1].second),
            psi_of(by_idx[1].second, by_idx[2].second),
            psi_of(by_idx[0].second, by_idx[2].second)))
      return false;
  }
  return true;
}

int BipartiteProjection::top_degree(int v) const {
  int deg = 0;
  for (int u = 0; u < left_size; ++u) deg += adj[u][v];
  return deg;
}

BipartiteProjection project_Q(const ReducedThreeGraph& a, int i, int j, int k,
                              double eps) {
  if (eps <= 0.0 || eps > 1.0)
    throw InvalidInput("project_Q: eps must be in (0, 1]");
  BipartiteProjection q;
  q.left_class = {std::min(i, j), std::max(i, j)};
  q.top_class = {std::min(i, k), std::max(i, k)};
  q.left_size = a.class_size(i, j);
  q.top_size = a.class_size(i, k);
  q.eps = eps;
  q.adj.assign(q.left_size, std::vector<char>(q.top_size, 0));

  const double threshold = eps * eps * a.class_size(j, k);
  std::vector<std::vector<int>> counts(q.left_size,
                                       std::vector<int>(q.top_size, 0));
  for (const auto& e : a.constituent(i, j, k)) ++counts[e[0]][e[2]];
  for (int u = 0; u < q.left_size; ++u)
    for (int v = 0; v < q.top_size; ++v)
      q.adj[u][v] = counts[u][v] >= threshold ? 1 : 0;
  return q;
}

DegreeSquareStat degree_square_stat(const BipartiteProjection& q, double eps) {
  DegreeSquareStat s;
  for (int v = 0; v < q.top_size; ++v) {
    long long d = q.top_degree(v);
    s.sum += d * d;
  }
  s.threshold = (0.25 + eps / 2.0) * static_cast<double>(q.left_size) *
                q.left_size * q.top_size;
  s.pass = static_cast<double>(s.sum) >= s.threshold;
  return s;
}

std::vector<int> s_set(const ReducedThreeGraph& a, int i, int j, int k,
                       double eps, int r) {
  if (r < 1) throw InvalidInput("s_set: r must be at least 1");
  const auto q = project_Q(a, i, j, k, eps);
  const double threshold = (0.5 + r * eps * eps) * q.left_size;
  std::vector<int> out;
  for (int v = 0; v < q.top_size; ++v)
    if (q.top_degree(v) >= threshold) out.push_back(v);
  return out;
}

ReducedThreeGraph random_reduced(int index_count, int class_size,
                                 double edge_prob, uint64_t seed) {
  if (index_count < 0 || class_size < 0)
    throw InvalidInput("random_reduced: negative size");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw InvalidInput("random_reduced: edge_prob must be in [0, 1]");
  std::vector<int> indices(index_count);
  std::iota(indices.begin(), indices.end(), 1);
  std::map<Pair, int> sizes;
  for (int i = 1; i <= index_count; ++i)
    for (int j = i + 1; j <= index_count; ++j) sizes[{i, j}] = class_size;

  std::map<Triple, std::vector<std::array<int, 3>>> constituents;
  uint64_t counter = 0;
  for (int i = 1; i <= index_count; ++i)
    for (int j = i + 1; j <= index_count; ++j)
      for (int k = j + 1; k <= index_count; ++k) {
        std::vector<std::array<int, 3>> edges;
        for (int l = 0; l < class_size; ++l)
          for (int r = 0; r < class_size; ++r)
            for (int t = 0; t < class_size; ++t) {
              const double u =
                  (splitmix64_at(seed, counter++) >> 11) * 0x1.0p-53;
              if (u < edge_prob) edges.push_back({l, r, t});
            }
        if (!edges.empty()) constituents[{i, j, k}] = std::move(edges);
      }
  return ReducedThreeGraph(std::move(indices), std::move(sizes),
                           std::move(constituents));
}

ReducedThreeGraph reverse(const ReducedThreeGraph& a) {
  const auto& idx = a.indices();
  const int n = static_cast<int>(idx.size());
  auto mirrored = [&](int x) {
    // position of x in idx, reflected
    int p = static_cast<int>(std::lower_bound(idx.begin(), idx.end(), x) -
                             idx.begin());
    return idx[n - 1 - p];
  };
  std::map<Pair, int> sizes;
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = a1 + 1; b1 < n; ++b1) {
      int i = idx[a1], j = idx[b1];
      sizes[{i, j}] = a.class_size(mirrored(j), mirrored(i));
    }
  std::map<Triple, std::vector<std::array<int, 3>>> constituents;
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = a1 + 1; b1 < n; ++b1)
      for (int c1 = b1 + 1; c1 < n; ++c1) {
        int i = idx[a1], j = idx[b1], k = idx[c1];
        const auto& src =
            a.constituent(mirrored(k), mirrored(j), mirrored(i));
        if (src.empty()) continue;
        std::vector<std::array<int, 3>> edges;
        edges.reserve(src.size());
        for (const auto& e : src) edges.push_back({e[1], e[0], e[2]});
        constituents[{i, j, k}] = std::move(edges);
      }
  return ReducedThreeGraph(a.indices(), std::move(sizes),
                           std::move(constituents));
}

}  // namespace turan
