#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <climits>
#include <numeric>
#include <thread>
#include <vector>

#include "turan/errors.hpp"
#include "turan/palette.hpp"

namespace turan {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kTickStride = 4096;

uint8_t color_bit(Color c) { return static_cast<uint8_t>(1u << static_cast<int>(c)); }

uint8_t palette_mask(PropertyKind k) {
  uint8_t m = 0;
  for (Color c : palette(k)) m |= color_bit(c);
  return m;
}

// Read-only description shared by all branches of one solve call.
struct Prepared {
  PropertyKind kind;
  int n = 0;
  std::vector<int> real_verts;  // non-isolated, ascending
  std::vector<int> isolated;    // ascending
  std::vector<Pair> pairs;      // shadow, lex order
  int m = 0;

  struct EdgeDef {
    Triple v;
    int pair_of[3];  // pair index of (v0,v1), (v0,v2), (v1,v2)
  };
  std::vector<EdgeDef> edges;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<std::vector<int>> pair_edges;
  std::vector<int> pair_index;  // n*n lookup
  uint8_t full_mask = 0;
  bool pin_first_pair = false;  // clubs symmetry breaking

  int pidx(int a, int b) const {
    return pair_index[static_cast<size_t>(std::min(a, b)) * n + std::max(a, b)];
  }
};

Prepared prepare(const ThreeGraph& g, PropertyKind kind) {
  Prepared P;
  P.kind = kind;
  P.n = g.vertex_count();
  P.pairs = g.shadow();
  P.m = static_cast<int>(P.pairs.size());
  P.pair_index.assign(static_cast<size_t>(P.n) * P.n, -1);
  for (int i = 0; i < P.m; ++i)
    P.pair_index[static_cast<size_t>(P.pairs[i][0]) * P.n + P.pairs[i][1]] = i;

  P.vertex_edges.resize(P.n);
  P.pair_edges.resize(P.m);
  const auto deg = g.degrees();
  for (int v = 0; v < P.n; ++v)
    (deg[v] > 0 ? P.real_verts : P.isolated).push_back(v);
  for (const auto& e : g.edges()) {
    Prepared::EdgeDef def;
    def.v = e;
    def.pair_of[0] = P.pidx(e[0], e[1]);
    def.pair_of[1] = P.pidx(e[0], e[2]);
    def.pair_of[2] = P.pidx(e[1], e[2]);
    int idx = static_cast<int>(P.edges.size());
    P.edges.push_back(def);
    for (int v : e) P.vertex_edges[v].push_back(idx);
    for (int s = 0; s < 3; ++s) P.pair_edges[def.pair_of[s]].push_back(idx);
  }
  P.full_mask = palette_mask(kind);
  P.pin_first_pair = (kind == PropertyKind::Clubs && P.m > 0);
  return P;
}

enum class BranchStatus { Sat, Unsat, Timeout, Cancelled };

struct BranchResult {
  BranchStatus status = BranchStatus::Unsat;
  PaletteCertificate certificate;
};

// Depth-first placement of the non-isolated vertices with pattern-constraint
// propagation over the pair-color domains, then lexicographic color
// assignment at complete orderings.
class Search {
public:
  Search(const Prepared& P, int istar, Clock::time_point deadline,
         const std::atomic<int>* best_branch, int branch_id)
      : P_(P), istar_(istar), deadline_(deadline), best_branch_(best_branch),
        branch_id_(branch_id) {
    pos_.assign(P_.n, 0);
    order_.assign(P_.real_verts.size(), -1);
    dom_.assign(P_.m, P_.full_mask);
    if (P_.pin_first_pair) dom_[0] = color_bit(Color::Red);
    es_.assign(P_.edges.size(), {});
    in_wl_.assign(P_.edges.size(), 0);
  }

  BranchResult run(int first_vertex) {
    first_vertex_ = first_vertex;
    bool sat = place_level(0);
    BranchResult r;
    if (timed_out_) r.status = BranchStatus::Timeout;
    else if (cancelled_) r.status = BranchStatus::Cancelled;
    else if (sat) { r.status = BranchStatus::Sat; r.certificate = std::move(cert_); }
    else r.status = BranchStatus::Unsat;
    return r;
  }

private:
  struct EdgeState {
    int placed = 0;
    bool complete = false;
    int slot_pair[3] = {-1, -1, -1};
    int npat = 0;
    uint8_t pat_mask[3][3] = {};
    uint8_t pat_cls[3] = {};
  };

  bool tick() {
    if (++tick_counter_ % kTickStride != 0) return true;
    if (Clock::now() >= deadline_) { timed_out_ = true; return false; }
    if (best_branch_ && best_branch_->load(std::memory_order_relaxed) < branch_id_) {
      cancelled_ = true;
      return false;
    }
    return true;
  }

  void complete_edge(int ei) {
    auto& st = es_[ei];
    const auto& def = P_.edges[ei];
    std::array<std::pair<int, int>, 3> by_pos{
        std::pair{pos_[def.v[0]], 0}, {pos_[def.v[1]], 1}, {pos_[def.v[2]], 2}};
    std::sort(by_pos.begin(), by_pos.end());
    // slot pairs (vi,vj), (vj,vk), (vi,vk) expressed through the fixed
    // pair_of entries: pair_of holds (01),(02),(12) by vertex id order.
    auto pair_between = [&](int a, int b) {
      int lo = std::min(by_pos[a].second, by_pos[b].second);
      int hi = std::max(by_pos[a].second, by_pos[b].second);
      int code = lo == 0 ? (hi == 1 ? 0 : 1) : 2;
      return def.pair_of[code];
    };
    st.slot_pair[0] = pair_between(0, 1);
    st.slot_pair[1] = pair_between(1, 2);
    st.slot_pair[2] = pair_between(0, 2);
    Pattern pats[3];
    st.npat = allowed_patterns_into(P_.kind, by_pos[0].first, by_pos[1].first,
                                    by_pos[2].first, istar_, pats);
    for (int p = 0; p < st.npat; ++p) {
      for (int s = 0; s < 3; ++s) st.pat_mask[p][s] = color_bit(pats[p].slot[s]);
      st.pat_cls[p] = static_cast<uint8_t>(pats[p].cls);
    }
    st.complete = true;
    completed_trail_.push_back(ei);
    ++completed_count_;
    enqueue(ei);
  }

  // Same table as allowed_patterns, without the allocation (hot path).
  static int allowed_patterns_into(PropertyKind kind, int /*i*/, int j, int k,
                                   int istar, Pattern out[3]) {
    int n = 0;
    switch (kind) {
      case PropertyKind::Vanishing:
        out[n++] = {{Color::Red, Color::Blue, Color::Green}, 0};
        break;
      case PropertyKind::Clubs:
        out[n++] = {{Color::Red, Color::Red, Color::Blue}, 0};
        out[n++] = {{Color::Blue, Color::Blue, Color::Red}, 0};
        break;
      case PropertyKind::FiveColor:
        out[n++] = {{Color::Blue, Color::Violet, Color::Red}, 0};
        out[n++] = {{Color::Green, Color::Cyan, Color::Blue}, 0};
        break;
      case PropertyKind::Spades:
      case PropertyKind::SpadesStar:
        out[n++] = {{Color::Blue, Color::Violet, Color::Red}, 0};
        if (k <= istar)
          out[n++] = {{Color::Green, Color::Cyan, Color::Blue}, 1};
        if (j < istar && istar < k)
          out[n++] = {{Color::Green, Color::Black, Color::Red}, 2};
        break;
    }
    return n;
  }

  void enqueue(int ei) {
    if (!in_wl_[ei]) { wl_.push_back(ei); in_wl_[ei] = 1; }
  }

  void drain_worklist() {
    for (int ei : wl_) in_wl_[ei] = 0;
    wl_.clear();
  }

  bool propagate() {
    while (!wl_.empty()) {
      int ei = wl_.back();
      wl_.pop_back();
      in_wl_[ei] = 0;
      const auto& st = es_[ei];
      uint8_t sm[3] = {0, 0, 0};
      int feasible = 0;
      for (int p = 0; p < st.npat; ++p) {
        if ((dom_[st.slot_pair[0]] & st.pat_mask[p][0]) &&
            (dom_[st.slot_pair[1]] & st.pat_mask[p][1]) &&
            (dom_[st.slot_pair[2]] & st.pat_mask[p][2])) {
          ++feasible;
          for (int s = 0; s < 3; ++s) sm[s] |= st.pat_mask[p][s];
        }
      }
      if (!feasible) { drain_worklist(); return false; }
      for (int s = 0; s < 3; ++s) {
        int pi = st.slot_pair[s];
        uint8_t nd = dom_[pi] & sm[s];
        if (nd != dom_[pi]) {
          dom_trail_.emplace_back(pi, dom_[pi]);
          dom_[pi] = nd;
          for (int e2 : P_.pair_edges[pi])
            if (es_[e2].complete) enqueue(e2);
        }
      }
    }
    return true;
  }

  // Necessary condition for SpadesStar: every pattern class must still be
  // available to some edge (edges with unplaced vertices count as available
  // for everything).
  bool star_alive() const {
    if (P_.kind != PropertyKind::SpadesStar) return true;
    if (completed_count_ < static_cast<int>(P_.edges.size())) return true;
    bool alive[3] = {false, false, false};
    for (const auto& st : es_) {
      for (int p = 0; p < st.npat; ++p) {
        if ((dom_[st.slot_pair[0]] & st.pat_mask[p][0]) &&
            (dom_[st.slot_pair[1]] & st.pat_mask[p][1]) &&
            (dom_[st.slot_pair[2]] & st.pat_mask[p][2]))
          alive[st.pat_cls[p]] = true;
      }
    }
    return alive[0] && alive[1] && alive[2];
  }

  bool place_level(size_t level) {
    if (!tick()) return false;
    if (level == P_.real_verts.size()) return assign_colors(0);
    for (int v : P_.real_verts) {
      if (pos_[v] != 0) continue;
      if (level == 0 && first_vertex_ >= 0 && v != first_vertex_) continue;
      pos_[v] = static_cast<int>(level) + 1;
      order_[level] = v;
      size_t dom_mark = dom_trail_.size();
      size_t comp_mark = completed_trail_.size();
      for (int ei : P_.vertex_edges[v])
        if (++es_[ei].placed == 3) complete_edge(ei);
      bool ok = propagate() && star_alive();
      if (ok && place_level(level + 1)) return true;
      undo(dom_mark, comp_mark);
      for (int ei : P_.vertex_edges[v]) --es_[ei].placed;
      pos_[v] = 0;
      if (timed_out_ || cancelled_) return false;
    }
    return false;
  }

  bool assign_colors(int pi) {
    if (!tick()) return false;
    if (pi == P_.m) return finish();
    uint8_t d = dom_[pi];
    for (int c = 0; c < 6; ++c) {
      uint8_t bit = static_cast<uint8_t>(1u << c);
      if (!(d & bit)) continue;
      if (d == bit) return assign_colors(pi + 1);
      size_t dom_mark = dom_trail_.size();
      dom_trail_.emplace_back(pi, dom_[pi]);
      dom_[pi] = bit;
      for (int ei : P_.pair_edges[pi])
        if (es_[ei].complete) enqueue(ei);
      bool ok = propagate() && star_alive();
      if (ok && assign_colors(pi + 1)) return true;
      undo(dom_mark, completed_trail_.size());
      if (timed_out_ || cancelled_) return false;
    }
    return false;
  }

  bool finish() {
    if (P_.kind == PropertyKind::SpadesStar) {
      bool used[3] = {false, false, false};
      for (const auto& st : es_) {
        for (int p = 0; p < st.npat; ++p) {
          if ((dom_[st.slot_pair[0]] & st.pat_mask[p][0]) &&
              (dom_[st.slot_pair[1]] & st.pat_mask[p][1]) &&
              (dom_[st.slot_pair[2]] & st.pat_mask[p][2])) {
            used[st.pat_cls[p]] = true;
            break;
          }
        }
      }
      if (!(used[0] && used[1] && used[2])) return false;
    }
    cert_.kind = P_.kind;
    cert_.ordering.clear();
    for (size_t p = 0; p < order_.size(); ++p) cert_.ordering.push_back(order_[p]);
    for (int v : P_.isolated) cert_.ordering.push_back(v);
    if (requires_istar(P_.kind)) cert_.istar = istar_;
    cert_.coloring.clear();
    for (int i = 0; i < P_.m; ++i)
      cert_.coloring.emplace_back(P_.pairs[i],
                                  static_cast<Color>(std::countr_zero(dom_[i])));
    return true;
  }

  void undo(size_t dom_mark, size_t comp_mark) {
    while (dom_trail_.size() > dom_mark) {
      auto [pi, old] = dom_trail_.back();
      dom_trail_.pop_back();
      dom_[pi] = old;
    }
    while (completed_trail_.size() > comp_mark) {
      es_[completed_trail_.back()].complete = false;
      completed_trail_.pop_back();
      --completed_count_;
    }
  }

  const Prepared& P_;
  int istar_;
  Clock::time_point deadline_;
  const std::atomic<int>* best_branch_;
  int branch_id_;
  int first_vertex_ = -1;

  std::vector<int> pos_;
  std::vector<int> order_;
  std::vector<uint8_t> dom_;
  std::vector<EdgeState> es_;
  std::vector<int> wl_;
  std::vector<char> in_wl_;
  std::vector<std::pair<int, uint8_t>> dom_trail_;
  std::vector<int> completed_trail_;
  int completed_count_ = 0;

  uint64_t tick_counter_ = 0;
  bool timed_out_ = false;
  bool cancelled_ = false;
  PaletteCertificate cert_;
};

// One istar level: branches on the vertex placed first. Sequentially this is
// plain DFS; with threads the branches run concurrently and the result is the
// one the sequential order would have committed first.
BranchResult run_level(const Prepared& P, int istar, Clock::time_point deadline,
                       int threads) {
  const int branches = static_cast<int>(P.real_verts.size());
  if (threads <= 1 || branches <= 1) {
    for (int b = 0; b < branches; ++b) {
      Search s(P, istar, deadline, nullptr, b);
      BranchResult r = s.run(P.real_verts[b]);
      if (r.status != BranchStatus::Unsat) return r;
    }
    return {};
  }

  std::vector<BranchResult> results(branches);
  std::atomic<int> next{0};
  std::atomic<int> best_sat{INT_MAX};
  auto worker = [&]() {
    for (;;) {
      int b = next.fetch_add(1);
      if (b >= branches) return;
      if (best_sat.load() < b) {
        results[b].status = BranchStatus::Cancelled;
        continue;
      }
      Search s(P, istar, deadline, &best_sat, b);
      results[b] = s.run(P.real_verts[b]);
      if (results[b].status == BranchStatus::Sat) {
        int cur = best_sat.load();
        while (b < cur && !best_sat.compare_exchange_weak(cur, b)) {}
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, branches);
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  // Commit in branch order, exactly as the sequential loop would have.
  for (int b = 0; b < branches; ++b) {
    if (results[b].status == BranchStatus::Sat ||
        results[b].status == BranchStatus::Timeout)
      return std::move(results[b]);
  }
  return {};
}

SolveResult edgeless_result(const ThreeGraph& g, PropertyKind kind) {
  SolveResult r;
  if (kind == PropertyKind::SpadesStar) {
    r.status = SolveStatus::Unsat;
    return r;
  }
  PaletteCertificate cert;
  cert.kind = kind;
  cert.ordering.resize(g.vertex_count());
  std::iota(cert.ordering.begin(), cert.ordering.end(), 0);
  if (requires_istar(kind)) cert.istar = g.vertex_count();
  r.status = SolveStatus::Sat;
  r.certificate = std::move(cert);
  return r;
}

}  // namespace

SolveResult solve(const ThreeGraph& g, PropertyKind kind,
                  const SolveOptions& options) {
  if (g.vertex_count() > options.max_vertices)
    throw GuardExceeded("solve: graph exceeds the vertex guard (" +
                        std::to_string(options.max_vertices) + ")");
  if (g.edges().empty()) return edgeless_result(g, kind);

  const Prepared P = prepare(g, kind);
  const int f = P.n;
  const int fr = static_cast<int>(P.real_verts.size());
  const auto deadline = Clock::now() + options.timeout;

  std::vector<int> levels;
  if (!requires_istar(kind)) {
    levels.push_back(0);
  } else {
    for (int is = f; is >= 1; --is) {
      // istar values in [fr, f) decide the same problem as istar = f.
      if (is != f && is >= fr) continue;
      if (kind == PropertyKind::SpadesStar) {
        // Class 2 needs istar >= 3, class 3 needs istar < position of some
        // edge vertex, so only istar in [3, fr-1] can use all three classes.
        if (is < 3 || is > fr - 1) continue;
      }
      levels.push_back(is);
    }
    if (kind == PropertyKind::SpadesStar && g.edge_count() < 3)
      levels.clear();
  }

  for (int istar : levels) {
    if (Clock::now() >= deadline) return {SolveStatus::Timeout, {}};
    BranchResult r = run_level(P, istar, deadline, std::max(1, options.threads));
    if (r.status == BranchStatus::Sat)
      return {SolveStatus::Sat, std::move(r.certificate)};
    if (r.status == BranchStatus::Timeout) return {SolveStatus::Timeout, {}};
  }
  return {SolveStatus::Unsat, {}};
}

}  // namespace turan
