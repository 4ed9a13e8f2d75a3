#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// A reduced 3-graph: one vertex class P_ij per pair of indices and one
// 3-partite constituent A_ijk per triple, whose edges pick a left vertex
// from P_ij, a right vertex from P_jk and a top vertex from P_ik. Class
// vertices are addressed as (class pair, position), which keeps distinct
// classes disjoint by construction.
class ReducedThreeGraph {
public:
  ReducedThreeGraph() = default;
  // Validates: indices sorted distinct; a size for exactly the pairs of
  // indices; constituent keys are triples of indices; every constituent edge
  // within class bounds. Constituent edge lists are sorted and deduped.
  ReducedThreeGraph(std::vector<int> indices, std::map<Pair, int> class_sizes,
                    std::map<Triple, std::vector<std::array<int, 3>>> constituents);

  const std::vector<int>& indices() const { return indices_; }
  int class_size(int i, int j) const;
  // Constituent edges (left, right, top) for indices i<j<k; empty if none.
  const std::vector<std::array<int, 3>>& constituent(int i, int j, int k) const;
  bool has_constituent_edge(int i, int j, int k, int l, int r, int t) const;
  const std::map<Pair, int>& class_sizes() const { return class_sizes_; }
  const std::map<Triple, std::vector<std::array<int, 3>>>& constituents() const {
    return constituents_;
  }

private:
  std::vector<int> indices_;
  std::map<Pair, int> class_sizes_;
  std::map<Triple, std::vector<std::array<int, 3>>> constituents_;
};

struct DenseCheck {
  bool dense = false;
  Triple worst_triple{};      // indices of the minimizing constituent
  double worst_density = 0.0;
};

// |E(A_ijk)| >= d*|P_ij|*|P_jk|*|P_ik| for every index triple. Throws
// InvalidInput when some class is empty (density undefined).
DenseCheck is_d_dense(const ReducedThreeGraph& a, double d);

struct EmbeddingWitness {
  std::vector<int> phi;  // F vertex -> index
  // F shadow pair -> vertex position inside class P_{phi(u) phi(v)}
  std::vector<std::pair<Pair, int>> psi;
};

// Searches for maps (phi, psi) taking each F edge into a constituent edge.
// phi respects the canonical vertex order of F (an increasing injection into
// the index set) unless all_orderings is set, which tries every injection.
// Deterministic: lexicographically least phi, then least psi. Guards:
// |V(F)| <= |I| <= 8 and class sizes <= 16.
std::optional<EmbeddingWitness> embeds(const ReducedThreeGraph& a,
                                       const ThreeGraph& f,
                                       bool all_orderings = false);

// Re-checks a witness directly against the embedding conditions, independent
// of the search.
bool check_embedding(const ReducedThreeGraph& a, const ThreeGraph& f,
                     const EmbeddingWitness& w);

// Bipartite projection of constituent A_ijk onto {P_ij, P_ik}: left u and
// top v are adjacent iff at least eps^2*|P_jk| right vertices w complete
// them to a constituent edge.
struct BipartiteProjection {
  Pair left_class{}, top_class{};
  int left_size = 0, top_size = 0;
  double eps = 0.0;
  std::vector<std::vector<char>> adj;  // [left][top]
  int top_degree(int v) const;
};

BipartiteProjection project_Q(const ReducedThreeGraph& a, int i, int j, int k,
                              double eps);

struct DegreeSquareStat {
  long long sum = 0;        // sum over top vertices of degree^2
  double threshold = 0.0;   // (1/4 + eps/2)*|P_ij|^2*|P_ik|
  bool pass = false;
};

DegreeSquareStat degree_square_stat(const BipartiteProjection& q, double eps);

// Top vertices of Q^i_{jk} with degree at least (1/2 + r*eps^2)*|P_ij|.
std::vector<int> s_set(const ReducedThreeGraph& a, int i, int j, int k,
                       double eps, int r);

// Indices 1..index_count, every class of the given size, each constituent
// triple included independently with probability edge_prob. Deterministic in
// the seed.
ReducedThreeGraph random_reduced(int index_count, int class_size,
                                 double edge_prob, uint64_t seed);

// Index relabeling i -> n+1-i with left and right classes swapped; the
// reverse embeds exactly the same graphs.
ReducedThreeGraph reverse(const ReducedThreeGraph& a);

}  // namespace turan
