#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace turan {

using Pair = std::array<int, 2>;    // sorted 2-subset of vertices
using Triple = std::array<int, 3>;  // sorted 3-subset of vertices

// A 3-uniform hypergraph on vertices 0..n-1. Edges are stored as sorted
// triples in lexicographic order, so equal graphs compare equal and
// serialize identically. Immutable after construction.
class ThreeGraph {
public:
  ThreeGraph() = default;

  // Normalizes each triple (sorts it) and the edge list (sorts, dedupes).
  // Throws InvalidInput on repeated vertices inside a triple or vertices
  // outside 0..n-1.
  ThreeGraph(int n, std::vector<Triple> edges);

  int vertex_count() const { return n_; }
  const std::vector<Triple>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(const Triple& e) const;

  // All pairs contained in some edge, lexicographically sorted.
  std::vector<Pair> shadow() const;
  // Pairs completing v to an edge. Throws InvalidInput if v out of range.
  std::vector<Pair> link(int v) const;

  // Replaces every vertex by t copies; copy c of vertex v becomes v*t+c.
  // One edge per choice of one copy of each endpoint of each original edge.
  ThreeGraph blow_up(int t) const;

  // Induced subhypergraph on the given vertices, relabeled 0..|S|-1 in
  // ascending order of the original labels.
  ThreeGraph induced(std::vector<int> vertices) const;

  std::vector<int> degrees() const;

  bool operator==(const ThreeGraph&) const = default;

private:
  int n_ = 0;
  std::vector<Triple> edges_;
};

// Injective vertex map (indexed by pattern vertex) under which every edge of
// pattern lands on an edge of host, or nullopt if none exists. Backtracking
// with degree-based candidate pruning; pattern is limited to 12 vertices
// (GuardExceeded beyond that).
std::optional<std::vector<int>> contains_sub(const ThreeGraph& host,
                                             const ThreeGraph& pattern);

// Named graphs: k4minus, f5star, f6star, f7star, f7star_hat, single_edge,
// wheel (param t >= 3), double_pyramid (param t >= 4), edgeless (param n).
// Named vertices a,b,c,d,x,y,z map to 0..6 in that order; wheels use hub 0
// and rim 1..t-1.
ThreeGraph catalog(const std::string& name, std::optional<int> param = {});

// Accepts "name:wheel:6", "wheel:6" or a bare catalog name.
ThreeGraph catalog_spec(const std::string& spec);

std::vector<std::string> catalog_names();

}  // namespace turan
