#pragma once

#include <string>
#include <vector>

#include "matroidlab/finite_matroid.hpp"

namespace matroidlab {

/// Finite multigraph: loops and parallel edges allowed, edge labels unique.
class MultiGraph {
 public:
  struct Edge {
    std::string label;
    int u = 0;
    int v = 0;
  };

  MultiGraph() = default;
  MultiGraph(std::vector<std::string> vertices,
             std::vector<std::tuple<std::string, std::string, std::string>>
                 edges);  // (label, u, v)

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const Edge& edge(int i) const { return edges_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_index(const std::string& name) const;
  GroundSet edge_ground() const;

  bool connected() const;
  /// Vertex partition into connected components (component id per vertex).
  std::vector<int> components(Subset removed_edges = kEmptySet) const;
  bool acyclic(Subset edge_set) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

struct Cut {
  Subset side_a = kEmptySet;  // vertex sets as bitmasks over vertex indices
  Subset side_b = kEmptySet;
  Subset crossing = kEmptySet;  // edge subset
};

/// Circuits are the finite cycles: independents are the acyclic edge sets.
FiniteMatroid finite_cycle_matroid(const MultiGraph& g);

/// All minimal non-empty cuts, computed per component.
SetFamily bonds(const MultiGraph& g);
bool is_bond(const MultiGraph& g, Subset f);
/// The bond's bipartition (only valid when is_bond holds).
std::optional<Cut> bond_cut(const MultiGraph& g, Subset f);

/// Circuits are the bonds (all bonds are finite here).
FiniteMatroid finite_bond_matroid(const MultiGraph& g);

/// circuits(dual(M_FC(G))) == bonds(G), cross-checked against a direct
/// search for the minimal edge sets meeting every spanning forest.
bool verify_theorem1(const MultiGraph& g);

/// Maximal independent sets of M_FC: spanning-forest edge sets.
SetFamily spanning_forests(const MultiGraph& g);

}  // namespace matroidlab
