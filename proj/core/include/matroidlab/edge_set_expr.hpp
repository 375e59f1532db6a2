#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matroidlab/structured_graph.hpp"

namespace matroidlab {

/// Possibly-infinite edge set of a structured graph: a finite part over the
/// sporadic edges plus one ultimately periodic membership word per edge
/// family.  Kept canonical (intersected with the graph's existence words),
/// so equality of denotations is operator==.
class EdgeSetExpr {
 public:
  EdgeSetExpr() = default;

  static EdgeSetExpr empty(const StructuredGraph& g);
  static EdgeSetExpr all(const StructuredGraph& g);
  static EdgeSetExpr of_edges(const StructuredGraph& g,
                              const std::vector<EdgeRef>& edges);
  static EdgeSetExpr make(const StructuredGraph& g, std::uint64_t sporadic,
                          std::vector<UPWord> words);

  std::uint64_t sporadic_mask() const { return sporadic_; }
  const UPWord& word(int f) const { return words_.at(f); }
  int num_families() const { return static_cast<int>(words_.size()); }

  bool contains(const StructuredGraph& g, const EdgeRef& e) const;
  bool empty() const;
  bool is_finite() const;
  /// Number of edges, nullopt when infinite.
  std::optional<std::size_t> size() const;

  EdgeSetExpr unite(const EdgeSetExpr& o) const;
  EdgeSetExpr intersect(const EdgeSetExpr& o) const;
  EdgeSetExpr minus(const EdgeSetExpr& o) const;
  EdgeSetExpr complement(const StructuredGraph& g) const;
  EdgeSetExpr with_edge(const StructuredGraph& g, const EdgeRef& e) const;
  EdgeSetExpr without_edge(const StructuredGraph& g, const EdgeRef& e) const;

  bool subset_of(const EdgeSetExpr& o) const;
  bool operator==(const EdgeSetExpr& o) const = default;

  /// All member edges with family level < bound (sporadics always included).
  std::vector<EdgeRef> edges_below(const StructuredGraph& g,
                                   std::size_t bound) const;
  /// Representative members: every sporadic edge plus, per family, every
  /// member with level below the graph's preperiod + 2 periods.  Beyond
  /// that, membership repeats periodically.
  std::vector<EdgeRef> representative_edges(const StructuredGraph& g) const;

  std::size_t max_preperiod() const;
  std::size_t period_lcm() const;

 private:
  std::uint64_t sporadic_ = 0;
  std::vector<UPWord> words_;
};

}  // namespace matroidlab
