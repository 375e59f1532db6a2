#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "matroidlab/multigraph.hpp"
#include "matroidlab/upword.hpp"

namespace matroidlab {

/// Vertex of a structured graph: a core vertex or v(tail, level).
struct VertexRef {
  int core = -1;   // core vertex index, or -1
  int tail = -1;   // tail index, or -1
  long level = 0;  // tail level

  static VertexRef core_vertex(int v) { return {v, -1, 0}; }
  static VertexRef tail_vertex(int t, long lvl) { return {-1, t, lvl}; }
  bool is_core() const { return core >= 0; }
  bool operator==(const VertexRef&) const = default;
  auto operator<=>(const VertexRef&) const = default;
};

/// Families of edges generated by the rules; a family member is indexed by
/// its level i.
enum class FamilyKind { rail, cross, coretail };

struct FamilyRef {
  FamilyKind kind = FamilyKind::rail;
  int index = 0;  // tail index for rail, rule index otherwise
  bool operator==(const FamilyRef&) const = default;
  auto operator<=>(const FamilyRef&) const = default;
};

/// Edge of a structured graph: a sporadic edge (core or patch-added) or
/// member i of a family.
struct EdgeRef {
  int sporadic = -1;  // index into sporadic list, or -1
  FamilyRef family;
  long level = 0;
  static EdgeRef sporadic_edge(int i) { return {i, {}, 0}; }
  static EdgeRef family_edge(FamilyRef f, long lvl) { return {-1, f, lvl}; }
  bool is_sporadic() const { return sporadic >= 0; }
  bool operator==(const EdgeRef&) const = default;
  auto operator<=>(const EdgeRef&) const = default;
};

struct CrossRule {
  int tail_a = 0;
  int tail_b = 0;
  long delta = 0;
  std::size_t start = 0;
  std::size_t period = 1;
  std::vector<std::size_t> residues;
};

struct CoreTailRule {
  int core_vertex = 0;
  int tail = 0;
  std::size_t start = 0;
  std::size_t period = 1;
  std::vector<std::size_t> residues;
};

/// An edge-end: equivalence class of tails not separable by finitely many
/// edges, together with the core vertices dominating it (vertices sharing
/// all open neighbourhoods with the end).
struct EdgeEnd {
  std::vector<int> tails;
  std::vector<int> dominating_vertices;
};

/// Finitely-presented infinite graph: finite core, periodic ray tails, rule
/// generated cross/core-tail edges, and a finite patch of additions and
/// removals.
class StructuredGraph {
 public:
  struct SporadicEdge {
    std::string label;
    VertexRef u, v;
    bool exists = true;  // false when patch-removed (core edges only)
  };

  StructuredGraph() = default;
  StructuredGraph(MultiGraph core, std::vector<std::string> tail_names);

  void add_cross_rule(CrossRule r);
  void add_coretail_rule(CoreTailRule r);
  void patch_add_edge(const std::string& label, VertexRef u, VertexRef v);
  void patch_remove(EdgeRef e);
  /// Recomputes family words and ends; call after the last mutation.
  void finalize();

  const MultiGraph& core() const { return core_; }
  int num_tails() const { return static_cast<int>(tail_names_.size()); }
  const std::string& tail_name(int t) const { return tail_names_.at(t); }
  int tail_index(const std::string& name) const;
  const std::vector<CrossRule>& cross_rules() const { return cross_rules_; }
  const std::vector<CoreTailRule>& coretail_rules() const { return coretail_rules_; }

  int num_sporadic() const { return static_cast<int>(sporadic_.size()); }
  const SporadicEdge& sporadic(int i) const { return sporadic_.at(i); }

  int num_families() const { return static_cast<int>(families_.size()); }
  FamilyRef family(int f) const { return families_.at(f); }
  int family_index(FamilyRef f) const;
  std::string family_name(int f) const;
  std::optional<int> family_by_name(const std::string& name) const;
  /// Which levels of family f carry an edge (rules and removals applied).
  const UPWord& family_exists(int f) const { return family_exists_.at(f); }
  std::pair<VertexRef, VertexRef> family_endpoints(int f, long level) const;

  std::pair<VertexRef, VertexRef> endpoints(EdgeRef e) const;
  std::string edge_name(EdgeRef e) const;

  /// Largest preperiod and lcm of periods over all family words.
  std::size_t rules_preperiod() const;
  std::size_t rules_period() const;
  /// Largest |delta| over cross rules.
  long max_delta() const;

  const std::vector<EdgeEnd>& ends() const { return ends_; }
  int end_of_tail(int t) const { return end_of_tail_.at(t); }
  /// Core vertices dominating end `e` (indistinguishable vertex-end pairs).
  const std::vector<int>& dominators(int end) const {
    return ends_.at(end).dominating_vertices;
  }
  std::optional<int> dominated_end_of_vertex(int core_v) const;
  /// True iff some end is dominated by a vertex, the structured-class form
  /// of containing a subdivision of the forbidden configuration for the
  /// algebraic cycle matroid.
  bool has_dominated_end() const;

 private:
  MultiGraph core_;
  std::vector<std::string> tail_names_;
  std::vector<CrossRule> cross_rules_;
  std::vector<CoreTailRule> coretail_rules_;
  std::vector<SporadicEdge> sporadic_;
  std::vector<EdgeRef> removed_family_;
  std::vector<FamilyRef> families_;
  std::vector<UPWord> family_exists_;
  std::vector<EdgeEnd> ends_;
  std::vector<int> end_of_tail_;
  bool finalized_ = false;
};

bool bean_check(const StructuredGraph& g);

}  // namespace matroidlab
