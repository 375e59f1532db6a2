#include "matroidlab/structured_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matroidlab {

StructuredGraph::StructuredGraph(MultiGraph core,
                                 std::vector<std::string> tail_names)
    : core_(std::move(core)), tail_names_(std::move(tail_names)) {
  std::set<std::string> seen(tail_names_.begin(), tail_names_.end());
  if (seen.size() != tail_names_.size())
    throw std::invalid_argument("duplicate tail name");
  for (const auto& n : tail_names_)
    if (std::find(core_.vertices().begin(), core_.vertices().end(), n) !=
        core_.vertices().end())
      throw std::invalid_argument("tail name collides with core vertex: " + n);
  for (int i = 0; i < core_.num_edges(); ++i) {
    const auto& e = core_.edge(i);
    sporadic_.push_back({e.label, VertexRef::core_vertex(e.u),
                         VertexRef::core_vertex(e.v), true});
  }
}

int StructuredGraph::tail_index(const std::string& name) const {
  auto it = std::find(tail_names_.begin(), tail_names_.end(), name);
  if (it == tail_names_.end())
    throw std::domain_error("unknown tail: " + name);
  return static_cast<int>(it - tail_names_.begin());
}

void StructuredGraph::add_cross_rule(CrossRule r) {
  if (r.period == 0) throw std::invalid_argument("cross rule period 0");
  if (r.tail_a < 0 || r.tail_a >= num_tails() || r.tail_b < 0 ||
      r.tail_b >= num_tails())
    throw std::domain_error("cross rule tail out of range");
  cross_rules_.push_back(std::move(r));
  finalized_ = false;
}

void StructuredGraph::add_coretail_rule(CoreTailRule r) {
  if (r.period == 0) throw std::invalid_argument("coretail rule period 0");
  if (r.core_vertex < 0 || r.core_vertex >= core_.num_vertices())
    throw std::domain_error("coretail rule vertex out of range");
  if (r.tail < 0 || r.tail >= num_tails())
    throw std::domain_error("coretail rule tail out of range");
  coretail_rules_.push_back(std::move(r));
  finalized_ = false;
}

void StructuredGraph::patch_add_edge(const std::string& label, VertexRef u,
                                     VertexRef v) {
  for (const auto& s : sporadic_)
    if (s.label == label)
      throw std::invalid_argument("duplicate edge label: " + label);
  sporadic_.push_back({label, u, v, true});
  finalized_ = false;
}

void StructuredGraph::patch_remove(EdgeRef e) {
  if (e.is_sporadic()) {
    sporadic_.at(e.sporadic).exists = false;
  } else {
    removed_family_.push_back(e);
  }
  finalized_ = false;
}

void StructuredGraph::finalize() {
  families_.clear();
  family_exists_.clear();
  for (int t = 0; t < num_tails(); ++t) {
    families_.push_back({FamilyKind::rail, t});
    family_exists_.push_back(UPWord::ones());
  }
  for (int c = 0; c < static_cast<int>(cross_rules_.size()); ++c) {
    const auto& r = cross_rules_[c];
    families_.push_back({FamilyKind::cross, c});
    UPWord w = UPWord::arithmetic(r.start, r.period, r.residues);
    if (r.delta < 0) {
      // levels i with i + delta < 0 generate nothing
      const UPWord valid = ~UPWord::finite(
          std::vector<bool>(static_cast<std::size_t>(-r.delta), true));
      w = w & valid;
    }
    family_exists_.push_back(w);
  }
  for (int c = 0; c < static_cast<int>(coretail_rules_.size()); ++c) {
    const auto& r = coretail_rules_[c];
    families_.push_back({FamilyKind::coretail, c});
    family_exists_.push_back(UPWord::arithmetic(r.start, r.period, r.residues));
  }
  for (const EdgeRef& e : removed_family_) {
    const int f = family_index(e.family);
    family_exists_[f] =
        family_exists_[f].minus(UPWord::singleton(static_cast<std::size_t>(e.level)));
  }

  // Edge-ends: tails merged by a chain of infinite rule families; a core
  // vertex with an infinite coretail family into a tail is inseparable from
  // that tail's end as well, and merges any two such tails.
  const int nt = num_tails();
  std::vector<int> parent(nt);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int c = 0; c < static_cast<int>(cross_rules_.size()); ++c)
    if (!family_exists_[nt + c].is_finite())
      unite(cross_rules_[c].tail_a, cross_rules_[c].tail_b);
  std::vector<std::vector<int>> vert_infinite_tails(core_.num_vertices());
  for (int c = 0; c < static_cast<int>(coretail_rules_.size()); ++c) {
    const int f = nt + static_cast<int>(cross_rules_.size()) + c;
    if (!family_exists_[f].is_finite())
      vert_infinite_tails[coretail_rules_[c].core_vertex].push_back(
          coretail_rules_[c].tail);
  }
  for (const auto& ts : vert_infinite_tails)
    for (std::size_t k = 1; k < ts.size(); ++k) unite(ts[0], ts[k]);

  ends_.clear();
  end_of_tail_.assign(nt, -1);
  for (int t = 0; t < nt; ++t) {
    if (find(t) != t) continue;
    EdgeEnd e;
    for (int s = 0; s < nt; ++s)
      if (find(s) == t) e.tails.push_back(s);
    ends_.push_back(std::move(e));
  }
  for (int i = 0; i < static_cast<int>(ends_.size()); ++i)
    for (int t : ends_[i].tails) end_of_tail_[t] = i;
  for (int v = 0; v < core_.num_vertices(); ++v)
    for (int t : vert_infinite_tails[v]) {
      auto& dom = ends_[end_of_tail_[t]].dominating_vertices;
      if (std::find(dom.begin(), dom.end(), v) == dom.end()) dom.push_back(v);
    }
  finalized_ = true;
}

int StructuredGraph::family_index(FamilyRef f) const {
  for (int i = 0; i < num_families(); ++i)
    if (families_[i] == f) return i;
  throw std::domain_error("unknown edge family");
}

std::string StructuredGraph::family_name(int f) const {
  const FamilyRef r = families_.at(f);
  switch (r.kind) {
    case FamilyKind::rail: return "rail:" + tail_names_.at(r.index);
    case FamilyKind::cross: return "cross:" + std::to_string(r.index);
    case FamilyKind::coretail: return "coretail:" + std::to_string(r.index);
  }
  return "?";
}

std::optional<int> StructuredGraph::family_by_name(const std::string& name) const {
  for (int f = 0; f < num_families(); ++f)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::pair<VertexRef, VertexRef> StructuredGraph::family_endpoints(
    int f, long level) const {
  const FamilyRef r = families_.at(f);
  switch (r.kind) {
    case FamilyKind::rail:
      return {VertexRef::tail_vertex(r.index, level),
              VertexRef::tail_vertex(r.index, level + 1)};
    case FamilyKind::cross: {
      const auto& c = cross_rules_.at(r.index);
      return {VertexRef::tail_vertex(c.tail_a, level),
              VertexRef::tail_vertex(c.tail_b, level + c.delta)};
    }
    case FamilyKind::coretail: {
      const auto& c = coretail_rules_.at(r.index);
      return {VertexRef::core_vertex(c.core_vertex),
              VertexRef::tail_vertex(c.tail, level)};
    }
  }
  throw std::logic_error("bad family");
}

std::pair<VertexRef, VertexRef> StructuredGraph::endpoints(EdgeRef e) const {
  if (e.is_sporadic()) {
    const auto& s = sporadic_.at(e.sporadic);
    return {s.u, s.v};
  }
  return family_endpoints(family_index(e.family), e.level);
}

std::string StructuredGraph::edge_name(EdgeRef e) const {
  if (e.is_sporadic()) return sporadic_.at(e.sporadic).label;
  return family_name(family_index(e.family)) + "[" +
         std::to_string(e.level) + "]";
}

std::size_t StructuredGraph::rules_preperiod() const {
  std::size_t p = 0;
  for (const auto& w : family_exists_) p = std::max(p, w.pre_len());
  return p;
}

std::size_t StructuredGraph::rules_period() const {
  std::size_t p = 1;
  for (const auto& w : family_exists_) p = lcm_size(p, w.period_len());
  return p;
}

long StructuredGraph::max_delta() const {
  long d = 0;
  for (const auto& r : cross_rules_) d = std::max(d, std::labs(r.delta));
  return d;
}

std::optional<int> StructuredGraph::dominated_end_of_vertex(int core_v) const {
  for (int e = 0; e < static_cast<int>(ends_.size()); ++e)
    for (int v : ends_[e].dominating_vertices)
      if (v == core_v) return e;
  return std::nullopt;
}

bool StructuredGraph::has_dominated_end() const {
  for (const auto& e : ends_)
    if (!e.dominating_vertices.empty()) return true;
  return false;
}

bool bean_check(const StructuredGraph& g) {
  return g.has_dominated_end();
}

}  // namespace matroidlab
