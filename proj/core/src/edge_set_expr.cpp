#include "matroidlab/edge_set_expr.hpp"

#include <stdexcept>

namespace matroidlab {

EdgeSetExpr EdgeSetExpr::empty(const StructuredGraph& g) {
  EdgeSetExpr e;
  e.words_.assign(g.num_families(), UPWord::zeros());
  return e;
}

EdgeSetExpr EdgeSetExpr::all(const StructuredGraph& g) {
  if (g.num_sporadic() > 64)
    throw std::domain_error("too many sporadic edges (max 64)");
  EdgeSetExpr e;
  for (int i = 0; i < g.num_sporadic(); ++i)
    if (g.sporadic(i).exists) e.sporadic_ |= (std::uint64_t{1} << i);
  for (int f = 0; f < g.num_families(); ++f)
    e.words_.push_back(g.family_exists(f));
  return e;
}

EdgeSetExpr EdgeSetExpr::make(const StructuredGraph& g, std::uint64_t sporadic,
                              std::vector<UPWord> words) {
  if (static_cast<int>(words.size()) != g.num_families())
    throw std::invalid_argument("expression word count mismatch");
  EdgeSetExpr e;
  e.sporadic_ = sporadic & all(g).sporadic_;
  for (int f = 0; f < g.num_families(); ++f)
    e.words_.push_back(words[f] & g.family_exists(f));
  return e;
}

EdgeSetExpr EdgeSetExpr::of_edges(const StructuredGraph& g,
                                  const std::vector<EdgeRef>& edges) {
  EdgeSetExpr e = empty(g);
  for (const EdgeRef& r : edges) e = e.with_edge(g, r);
  return e;
}

EdgeSetExpr EdgeSetExpr::with_edge(const StructuredGraph& g,
                                   const EdgeRef& e) const {
  EdgeSetExpr out = *this;
  if (e.is_sporadic()) {
    if (!g.sporadic(e.sporadic).exists)
      throw std::domain_error("edge was patch-removed: " + g.edge_name(e));
    out.sporadic_ |= (std::uint64_t{1} << e.sporadic);
  } else {
    const int f = g.family_index(e.family);
    if (!g.family_exists(f).at(static_cast<std::size_t>(e.level)))
      throw std::domain_error("no such family edge: " + g.edge_name(e));
    out.words_[f] =
        out.words_[f] | UPWord::singleton(static_cast<std::size_t>(e.level));
  }
  return out;
}

EdgeSetExpr EdgeSetExpr::without_edge(const StructuredGraph& g,
                                      const EdgeRef& e) const {
  EdgeSetExpr out = *this;
  if (e.is_sporadic()) {
    out.sporadic_ &= ~(std::uint64_t{1} << e.sporadic);
  } else {
    const int f = g.family_index(e.family);
    out.words_[f] = out.words_[f].minus(
        UPWord::singleton(static_cast<std::size_t>(e.level)));
  }
  return out;
}

bool EdgeSetExpr::contains(const StructuredGraph& g, const EdgeRef& e) const {
  if (e.is_sporadic()) return (sporadic_ >> e.sporadic) & 1u;
  return words_.at(g.family_index(e.family)).at(static_cast<std::size_t>(e.level));
}

bool EdgeSetExpr::empty() const {
  if (sporadic_ != 0) return false;
  for (const auto& w : words_)
    if (!w.none()) return false;
  return true;
}

bool EdgeSetExpr::is_finite() const {
  for (const auto& w : words_)
    if (!w.is_finite()) return false;
  return true;
}

std::optional<std::size_t> EdgeSetExpr::size() const {
  if (!is_finite()) return std::nullopt;
  std::size_t n = static_cast<std::size_t>(__builtin_popcountll(sporadic_));
  for (const auto& w : words_) n += *w.count();
  return n;
}

EdgeSetExpr EdgeSetExpr::unite(const EdgeSetExpr& o) const {
  EdgeSetExpr e = *this;
  e.sporadic_ |= o.sporadic_;
  for (std::size_t f = 0; f < words_.size(); ++f)
    e.words_[f] = words_[f] | o.words_.at(f);
  return e;
}

EdgeSetExpr EdgeSetExpr::intersect(const EdgeSetExpr& o) const {
  EdgeSetExpr e = *this;
  e.sporadic_ &= o.sporadic_;
  for (std::size_t f = 0; f < words_.size(); ++f)
    e.words_[f] = words_[f] & o.words_.at(f);
  return e;
}

EdgeSetExpr EdgeSetExpr::minus(const EdgeSetExpr& o) const {
  EdgeSetExpr e = *this;
  e.sporadic_ &= ~o.sporadic_;
  for (std::size_t f = 0; f < words_.size(); ++f)
    e.words_[f] = words_[f].minus(o.words_.at(f));
  return e;
}

EdgeSetExpr EdgeSetExpr::complement(const StructuredGraph& g) const {
  return all(g).minus(*this);
}

bool EdgeSetExpr::subset_of(const EdgeSetExpr& o) const {
  if ((sporadic_ & ~o.sporadic_) != 0) return false;
  for (std::size_t f = 0; f < words_.size(); ++f)
    if (!words_[f].subset_of(o.words_.at(f))) return false;
  return true;
}

std::vector<EdgeRef> EdgeSetExpr::edges_below(const StructuredGraph& g,
                                              std::size_t bound) const {
  std::vector<EdgeRef> out;
  for (int i = 0; i < g.num_sporadic(); ++i)
    if ((sporadic_ >> i) & 1u) out.push_back(EdgeRef::sporadic_edge(i));
  for (int f = 0; f < g.num_families(); ++f)
    for (std::size_t lvl : words_[f].ones_below(bound))
      out.push_back(EdgeRef::family_edge(g.family(f), static_cast<long>(lvl)));
  return out;
}

std::vector<EdgeRef> EdgeSetExpr::representative_edges(
    const StructuredGraph& g) const {
  const std::size_t bound =
      std::max(max_preperiod(), g.rules_preperiod()) +
      2 * lcm_size(period_lcm(), g.rules_period());
  return edges_below(g, bound);
}

std::size_t EdgeSetExpr::max_preperiod() const {
  std::size_t p = 0;
  for (const auto& w : words_) p = std::max(p, w.pre_len());
  return p;
}

std::size_t EdgeSetExpr::period_lcm() const {
  std::size_t p = 1;
  for (const auto& w : words_) p = lcm_size(p, w.period_len());
  return p;
}

}  // namespace matroidlab
