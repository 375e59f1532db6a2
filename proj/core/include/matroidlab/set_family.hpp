#pragma once

#include <vector>

#include "matroidlab/ground_set.hpp"

namespace matroidlab {

/// Finite collection of subsets of a ground set, deduplicated and kept in
/// canonical (lexicographic) order.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(GroundSet ground, std::vector<Subset> members);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Subset>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(Subset s) const;

  /// Subsets of members (down-closure, includes the empty set when the
  /// family is non-empty).
  SetFamily down_closure() const;
  /// Members maximal under inclusion.
  SetFamily maximal_members() const;
  /// Members minimal under inclusion.
  SetFamily minimal_members() const;

  bool operator==(const SetFamily& o) const {
    return ground_ == o.ground_ && members_ == o.members_;
  }

 private:
  GroundSet ground_;
  std::vector<Subset> members_;
};

/// All subsets of `full`, ascending as masks.
std::vector<Subset> all_subsets(Subset full);

}  // namespace matroidlab
