#pragma once

#include <optional>

#include "matroidlab/set_family.hpp"

namespace matroidlab {

/// Relative rank values; the infinity marker exists in the data model but is
/// never produced for finite ground sets.
struct RankValue {
  bool infinite = false;
  unsigned value = 0;

  static RankValue finite(unsigned v) { return {false, v}; }
  static RankValue inf() { return {true, 0}; }
  bool operator==(const RankValue&) const = default;
};

/// Table of relative ranks r(A|B) over nested pairs B <= A.
class RelRankTable {
 public:
  RelRankTable() = default;
  explicit RelRankTable(GroundSet ground) : ground_(std::move(ground)) {}

  const GroundSet& ground() const { return ground_; }
  void set(Subset a, Subset b, RankValue v);
  std::optional<RankValue> get(Subset a, Subset b) const;
  /// True when every nested pair has an entry.
  bool total() const;

 private:
  GroundSet ground_;
  std::map<std::pair<Subset, Subset>, RankValue> entries_;
};

/// Finite matroid presented by its independence family.  `validated` means
/// (I1), (I2), (I3) were checked at construction; (IM) is automatic on
/// finite ground sets.  The unchecked constructor exists so that the axiom
/// verifiers can hold arbitrary set systems.
class FiniteMatroid {
 public:
  FiniteMatroid() = default;

  /// Verifies (I1)-(I3); throws std::invalid_argument on failure.
  static FiniteMatroid checked(SetFamily independents);
  static FiniteMatroid unchecked(SetFamily independents);

  static FiniteMatroid free_matroid(GroundSet ground);
  static FiniteMatroid uniform(GroundSet ground, int rank);

  const GroundSet& ground() const { return independents_.ground(); }
  const SetFamily& independents() const { return independents_; }
  bool validated() const { return validated_; }

  bool is_independent(Subset s) const;
  bool is_independent_labels(const std::vector<std::string>& labels) const;

  /// cl(X) = X + {x : exists I <= X independent with I+x dependent}.
  Subset closure(Subset x) const;
  /// r(A|B) = max{|I \ J| : J <= I, I independent in A, J maximal
  /// independent in B}; requires B <= A.
  unsigned relative_rank(Subset a, Subset b) const;
  unsigned rank(Subset a) const { return relative_rank(a, kEmptySet); }

  SetFamily bases() const;
  SetFamily circuits() const;
  SetFamily cocircuits() const;
  FiniteMatroid dual() const;
  /// Standard minor; delete and contract must be disjoint.
  FiniteMatroid minor(Subset del, Subset contract) const;
  /// The unique circuit inside base+e; requires base a base, e outside it.
  Subset fundamental_circuit(Subset base, int e) const;

  RelRankTable rank_table() const;

  bool operator==(const FiniteMatroid& o) const {
    return independents_ == o.independents_;
  }

 private:
  explicit FiniteMatroid(SetFamily fam, bool validated)
      : independents_(std::move(fam)), validated_(validated) {}

  SetFamily independents_;
  bool validated_ = false;
};

}  // namespace matroidlab
