#pragma once

#include <functional>
#include <string>
#include <vector>

#include "matroidlab/finite_matroid.hpp"

namespace matroidlab {

class EdgeSetExpr;  // infinite-graph module; used by is_finitary_family

enum class AxiomSystem { independence, bases, circuits, closure, rank };

std::string to_string(AxiomSystem s);

/// Failure certificate: the sets/elements violating one axiom, in the roles
/// the axiom's statement uses.  Replaying a witness re-evaluates just that
/// instance of the axiom.
struct Witness {
  std::string axiom;
  std::vector<std::pair<std::string, Subset>> sets;
  std::vector<std::pair<std::string, int>> elements;
};

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  std::optional<Witness> witness;
};

struct AxiomReport {
  AxiomSystem system = AxiomSystem::independence;
  GroundSet ground;
  std::vector<AxiomResult> results;

  bool all_pass() const;
  const AxiomResult& result(const std::string& axiom) const;
};

/// Closure table, total on the power set: map_[mask(X)] = cl(X).
class ClosureTable {
 public:
  ClosureTable() = default;
  ClosureTable(GroundSet ground, std::vector<Subset> map);
  static ClosureTable from_matroid(const FiniteMatroid& m);

  const GroundSet& ground() const { return ground_; }
  Subset cl(Subset x) const { return map_.at(x); }

 private:
  GroundSet ground_;
  std::vector<Subset> map_;  // indexed by subset mask
};

struct RankInput {
  GroundSet ground;
  RelRankTable table;
};

AxiomReport verify_independence(const SetFamily& family);
AxiomReport verify_bases(const SetFamily& family);
AxiomReport verify_circuits(const SetFamily& family);
/// (C1), (C2) and just the classic single-element strong elimination; the
/// infinite-graph module uses this to exhibit the gap on the Bean graph.
AxiomReport verify_circuits_weakened(const SetFamily& family);
AxiomReport verify_closure(const ClosureTable& table);

enum class R4Mode { exhaustive, maximal_union };
AxiomReport verify_rank(const RankInput& input,
                        R4Mode mode = R4Mode::exhaustive);

/// Re-evaluates the axiom instance named by the witness; true means the
/// failure reproduces.
bool replay_witness(const SetFamily& family, const Witness& w);
bool replay_witness(const ClosureTable& table, const Witness& w);
bool replay_witness(const RankInput& input, const Witness& w);

/// Thrown when convert() is handed a source failing its own axioms.
struct ConversionRefused {
  AxiomReport report;
};

/// The five presentations of one matroid.
struct Presentation {
  AxiomSystem kind;
  GroundSet ground;
  SetFamily family;      // independence / bases / circuits
  ClosureTable closure;  // kind == closure
  RankInput rank;        // kind == rank
};

Presentation presentation_of(const FiniteMatroid& m, AxiomSystem kind);
/// Verifies the source against its own axiom system, then rebuilds the
/// matroid; throws ConversionRefused when the source fails.
FiniteMatroid matroid_from(const Presentation& p);
Presentation convert(const Presentation& source, AxiomSystem target);

/// All labeled matroids on n elements (ground labels e1..en), canonically
/// ordered; n is capped at 4.
std::vector<FiniteMatroid> enumerate_matroids(int n);
/// Independent second code path: enumerates base families satisfying
/// (B1)+(B2) and counts their down-closures.
std::size_t count_matroids_via_bases(int n);

/// True iff every circuit expression denotes a finite edge set.
bool is_finitary_family(const std::vector<EdgeSetExpr>& circuits);

}  // namespace matroidlab
