#include "matroidlab/finite_matroid.hpp"

#include <algorithm>
#include <stdexcept>

namespace matroidlab {

void RelRankTable::set(Subset a, Subset b, RankValue v) {
  if (!subset_subseteq(b, a) || !subset_subseteq(a, ground_.full()))
    throw std::domain_error("rank table entry must be a nested pair B <= A <= E");
  entries_[{a, b}] = v;
}

std::optional<RankValue> RelRankTable::get(Subset a, Subset b) const {
  auto it = entries_.find({a, b});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool RelRankTable::total() const {
  for (Subset a : all_subsets(ground_.full()))
    for (Subset b : all_subsets(a))
      if (!entries_.count({a, b})) return false;
  return true;
}

namespace {

bool check_independence_axioms(const SetFamily& fam, std::string* why) {
  const auto& mem = fam.members();
  if (!fam.contains(kEmptySet)) {
    if (why) *why = "(I1) empty set not independent";
    return false;
  }
  for (Subset m : mem) {
    Subset t = m;
    while (t != 0) {
      const int i = __builtin_ctz(t);
      t = subset_without(t, i);
      if (!fam.contains(subset_without(m, i))) {
        if (why) *why = "(I2) family not closed under subsets";
        return false;
      }
    }
  }
  const SetFamily maxima = fam.maximal_members();
  for (Subset i_set : mem) {
    if (maxima.contains(i_set)) continue;
    for (Subset ip : maxima.members()) {
      bool augmented = false;
      Subset cand = ip & ~i_set;
      while (cand != 0) {
        const int x = __builtin_ctz(cand);
        cand = subset_without(cand, x);
        if (fam.contains(subset_with(i_set, x))) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        if (why) *why = "(I3) augmentation fails";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

FiniteMatroid FiniteMatroid::checked(SetFamily independents) {
  std::string why;
  if (!check_independence_axioms(independents, &why))
    throw std::invalid_argument("not a matroid: " + why);
  return FiniteMatroid(std::move(independents), true);
}

FiniteMatroid FiniteMatroid::unchecked(SetFamily independents) {
  return FiniteMatroid(std::move(independents), false);
}

FiniteMatroid FiniteMatroid::free_matroid(GroundSet ground) {
  Subset full = ground.full();
  return FiniteMatroid(SetFamily(std::move(ground), all_subsets(full)), true);
}

FiniteMatroid FiniteMatroid::uniform(GroundSet ground, int rank) {
  std::vector<Subset> mem;
  for (Subset s : all_subsets(ground.full()))
    if (subset_size(s) <= rank) mem.push_back(s);
  return FiniteMatroid(SetFamily(std::move(ground), std::move(mem)), true);
}

bool FiniteMatroid::is_independent(Subset s) const {
  if (!subset_subseteq(s, ground().full()))
    throw std::domain_error("subset not within the ground set");
  return independents_.contains(s);
}

bool FiniteMatroid::is_independent_labels(const std::vector<std::string>& labels) const {
  return is_independent(ground().parse_subset(labels));
}

Subset FiniteMatroid::closure(Subset x) const {
  if (!subset_subseteq(x, ground().full()))
    throw std::domain_error("subset not within the ground set");
  Subset cl = x;
  for (int e = 0; e < ground().size(); ++e) {
    if (subset_contains(cl, e)) continue;
    for (Subset i_set : independents_.members()) {
      if (!subset_subseteq(i_set, x)) continue;
      if (!independents_.contains(subset_with(i_set, e))) {
        cl = subset_with(cl, e);
        break;
      }
    }
  }
  return cl;
}

unsigned FiniteMatroid::relative_rank(Subset a, Subset b) const {
  if (!subset_subseteq(b, a))
    throw std::domain_error("relative rank needs B <= A");
  if (!subset_subseteq(a, ground().full()))
    throw std::domain_error("subset not within the ground set");
  // Maximal independent subsets of B.
  std::vector<Subset> maximal_in_b;
  for (Subset j : independents_.members()) {
    if (!subset_subseteq(j, b)) continue;
    bool maximal = true;
    for (Subset j2 : independents_.members())
      if (j2 != j && subset_subseteq(j2, b) && subset_subseteq(j, j2)) {
        maximal = false;
        break;
      }
    if (maximal) maximal_in_b.push_back(j);
  }
  unsigned best = 0;
  for (Subset j : maximal_in_b)
    for (Subset i_set : independents_.members())
      if (subset_subseteq(i_set, a) && subset_subseteq(j, i_set))
        best = std::max(best, static_cast<unsigned>(subset_size(i_set & ~j)));
  return best;
}

SetFamily FiniteMatroid::bases() const {
  return independents_.maximal_members();
}

SetFamily FiniteMatroid::circuits() const {
  std::vector<Subset> dep;
  for (Subset s : all_subsets(ground().full()))
    if (!independents_.contains(s)) dep.push_back(s);
  return SetFamily(ground(), std::move(dep)).minimal_members();
}

FiniteMatroid FiniteMatroid::dual() const {
  const Subset full = ground().full();
  std::vector<Subset> co_bases;
  for (Subset b : bases().members()) co_bases.push_back(full & ~b);
  return FiniteMatroid(SetFamily(ground(), std::move(co_bases)).down_closure(),
                       validated_);
}

SetFamily FiniteMatroid::cocircuits() const {
  return dual().circuits();
}

FiniteMatroid FiniteMatroid::minor(Subset del, Subset contract) const {
  if ((del & contract) != 0)
    throw std::domain_error("minor: delete and contract overlap");
  const Subset rest = ground().full() & ~(del | contract);
  // A maximal independent subset of the contracted part; the minor does not
  // depend on the choice.
  Subset j = kEmptySet;
  for (Subset cand : independents_.members())
    if (subset_subseteq(cand, contract) && subset_size(cand) > subset_size(j))
      j = cand;

  std::vector<std::string> labels;
  std::vector<int> old_index;
  for (int i = 0; i < ground().size(); ++i)
    if (subset_contains(rest, i)) {
      labels.push_back(ground().label(i));
      old_index.push_back(i);
    }
  GroundSet g2(labels);
  std::vector<Subset> mem;
  for (Subset s2 : all_subsets(g2.full())) {
    Subset s = kEmptySet;
    for (int i = 0; i < g2.size(); ++i)
      if (subset_contains(s2, i)) s = subset_with(s, old_index[i]);
    if (independents_.contains(s | j)) mem.push_back(s2);
  }
  return FiniteMatroid(SetFamily(std::move(g2), std::move(mem)), validated_);
}

Subset FiniteMatroid::fundamental_circuit(Subset base, int e) const {
  if (!bases().contains(base))
    throw std::domain_error("fundamental_circuit: not a base");
  if (subset_contains(base, e))
    throw std::domain_error("fundamental_circuit: element already in base");
  const Subset be = subset_with(base, e);
  for (Subset c : circuits().members())
    if (subset_contains(c, e) && subset_subseteq(c, be)) return c;
  throw std::logic_error("base extension created no circuit");
}

RelRankTable FiniteMatroid::rank_table() const {
  RelRankTable t(ground());
  for (Subset a : all_subsets(ground().full()))
    for (Subset b : all_subsets(a))
      t.set(a, b, RankValue::finite(relative_rank(a, b)));
  return t;
}

}  // namespace matroidlab
