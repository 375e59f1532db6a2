#include "matroidlab/axioms.hpp"

#include <algorithm>
#include <stdexcept>

#include "matroidlab/edge_set_expr.hpp"

namespace matroidlab {

std::string to_string(AxiomSystem s) {
  switch (s) {
    case AxiomSystem::independence: return "independence";
    case AxiomSystem::bases: return "bases";
    case AxiomSystem::circuits: return "circuits";
    case AxiomSystem::closure: return "closure";
    case AxiomSystem::rank: return "rank";
  }
  return "?";
}

bool AxiomReport::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.pass; });
}

const AxiomResult& AxiomReport::result(const std::string& axiom) const {
  for (const auto& r : results)
    if (r.axiom == axiom) return r;
  throw std::out_of_range("no such axiom in report: " + axiom);
}

ClosureTable::ClosureTable(GroundSet ground, std::vector<Subset> map)
    : ground_(std::move(ground)), map_(std::move(map)) {
  const std::size_t want = std::size_t{1} << ground_.size();
  if (map_.size() != want)
    throw std::domain_error("closure table must be total on the power set");
  for (Subset v : map_)
    if (!subset_subseteq(v, ground_.full()))
      throw std::domain_error("closure value outside the ground set");
}

ClosureTable ClosureTable::from_matroid(const FiniteMatroid& m) {
  std::vector<Subset> map;
  for (Subset x : all_subsets(m.ground().full())) map.push_back(m.closure(x));
  return ClosureTable(m.ground(), std::move(map));
}

namespace {

AxiomResult pass_result(const std::string& axiom) { return {axiom, true, {}}; }

AxiomResult fail_result(Witness w) {
  AxiomResult r;
  r.axiom = w.axiom;
  r.pass = false;
  r.witness = std::move(w);
  return r;
}

/// Literal check of (M) for a family of "independent" sets: for every I in
/// the family and every X with I <= X <= E, search {I' : I <= I' <= X} for a
/// maximal element.  Trivially true on finite ground sets but executed as
/// stated.
AxiomResult check_m_axiom(const std::string& name, const GroundSet& g,
                          const std::vector<Subset>& indep) {
  for (Subset i_set : indep) {
    const Subset rest = g.full() & ~i_set;
    for (Subset extra : all_subsets(rest)) {
      const Subset x = i_set | extra;
      std::vector<Subset> between;
      for (Subset c : indep)
        if (subset_subseteq(i_set, c) && subset_subseteq(c, x))
          between.push_back(c);
      bool has_maximal = false;
      for (Subset m : between) {
        bool maximal = true;
        for (Subset o : between)
          if (o != m && subset_subseteq(m, o)) {
            maximal = false;
            break;
          }
        if (maximal) {
          has_maximal = true;
          break;
        }
      }
      if (!has_maximal) {
        Witness w;
        w.axiom = name;
        w.sets = {{"I", i_set}, {"X", x}};
        return fail_result(std::move(w));
      }
    }
  }
  return pass_result(name);
}

std::vector<Subset> circuit_independent_sets(const SetFamily& circuits) {
  std::vector<Subset> indep;
  for (Subset s : all_subsets(circuits.ground().full())) {
    bool ok = true;
    for (Subset c : circuits.members())
      if (subset_subseteq(c, s)) {
        ok = false;
        break;
      }
    if (ok) indep.push_back(s);
  }
  return indep;
}

std::vector<Subset> closure_independent_sets(const ClosureTable& t) {
  std::vector<Subset> indep;
  for (Subset s : all_subsets(t.ground().full())) {
    bool ok = true;
    Subset rem = s;
    while (rem != 0) {
      const int x = __builtin_ctz(rem);
      rem = subset_without(rem, x);
      if (subset_contains(t.cl(subset_without(s, x)), x)) {
        ok = false;
        break;
      }
    }
    if (ok) indep.push_back(s);
  }
  return indep;
}

unsigned rank_of(const RankInput& in, Subset a, Subset b) {
  auto v = in.table.get(a, b);
  if (!v) throw std::domain_error("rank table not total on nested pairs");
  if (v->infinite) return ~0u;  // infinity marker dominates comparisons
  return v->value;
}

std::vector<Subset> rank_independent_sets(const RankInput& in) {
  std::vector<Subset> indep;
  for (Subset s : all_subsets(in.ground.full())) {
    bool ok = true;
    Subset rem = s;
    while (rem != 0) {
      const int x = __builtin_ctz(rem);
      rem = subset_without(rem, x);
      if (rank_of(in, s, subset_without(s, x)) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) indep.push_back(s);
  }
  return indep;
}

}  // namespace

AxiomReport verify_independence(const SetFamily& family) {
  AxiomReport rep;
  rep.system = AxiomSystem::independence;
  rep.ground = family.ground();

  if (family.contains(kEmptySet)) {
    rep.results.push_back(pass_result("I1"));
  } else {
    Witness w;
    w.axiom = "I1";
    rep.results.push_back(fail_result(std::move(w)));
  }

  AxiomResult i2 = pass_result("I2");
  for (Subset m : family.members()) {
    Subset rem = m;
    while (rem != 0 && i2.pass) {
      const int x = __builtin_ctz(rem);
      rem = subset_without(rem, x);
      if (!family.contains(subset_without(m, x))) {
        Witness w;
        w.axiom = "I2";
        w.sets = {{"I", m}};
        w.elements = {{"x", x}};
        i2 = fail_result(std::move(w));
      }
    }
    if (!i2.pass) break;
  }
  rep.results.push_back(i2);

  AxiomResult i3 = pass_result("I3");
  const SetFamily maxima = family.maximal_members();
  for (Subset i_set : family.members()) {
    if (!i3.pass) break;
    if (maxima.contains(i_set)) continue;
    for (Subset ip : maxima.members()) {
      bool augmented = false;
      Subset cand = ip & ~i_set;
      while (cand != 0) {
        const int x = __builtin_ctz(cand);
        cand = subset_without(cand, x);
        if (family.contains(subset_with(i_set, x))) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        Witness w;
        w.axiom = "I3";
        w.sets = {{"I", i_set}, {"I'", ip}};
        i3 = fail_result(std::move(w));
        break;
      }
    }
  }
  rep.results.push_back(i3);

  rep.results.push_back(
      check_m_axiom("IM", family.ground(), family.members()));
  return rep;
}

AxiomReport verify_bases(const SetFamily& family) {
  AxiomReport rep;
  rep.system = AxiomSystem::bases;
  rep.ground = family.ground();

  if (family.empty()) {
    Witness w;
    w.axiom = "B1";
    rep.results.push_back(fail_result(std::move(w)));
  } else {
    rep.results.push_back(pass_result("B1"));
  }

  AxiomResult b2 = pass_result("B2");
  for (Subset b1 : family.members()) {
    if (!b2.pass) break;
    for (Subset bb : family.members()) {
      if (!b2.pass) break;
      Subset xs = b1 & ~bb;
      while (xs != 0) {
        const int x = __builtin_ctz(xs);
        xs = subset_without(xs, x);
        bool swapped = false;
        Subset ys = bb & ~b1;
        while (ys != 0) {
          const int y = __builtin_ctz(ys);
          ys = subset_without(ys, y);
          if (family.contains(subset_with(subset_without(b1, x), y))) {
            swapped = true;
            break;
          }
        }
        if (!swapped) {
          Witness w;
          w.axiom = "B2";
          w.sets = {{"B1", b1}, {"B2", bb}};
          w.elements = {{"x", x}};
          b2 = fail_result(std::move(w));
          break;
        }
      }
    }
  }
  rep.results.push_back(b2);

  rep.results.push_back(check_m_axiom("BM", family.ground(),
                                      family.down_closure().members()));
  return rep;
}

namespace {

AxiomResult check_c1(const SetFamily& family) {
  if (!family.contains(kEmptySet)) return pass_result("C1");
  Witness w;
  w.axiom = "C1";
  return fail_result(std::move(w));
}

AxiomResult check_c2(const SetFamily& family) {
  for (Subset c : family.members())
    for (Subset d : family.members())
      if (c != d && subset_subseteq(c, d)) {
        Witness w;
        w.axiom = "C2";
        w.sets = {{"C", c}, {"C'", d}};
        return fail_result(std::move(w));
      }
  return pass_result("C2");
}

bool c3_instance_holds(const SetFamily& family, Subset c, Subset x_set,
                       const std::vector<Subset>& cx, Subset* bad_z) {
  Subset cx_union = 0;
  for (Subset s : cx) cx_union |= s;
  const Subset allowed = (c | cx_union) & ~x_set;
  Subset zs = c & ~cx_union;
  while (zs != 0) {
    const int z = __builtin_ctz(zs);
    zs = subset_without(zs, z);
    bool found = false;
    for (Subset cp : family.members())
      if (subset_contains(cp, z) && subset_subseteq(cp, allowed)) {
        found = true;
        break;
      }
    if (!found) {
      if (bad_z) *bad_z = subset_with(kEmptySet, z);
      return false;
    }
  }
  return true;
}

/// Enumerates the families (C_x | x in X) with x in C_y iff x = y and runs
/// the elimination conclusion on each.  Exhaustive on these small ground
/// sets; the empty X is included (its instance is vacuous but executed).
AxiomResult check_c3(const SetFamily& family, bool full_families) {
  for (Subset c : family.members()) {
    for (Subset x_set : all_subsets(c)) {
      if (!full_families && subset_size(x_set) != 1) continue;
      std::vector<int> xs;
      for (int i = 0; i < family.ground().size(); ++i)
        if (subset_contains(x_set, i)) xs.push_back(i);
      std::vector<std::vector<Subset>> candidates(xs.size());
      bool feasible = true;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        for (Subset cp : family.members())
          if ((cp & x_set) == subset_with(kEmptySet, xs[k]))
            candidates[k].push_back(cp);
        if (candidates[k].empty()) {
          feasible = false;  // no family exists; quantifier is vacuous
          break;
        }
      }
      if (!feasible) continue;
      std::vector<Subset> chosen(xs.size());
      std::vector<std::size_t> idx(xs.size(), 0);
      while (true) {
        for (std::size_t k = 0; k < xs.size(); ++k)
          chosen[k] = candidates[k][idx[k]];
        Subset bad_z = 0;
        if (!c3_instance_holds(family, c, x_set, chosen, &bad_z)) {
          Witness w;
          w.axiom = full_families ? "C3" : "C3-elim";
          w.sets = {{"C", c}, {"X", x_set}, {"z", bad_z}};
          for (std::size_t k = 0; k < xs.size(); ++k)
            w.sets.push_back({"C_x", chosen[k]});
          return fail_result(std::move(w));
        }
        // next family in the product; X = {} has the single empty family
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == candidates[k].size())
          idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
  }
  return pass_result(full_families ? "C3" : "C3-elim");
}

}  // namespace

AxiomReport verify_circuits(const SetFamily& family) {
  AxiomReport rep;
  rep.system = AxiomSystem::circuits;
  rep.ground = family.ground();
  rep.results.push_back(check_c1(family));
  rep.results.push_back(check_c2(family));
  rep.results.push_back(check_c3(family, true));
  rep.results.push_back(check_m_axiom("CM", family.ground(),
                                      circuit_independent_sets(family)));
  return rep;
}

AxiomReport verify_circuits_weakened(const SetFamily& family) {
  AxiomReport rep;
  rep.system = AxiomSystem::circuits;
  rep.ground = family.ground();
  rep.results.push_back(check_c1(family));
  rep.results.push_back(check_c2(family));
  rep.results.push_back(check_c3(family, false));
  return rep;
}

AxiomReport verify_closure(const ClosureTable& table) {
  AxiomReport rep;
  rep.system = AxiomSystem::closure;
  rep.ground = table.ground();
  const Subset full = table.ground().full();

  AxiomResult cl1 = pass_result("CL1");
  for (Subset x : all_subsets(full))
    if (!subset_subseteq(x, table.cl(x))) {
      Witness w;
      w.axiom = "CL1";
      w.sets = {{"X", x}};
      cl1 = fail_result(std::move(w));
      break;
    }
  rep.results.push_back(cl1);

  AxiomResult cl2 = pass_result("CL2");
  for (Subset x : all_subsets(full)) {
    if (!cl2.pass) break;
    for (Subset y : all_subsets(full))
      if (subset_subseteq(x, y) && !subset_subseteq(table.cl(x), table.cl(y))) {
        Witness w;
        w.axiom = "CL2";
        w.sets = {{"X", x}, {"Y", y}};
        cl2 = fail_result(std::move(w));
        break;
      }
  }
  rep.results.push_back(cl2);

  AxiomResult cl3 = pass_result("CL3");
  for (Subset x : all_subsets(full))
    if (table.cl(table.cl(x)) != table.cl(x)) {
      Witness w;
      w.axiom = "CL3";
      w.sets = {{"X", x}};
      cl3 = fail_result(std::move(w));
      break;
    }
  rep.results.push_back(cl3);

  AxiomResult cl4 = pass_result("CL4");
  for (Subset z : all_subsets(full)) {
    if (!cl4.pass) break;
    for (int x = 0; x < table.ground().size() && cl4.pass; ++x)
      for (int y = 0; y < table.ground().size(); ++y) {
        const bool y_in = subset_contains(table.cl(subset_with(z, x)), y) &&
                          !subset_contains(table.cl(z), y);
        if (y_in && !subset_contains(table.cl(subset_with(z, y)), x)) {
          Witness w;
          w.axiom = "CL4";
          w.sets = {{"Z", z}};
          w.elements = {{"x", x}, {"y", y}};
          cl4 = fail_result(std::move(w));
          break;
        }
      }
  }
  rep.results.push_back(cl4);

  rep.results.push_back(check_m_axiom("CLM", table.ground(),
                                      closure_independent_sets(table)));
  return rep;
}

AxiomReport verify_rank(const RankInput& input, R4Mode mode) {
  AxiomReport rep;
  rep.system = AxiomSystem::rank;
  rep.ground = input.ground;
  const Subset full = input.ground.full();
  if (!input.table.total())
    throw std::domain_error("rank table not total on nested pairs");

  AxiomResult r1 = pass_result("R1");
  for (Subset a : all_subsets(full)) {
    if (!r1.pass) break;
    for (Subset b : all_subsets(a))
      if (rank_of(input, a, b) > static_cast<unsigned>(subset_size(a & ~b))) {
        Witness w;
        w.axiom = "R1";
        w.sets = {{"A", a}, {"B", b}};
        r1 = fail_result(std::move(w));
        break;
      }
  }
  rep.results.push_back(r1);

  AxiomResult r2 = pass_result("R2");
  for (Subset a : all_subsets(full)) {
    if (!r2.pass) break;
    for (Subset b : all_subsets(full))
      if (rank_of(input, a, a & b) < rank_of(input, a | b, b)) {
        Witness w;
        w.axiom = "R2";
        w.sets = {{"A", a}, {"B", b}};
        r2 = fail_result(std::move(w));
        break;
      }
  }
  rep.results.push_back(r2);

  AxiomResult r3 = pass_result("R3");
  for (Subset a : all_subsets(full)) {
    if (!r3.pass) break;
    for (Subset b : all_subsets(a)) {
      if (!r3.pass) break;
      for (Subset c : all_subsets(b))
        if (rank_of(input, a, c) !=
            rank_of(input, a, b) + rank_of(input, b, c)) {
          Witness w;
          w.axiom = "R3";
          w.sets = {{"A", a}, {"B", b}, {"C", c}};
          r3 = fail_result(std::move(w));
          break;
        }
    }
  }
  rep.results.push_back(r3);

  AxiomResult r4 = pass_result("R4");
  for (Subset b : all_subsets(full)) {
    if (!r4.pass) break;
    std::vector<Subset> zero;  // {A : B <= A, r(A|B) = 0}
    for (Subset extra : all_subsets(full & ~b))
      if (rank_of(input, b | extra, b) == 0) zero.push_back(b | extra);
    if (mode == R4Mode::maximal_union) {
      Subset u = b;
      for (Subset a : zero) u |= a;
      if (rank_of(input, u, b) != 0) {
        Witness w;
        w.axiom = "R4";
        w.sets = {{"B", b}, {"U", u}};
        r4 = fail_result(std::move(w));
      }
      continue;
    }
    // Exhaustive over all subfamilies of the zero-rank family.
    const std::size_t n = zero.size();
    if (n > 20) throw std::domain_error("R4 exhaustive mode: family too large");
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Subset u = b;
      for (std::size_t k = 0; k < n; ++k)
        if ((mask >> k) & 1) u |= zero[k];
      if (rank_of(input, u, b) != 0) {
        Witness w;
        w.axiom = "R4";
        w.sets = {{"B", b}, {"U", u}};
        for (std::size_t k = 0; k < n; ++k)
          if ((mask >> k) & 1) w.sets.push_back({"A", zero[k]});
        r4 = fail_result(std::move(w));
        break;
      }
    }
  }
  rep.results.push_back(r4);

  rep.results.push_back(
      check_m_axiom("RM", input.ground, rank_independent_sets(input)));
  return rep;
}

bool replay_witness(const SetFamily& family, const Witness& w) {
  auto set_of = [&](const std::string& role) -> std::optional<Subset> {
    for (const auto& [r, s] : w.sets)
      if (r == role) return s;
    return std::nullopt;
  };
  if (w.axiom == "I1") return !family.contains(kEmptySet);
  if (w.axiom == "I2") {
    const Subset i = *set_of("I");
    const int x = w.elements.at(0).second;
    return family.contains(i) && !family.contains(subset_without(i, x));
  }
  if (w.axiom == "I3") {
    const Subset i = *set_of("I");
    const Subset ip = *set_of("I'");
    if (!family.contains(i) || !family.contains(ip)) return false;
    const SetFamily maxima = family.maximal_members();
    if (maxima.contains(i) || !maxima.contains(ip)) return false;
    Subset cand = ip & ~i;
    while (cand != 0) {
      const int x = __builtin_ctz(cand);
      cand = subset_without(cand, x);
      if (family.contains(subset_with(i, x))) return false;
    }
    return true;
  }
  if (w.axiom == "B1") return family.empty();
  if (w.axiom == "B2") {
    const Subset b1 = *set_of("B1");
    const Subset bb = *set_of("B2");
    const int x = w.elements.at(0).second;
    if (!family.contains(b1) || !family.contains(bb)) return false;
    if (!subset_contains(b1 & ~bb, x)) return false;
    Subset ys = bb & ~b1;
    while (ys != 0) {
      const int y = __builtin_ctz(ys);
      ys = subset_without(ys, y);
      if (family.contains(subset_with(subset_without(b1, x), y))) return false;
    }
    return true;
  }
  if (w.axiom == "C1") return family.contains(kEmptySet);
  if (w.axiom == "C2") {
    const Subset c = *set_of("C");
    const Subset d = *set_of("C'");
    return family.contains(c) && family.contains(d) && c != d &&
           subset_subseteq(c, d);
  }
  if (w.axiom == "C3" || w.axiom == "C3-elim") {
    const Subset c = *set_of("C");
    const Subset x_set = *set_of("X");
    const Subset z = *set_of("z");
    std::vector<Subset> cx;
    for (const auto& [r, s] : w.sets)
      if (r == "C_x") cx.push_back(s);
    Subset u = 0;
    for (Subset s : cx) u |= s;
    if (!family.contains(c) || (z & (c & ~u)) != z || z == 0) return false;
    const Subset allowed = (c | u) & ~x_set;
    const int zi = __builtin_ctz(z);
    for (Subset cp : family.members())
      if (subset_contains(cp, zi) && subset_subseteq(cp, allowed)) return false;
    return true;
  }
  // The (M)-style axioms cannot fail on finite ground sets; replay by
  // recomputing the full poset search.
  if (w.axiom == "IM" || w.axiom == "BM" || w.axiom == "CM")
    return false;
  return false;
}

bool replay_witness(const ClosureTable& table, const Witness& w) {
  auto set_of = [&](const std::string& role) -> std::optional<Subset> {
    for (const auto& [r, s] : w.sets)
      if (r == role) return s;
    return std::nullopt;
  };
  if (w.axiom == "CL1") {
    const Subset x = *set_of("X");
    return !subset_subseteq(x, table.cl(x));
  }
  if (w.axiom == "CL2") {
    const Subset x = *set_of("X");
    const Subset y = *set_of("Y");
    return subset_subseteq(x, y) && !subset_subseteq(table.cl(x), table.cl(y));
  }
  if (w.axiom == "CL3") {
    const Subset x = *set_of("X");
    return table.cl(table.cl(x)) != table.cl(x);
  }
  if (w.axiom == "CL4") {
    const Subset z = *set_of("Z");
    const int x = w.elements.at(0).second;
    const int y = w.elements.at(1).second;
    return subset_contains(table.cl(subset_with(z, x)), y) &&
           !subset_contains(table.cl(z), y) &&
           !subset_contains(table.cl(subset_with(z, y)), x);
  }
  return false;
}

bool replay_witness(const RankInput& input, const Witness& w) {
  auto set_of = [&](const std::string& role) -> std::optional<Subset> {
    for (const auto& [r, s] : w.sets)
      if (r == role) return s;
    return std::nullopt;
  };
  if (w.axiom == "R1") {
    const Subset a = *set_of("A");
    const Subset b = *set_of("B");
    return rank_of(input, a, b) > static_cast<unsigned>(subset_size(a & ~b));
  }
  if (w.axiom == "R2") {
    const Subset a = *set_of("A");
    const Subset b = *set_of("B");
    return rank_of(input, a, a & b) < rank_of(input, a | b, b);
  }
  if (w.axiom == "R3") {
    const Subset a = *set_of("A");
    const Subset b = *set_of("B");
    const Subset c = *set_of("C");
    return rank_of(input, a, c) !=
           rank_of(input, a, b) + rank_of(input, b, c);
  }
  if (w.axiom == "R4") {
    const Subset b = *set_of("B");
    const Subset u = *set_of("U");
    return rank_of(input, u, b) != 0;
  }
  return false;
}

Presentation presentation_of(const FiniteMatroid& m, AxiomSystem kind) {
  Presentation p;
  p.kind = kind;
  p.ground = m.ground();
  switch (kind) {
    case AxiomSystem::independence:
      p.family = m.independents();
      break;
    case AxiomSystem::bases:
      p.family = m.bases();
      break;
    case AxiomSystem::circuits:
      p.family = m.circuits();
      break;
    case AxiomSystem::closure:
      p.closure = ClosureTable::from_matroid(m);
      break;
    case AxiomSystem::rank:
      p.rank = RankInput{m.ground(), m.rank_table()};
      break;
  }
  return p;
}

FiniteMatroid matroid_from(const Presentation& p) {
  switch (p.kind) {
    case AxiomSystem::independence: {
      AxiomReport rep = verify_independence(p.family);
      if (!rep.all_pass()) throw ConversionRefused{rep};
      return FiniteMatroid::checked(p.family);
    }
    case AxiomSystem::bases: {
      AxiomReport rep = verify_bases(p.family);
      if (!rep.all_pass()) throw ConversionRefused{rep};
      return FiniteMatroid::checked(p.family.down_closure());
    }
    case AxiomSystem::circuits: {
      AxiomReport rep = verify_circuits(p.family);
      if (!rep.all_pass()) throw ConversionRefused{rep};
      return FiniteMatroid::checked(SetFamily(
          p.family.ground(), circuit_independent_sets(p.family)));
    }
    case AxiomSystem::closure: {
      AxiomReport rep = verify_closure(p.closure);
      if (!rep.all_pass()) throw ConversionRefused{rep};
      return FiniteMatroid::checked(SetFamily(
          p.closure.ground(), closure_independent_sets(p.closure)));
    }
    case AxiomSystem::rank: {
      AxiomReport rep = verify_rank(p.rank);
      if (!rep.all_pass()) throw ConversionRefused{rep};
      return FiniteMatroid::checked(SetFamily(
          p.rank.ground, rank_independent_sets(p.rank)));
    }
  }
  throw std::logic_error("unknown presentation kind");
}

Presentation convert(const Presentation& source, AxiomSystem target) {
  return presentation_of(matroid_from(source), target);
}

namespace {

GroundSet enumeration_ground(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return GroundSet(labels);
}

/// Fast bit-level (I1)+(I2)+(I3) filter; a family over n <= 4 elements is a
/// mask over the 2^n subset indices.
bool family_mask_is_matroid(std::uint32_t fam, int n) {
  const int nsub = 1 << n;
  if (!(fam & 1u)) return false;  // (I1)
  for (int s = 0; s < nsub; ++s) {
    if (!((fam >> s) & 1u)) continue;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1) {
        if (!((fam >> (s & ~(1 << i))) & 1u)) return false;  // (I2)
      }
  }
  std::uint32_t maximal = 0;
  for (int s = 0; s < nsub; ++s) {
    if (!((fam >> s) & 1u)) continue;
    bool is_max = true;
    for (int t = 0; t < nsub && is_max; ++t)
      if (t != s && ((fam >> t) & 1u) && (s & ~t) == 0) is_max = false;
    if (is_max) maximal |= (1u << s);
  }
  for (int s = 0; s < nsub; ++s) {
    if (!((fam >> s) & 1u) || ((maximal >> s) & 1u)) continue;
    for (int t = 0; t < nsub; ++t) {
      if (!((maximal >> t) & 1u)) continue;
      bool augmented = false;
      int cand = t & ~s;
      while (cand) {
        const int x = cand & -cand;
        cand &= cand - 1;
        if ((fam >> (s | x)) & 1u) {
          augmented = true;
          break;
        }
      }
      if (!augmented) return false;  // (I3)
    }
  }
  return true;
}

}  // namespace

std::vector<FiniteMatroid> enumerate_matroids(int n) {
  if (n < 0 || n > 4)
    throw std::domain_error("enumerate_matroids: n must be between 0 and 4");
  const GroundSet g = enumeration_ground(n);
  const int nsub = 1 << n;
  std::vector<FiniteMatroid> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << nsub); ++fam) {
    if (!family_mask_is_matroid(static_cast<std::uint32_t>(fam), n)) continue;
    std::vector<Subset> mem;
    for (int s = 0; s < nsub; ++s)
      if ((fam >> s) & 1u) mem.push_back(static_cast<Subset>(s));
    out.push_back(FiniteMatroid::checked(SetFamily(g, std::move(mem))));
  }
  return out;
}

std::size_t count_matroids_via_bases(int n) {
  if (n < 0 || n > 4)
    throw std::domain_error("count_matroids_via_bases: n must be 0..4");
  const int nsub = 1 << n;
  std::size_t count = 0;
  // Bit-level (B1)+(B2); (BM) cannot fail on a finite ground set.  Distinct
  // base families give distinct matroids, so counting families counts
  // matroids.
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << nsub); ++fam) {
    bool ok = true;
    for (int b1 = 0; b1 < nsub && ok; ++b1) {
      if (!((fam >> b1) & 1u)) continue;
      for (int b2 = 0; b2 < nsub && ok; ++b2) {
        if (!((fam >> b2) & 1u)) continue;
        int xs = b1 & ~b2;
        while (xs && ok) {
          const int x = xs & -xs;
          xs &= xs - 1;
          bool swapped = false;
          int ys = b2 & ~b1;
          while (ys) {
            const int y = ys & -ys;
            ys &= ys - 1;
            if ((fam >> ((b1 & ~x) | y)) & 1u) {
              swapped = true;
              break;
            }
          }
          if (!swapped) ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

bool is_finitary_family(const std::vector<EdgeSetExpr>& circuits) {
  return std::all_of(circuits.begin(), circuits.end(),
                     [](const EdgeSetExpr& c) { return c.is_finite(); });
}

}  // namespace matroidlab
