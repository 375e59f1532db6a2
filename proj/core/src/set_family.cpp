#include "matroidlab/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace matroidlab {

SetFamily::SetFamily(GroundSet ground, std::vector<Subset> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  const Subset full = ground_.full();
  for (Subset m : members_)
    if (!subset_subseteq(m, full))
      throw std::domain_error("family member not a subset of the ground set");
  std::sort(members_.begin(), members_.end(), subset_lex_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Subset s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

SetFamily SetFamily::down_closure() const {
  std::vector<Subset> out;
  for (Subset m : members_) {
    Subset t = m;
    while (true) {
      out.push_back(t);
      if (t == 0) break;
      t = (t - 1) & m;
    }
  }
  return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::maximal_members() const {
  std::vector<Subset> out;
  for (Subset m : members_) {
    bool maximal = true;
    for (Subset o : members_)
      if (o != m && subset_subseteq(m, o)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(m);
  }
  return SetFamily(ground_, std::move(out));
}

SetFamily SetFamily::minimal_members() const {
  std::vector<Subset> out;
  for (Subset m : members_) {
    bool minimal = true;
    for (Subset o : members_)
      if (o != m && subset_subseteq(o, m)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  return SetFamily(ground_, std::move(out));
}

std::vector<Subset> all_subsets(Subset full) {
  std::vector<Subset> out;
  Subset s = 0;
  while (true) {
    out.push_back(s);
    if (s == full) break;
    s = (s - full) & full;  // next subset of full in mask order
  }
  return out;
}

}  // namespace matroidlab
