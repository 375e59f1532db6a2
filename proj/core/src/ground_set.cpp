#include "matroidlab/ground_set.hpp"

#include <stdexcept>

namespace matroidlab {

bool subset_lex_less(Subset a, Subset b) {
  if (a == b) return false;
  while (true) {
    if (a == 0) return b != 0;
    if (b == 0) return false;
    const int ia = __builtin_ctz(a);
    const int ib = __builtin_ctz(b);
    if (ia != ib) return ia < ib;
    a = subset_without(a, ia);
    b = subset_without(b, ib);
  }
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > 32)
    throw std::invalid_argument("ground set too large (max 32 elements)");
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (labels_[i].empty())
      throw std::invalid_argument("empty element label");
    if (!index_.emplace(labels_[i], i).second)
      throw std::invalid_argument("duplicate element label: " + labels_[i]);
  }
}

int GroundSet::index(const std::string& l) const {
  auto it = index_.find(l);
  if (it == index_.end())
    throw std::domain_error("label not in ground set: " + l);
  return it->second;
}

Subset GroundSet::parse_subset(const std::vector<std::string>& ls) const {
  Subset s = 0;
  for (const auto& l : ls) s = subset_with(s, index(l));
  return s;
}

std::string GroundSet::format_subset(Subset s) const {
  if (s == 0) return "-";
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (!subset_contains(s, i)) continue;
    if (!out.empty()) out += ' ';
    out += labels_[i];
  }
  return out;
}

}  // namespace matroidlab
