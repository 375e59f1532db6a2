#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace matroidlab {

/// Subset of a ground set, bit i = element with index i in ground order.
using Subset = std::uint32_t;

constexpr Subset kEmptySet = 0;

inline bool subset_contains(Subset s, int i) { return (s >> i) & 1u; }
inline Subset subset_with(Subset s, int i) { return s | (Subset{1} << i); }
inline Subset subset_without(Subset s, int i) { return s & ~(Subset{1} << i); }
inline int subset_size(Subset s) { return __builtin_popcount(s); }
inline bool subset_subseteq(Subset a, Subset b) { return (a & ~b) == 0; }

/// Lexicographic order on the sorted element sequences, the output order
/// used everywhere: {} < {a} < {a,b} < {b}.
bool subset_lex_less(Subset a, Subset b);

/// Ordered finite set of distinct labels; iteration order fixed at
/// construction.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const std::string& l) const { return index_.count(l) > 0; }
  /// Throws std::domain_error for unknown labels.
  int index(const std::string& l) const;

  Subset full() const { return (size() == 32) ? ~Subset{0} : (Subset{1} << size()) - 1; }
  Subset parse_subset(const std::vector<std::string>& ls) const;
  std::string format_subset(Subset s) const;

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

}  // namespace matroidlab
