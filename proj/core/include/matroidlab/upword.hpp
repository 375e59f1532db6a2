#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace matroidlab {

/// Ultimately periodic 0/1 word over the naturals.  bit(i) is pre[i] for
/// i < pre.size(), and per[(i - pre.size()) mod per.size()] afterwards.
/// Every word is kept in canonical form (minimal period, then minimal
/// preperiod), so denotation equality is plain operator==.
class UPWord {
 public:
  UPWord() : per_{false} {}

  static UPWord zeros();
  static UPWord ones();
  /// bits, then zeros forever.
  static UPWord finite(std::vector<bool> bits);
  static UPWord make(std::vector<bool> pre, std::vector<bool> per);
  /// A single 1 at position i.
  static UPWord singleton(std::size_t i);
  /// 1 exactly on {i : i >= start and (i - start) % period in residues}.
  static UPWord arithmetic(std::size_t start, std::size_t period,
                           const std::vector<std::size_t>& residues);

  bool at(std::size_t i) const;

  std::size_t pre_len() const { return pre_.size(); }
  std::size_t period_len() const { return per_.size(); }

  bool none() const;
  bool is_finite() const;
  /// Number of 1s, nullopt when infinite.
  std::optional<std::size_t> count() const;
  std::optional<std::size_t> first() const;
  /// 1-positions strictly below bound.
  std::vector<std::size_t> ones_below(std::size_t bound) const;
  /// Number of 1s in one period block (density witness).
  std::size_t period_ones() const { return ones_in(per_); }

  UPWord operator|(const UPWord& o) const;
  UPWord operator&(const UPWord& o) const;
  UPWord operator^(const UPWord& o) const;
  UPWord operator~() const;
  UPWord minus(const UPWord& o) const;

  /// Word w with w.at(i) = at(i + k) (drop the first k bits).
  UPWord shifted_left(std::size_t k) const;
  /// Word w with w.at(i + k) = at(i), w.at(j) = 0 for j < k.
  UPWord shifted_right(std::size_t k) const;

  bool operator==(const UPWord& o) const = default;

  bool subset_of(const UPWord& o) const { return (minus(o)).none(); }

  std::string bits_string(std::size_t upto) const;
  const std::vector<bool>& pre_bits() const { return pre_; }
  const std::vector<bool>& period_bits() const { return per_; }

 private:
  static std::size_t ones_in(const std::vector<bool>& v);
  void canonicalize();

  std::vector<bool> pre_;
  std::vector<bool> per_;  // size >= 1
};

std::size_t lcm_size(std::size_t a, std::size_t b);

}  // namespace matroidlab
