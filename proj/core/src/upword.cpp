#include "matroidlab/upword.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matroidlab {

std::size_t lcm_size(std::size_t a, std::size_t b) {
  return std::lcm(a, b);
}

std::size_t UPWord::ones_in(const std::vector<bool>& v) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), true));
}

UPWord UPWord::zeros() {
  return UPWord{};
}

UPWord UPWord::ones() {
  UPWord w;
  w.per_ = {true};
  return w;
}

UPWord UPWord::finite(std::vector<bool> bits) {
  UPWord w;
  w.pre_ = std::move(bits);
  w.per_ = {false};
  w.canonicalize();
  return w;
}

UPWord UPWord::make(std::vector<bool> pre, std::vector<bool> per) {
  if (per.empty()) throw std::invalid_argument("UPWord: empty period");
  UPWord w;
  w.pre_ = std::move(pre);
  w.per_ = std::move(per);
  w.canonicalize();
  return w;
}

UPWord UPWord::singleton(std::size_t i) {
  std::vector<bool> pre(i + 1, false);
  pre[i] = true;
  return finite(std::move(pre));
}

UPWord UPWord::arithmetic(std::size_t start, std::size_t period,
                          const std::vector<std::size_t>& residues) {
  if (period == 0) throw std::invalid_argument("UPWord: zero period");
  std::vector<bool> pre(start, false);
  std::vector<bool> per(period, false);
  for (std::size_t r : residues) per.at(r % period) = true;
  return make(std::move(pre), std::move(per));
}

bool UPWord::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

bool UPWord::none() const {
  return ones_in(pre_) == 0 && ones_in(per_) == 0;
}

bool UPWord::is_finite() const {
  return ones_in(per_) == 0;
}

std::optional<std::size_t> UPWord::count() const {
  if (!is_finite()) return std::nullopt;
  return ones_in(pre_);
}

std::optional<std::size_t> UPWord::first() const {
  for (std::size_t i = 0; i < pre_.size(); ++i)
    if (pre_[i]) return i;
  for (std::size_t j = 0; j < per_.size(); ++j)
    if (per_[j]) return pre_.size() + j;
  return std::nullopt;
}

std::vector<std::size_t> UPWord::ones_below(std::size_t bound) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bound; ++i)
    if (at(i)) out.push_back(i);
  return out;
}

void UPWord::canonicalize() {
  // Minimal period: smallest divisor d of |per| with per = repeat(per[0..d)).
  const std::size_t p = per_.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = per_[i] == per_[i % d];
    if (ok) {
      per_.resize(d);
      break;
    }
  }
  // Minimal preperiod: fold trailing bits that already match the cycle.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
  }
}

namespace {

template <typename Op>
UPWord pointwise(const UPWord& a, const UPWord& b, Op op) {
  const std::size_t pre = std::max(a.pre_len(), b.pre_len());
  const std::size_t per = lcm_size(a.period_len(), b.period_len());
  std::vector<bool> pr(pre), pd(per);
  for (std::size_t i = 0; i < pre; ++i) pr[i] = op(a.at(i), b.at(i));
  for (std::size_t j = 0; j < per; ++j)
    pd[j] = op(a.at(pre + j), b.at(pre + j));
  return UPWord::make(std::move(pr), std::move(pd));
}

}  // namespace

UPWord UPWord::operator|(const UPWord& o) const {
  return pointwise(*this, o, [](bool x, bool y) { return x || y; });
}

UPWord UPWord::operator&(const UPWord& o) const {
  return pointwise(*this, o, [](bool x, bool y) { return x && y; });
}

UPWord UPWord::operator^(const UPWord& o) const {
  return pointwise(*this, o, [](bool x, bool y) { return x != y; });
}

UPWord UPWord::minus(const UPWord& o) const {
  return pointwise(*this, o, [](bool x, bool y) { return x && !y; });
}

UPWord UPWord::operator~() const {
  std::vector<bool> pr(pre_), pd(per_);
  pr.flip();
  pd.flip();
  return make(std::move(pr), std::move(pd));
}

UPWord UPWord::shifted_left(std::size_t k) const {
  std::vector<bool> pr;
  const std::size_t keep = pre_.size() > k ? pre_.size() - k : 0;
  pr.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) pr.push_back(pre_[k + i]);
  std::vector<bool> pd(per_.size());
  const std::size_t base = k + keep;  // first index served by the period
  for (std::size_t j = 0; j < per_.size(); ++j) pd[j] = at(base + j);
  return make(std::move(pr), std::move(pd));
}

UPWord UPWord::shifted_right(std::size_t k) const {
  std::vector<bool> pr(k, false);
  pr.insert(pr.end(), pre_.begin(), pre_.end());
  return make(std::move(pr), per_);
}

std::string UPWord::bits_string(std::size_t upto) const {
  std::string s;
  s.reserve(upto);
  for (std::size_t i = 0; i < upto; ++i) s.push_back(at(i) ? '1' : '0');
  return s;
}

}  // namespace matroidlab
