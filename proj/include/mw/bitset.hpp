#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace mw {

// Fixed-width dynamic bitset; just enough for the decomposition machinery.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& x : w_) x = 0;
  }
  void fill() {
    for (auto& x : w_) x = ~0ull;
    trim();
  }

  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  // Lowest set bit, or -1.
  int first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return (int)(k * 64 + __builtin_ctzll(w_[k]));
    return -1;
  }

  // Lowest set bit strictly above i, or -1.
  int next(int i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t k = i >> 6;
    std::uint64_t x = w_[k] & (~0ull << (i & 63));
    while (true) {
      if (x) return (int)(k * 64 + __builtin_ctzll(x));
      if (++k >= w_.size()) return -1;
      x = w_[k];
    }
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  // this := this & ~o
  Bitset& andnot(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool operator==(const Bitset& o) const { return w_ == o.w_; }

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
    return out;
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace mw
