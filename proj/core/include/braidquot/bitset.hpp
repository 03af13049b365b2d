// Fixed-size dynamic bitset used for element domains, centralizers and
// class masks. Element ids are dense (0..order-1), so a flat word array
// beats std::set by a wide margin in the search inner loops.
#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace braidquot {

class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n, bool value = false)
      : n_(n), w_((n + 63) / 64, value ? ~0ull : 0ull) {
    trim();
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  void set_all() {
    for (auto& w : w_) w = ~0ull;
    trim();
  }
  void reset_all() {
    for (auto& w : w_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  // First set bit at or after `from`; size() if none.
  std::size_t next_set(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~0ull << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == w_.size()) return n_;
      w = w_[wi];
    }
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        fn((wi << 6) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~0ull >> (64 - (n_ & 63)));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace braidquot
