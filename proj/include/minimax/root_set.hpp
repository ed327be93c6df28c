#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace minimax {

inline constexpr int kMaxRoots = 256;

/// Fixed-width set of positive-root indices. All set algebra is word-wise.
class RootSet {
 public:
  static constexpr int kWords = kMaxRoots / 64;

  constexpr RootSet() = default;

  static RootSet first_n(int n) {
    RootSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// True if every element of this set is also in `other`.
  bool subset_of(const RootSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }
  bool intersects(const RootSet& other) const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  RootSet& operator|=(const RootSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  RootSet& operator&=(const RootSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  RootSet& operator-=(const RootSet& o) {
    for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
  friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
  friend RootSet operator-(RootSet a, const RootSet& b) { return a -= b; }

  friend bool operator==(const RootSet&, const RootSet&) = default;
  friend auto operator<=>(const RootSet&, const RootSet&) = default;

  /// Calls f(index) for each member in increasing index order.
  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace minimax

template <>
struct std::hash<minimax::RootSet> {
  std::size_t operator()(const minimax::RootSet& s) const noexcept { return s.hash(); }
};
