#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ks {

/// Set of ray indices; every system here has at most 64 rays.
using RayMask = std::uint64_t;

inline constexpr int kMaxRays = 64;
inline constexpr int kMaxBases = 128;

/// Fixed 128-bit set, used for subsets of a system's bases (at most 105).
class BasisSet {
public:
  static constexpr int kCapacity = 128;

  constexpr BasisSet() = default;
  BasisSet(std::initializer_list<int> ids) {
    for (int id : ids) set(id);
  }
  static BasisSet from_ids(const std::vector<int> &ids) {
    BasisSet s;
    for (int id : ids) s.set(id);
    return s;
  }
  /// The first n bits set.
  static BasisSet first_n(int n) {
    BasisSet s;
    for (int k = 0; k < n; ++k) s.set(k);
    return s;
  }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) {
    check(i);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    check(i);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(int i) {
    check(i);
    w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool none() const { return (w_[0] | w_[1]) == 0; }
  bool any() const { return !none(); }

  BasisSet &operator^=(const BasisSet &o) {
    w_[0] ^= o.w_[0];
    w_[1] ^= o.w_[1];
    return *this;
  }
  BasisSet &operator&=(const BasisSet &o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  BasisSet &operator|=(const BasisSet &o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  friend BasisSet operator^(BasisSet a, const BasisSet &b) { return a ^= b; }
  friend BasisSet operator&(BasisSet a, const BasisSet &b) { return a &= b; }
  friend BasisSet operator|(BasisSet a, const BasisSet &b) { return a |= b; }
  /// Members of a not in b.
  friend BasisSet minus(BasisSet a, const BasisSet &b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }
  bool intersects(const BasisSet &o) const { return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0; }

  friend bool operator==(const BasisSet &, const BasisSet &) = default;
  /// Lexicographic order on the sorted id lists.
  friend bool operator<(const BasisSet &a, const BasisSet &b) {
    // The lowest differing id decides: whoever holds it sorts first.
    for (int word = 0; word < 2; ++word) {
      std::uint64_t diff = a.w_[word] ^ b.w_[word];
      if (diff) return (a.w_[word] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  template <class F> void for_each(F &&f) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t bits = w_[word];
      while (bits) {
        int b = std::countr_zero(bits);
        f(word * 64 + b);
        bits &= bits - 1;
      }
    }
  }
  std::vector<int> ids() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }
  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  std::uint64_t word(int k) const { return w_[k]; }
  std::size_t hash() const {
    return std::hash<std::uint64_t>{}(w_[0] * 0x9E3779B97F4A7C15ull ^ (w_[1] + 0x632BE59BD9B4E019ull));
  }

private:
  static void check(int i) {
    if (i < 0 || i >= kCapacity) throw std::out_of_range("basis index out of range");
  }
  std::uint64_t w_[2] = {0, 0};
};

struct BasisSetHash {
  std::size_t operator()(const BasisSet &s) const { return s.hash(); }
};

template <class F> void for_each_bit(RayMask m, F &&f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

} // namespace ks
