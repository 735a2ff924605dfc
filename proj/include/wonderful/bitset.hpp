#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace wonderful {

/// Fixed-capacity set of small non-negative integers (at most 64 members).
template <class Tag>
class BitSet64 {
 public:
  static constexpr int capacity = 64;

  constexpr BitSet64() = default;
  constexpr explicit BitSet64(std::uint64_t bits) : bits_(bits) {}

  static constexpr BitSet64 single(int i) { return BitSet64(std::uint64_t{1} << i); }
  /// The set {0, ..., n-1}.
  static constexpr BitSet64 first(int n) {
    return BitSet64(n >= capacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static BitSet64 of(const std::vector<int>& members) {
    BitSet64 s;
    for (int m : members) s.insert(m);
    return s;
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(BitSet64 other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(BitSet64 other) const { return (bits_ & other.bits_) != 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr BitSet64 operator|(BitSet64 a, BitSet64 b) { return BitSet64(a.bits_ | b.bits_); }
  friend constexpr BitSet64 operator&(BitSet64 a, BitSet64 b) { return BitSet64(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr BitSet64 operator-(BitSet64 a, BitSet64 b) { return BitSet64(a.bits_ & ~b.bits_); }
  constexpr BitSet64& operator|=(BitSet64 o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet64& operator&=(BitSet64 o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(BitSet64, BitSet64) = default;
  friend constexpr auto operator<=>(BitSet64, BitSet64) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct NodeTag {};
struct ColourTag {};
struct RootTag {};

/// Subset of the global node indices of a diagram.
using NodeSet = BitSet64<NodeTag>;
/// Subset of the colour indices of a spherical system.
using ColourSubset = BitSet64<ColourTag>;
/// Subset of the positions of Σ.
using RootSubset = BitSet64<RootTag>;

}  // namespace wonderful
