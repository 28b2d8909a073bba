#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace posetpoly {

/// A subset of poset elements, one bit per element. Elements are indices
/// 0..n-1 of the owning poset; the encoding caps posets at 62 elements,
/// far beyond anything the enumerations can handle anyway.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
  static constexpr Subset single(int p) { return Subset(std::uint64_t{1} << p); }
  static constexpr Subset full(int n) {
    return Subset(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int p) const { return (bits_ >> p) & 1; }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  /// Index of the smallest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  constexpr Subset minus(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset with(int p) const { return Subset(bits_ | (std::uint64_t{1} << p)); }
  constexpr Subset without(int p) const { return Subset(bits_ & ~(std::uint64_t{1} << p)); }

  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(Subset a, Subset b) = default;
  // Subsets sort by their bit encoding; the empty set comes first.
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  /// "{0,2,3}" or "{}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) {
      if (!first) s += ',';
      s += std::to_string(std::countr_zero(m));
      first = false;
    }
    s += '}';
    return s;
  }

 private:
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace posetpoly
