#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace horo {

inline constexpr std::size_t kMaxFacets = 64;

/// A subset of the facet index set K = {0, ..., m}, m < 64.
class FaceSet {
 public:
  constexpr FaceSet() = default;
  constexpr explicit FaceSet(std::uint64_t bits) : bits_(bits) {}

  static FaceSet of(const std::vector<std::size_t>& indices) {
    FaceSet s;
    for (auto i : indices) s.insert(i);
    return s;
  }
  /// {0, ..., n-1}
  static constexpr FaceSet all(std::size_t n) {
    return FaceSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }

  void insert(std::size_t i) {
    if (i >= kMaxFacets) throw std::out_of_range("facet index " + std::to_string(i) + " >= 64");
    bits_ |= std::uint64_t{1} << i;
  }

  constexpr bool is_subset_of(FaceSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr FaceSet operator&(FaceSet o) const { return FaceSet(bits_ & o.bits_); }
  constexpr FaceSet operator|(FaceSet o) const { return FaceSet(bits_ | o.bits_); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  /// "{0,2}"
  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (auto i : members()) {
      if (!first_item) s += ",";
      s += std::to_string(i);
      first_item = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(FaceSet, FaceSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Order used for every face listing: by size, then lexicographically by
/// member indices.
inline bool face_order_less(FaceSet a, FaceSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

}  // namespace horo
