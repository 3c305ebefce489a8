#pragma once

#include <compare>
#include <cstdint>

namespace lvb {

inline constexpr int kSide = 8;
inline constexpr int kGroupOrder = kSide * kSide;

constexpr int mod8(long long v) {
  const long long r = v % kSide;
  return static_cast<int>(r < 0 ? r + kSide : r);
}

/// A vertex of the 8x8 torus grid.
struct Vertex {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
};

/// An element of the torus group.
///
/// Elements are identified with the vertex their path reaches from the base
/// vertex (0,0). The normal form (k, l) is that vertex, written a^k b^l:
/// k steps along the bottom row, then l rows up. Index order is
/// lexicographic in (k, l).
class Element {
 public:
  constexpr Element() = default;

  static constexpr Element from_index(int index) {
    return Element(static_cast<std::uint8_t>(index & (kGroupOrder - 1)));
  }
  static constexpr Element from_normal(long long k, long long l) {
    return Element(static_cast<std::uint8_t>(mod8(k) * kSide + mod8(l)));
  }
  static constexpr Element from_vertex(Vertex v) { return from_normal(v.x, v.y); }

  constexpr int k() const { return index_ >> 3; }
  constexpr int l() const { return index_ & 7; }
  constexpr int index() const { return index_; }
  constexpr Vertex vertex() const { return {k(), l()}; }

  friend constexpr auto operator<=>(const Element&, const Element&) = default;

 private:
  constexpr explicit Element(std::uint8_t index) : index_(index) {}

  std::uint8_t index_ = 0;
};

}  // namespace lvb
