#pragma once

// Hand-computed values the library is calibrated and tested against.

#include <array>
#include <string_view>

namespace lvb::reference {

/// A word and the normal-form label it is stated to equal.
struct Anchor {
  std::string_view name;
  std::string_view word;
  int k;
  int l;
};

// a [a,b] and [a,b] a, the conjugate alpha, and b^-2 written as b^6.
inline constexpr std::array<Anchor, 4> kConventionAnchors{{
    {"a[a,b]", "a (a b a^-1 b^-1)", 3, 2},
    {"[a,b]a", "(a b a^-1 b^-1) a", 3, 6},
    {"alpha", "(ab)^-3 a (ab)^3", 7, 6},
    {"b^-2", "b^-2", 0, 6},
}};

inline constexpr std::string_view kAlphaWord = "(ab)^-3 a (ab)^3";
inline constexpr int kAlphaK = 7, kAlphaL = 6;

// The beta formula is printed as (ab^3)^3 ab (ab^3)^-3 but the chain that
// produces it conjugates b5 = ab^2. Both readings are evaluated.
inline constexpr std::array<std::string_view, 2> kBetaReadings{
    "(ab^3)^3 ab (ab^3)^-3",
    "(ab^3)^3 ab^2 (ab^3)^-3",
};
inline constexpr int kBetaStatedK = 7, kBetaStatedL = 1;

/// Right trefoil arc colours with start a.
inline constexpr std::array<std::string_view, 5> kRightChain{"a", "ab^-1", "a^2 b^-1 a^-1", "(ab)^2 a^-1", "ab^2"};

inline constexpr std::string_view kLeftStart = "a";
inline constexpr std::string_view kLeftEnd = "ab^2";
inline constexpr std::string_view kLeftB4 = "ab";

/// Words on which the substitution a -> ab, b -> b is evaluated when no
/// total f reproduces the chain.
inline constexpr std::array<std::string_view, 8> kPartialFWords{
    "a", "b", "ab^-1", "a^2 b^-1 a^-1", "(ab)^2 a^-1", "ab^2", "ab", "(ab^2)^3 ab (ab^2)^-3",
};

/// One column of the printed parity table for A = x y^2 x^-1 y^-2 with
/// x = a^k b^l, y = a^i b^j. Cells are "0", "-4i" or "-4j" and give the
/// exponents of the value a^alpha b^beta.
struct ParityColumn {
  int i, j, k, l;
  std::string_view alpha;
  std::string_view beta;
};

inline constexpr std::array<ParityColumn, 16> kParityTable{{
    {1, 1, 1, 1, "0", "0"},   {1, 0, 1, 1, "-4i", "0"}, {0, 1, 1, 1, "0", "-4j"}, {0, 0, 1, 1, "0", "0"},
    {1, 1, 1, 0, "0", "0"},   {1, 0, 1, 0, "0", "0"},   {0, 1, 1, 0, "0", "-4j"}, {0, 0, 1, 0, "0", "0"},
    {1, 1, 0, 1, "0", "0"},   {1, 0, 0, 1, "-4i", "0"}, {0, 1, 0, 1, "0", "0"},   {0, 0, 0, 1, "0", "0"},
    {1, 1, 0, 0, "0", "0"},   {1, 0, 0, 0, "0", "0"},   {0, 1, 0, 0, "0", "0"},   {0, 0, 0, 0, "0", "0"},
}};

/// Exponent a cell denotes for the column's parities.
constexpr int cell_value(std::string_view cell, int i, int j) {
  if (cell == "-4i") return -4 * i;
  if (cell == "-4j") return -4 * j;
  return 0;
}

}  // namespace lvb::reference
