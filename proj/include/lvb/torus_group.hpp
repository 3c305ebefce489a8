#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lvb/element.hpp"

namespace lvb {

// Path letters: 'a', 'b' step along an edge in its orientation, 'A', 'B'
// step against it.
constexpr bool is_path_letter(char c) { return c == 'a' || c == 'A' || c == 'b' || c == 'B'; }
constexpr char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

enum class CompositionOrder {
  word_order,      // leftmost letter traversed first
  function_order,  // rightmost letter traversed first
};

enum class RowPhase { even_rows_right, even_rows_left };
enum class ColumnPhase { even_cols_up, even_cols_down };

struct Convention {
  CompositionOrder composition = CompositionOrder::word_order;
  RowPhase rows = RowPhase::even_rows_right;
  ColumnPhase columns = ColumnPhase::even_cols_up;

  friend constexpr bool operator==(const Convention&, const Convention&) = default;
};

std::string to_string(CompositionOrder order);
std::string to_string(RowPhase phase);
std::string to_string(ColumnPhase phase);
std::string to_string(const Convention& convention);

/// All eight conventions in enum order.
std::vector<Convention> all_conventions();

/// One edge step on the torus from `v` along letter `c` under `convention`.
Vertex step_vertex(Vertex v, char c, const Convention& convention);

/// Endpoint of the path that reads `letters` from `start`, traversed in the
/// convention's composition order.
Vertex walk(Vertex start, std::string_view letters, const Convention& convention);

class ConventionInconsistent : public std::runtime_error {
 public:
  ConventionInconsistent(const std::string& what, std::string first_word, std::string second_word)
      : std::runtime_error(what), first_word_(std::move(first_word)), second_word_(std::move(second_word)) {}

  const std::string& first_word() const { return first_word_; }
  const std::string& second_word() const { return second_word_; }

 private:
  std::string first_word_;
  std::string second_word_;
};

struct CenterSet {
  std::vector<Element> members;

  bool contains(Element g) const;
};

/// A (k, l) parity class of the commutator sweep A = x y^2 x^-1 y^-2 with
/// x = a^k b^l and y = a^i b^j.
struct ParityRow {
  int i = 0, j = 0, k = 0, l = 0;
  std::vector<Element> values;  // distinct values of A over all representatives
  bool all_central = false;

  bool constant() const { return values.size() == 1; }
};

/// The finite group of path classes on the oriented 8x8 torus.
///
/// Construction closes the two generator moves under composition and
/// identifies each element with its endpoint from (0,0). Construction throws
/// ConventionInconsistent unless the generated permutation group acts
/// regularly on the 64 vertices and endpoint identification agrees with
/// path concatenation. Immutable once built.
class TorusGroup {
 public:
  static TorusGroup build(const Convention& convention);

  const Convention& convention() const { return convention_; }

  Element identity() const { return Element{}; }
  Element a() const { return generator_a_; }
  Element b() const { return generator_b_; }

  Element mul(Element g, Element h) const {
    return Element::from_index(table_[static_cast<std::size_t>(g.index() * kGroupOrder + h.index())]);
  }
  Element inv(Element g) const { return Element::from_index(inverse_[static_cast<std::size_t>(g.index())]); }
  Element power(Element g, long long n) const;
  Element commutator(Element g, Element h) const;
  int order_of(Element g) const;
  bool is_central(Element g) const;
  CenterSet center() const;

  /// Row-major 64x64 product table of element indices.
  std::span<const std::uint8_t> table() const { return table_; }

  /// A shortest path word reaching the element, over letters aAbB.
  const std::string& representative_word(Element g) const {
    return words_[static_cast<std::size_t>(g.index())];
  }

  /// The product a^k b^m in this group.
  Element from_word_exponents(long long k, long long m) const;
  /// The unique (k, m) in 0..7 with a^k b^m == g.
  std::pair<int, int> word_exponents(Element g) const {
    return word_exponents_[static_cast<std::size_t>(g.index())];
  }

  /// Element reached by reading `letters` as a product in this group.
  Element evaluate_letters(std::string_view letters) const;

  std::vector<ParityRow> parity_table() const;

 private:
  TorusGroup() = default;

  Convention convention_;
  Element generator_a_;
  Element generator_b_;
  std::array<std::uint8_t, kGroupOrder * kGroupOrder> table_{};
  std::array<std::uint8_t, kGroupOrder> inverse_{};
  std::array<std::string, kGroupOrder> words_;
  std::array<std::pair<int, int>, kGroupOrder> word_exponents_{};
};

}  // namespace lvb
