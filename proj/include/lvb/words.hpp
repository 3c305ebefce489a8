#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lvb/element.hpp"
#include "lvb/torus_group.hpp"

namespace lvb {

/// Parse tree of a group word such as "(ab)^-3 a (ab)^3". Inverses are
/// powers with exponent -1.
struct WordExpr {
  enum class Kind { identity, letter, power, concat };

  Kind kind = Kind::identity;
  char letter = 0;         // 'a' or 'b' for Kind::letter
  long long exponent = 0;  // Kind::power
  std::vector<WordExpr> children;

  static WordExpr identity_word() { return {}; }
  static WordExpr make_letter(char c) { return {Kind::letter, c, 0, {}}; }
  static WordExpr make_power(WordExpr base, long long n) { return {Kind::power, 0, n, {std::move(base)}}; }
  static WordExpr make_concat(std::vector<WordExpr> parts) { return {Kind::concat, 0, 0, std::move(parts)}; }

  friend bool operator==(const WordExpr&, const WordExpr&) = default;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace ignored):
//   word   := factor+
//   factor := base ('^' int)?
//   base   := 'a' | 'b' | 'e' | '(' word ')'
//   int    := '-'? digit+
// A single factor parses to that factor; two or more to a concat node.
WordExpr parse_word(std::string_view text);

/// Canonical text for the tree; parse_word(to_string(w)) == w.
std::string to_string(const WordExpr& expr);

/// Flatten to path letters over aAbB. Powers are expanded; intended for the
/// short words of hand computations.
std::string expand_letters(const WordExpr& expr);

Element eval_word(const WordExpr& expr, const TorusGroup& group);
Element eval_word(std::string_view text, const TorusGroup& group);

/// Normal-form label "a^k b^l" of the vertex the element reaches; zero
/// exponents are omitted and the identity prints as "e".
std::string format_normal(Element g);

/// Inverse of format_normal. Accepts "e", "a", "a^k", "b^l", "a^k b^l" with
/// exponents taken mod 8. Throws SyntaxError otherwise.
Element parse_normal(std::string_view text);

/// An evaluable word "a^k b^m" for g, with eval_word(format_word(g)) == g.
/// Differs from format_normal when the a-exponent is odd, since odd columns
/// point down.
std::string format_word(Element g, const TorusGroup& group);

}  // namespace lvb
