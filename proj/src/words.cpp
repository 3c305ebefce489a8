#include "lvb/words.hpp"

#include <cctype>
#include <charconv>

namespace lvb {
namespace {

constexpr std::size_t kMaxExpandedLength = 1u << 16;

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  WordExpr parse() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError("empty word", pos_);
    WordExpr w = word();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw SyntaxError("unbalanced ')'", pos_);
      throw SyntaxError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_space();
    if (pos_ == text_.size()) return false;
    const char c = text_[pos_];
    return c == 'a' || c == 'b' || c == 'e' || c == '(';
  }

  WordExpr word() {
    std::vector<WordExpr> parts;
    parts.push_back(factor());
    while (at_factor_start()) parts.push_back(factor());
    if (parts.size() == 1) return std::move(parts.front());
    return WordExpr::make_concat(std::move(parts));
  }

  WordExpr factor() {
    skip_space();
    WordExpr base = primary();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      return WordExpr::make_power(std::move(base), integer());
    }
    return base;
  }

  WordExpr primary() {
    if (pos_ == text_.size()) throw SyntaxError("expected 'a', 'b', 'e' or '('", pos_);
    const char c = text_[pos_];
    if (c == 'a' || c == 'b') {
      ++pos_;
      return WordExpr::make_letter(c);
    }
    if (c == 'e') {
      ++pos_;
      return WordExpr::identity_word();
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') throw SyntaxError("empty parentheses", pos_);
      WordExpr inner = word();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') throw SyntaxError("unbalanced '('", open);
      ++pos_;
      return inner;
    }
    if (c == ')') throw SyntaxError("unbalanced ')'", pos_);
    if (c == '^') throw SyntaxError("'^' without a base", pos_);
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  long long integer() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    if (end == digits) throw SyntaxError("expected an integer exponent", pos_);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc{} || ptr != text_.data() + end) throw SyntaxError("exponent out of range", start);
    pos_ = end;
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void expand_into(const WordExpr& expr, std::string& out) {
  switch (expr.kind) {
    case WordExpr::Kind::identity:
      return;
    case WordExpr::Kind::letter:
      out.push_back(expr.letter);
      return;
    case WordExpr::Kind::concat:
      for (const auto& child : expr.children) expand_into(child, out);
      return;
    case WordExpr::Kind::power: {
      std::string base;
      expand_into(expr.children.front(), base);
      if (expr.exponent < 0) {
        std::string inverted(base.rbegin(), base.rend());
        for (char& c : inverted) c = inverse_letter(c);
        base = std::move(inverted);
      }
      const unsigned long long times = expr.exponent < 0 ? -static_cast<unsigned long long>(expr.exponent)
                                                         : static_cast<unsigned long long>(expr.exponent);
      if (!base.empty() && times > kMaxExpandedLength / base.size())
        throw std::length_error("word too long to expand");
      for (unsigned long long i = 0; i < times; ++i) out += base;
      if (out.size() > kMaxExpandedLength) throw std::length_error("word too long to expand");
      return;
    }
  }
}

std::string power_suffix(long long n) { return n == 1 ? "" : "^" + std::to_string(n); }

std::string monomial(int k, int l) {
  if (k == 0 && l == 0) return "e";
  std::string out;
  if (k != 0) out = "a" + power_suffix(k);
  if (l != 0) {
    if (!out.empty()) out += ' ';
    out += "b" + power_suffix(l);
  }
  return out;
}

}  // namespace

WordExpr parse_word(std::string_view text) { return WordParser(text).parse(); }

std::string to_string(const WordExpr& expr) {
  switch (expr.kind) {
    case WordExpr::Kind::identity:
      return "e";
    case WordExpr::Kind::letter:
      return std::string(1, expr.letter);
    case WordExpr::Kind::power: {
      const WordExpr& base = expr.children.front();
      const bool atomic = base.kind == WordExpr::Kind::identity || base.kind == WordExpr::Kind::letter;
      const std::string inner = to_string(base);
      return (atomic ? inner : "(" + inner + ")") + "^" + std::to_string(expr.exponent);
    }
    case WordExpr::Kind::concat: {
      std::string out;
      for (const auto& child : expr.children) {
        if (!out.empty()) out += ' ';
        const std::string piece = to_string(child);
        out += child.kind == WordExpr::Kind::concat ? "(" + piece + ")" : piece;
      }
      return out;
    }
  }
  return {};
}

std::string expand_letters(const WordExpr& expr) {
  std::string out;
  expand_into(expr, out);
  return out;
}

Element eval_word(const WordExpr& expr, const TorusGroup& group) {
  switch (expr.kind) {
    case WordExpr::Kind::identity:
      return group.identity();
    case WordExpr::Kind::letter:
      return expr.letter == 'a' ? group.a() : group.b();
    case WordExpr::Kind::power:
      return group.power(eval_word(expr.children.front(), group), expr.exponent);
    case WordExpr::Kind::concat: {
      Element acc = group.identity();
      for (const auto& child : expr.children) acc = group.mul(acc, eval_word(child, group));
      return acc;
    }
  }
  return group.identity();
}

Element eval_word(std::string_view text, const TorusGroup& group) { return eval_word(parse_word(text), group); }

std::string format_normal(Element g) { return monomial(g.k(), g.l()); }

Element parse_normal(std::string_view text) {
  // Structural check: "e" or an a-term followed by an optional b-term.
  const WordExpr expr = parse_word(text);
  auto term_exponent = [](const WordExpr& t, char letter, long long& out) {
    if (t.kind == WordExpr::Kind::letter && t.letter == letter) {
      out = 1;
      return true;
    }
    if (t.kind == WordExpr::Kind::power && t.children.front().kind == WordExpr::Kind::letter &&
        t.children.front().letter == letter) {
      out = t.exponent;
      return true;
    }
    return false;
  };
  long long k = 0, l = 0;
  if (expr.kind == WordExpr::Kind::identity) return Element{};
  if (term_exponent(expr, 'a', k)) return Element::from_normal(k, 0);
  if (term_exponent(expr, 'b', l)) return Element::from_normal(0, l);
  if (expr.kind == WordExpr::Kind::concat && expr.children.size() == 2 &&
      term_exponent(expr.children[0], 'a', k) && term_exponent(expr.children[1], 'b', l)) {
    return Element::from_normal(k, l);
  }
  throw SyntaxError("not a normal form 'a^k b^l': " + std::string(text), 0);
}

std::string format_word(Element g, const TorusGroup& group) {
  const auto [k, m] = group.word_exponents(g);
  return monomial(k, m);
}

}  // namespace lvb
