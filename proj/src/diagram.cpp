#include "lvb/diagram.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace lvb {
namespace {

constexpr std::string_view kRightTrefoil = "longknot right-trefoil\nV1 U1+ O2+ V1 O1+ U2+\n";
constexpr std::string_view kLeftTrefoil = "longknot left-trefoil\nU1- V1 U2- O1- V1+ O2-\n";
constexpr std::string_view kUnknot = "longknot unknot\n";

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    Token t{{}, line, column};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
      t.text += text[i++];
      ++column;
    }
    out.push_back(std::move(t));
  }
  return out;
}

Pass parse_pass(const Token& t) {
  const std::string& s = t.text;
  Pass p;
  switch (s[0]) {
    case 'O': p.kind = PassKind::over; break;
    case 'U': p.kind = PassKind::under; break;
    case 'V': p.kind = PassKind::virt; break;
    default: throw DiagramSyntaxError("expected a pass O<id><sign>, U<id><sign> or V<id>, got '" + s + "'", t.line, t.column);
  }
  std::size_t end = 1;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  if (end == 1) throw DiagramSyntaxError("missing crossing id in '" + s + "'", t.line, t.column + 1);
  const auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + end, p.crossing);
  if (ec != std::errc{} || ptr != s.data() + end) throw DiagramSyntaxError("crossing id out of range", t.line, t.column + 1);

  if (end == s.size()) {
    if (p.kind != PassKind::virt) throw DiagramSyntaxError("classical pass '" + s + "' needs a sign", t.line, t.column + end);
    return p;
  }
  if (end + 1 != s.size() || (s[end] != '+' && s[end] != '-'))
    throw DiagramSyntaxError("bad sign in '" + s + "'", t.line, t.column + end);
  p.sign = s[end] == '+' ? Sign::plus : Sign::minus;
  return p;
}

}  // namespace

std::size_t LongDiagram::arc_count() const {
  std::size_t n = 1;
  for (const Pass& p : passes)
    if (p.kind != PassKind::over) ++n;
  return n;
}

LongDiagram parse_diagram(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  LongDiagram d{"unnamed", {}};
  std::size_t i = 0;
  if (!tokens.empty() && tokens[0].text == "longknot") {
    if (tokens.size() < 2 || tokens[1].line != tokens[0].line)
      throw DiagramSyntaxError("header needs a name", tokens[0].line, tokens[0].column + 8);
    d.name = tokens[1].text;
    i = 2;
    if (i < tokens.size() && tokens[i].line == tokens[0].line)
      throw DiagramSyntaxError("unexpected text after the name", tokens[i].line, tokens[i].column);
  }
  for (; i < tokens.size(); ++i) d.passes.push_back(parse_pass(tokens[i]));
  validate(d);
  return d;
}

void validate(const LongDiagram& d) {
  // Classical and virtual crossings are numbered independently.
  struct Seen {
    int over = 0, under = 0;
    Sign classical_sign = Sign::unspecified;
  };
  std::map<int, Seen> seen;
  std::map<int, int> virtual_seen;
  for (const Pass& p : d.passes) {
    if (p.kind == PassKind::virt) {
      ++virtual_seen[p.crossing];
      continue;
    }
    Seen& s = seen[p.crossing];
    ++(p.kind == PassKind::over ? s.over : s.under);
    if (s.classical_sign == Sign::unspecified) {
      s.classical_sign = p.sign;
    } else if (s.classical_sign != p.sign) {
      throw PairingError("crossing " + std::to_string(p.crossing) + ": over and under signs differ", p.crossing);
    }
  }
  for (const auto& [id, s] : seen) {
    if (s.over != 1 || s.under != 1)
      throw PairingError("crossing " + std::to_string(id) + ": needs exactly one O and one U pass", id);
  }
  for (const auto& [id, n] : virtual_seen) {
    if (n != 2)
      throw PairingError("virtual crossing " + std::to_string(id) + " passed " + std::to_string(n) + " times", id);
  }
}

std::string to_string(const Pass& p) {
  std::string out(1, p.kind == PassKind::over ? 'O' : p.kind == PassKind::under ? 'U' : 'V');
  out += std::to_string(p.crossing);
  if (p.sign == Sign::plus) out += '+';
  if (p.sign == Sign::minus) out += '-';
  return out;
}

std::string serialize(const LongDiagram& d) {
  std::string out = "longknot " + d.name + "\n";
  for (std::size_t i = 0; i < d.passes.size(); ++i) out += (i ? " " : "") + to_string(d.passes[i]);
  if (!d.passes.empty()) out += "\n";
  return out;
}

std::map<int, CrossingClass> classify(const LongDiagram& d) {
  std::map<int, CrossingClass> out;
  for (const Pass& p : d.passes) {
    if (p.kind == PassKind::virt || out.contains(p.crossing)) continue;
    out[p.crossing] = p.kind == PassKind::over ? CrossingClass::early_over : CrossingClass::early_under;
  }
  return out;
}

ArcLayout arcs(const LongDiagram& d) {
  ArcLayout layout;
  int current = 1;
  for (const Pass& p : d.passes) {
    PassArcs pa{current, current};
    if (p.kind != PassKind::over) pa.outgoing = ++current;
    layout.per_pass.push_back(pa);
  }
  layout.arc_count = current;
  return layout;
}

std::string_view builtin_trefoil_text(Hand hand) { return hand == Hand::right ? kRightTrefoil : kLeftTrefoil; }

LongDiagram builtin_trefoil(Hand hand) { return parse_diagram(builtin_trefoil_text(hand)); }

LongDiagram builtin_diagram(std::string_view name) {
  if (name == "right-trefoil") return builtin_trefoil(Hand::right);
  if (name == "left-trefoil") return builtin_trefoil(Hand::left);
  if (name == "unknot") return parse_diagram(kUnknot);
  throw std::invalid_argument("unknown builtin diagram '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() { return {"right-trefoil", "left-trefoil", "unknot"}; }

}  // namespace lvb
