#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lvb {

enum class PassKind { over, under, virt };
enum class Sign { plus, minus, unspecified };

/// One passage of the long knot through a crossing.
struct Pass {
  PassKind kind = PassKind::over;
  int crossing = 0;
  // Classical passes always carry a sign. Virtual passes may carry one to
  // choose the f direction; unspecified uses the coloring default.
  Sign sign = Sign::unspecified;

  friend bool operator==(const Pass&, const Pass&) = default;
};

struct LongDiagram {
  std::string name;
  std::vector<Pass> passes;

  std::size_t arc_count() const;
  friend bool operator==(const LongDiagram&, const LongDiagram&) = default;
};

class DiagramSyntaxError : public std::runtime_error {
 public:
  DiagramSyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class PairingError : public std::runtime_error {
 public:
  PairingError(const std::string& message, int crossing)
      : std::runtime_error(message), crossing_(crossing) {}

  int crossing() const { return crossing_; }

 private:
  int crossing_;
};

// Format:
//   longknot <name>
//   <pass> <pass> ...
// with passes "O<id><sign>", "U<id><sign>", "V<id>[<sign>]" in traversal
// order, separated by whitespace or newlines. '#' comments to end of line.
// The header may be omitted; the name is then "unnamed".
LongDiagram parse_diagram(std::string_view text);

/// Throws PairingError unless every classical id has one Over and one Under
/// pass with equal signs and every virtual id appears exactly twice.
void validate(const LongDiagram& d);

/// "longknot <name>" followed by the passes on one line.
std::string serialize(const LongDiagram& d);
std::string to_string(const Pass& p);

enum class CrossingClass { early_over, early_under };

/// Classification of each classical crossing id by which pass comes first.
std::map<int, CrossingClass> classify(const LongDiagram& d);

/// Arc segmentation: a new arc starts after every Under and Virtual pass.
struct PassArcs {
  int incoming = 0;  // arc entering the pass (carrying arc for Over)
  int outgoing = 0;  // arc leaving the pass; equals incoming for Over
};

struct ArcLayout {
  int arc_count = 1;
  std::vector<PassArcs> per_pass;
};

ArcLayout arcs(const LongDiagram& d);

enum class Hand { right, left };

/// The two long virtual trefoils with two classical and one virtual
/// crossing, as frozen golden data.
LongDiagram builtin_trefoil(Hand hand);
std::string_view builtin_trefoil_text(Hand hand);

/// Resolves "right-trefoil", "left-trefoil" and "unknot"; throws
/// std::invalid_argument for other names.
LongDiagram builtin_diagram(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace lvb
