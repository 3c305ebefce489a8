#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lvb/biquandle.hpp"
#include "lvb/diagram.hpp"

namespace lvb {

/// Direction conventions for crossing relations.
///
/// Classical pass with sign s at a crossing whose operation is d (o when
/// early over, * when early under):
///   s matches positive_forward: out = in d over
///   otherwise:                  in = out d over, i.e. out = in /d over
/// Virtual pass: "+" means out = f(in), "-" means in = f(out); unsigned
/// virtual passes take virtual_default.
struct ColoringConvention {
  bool positive_forward = true;
  Sign virtual_default = Sign::minus;
  bool classical_only = false;  // every classical relation uses o

  friend bool operator==(const ColoringConvention&, const ColoringConvention&) = default;
};

std::string to_string(const ColoringConvention& c);

struct Relation {
  enum class Kind { classical, virt };

  Kind kind = Kind::classical;
  std::size_t pass_index = 0;
  int crossing = 0;
  int output = 0;  // arc indices are 1-based
  int input = 0;
  int over = 0;             // classical only
  Op op = Op::circ;         // classical: arc[output] = arc[input] op arc[over]
  FDirection direction = FDirection::forward;  // virtual: forward out = f(in); inverse in = f(out)
};

struct ConstraintSet {
  int arc_count = 1;
  std::vector<Relation> relations;  // in pass order
};

class HasVirtualPasses : public std::invalid_argument {
 public:
  HasVirtualPasses() : std::invalid_argument("classical colouring requires a diagram without virtual passes") {}
};

/// Throws MissingF when the diagram has virtual passes and bq has no f.
ConstraintSet build_constraints(const LongDiagram& d, const Biquandle& bq, const ColoringConvention& convention);

std::string to_string(const Relation& r);

using Coloring = std::vector<Element>;  // arc i at position i - 1

enum class Engine { exhaustive, propagation };

struct SolveOptions {
  Engine engine = Engine::propagation;
  std::optional<Element> end;  // keep only colorings whose last arc is this
};

struct InvariantResult {
  Element start;
  std::optional<Element> end;
  std::vector<Coloring> colorings;  // sorted lexicographically
  std::vector<Element> end_colors;  // sorted, distinct
  std::size_t count = 0;
  std::string f_summary;  // audit stamp of the f in use, empty without f
};

/// All colorings with arc 1 = start. Both engines return identical results.
InvariantResult solve(const ConstraintSet& cs, const Biquandle& bq, Element start, const SolveOptions& options = {});

/// Rechecks a coloring against every relation using forward table lookups.
bool satisfies(const ConstraintSet& cs, const Biquandle& bq, const Coloring& coloring);

enum class Verdict { distinguished, inconclusive };

std::string_view to_string(Verdict v);

struct Distinction {
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
  InvariantResult first;
  InvariantResult second;
};

Distinction distinguish(const LongDiagram& d1, const LongDiagram& d2, const Biquandle& bq, Element start,
                        const ColoringConvention& convention, Engine engine = Engine::propagation);

/// Classical mode: o only, f the identity. Throws HasVirtualPasses.
InvariantResult classical_color_count(const LongDiagram& d, const Biquandle& bq, Element start,
                                      Engine engine = Engine::propagation);

std::string f_summary(const FCandidate& f);

}  // namespace lvb
