#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lvb/element.hpp"
#include "lvb/kernels.hpp"
#include "lvb/torus_group.hpp"

namespace lvb {

enum class Op { circ, star, circ_div, star_div };

inline constexpr std::array<Op, 4> kAllOps{Op::circ, Op::star, Op::circ_div, Op::star_div};

std::string_view to_string(Op op);
/// Inverse of to_string(Op); also accepts "o", "*", "/o", "/*".
std::optional<Op> parse_op(std::string_view text);

class MissingF : public std::runtime_error {
 public:
  MissingF()
      : std::runtime_error("no f map attached to the biquandle; pass --f substitution|shear|partial|table:<file>") {}
};

enum class FKind {
  substitution,          // a -> ab, b -> b on words a^k b^m
  shear,                 // a^k b^m -> a^k b^(k+m)
  explicit_table,        // user supplied
  substitution_partial,  // substitution evaluated on listed words only
};

std::string_view to_string(FKind kind);

/// A possibly partial map on the carrier.
class FMap {
 public:
  FMap() { image_.fill(kUndefined); }

  static FMap identity();

  bool defined(Element x) const { return image_[static_cast<std::size_t>(x.index())] != kUndefined; }
  std::optional<Element> apply(Element x) const {
    if (!defined(x)) return std::nullopt;
    return Element::from_index(image_[static_cast<std::size_t>(x.index())]);
  }
  void set(Element x, Element y) { image_[static_cast<std::size_t>(x.index())] = static_cast<std::int8_t>(y.index()); }

  /// All x with f(x) == y, ascending.
  std::vector<Element> preimages(Element y) const;
  int defined_count() const;
  bool total() const { return defined_count() == kGroupOrder; }

  friend bool operator==(const FMap&, const FMap&) = default;

 private:
  static constexpr std::int8_t kUndefined = -1;
  std::array<std::int8_t, kGroupOrder> image_{};
};

/// Property verdicts for an f candidate, each with a witness when it fails.
struct FVerdicts {
  int defined = 0;
  bool total = false;
  bool injective = false;
  std::optional<std::array<Element, 2>> collision;  // x != y with f(x) == f(y)
  bool bijective = false;
  bool multiplicative = false;
  std::size_t pairs_checked = 0;                    // pairs with f(x), f(y), f(xy) defined
  std::optional<std::array<Element, 2>> product_witness;  // f(xy) != f(x) f(y)
  std::vector<std::string> conflicts;               // partial kind: words that disagree
};

struct FCandidate {
  FKind kind = FKind::explicit_table;
  FMap map;
  FVerdicts verdicts;
};

/// Builds and checks a candidate of the given kind. The substitution map
/// sends the word a^k b^m to (ab)^k b^m; the shear sends it to a^k b^(k+m).
/// Failed verdicts are data, never errors. Throws std::invalid_argument for
/// explicit_table and substitution_partial, which need their own inputs.
FCandidate make_f(const TorusGroup& group, FKind kind);
FCandidate make_f_explicit(const TorusGroup& group, const FMap& table);
/// Substitution a -> ab, b -> b applied letterwise to each word and evaluated,
/// recorded only on the elements those words name.
FCandidate make_f_partial(const TorusGroup& group, std::span<const std::string> words);

FVerdicts check_f(const TorusGroup& group, const FMap& map);

/// Reads 64-style "from to" lines of normal forms; '#' starts a comment and an
/// optional "->" may separate the two sides.
FMap parse_f_table(std::string_view text);
std::string format_f_table(const FMap& map);

enum class FDirection { forward, inverse };

/// Finite long virtual biquandle on the torus group:
///   x o y = y x y^-1,  x * y = y^(n+1) x y^-(n+1)
/// with the division tables solved from them. Immutable after construction
/// except for attaching f.
class Biquandle {
 public:
  static Biquandle from_group(const TorusGroup& group, int n_twist);

  /// Same carrier with * replaced by o; the classical quandle.
  Biquandle quandle_only() const;

  const TorusGroup& group() const { return group_; }
  int n_twist() const { return n_twist_; }

  Element op(Op which, Element x, Element y) const {
    return Element::from_index(tables_[static_cast<std::size_t>(which)].at(x.index(), y.index()));
  }
  const kernels::PaddedTable& table(Op which) const { return tables_[static_cast<std::size_t>(which)]; }

  void attach_f(FCandidate f) { f_ = std::move(f); }
  bool has_f() const { return f_.has_value(); }
  const FCandidate& f() const;

  /// Table lookup of f or f^-1. Throws MissingF without f; returns nullopt
  /// where the map (or its inverse) is undefined or not single-valued.
  std::optional<Element> apply_f(FDirection direction, Element x) const;

 private:
  Biquandle(const TorusGroup& group) : group_(group) {}

  TorusGroup group_;
  int n_twist_ = 2;
  std::array<kernels::PaddedTable, 4> tables_;
  std::optional<FCandidate> f_;
};

struct Counterexample {
  std::vector<std::pair<std::string, Element>> inputs;
  std::string lhs;  // normal form, or "undefined"
  std::string rhs;
};

struct AxiomEntry {
  enum class Status { pass, fail, skipped };

  std::string id;
  std::string statement;
  std::size_t domain = 0;
  Status status = Status::pass;
  std::string note;  // reason for skips, coverage for partial maps
  std::optional<Counterexample> counterexample;
};

struct AxiomReport {
  int n_twist = 0;
  std::string f_kind;  // "none" without f
  std::vector<AxiomEntry> entries;

  bool all_passed() const;
  const AxiomEntry* find(std::string_view id) const;
};

/// Exhaustive sweep of every axiom over its full domain; the sweeps run on
/// the active kernel set.
AxiomReport audit(const Biquandle& bq);

}  // namespace lvb
