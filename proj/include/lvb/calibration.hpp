#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lvb/biquandle.hpp"
#include "lvb/coloring.hpp"
#include "lvb/torus_group.hpp"

namespace lvb {

/// The orientation convention fixed by calibrate_convention().
inline constexpr Convention kFrozenConvention{CompositionOrder::word_order, RowPhase::even_rows_right,
                                              ColumnPhase::even_cols_up};

class NoConventionMatches : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnchorCheck {
  std::string name;
  std::string word;
  std::string expected;
  std::string got;
  bool ok = false;
};

struct ConventionTrial {
  Convention convention;
  std::vector<AnchorCheck> anchors;
  bool matches = false;
};

struct ConventionCalibration {
  Convention chosen;
  std::vector<ConventionTrial> trials;  // all eight
  int match_count = 0;                  // > 1 means the first match was taken
};

/// Builds the group under every convention and keeps the first one whose
/// word evaluations land on every anchor label. Throws NoConventionMatches.
ConventionCalibration calibrate_convention();

/// The group under kFrozenConvention, built once.
const TorusGroup& standard_group();

/// The biquandle with n-twist `n` on the standard group, no f attached.
Biquandle standard_biquandle(int n = 2);

FCandidate partial_substitution_f(const TorusGroup& group);

struct ColoringTrial {
  FKind f_kind;
  ColoringConvention convention;
  bool reproduces_chain = false;
};

struct ColoringCalibration {
  FCandidate f;
  ColoringConvention convention;
  std::vector<ColoringTrial> trials;
};

/// Tries the f candidates (substitution, shear, partial) against the
/// classical and virtual direction choices, in that order, and keeps the
/// first combination whose right trefoil coloring with start a contains the
/// reference chain. Throws NoConventionMatches.
ColoringCalibration calibrate_coloring(const TorusGroup& group);

/// Memoised calibrate_coloring(standard_group()).
const ColoringCalibration& standard_coloring();

/// Standard biquandle with the calibrated f attached.
Biquandle calibrated_biquandle(int n = 2);

/// A computed parity class next to the printed cell values.
struct ParityCheck {
  ParityRow row;
  std::string published_alpha;
  std::string published_beta;
  Element published;
  bool matches = false;  // row is constant and equals the published value
};

std::vector<ParityCheck> compare_parity_table(const TorusGroup& group);

}  // namespace lvb
