#include "lvb/calibration.hpp"

#include <algorithm>

#include "lvb/diagram.hpp"
#include "lvb/reference.hpp"
#include "lvb/words.hpp"

namespace lvb {

ConventionCalibration calibrate_convention() {
  ConventionCalibration out;
  bool have_choice = false;
  for (const Convention& c : all_conventions()) {
    ConventionTrial trial{c, {}, true};
    const TorusGroup g = TorusGroup::build(c);
    for (const auto& anchor : reference::kConventionAnchors) {
      const Element expected = Element::from_normal(anchor.k, anchor.l);
      const Element got = eval_word(anchor.word, g);
      trial.anchors.push_back({std::string(anchor.name), std::string(anchor.word), format_normal(expected),
                               format_normal(got), got == expected});
      trial.matches = trial.matches && got == expected;
    }
    if (trial.matches) {
      ++out.match_count;
      if (!have_choice) out.chosen = c;
      have_choice = true;
    }
    out.trials.push_back(std::move(trial));
  }
  if (!have_choice) throw NoConventionMatches("no orientation convention reproduces the anchor values");
  return out;
}

const TorusGroup& standard_group() {
  static const TorusGroup group = TorusGroup::build(kFrozenConvention);
  return group;
}

Biquandle standard_biquandle(int n) { return Biquandle::from_group(standard_group(), n); }

FCandidate partial_substitution_f(const TorusGroup& group) {
  const std::vector<std::string> words(reference::kPartialFWords.begin(), reference::kPartialFWords.end());
  return make_f_partial(group, words);
}

ColoringCalibration calibrate_coloring(const TorusGroup& group) {
  std::vector<Element> chain;
  for (auto w : reference::kRightChain) chain.push_back(eval_word(w, group));
  const Element start = chain.front();
  const LongDiagram right = builtin_trefoil(Hand::right);

  const std::vector<FCandidate> candidates{make_f(group, FKind::substitution), make_f(group, FKind::shear),
                                           partial_substitution_f(group)};
  ColoringCalibration out;
  for (const FCandidate& f : candidates) {
    Biquandle bq = Biquandle::from_group(group, 2);
    bq.attach_f(f);
    for (const bool positive_forward : {true, false}) {
      for (const Sign virtual_default : {Sign::minus, Sign::plus}) {
        const ColoringConvention convention{positive_forward, virtual_default, false};
        const InvariantResult r = solve(build_constraints(right, bq, convention), bq, start);
        const bool hit = std::find(r.colorings.begin(), r.colorings.end(), chain) != r.colorings.end();
        out.trials.push_back({f.kind, convention, hit});
        if (hit) {
          out.f = f;
          out.convention = convention;
          return out;
        }
      }
    }
  }
  throw NoConventionMatches("no f candidate and crossing convention reproduces the right trefoil chain");
}

const ColoringCalibration& standard_coloring() {
  static const ColoringCalibration calibration = calibrate_coloring(standard_group());
  return calibration;
}

Biquandle calibrated_biquandle(int n) {
  Biquandle bq = standard_biquandle(n);
  bq.attach_f(standard_coloring().f);
  return bq;
}

std::vector<ParityCheck> compare_parity_table(const TorusGroup& group) {
  std::vector<ParityCheck> out;
  for (const ParityRow& row : group.parity_table()) {
    const auto column = std::find_if(reference::kParityTable.begin(), reference::kParityTable.end(), [&](const auto& c) {
      return c.i == row.i && c.j == row.j && c.k == row.k && c.l == row.l;
    });
    ParityCheck check{row, std::string(column->alpha), std::string(column->beta), {}, false};
    check.published = Element::from_normal(reference::cell_value(column->alpha, row.i, row.j),
                                           reference::cell_value(column->beta, row.i, row.j));
    check.matches = row.constant() && row.values.front() == check.published;
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace lvb
