#include "lvb/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "lvb/words.hpp"

namespace lvb {
namespace {

constexpr int kUnset = -1;

Op division_of(Op op) { return op == Op::circ ? Op::circ_div : Op::star_div; }

bool relation_holds(const Relation& r, const Biquandle& bq, const std::vector<int>& color) {
  const Element in = Element::from_index(color[static_cast<std::size_t>(r.input)]);
  const Element out = Element::from_index(color[static_cast<std::size_t>(r.output)]);
  if (r.kind == Relation::Kind::classical)
    return bq.op(r.op, in, Element::from_index(color[static_cast<std::size_t>(r.over)])) == out;
  if (r.direction == FDirection::forward) return bq.f().map.apply(in) == out;
  return bq.f().map.apply(out) == in;
}

int max_arc(const Relation& r) {
  return std::max({r.input, r.output, r.kind == Relation::Kind::classical ? r.over : 0});
}

class Search {
 public:
  Search(const ConstraintSet& cs, const Biquandle& bq, Element start, std::optional<Element> end)
      : cs_(cs), bq_(bq), end_(end), color_(static_cast<std::size_t>(cs.arc_count) + 1, kUnset) {
    color_[1] = start.index();
  }

  std::vector<Coloring> exhaustive() {
    // Each relation is checked at the depth where its last arc is assigned.
    checks_.assign(static_cast<std::size_t>(cs_.arc_count) + 1, {});
    for (const Relation& r : cs_.relations) checks_[static_cast<std::size_t>(max_arc(r))].push_back(&r);
    if (passes_at(1)) assign(2);
    return finish();
  }

  std::vector<Coloring> propagation() {
    propagate(0);
    return finish();
  }

 private:
  bool passes_at(int arc) const {
    if (arc == cs_.arc_count && end_ && color_[static_cast<std::size_t>(arc)] != end_->index()) return false;
    for (const Relation* r : checks_[static_cast<std::size_t>(arc)])
      if (!relation_holds(*r, bq_, color_)) return false;
    return true;
  }

  void assign(int arc) {
    if (arc > cs_.arc_count) {
      record();
      return;
    }
    for (int v = 0; v < kGroupOrder; ++v) {
      color_[static_cast<std::size_t>(arc)] = v;
      if (passes_at(arc)) assign(arc + 1);
    }
    color_[static_cast<std::size_t>(arc)] = kUnset;
  }

  // Sets `arc` to `v` unless it already holds a different (guessed) value.
  template <typename Next>
  void settle(int arc, int v, Next&& next) {
    int& slot = color_[static_cast<std::size_t>(arc)];
    if (arc == cs_.arc_count && end_ && v != end_->index()) return;
    if (slot != kUnset) {
      if (slot == v) next();
      return;
    }
    slot = v;
    next();
    slot = kUnset;
  }

  void propagate(std::size_t i) {
    if (i == cs_.relations.size()) {
      record();
      return;
    }
    const Relation& r = cs_.relations[i];
    const int in = color_[static_cast<std::size_t>(r.input)];
    assert(in != kUnset);
    auto next = [&] { propagate(i + 1); };

    if (r.kind == Relation::Kind::classical) {
      int& over = color_[static_cast<std::size_t>(r.over)];
      if (over == kUnset) {
        // Over arc not determined yet: branch over the carrier for it alone.
        for (int v = 0; v < kGroupOrder; ++v) {
          over = v;
          propagate(i);
        }
        over = kUnset;
        return;
      }
      const Element out = bq_.op(r.op, Element::from_index(in), Element::from_index(over));
      settle(r.output, out.index(), next);
      return;
    }
    if (r.direction == FDirection::forward) {
      if (const auto out = bq_.f().map.apply(Element::from_index(in))) settle(r.output, out->index(), next);
      return;
    }
    for (const Element pre : bq_.f().map.preimages(Element::from_index(in))) settle(r.output, pre.index(), next);
  }

  void record() {
    if (end_ && color_[static_cast<std::size_t>(cs_.arc_count)] != end_->index()) return;
    Coloring c;
    for (int arc = 1; arc <= cs_.arc_count; ++arc) c.push_back(Element::from_index(color_[static_cast<std::size_t>(arc)]));
    found_.push_back(std::move(c));
  }

  std::vector<Coloring> finish() {
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

  const ConstraintSet& cs_;
  const Biquandle& bq_;
  std::optional<Element> end_;
  std::vector<int> color_;
  std::vector<std::vector<const Relation*>> checks_;
  std::vector<Coloring> found_;
};

}  // namespace

std::string to_string(const ColoringConvention& c) {
  std::string out = c.positive_forward ? "+: out = in op over" : "+: in = out op over";
  out += c.virtual_default == Sign::plus ? "; V: out = f(in)" : "; V: in = f(out)";
  if (c.classical_only) out += "; classical";
  return out;
}

ConstraintSet build_constraints(const LongDiagram& d, const Biquandle& bq, const ColoringConvention& convention) {
  const ArcLayout layout = arcs(d);
  const auto classes = classify(d);
  ConstraintSet cs;
  cs.arc_count = layout.arc_count;

  std::map<int, int> over_arc;
  for (std::size_t i = 0; i < d.passes.size(); ++i)
    if (d.passes[i].kind == PassKind::over) over_arc[d.passes[i].crossing] = layout.per_pass[i].incoming;

  for (std::size_t i = 0; i < d.passes.size(); ++i) {
    const Pass& p = d.passes[i];
    if (p.kind == PassKind::over) continue;
    Relation r;
    r.pass_index = i;
    r.crossing = p.crossing;
    r.input = layout.per_pass[i].incoming;
    r.output = layout.per_pass[i].outgoing;
    if (p.kind == PassKind::under) {
      r.kind = Relation::Kind::classical;
      r.over = over_arc.at(p.crossing);
      const bool early_over = classes.at(p.crossing) == CrossingClass::early_over;
      const Op base = convention.classical_only || early_over ? Op::circ : Op::star;
      const bool forward = (p.sign == Sign::plus) == convention.positive_forward;
      r.op = forward ? base : division_of(base);
    } else {
      if (!bq.has_f()) throw MissingF();
      r.kind = Relation::Kind::virt;
      const Sign s = p.sign == Sign::unspecified ? convention.virtual_default : p.sign;
      r.direction = s == Sign::plus ? FDirection::forward : FDirection::inverse;
    }
    cs.relations.push_back(r);
  }
  return cs;
}

std::string to_string(const Relation& r) {
  const auto arc = [](int i) { return "a" + std::to_string(i); };
  if (r.kind == Relation::Kind::classical)
    return arc(r.output) + " = " + arc(r.input) + " " + std::string(to_string(r.op)) + " " + arc(r.over);
  if (r.direction == FDirection::forward) return arc(r.output) + " = f(" + arc(r.input) + ")";
  return arc(r.input) + " = f(" + arc(r.output) + ")";
}

InvariantResult solve(const ConstraintSet& cs, const Biquandle& bq, Element start, const SolveOptions& options) {
  Search search(cs, bq, start, options.end);
  InvariantResult result;
  result.start = start;
  result.end = options.end;
  result.colorings = options.engine == Engine::exhaustive ? search.exhaustive() : search.propagation();
  for (const Coloring& c : result.colorings) result.end_colors.push_back(c.back());
  std::sort(result.end_colors.begin(), result.end_colors.end());
  result.end_colors.erase(std::unique(result.end_colors.begin(), result.end_colors.end()), result.end_colors.end());
  result.count = result.colorings.size();
  if (bq.has_f()) result.f_summary = f_summary(bq.f());
  return result;
}

bool satisfies(const ConstraintSet& cs, const Biquandle& bq, const Coloring& coloring) {
  if (coloring.size() != static_cast<std::size_t>(cs.arc_count)) return false;
  std::vector<int> color(coloring.size() + 1, kUnset);
  for (std::size_t i = 0; i < coloring.size(); ++i) color[i + 1] = coloring[i].index();
  return std::all_of(cs.relations.begin(), cs.relations.end(),
                     [&](const Relation& r) { return relation_holds(r, bq, color); });
}

std::string_view to_string(Verdict v) { return v == Verdict::distinguished ? "DISTINGUISHED" : "INCONCLUSIVE"; }

Distinction distinguish(const LongDiagram& d1, const LongDiagram& d2, const Biquandle& bq, Element start,
                        const ColoringConvention& convention, Engine engine) {
  Distinction out;
  out.first = solve(build_constraints(d1, bq, convention), bq, start, {engine, std::nullopt});
  out.second = solve(build_constraints(d2, bq, convention), bq, start, {engine, std::nullopt});
  if (out.first.count != out.second.count) {
    out.verdict = Verdict::distinguished;
    out.reason = "colouring counts differ (" + std::to_string(out.first.count) + " vs " +
                 std::to_string(out.second.count) + ")";
  } else if (out.first.end_colors != out.second.end_colors) {
    out.verdict = Verdict::distinguished;
    out.reason = "end-colour sets differ";
  } else {
    out.reason = "counts and end-colour sets agree";
  }
  return out;
}

InvariantResult classical_color_count(const LongDiagram& d, const Biquandle& bq, Element start, Engine engine) {
  if (std::any_of(d.passes.begin(), d.passes.end(), [](const Pass& p) { return p.kind == PassKind::virt; }))
    throw HasVirtualPasses();
  const Biquandle quandle = bq.quandle_only();
  ColoringConvention convention;
  convention.classical_only = true;
  return solve(build_constraints(d, quandle, convention), quandle, start, {engine, std::nullopt});
}

std::string f_summary(const FCandidate& f) {
  const FVerdicts& v = f.verdicts;
  std::string out = std::string(to_string(f.kind)) + ": defined on " + std::to_string(v.defined) + "/64";
  out += v.bijective ? ", bijective" : ", not bijective";
  out += v.multiplicative ? ", multiplicative" : ", not multiplicative";
  return out;
}

}  // namespace lvb
