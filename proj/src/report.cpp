#include "lvb/report.hpp"

#include <sstream>

#include "lvb/words.hpp"

namespace lvb {
namespace {

using nlohmann::json;

std::string_view status_name(AxiomEntry::Status s) {
  switch (s) {
    case AxiomEntry::Status::pass: return "PASS";
    case AxiomEntry::Status::fail: return "FAIL";
    case AxiomEntry::Status::skipped: return "SKIP";
  }
  return "?";
}

json element_list(const std::vector<Element>& xs) {
  json out = json::array();
  for (Element x : xs) out.push_back(format_normal(x));
  return out;
}

std::string join(const std::vector<Element>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(sep) : "") + format_normal(xs[i]);
  return out;
}

}  // namespace

json to_json(const AxiomReport& report) {
  json entries = json::array();
  for (const AxiomEntry& e : report.entries) {
    json j{{"id", e.id}, {"statement", e.statement}, {"domain", e.domain}, {"status", status_name(e.status)}};
    if (!e.note.empty()) j["note"] = e.note;
    if (e.counterexample) {
      json inputs = json::object();
      for (const auto& [name, value] : e.counterexample->inputs) inputs[name] = format_normal(value);
      j["counterexample"] = {{"inputs", inputs}, {"lhs", e.counterexample->lhs}, {"rhs", e.counterexample->rhs}};
    }
    entries.push_back(std::move(j));
  }
  return {{"n", report.n_twist}, {"f", report.f_kind}, {"all_passed", report.all_passed()}, {"entries", entries}};
}

std::string format_text(const AxiomReport& report) {
  std::ostringstream out;
  out << "audit n=" << report.n_twist << " f=" << report.f_kind << "\n";
  for (const AxiomEntry& e : report.entries) {
    out << status_name(e.status) << "  " << e.id;
    if (!e.statement.empty()) out << "  [" << e.statement << "]";
    if (e.domain) out << "  domain " << e.domain;
    out << "\n";
    if (!e.note.empty()) out << "      " << e.note << "\n";
    if (e.counterexample) {
      out << "      counterexample:";
      for (const auto& [name, value] : e.counterexample->inputs) out << " " << name << "=" << format_normal(value);
      out << "  lhs=" << e.counterexample->lhs << "  rhs=" << e.counterexample->rhs << "\n";
    }
  }
  out << (report.all_passed() ? "all checked axioms pass\n" : "some axioms fail\n");
  return out.str();
}

json to_json(const FCandidate& f) {
  const FVerdicts& v = f.verdicts;
  json j{{"kind", to_string(f.kind)},
         {"defined", v.defined},
         {"total", v.total},
         {"injective", v.injective},
         {"bijective", v.bijective},
         {"multiplicative", v.multiplicative},
         {"pairs_checked", v.pairs_checked}};
  if (v.collision) j["collision"] = element_list({(*v.collision)[0], (*v.collision)[1]});
  if (v.product_witness) j["product_witness"] = element_list({(*v.product_witness)[0], (*v.product_witness)[1]});
  if (!v.conflicts.empty()) j["conflicts"] = v.conflicts;
  return j;
}

std::string format_text(const FCandidate& f) {
  const FVerdicts& v = f.verdicts;
  std::ostringstream out;
  out << "f " << to_string(f.kind) << ": defined on " << v.defined << "/64, "
      << (v.bijective ? "bijective" : "not bijective") << ", "
      << (v.multiplicative ? "multiplicative" : "not multiplicative") << " (" << v.pairs_checked << " pairs checked)\n";
  if (v.collision) out << "  collision: f(" << format_normal((*v.collision)[0]) << ") = f(" << format_normal((*v.collision)[1]) << ")\n";
  if (v.product_witness)
    out << "  product witness: x=" << format_normal((*v.product_witness)[0])
        << " y=" << format_normal((*v.product_witness)[1]) << "\n";
  for (const auto& w : v.conflicts) out << "  conflicting word: " << w << "\n";
  return out.str();
}

json to_json(const InvariantResult& result) {
  json colorings = json::array();
  for (const Coloring& c : result.colorings) colorings.push_back(element_list(c));
  json j{{"start", format_normal(result.start)},
         {"count", result.count},
         {"end_colors", element_list(result.end_colors)},
         {"colorings", colorings}};
  if (result.end) j["end"] = format_normal(*result.end);
  if (!result.f_summary.empty()) j["f"] = result.f_summary;
  return j;
}

std::string format_text(const InvariantResult& result) {
  std::ostringstream out;
  out << "start " << format_normal(result.start);
  if (result.end) out << ", end pinned to " << format_normal(*result.end);
  out << "\n";
  if (!result.f_summary.empty()) out << "f " << result.f_summary << "\n";
  for (const Coloring& c : result.colorings) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "  " : "") << "a" << i + 1 << "=" << format_normal(c[i]);
    out << "\n";
  }
  out << "count " << result.count << "\n";
  out << "end colors {" << join(result.end_colors, ", ") << "}\n";
  return out.str();
}

json to_json(const Distinction& d) {
  return {{"verdict", to_string(d.verdict)}, {"reason", d.reason}, {"first", to_json(d.first)},
          {"second", to_json(d.second)}};
}

std::string format_text(const Distinction& d) {
  std::ostringstream out;
  out << "first:  count " << d.first.count << ", end colors {" << join(d.first.end_colors, ", ") << "}\n";
  out << "second: count " << d.second.count << ", end colors {" << join(d.second.end_colors, ", ") << "}\n";
  out << to_string(d.verdict) << " (" << d.reason << ")\n";
  return out.str();
}

json to_json(const ConstraintSet& cs) {
  json relations = json::array();
  for (const Relation& r : cs.relations) relations.push_back(to_string(r));
  return {{"arcs", cs.arc_count}, {"relations", relations}};
}

std::string format_text(const ConstraintSet& cs) {
  std::string out = "arcs " + std::to_string(cs.arc_count) + "\n";
  for (const Relation& r : cs.relations) out += "  " + to_string(r) + "\n";
  return out;
}

json to_json(const ConventionCalibration& c) {
  json trials = json::array();
  for (const ConventionTrial& t : c.trials) {
    json anchors = json::array();
    for (const AnchorCheck& a : t.anchors)
      anchors.push_back({{"name", a.name}, {"word", a.word}, {"expected", a.expected}, {"got", a.got}, {"ok", a.ok}});
    trials.push_back({{"convention", to_string(t.convention)}, {"matches", t.matches}, {"anchors", anchors}});
  }
  return {{"chosen", to_string(c.chosen)}, {"match_count", c.match_count}, {"trials", trials}};
}

std::string format_text(const ConventionCalibration& c) {
  std::ostringstream out;
  for (const ConventionTrial& t : c.trials) {
    out << (t.matches ? "match   " : "reject  ") << to_string(t.convention) << "\n";
    for (const AnchorCheck& a : t.anchors) {
      out << "    " << (a.ok ? "ok  " : "bad ") << a.name << " = " << a.got;
      if (!a.ok) out << " (want " << a.expected << ")";
      out << "\n";
    }
  }
  out << "frozen: " << to_string(c.chosen) << " (" << c.match_count << " matching)\n";
  return out.str();
}

json to_json(const std::vector<ParityCheck>& rows) {
  json out = json::array();
  for (const ParityCheck& c : rows) {
    out.push_back({{"i", c.row.i},
                   {"j", c.row.j},
                   {"k", c.row.k},
                   {"l", c.row.l},
                   {"values", element_list(c.row.values)},
                   {"all_central", c.row.all_central},
                   {"published", {{"alpha", c.published_alpha}, {"beta", c.published_beta}}},
                   {"published_value", format_normal(c.published)},
                   {"matches", c.matches}});
  }
  return out;
}

std::string format_text(const std::vector<ParityCheck>& rows) {
  std::ostringstream out;
  out << "i j k l  A            central  printed (alpha, beta)\n";
  bool all_match = true;
  for (const ParityCheck& c : rows) {
    std::string values = join(c.row.values, ", ");
    values.resize(std::max<std::size_t>(values.size(), 12), ' ');
    out << c.row.i << " " << c.row.j << " " << c.row.k << " " << c.row.l << "  " << values << " "
        << (c.row.all_central ? "yes" : "no ") << "      (" << c.published_alpha << ", " << c.published_beta << ")"
        << (c.matches ? "" : "  ERRATUM") << "\n";
    all_match = all_match && c.matches;
  }
  out << (all_match ? "every class matches the printed table\n" : "some classes differ from the printed table\n");
  return out.str();
}

json header_json(const Convention& group_convention, const ColoringConvention* coloring) {
  json j{{"convention", to_string(group_convention)}};
  if (coloring) j["coloring_convention"] = to_string(*coloring);
  return j;
}

std::string header_text(const Convention& group_convention, const ColoringConvention* coloring) {
  std::string out = "# convention: " + to_string(group_convention) + "\n";
  if (coloring) out += "# coloring: " + to_string(*coloring) + "\n";
  return out;
}

}  // namespace lvb
