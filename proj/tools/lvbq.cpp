// lvbq: command-line front end for the torus group, the long virtual
// biquandle on it, axiom audits and long knot colourings.
//
// Exit status: 0 success, 1 audit failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lvb/biquandle.hpp"
#include "lvb/calibration.hpp"
#include "lvb/coloring.hpp"
#include "lvb/diagram.hpp"
#include "lvb/report.hpp"
#include "lvb/words.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAuditFailed = 1;
constexpr int kExitUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";

  std::string expr;

  int n = 2;
  std::string f = "none";

  std::string target;
  std::string second;
  std::string start;
  std::string end;
  std::string engine = "propagation";
  bool show_constraints = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

lvb::LongDiagram load_diagram(const std::string& target) {
  constexpr std::string_view prefix = "builtin:";
  if (target.starts_with(prefix)) {
    try {
      return lvb::builtin_diagram(std::string_view(target).substr(prefix.size()));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return lvb::parse_diagram(read_file(target));
}

lvb::Element parse_element(const std::string& expr) { return lvb::eval_word(expr, lvb::standard_group()); }

void emit(const Options& opt, const json& header, const json& body, const std::string& header_text,
          const std::string& text) {
  if (opt.format == "json") {
    json out = header;
    out["result"] = body;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << header_text << text;
  }
}

int cmd_group(const std::string& which, const Options& opt) {
  const lvb::TorusGroup& g = lvb::standard_group();
  const json header = lvb::header_json(g.convention());
  const std::string htext = lvb::header_text(g.convention());

  if (which == "eval") {
    const lvb::Element x = lvb::eval_word(opt.expr, g);
    emit(opt, header,
         {{"expr", opt.expr}, {"normal_form", lvb::format_normal(x)}, {"word", lvb::format_word(x, g)},
          {"vertex", {x.k(), x.l()}}},
         htext, lvb::format_normal(x) + "\n");
    return kExitOk;
  }
  if (which == "center") {
    const auto center = g.center();
    json list = json::array();
    std::string text;
    for (lvb::Element z : center.members) {
      list.push_back(lvb::format_normal(z));
      text += lvb::format_normal(z) + "\n";
    }
    emit(opt, header, {{"center", list}, {"order", center.members.size()}}, htext, text);
    return kExitOk;
  }
  if (which == "table") {
    // Entry kl stands for a^k b^l.
    json rows = json::array();
    std::string text = "# entry kl = a^k b^l; row x, column y gives xy\n";
    for (int x = 0; x < lvb::kGroupOrder; ++x) {
      json row = json::array();
      for (int y = 0; y < lvb::kGroupOrder; ++y) {
        const lvb::Element p = g.mul(lvb::Element::from_index(x), lvb::Element::from_index(y));
        row.push_back(lvb::format_normal(p));
        text += (y ? " " : "") + std::to_string(p.k()) + std::to_string(p.l());
      }
      rows.push_back(std::move(row));
      text += "\n";
    }
    emit(opt, header, {{"table", rows}}, htext, text);
    return kExitOk;
  }
  if (which == "parity-table") {
    const auto checks = lvb::compare_parity_table(g);
    emit(opt, header, lvb::to_json(checks), htext, lvb::format_text(checks));
    return kExitOk;
  }
  const auto calibration = lvb::calibrate_convention();
  const auto& coloring = lvb::standard_coloring();
  json body = lvb::to_json(calibration);
  body["coloring"] = {{"convention", lvb::to_string(coloring.convention)}, {"f", lvb::to_json(coloring.f)}};
  emit(opt, header, body, htext,
       lvb::format_text(calibration) + "coloring: " + lvb::to_string(coloring.convention) + "\n" +
           lvb::format_text(coloring.f));
  return kExitOk;
}

int cmd_audit(const Options& opt) {
  const lvb::TorusGroup& g = lvb::standard_group();
  lvb::Biquandle bq = lvb::Biquandle::from_group(g, opt.n);
  if (opt.f == "substitution") {
    bq.attach_f(lvb::make_f(g, lvb::FKind::substitution));
  } else if (opt.f == "shear") {
    bq.attach_f(lvb::make_f(g, lvb::FKind::shear));
  } else if (opt.f == "partial") {
    bq.attach_f(lvb::partial_substitution_f(g));
  } else if (opt.f.starts_with("table:")) {
    try {
      bq.attach_f(lvb::make_f_explicit(g, lvb::parse_f_table(read_file(opt.f.substr(6)))));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else if (opt.f != "none") {
    throw InputError("unknown --f value '" + opt.f + "'; use substitution, shear, partial, table:<file> or none");
  }
  const lvb::AxiomReport report = lvb::audit(bq);
  emit(opt, lvb::header_json(g.convention()), lvb::to_json(report), lvb::header_text(g.convention()),
       lvb::format_text(report));
  return report.all_passed() ? kExitOk : kExitAuditFailed;
}

lvb::Engine parse_engine(const std::string& name) {
  return name == "exhaustive" ? lvb::Engine::exhaustive : lvb::Engine::propagation;
}

int cmd_color(const Options& opt) {
  const lvb::LongDiagram d = load_diagram(opt.target);
  const lvb::Biquandle bq = lvb::calibrated_biquandle();
  const auto& convention = lvb::standard_coloring().convention;
  const lvb::ConstraintSet cs = lvb::build_constraints(d, bq, convention);
  lvb::SolveOptions so{parse_engine(opt.engine), std::nullopt};
  if (!opt.end.empty()) so.end = parse_element(opt.end);
  const lvb::InvariantResult r = lvb::solve(cs, bq, parse_element(opt.start), so);

  json body = lvb::to_json(r);
  body["diagram"] = d.name;
  std::string text = "diagram " + d.name + "\n";
  if (opt.show_constraints) {
    body["constraints"] = lvb::to_json(cs);
    text += lvb::format_text(cs);
  }
  emit(opt, lvb::header_json(bq.group().convention(), &convention), body,
       lvb::header_text(bq.group().convention(), &convention), text + lvb::format_text(r));
  return kExitOk;
}

int cmd_distinguish(const Options& opt) {
  const lvb::LongDiagram d1 = load_diagram(opt.target);
  const lvb::LongDiagram d2 = load_diagram(opt.second);
  const lvb::Biquandle bq = lvb::calibrated_biquandle();
  const auto& convention = lvb::standard_coloring().convention;
  const lvb::Distinction result =
      lvb::distinguish(d1, d2, bq, parse_element(opt.start), convention, parse_engine(opt.engine));
  emit(opt, lvb::header_json(bq.group().convention(), &convention), lvb::to_json(result),
       lvb::header_text(bq.group().convention(), &convention), lvb::format_text(result));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Long virtual biquandle on the 8x8 torus group"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* group = app.add_subcommand("group", "Group computations");
  group->require_subcommand(1);
  auto* eval = group->add_subcommand("eval", "Evaluate a word to its normal form");
  eval->add_option("expr", opt.expr, "Word, e.g. \"(ab)^-3 a (ab)^3\"")->required();
  auto* center = group->add_subcommand("center", "List the center");
  auto* table = group->add_subcommand("table", "Print the 64x64 multiplication table");
  auto* parity = group->add_subcommand("parity-table", "Check the commutator parity table");
  auto* calibrate = group->add_subcommand("calibrate", "Show the convention calibration");

  auto* audit = app.add_subcommand("audit", "Exhaustive axiom audit");
  audit->add_option("--n", opt.n, "Twist exponent in x * y = y^(n+1) x y^-(n+1)")->check(CLI::PositiveNumber);
  audit->add_option("--f", opt.f, "substitution | shear | partial | table:<file> | none");

  const std::vector<std::string> engines{"exhaustive", "propagation"};
  auto* color = app.add_subcommand("color", "Colourings of a long diagram");
  color->add_option("diagram", opt.target, "File or builtin:<name>")->required();
  color->add_option("--start", opt.start, "Colour of the first arc")->required();
  color->add_option("--end", opt.end, "Keep colourings ending in this colour");
  color->add_option("--engine", opt.engine)->check(CLI::IsMember(engines));
  color->add_flag("--show-constraints", opt.show_constraints, "Print the crossing relations");

  auto* dist = app.add_subcommand("distinguish", "Compare two long diagrams");
  dist->add_option("first", opt.target)->required();
  dist->add_option("second", opt.second)->required();
  dist->add_option("--start", opt.start)->required();
  dist->add_option("--engine", opt.engine)->check(CLI::IsMember(engines));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*group) {
      for (auto* sub : {eval, center, table, parity, calibrate})
        if (*sub) return cmd_group(sub->get_name(), opt);
    }
    if (*audit) return cmd_audit(opt);
    if (*color) return cmd_color(opt);
    if (*dist) return cmd_distinguish(opt);
  } catch (const lvb::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lvb::DiagramSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lvb::PairingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lvb::MissingF& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
