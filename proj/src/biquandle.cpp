#include "lvb/biquandle.hpp"

#include <algorithm>
#include <sstream>

#include "lvb/words.hpp"

namespace lvb {
namespace {

using kernels::PaddedTable;

constexpr std::size_t kPairs = static_cast<std::size_t>(kGroupOrder) * kGroupOrder;

std::string_view symbol(Op op) {
  switch (op) {
    case Op::circ: return "o";
    case Op::star: return "*";
    case Op::circ_div: return "/o";
    case Op::star_div: return "/*";
  }
  return "?";
}

std::uint8_t idx(Element e) { return static_cast<std::uint8_t>(e.index()); }

std::string show(std::optional<Element> e) { return e ? format_normal(*e) : "undefined"; }

// Row/column index vectors enumerating all 4096 pairs (p, q), p-major.
struct PairGrid {
  std::vector<std::uint8_t> first = std::vector<std::uint8_t>(kPairs);
  std::vector<std::uint8_t> second = std::vector<std::uint8_t>(kPairs);

  PairGrid() {
    for (std::size_t i = 0; i < kPairs; ++i) {
      first[i] = static_cast<std::uint8_t>(i >> 6);
      second[i] = static_cast<std::uint8_t>(i & 63);
    }
  }
};

AxiomEntry pass_entry(std::string id, std::string statement, std::size_t domain) {
  AxiomEntry e;
  e.id = std::move(id);
  e.statement = std::move(statement);
  e.domain = domain;
  return e;
}

void fail_with(AxiomEntry& entry, Counterexample cx) {
  entry.status = AxiomEntry::Status::fail;
  entry.counterexample = std::move(cx);
}

}  // namespace

std::string_view to_string(Op op) {
  switch (op) {
    case Op::circ: return "circ";
    case Op::star: return "star";
    case Op::circ_div: return "circ_div";
    case Op::star_div: return "star_div";
  }
  return "?";
}

std::optional<Op> parse_op(std::string_view text) {
  for (Op op : kAllOps)
    if (text == to_string(op) || text == symbol(op)) return op;
  return std::nullopt;
}

std::string_view to_string(FKind kind) {
  switch (kind) {
    case FKind::substitution: return "substitution";
    case FKind::shear: return "shear";
    case FKind::explicit_table: return "table";
    case FKind::substitution_partial: return "partial";
  }
  return "?";
}

FMap FMap::identity() {
  FMap f;
  for (int i = 0; i < kGroupOrder; ++i) f.set(Element::from_index(i), Element::from_index(i));
  return f;
}

std::vector<Element> FMap::preimages(Element y) const {
  std::vector<Element> out;
  for (int i = 0; i < kGroupOrder; ++i)
    if (image_[static_cast<std::size_t>(i)] == y.index()) out.push_back(Element::from_index(i));
  return out;
}

int FMap::defined_count() const {
  return static_cast<int>(std::count_if(image_.begin(), image_.end(), [](std::int8_t v) { return v != kUndefined; }));
}

FVerdicts check_f(const TorusGroup& group, const FMap& map) {
  FVerdicts v;
  v.defined = map.defined_count();
  v.total = v.defined == kGroupOrder;

  std::array<int, kGroupOrder> first_source;
  first_source.fill(-1);
  for (int i = 0; i < kGroupOrder && !v.collision; ++i) {
    const auto image = map.apply(Element::from_index(i));
    if (!image) continue;
    int& seen = first_source[static_cast<std::size_t>(image->index())];
    if (seen >= 0) v.collision = std::array{Element::from_index(seen), Element::from_index(i)};
    seen = i;
  }
  v.injective = !v.collision.has_value();
  v.bijective = v.total && v.injective;

  for (int i = 0; i < kGroupOrder; ++i) {
    for (int j = 0; j < kGroupOrder; ++j) {
      const Element x = Element::from_index(i), y = Element::from_index(j);
      const auto fx = map.apply(x), fy = map.apply(y), fxy = map.apply(group.mul(x, y));
      if (!fx || !fy || !fxy) continue;
      ++v.pairs_checked;
      if (!v.product_witness && *fxy != group.mul(*fx, *fy)) v.product_witness = std::array{x, y};
    }
  }
  v.multiplicative = v.total && !v.product_witness;
  return v;
}

FCandidate make_f(const TorusGroup& group, FKind kind) {
  FCandidate c;
  c.kind = kind;
  const Element ab = group.mul(group.a(), group.b());
  switch (kind) {
    case FKind::substitution:
      for (int i = 0; i < kGroupOrder; ++i) {
        const Element g = Element::from_index(i);
        const auto [k, m] = group.word_exponents(g);
        c.map.set(g, group.mul(group.power(ab, k), group.power(group.b(), m)));
      }
      break;
    case FKind::shear:
      for (int i = 0; i < kGroupOrder; ++i) {
        const Element g = Element::from_index(i);
        const auto [k, m] = group.word_exponents(g);
        c.map.set(g, group.from_word_exponents(k, k + m));
      }
      break;
    case FKind::explicit_table:
    case FKind::substitution_partial:
      throw std::invalid_argument("make_f: this kind needs explicit input");
  }
  c.verdicts = check_f(group, c.map);
  return c;
}

FCandidate make_f_explicit(const TorusGroup& group, const FMap& table) {
  FCandidate c;
  c.kind = FKind::explicit_table;
  c.map = table;
  c.verdicts = check_f(group, c.map);
  return c;
}

FCandidate make_f_partial(const TorusGroup& group, std::span<const std::string> words) {
  FCandidate c;
  c.kind = FKind::substitution_partial;
  std::vector<std::string> conflicts;
  for (const std::string& text : words) {
    const std::string letters = expand_letters(parse_word(text));
    std::string substituted;
    for (char ch : letters) {
      switch (ch) {
        case 'a': substituted += "ab"; break;
        case 'A': substituted += "BA"; break;
        default: substituted += ch; break;
      }
    }
    const Element x = group.evaluate_letters(letters);
    const Element y = group.evaluate_letters(substituted);
    if (const auto existing = c.map.apply(x)) {
      if (*existing != y) conflicts.push_back(text);
      continue;
    }
    c.map.set(x, y);
  }
  c.verdicts = check_f(group, c.map);
  c.verdicts.conflicts = std::move(conflicts);
  return c;
}

FMap parse_f_table(std::string_view text) {
  FMap map;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;)
      if (t != "->") parts.push_back(t);
    if (parts.empty()) continue;

    // A normal form spans one or two tokens; exactly one split yields two.
    std::optional<std::pair<Element, Element>> entry;
    for (std::size_t cut = 1; cut < parts.size(); ++cut) {
      auto join = [&](std::size_t from, std::size_t to) {
        std::string s;
        for (std::size_t i = from; i < to; ++i) s += (i == from ? "" : " ") + parts[i];
        return s;
      };
      try {
        entry = std::pair{parse_normal(join(0, cut)), parse_normal(join(cut, parts.size()))};
        break;
      } catch (const SyntaxError&) {
      }
    }
    if (!entry) throw std::invalid_argument("f table line " + std::to_string(line_no) + ": expected '<from> <to>'");
    if (map.defined(entry->first)) {
      throw std::invalid_argument("f table line " + std::to_string(line_no) + ": " +
                                  format_normal(entry->first) + " mapped twice");
    }
    map.set(entry->first, entry->second);
  }
  return map;
}

std::string format_f_table(const FMap& map) {
  std::string out;
  for (int i = 0; i < kGroupOrder; ++i) {
    const Element x = Element::from_index(i);
    if (const auto y = map.apply(x)) out += format_normal(x) + " -> " + format_normal(*y) + "\n";
  }
  return out;
}

Biquandle Biquandle::from_group(const TorusGroup& group, int n_twist) {
  if (n_twist < 1) throw std::invalid_argument("n_twist must be positive");
  Biquandle bq(group);
  bq.n_twist_ = n_twist;
  for (int yi = 0; yi < kGroupOrder; ++yi) {
    const Element y = Element::from_index(yi);
    const Element twist = group.power(y, n_twist + 1);
    for (int xi = 0; xi < kGroupOrder; ++xi) {
      const Element x = Element::from_index(xi);
      const Element circ = group.mul(group.mul(y, x), group.inv(y));
      const Element star = group.mul(group.mul(twist, x), group.inv(twist));
      bq.tables_[static_cast<std::size_t>(Op::circ)].set(xi, yi, idx(circ));
      bq.tables_[static_cast<std::size_t>(Op::star)].set(xi, yi, idx(star));
      // Solve the divisions from the forward rows: z /o y = x iff x o y = z.
      bq.tables_[static_cast<std::size_t>(Op::circ_div)].set(circ.index(), yi, static_cast<std::uint8_t>(xi));
      bq.tables_[static_cast<std::size_t>(Op::star_div)].set(star.index(), yi, static_cast<std::uint8_t>(xi));
    }
  }
  return bq;
}

Biquandle Biquandle::quandle_only() const {
  Biquandle q = *this;
  q.tables_[static_cast<std::size_t>(Op::star)] = tables_[static_cast<std::size_t>(Op::circ)];
  q.tables_[static_cast<std::size_t>(Op::star_div)] = tables_[static_cast<std::size_t>(Op::circ_div)];
  FCandidate id;
  id.kind = FKind::explicit_table;
  id.map = FMap::identity();
  id.verdicts = check_f(group_, id.map);
  q.f_ = std::move(id);
  return q;
}

const FCandidate& Biquandle::f() const {
  if (!f_) throw MissingF();
  return *f_;
}

std::optional<Element> Biquandle::apply_f(FDirection direction, Element x) const {
  const FMap& map = f().map;
  if (direction == FDirection::forward) return map.apply(x);
  const auto pre = map.preimages(x);
  if (pre.size() != 1) return std::nullopt;
  return pre.front();
}

bool AxiomReport::all_passed() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const AxiomEntry& e) { return e.status == AxiomEntry::Status::fail; });
}

const AxiomEntry* AxiomReport::find(std::string_view id) const {
  for (const auto& e : entries)
    if (e.id == id) return &e;
  return nullptr;
}

AxiomReport audit(const Biquandle& bq) {
  const auto& k = kernels::active();
  const PairGrid grid;
  AxiomReport report;
  report.n_twist = bq.n_twist();
  report.f_kind = bq.has_f() ? std::string(to_string(bq.f().kind)) : "none";

  std::vector<std::uint8_t> lhs(kPairs), rhs(kPairs), t1(kPairs), t2(kPairs), fill(kPairs);
  const std::uint8_t* A = grid.first.data();
  const std::uint8_t* B = grid.second.data();

  // (1) idempotence
  for (Op op : {Op::circ, Op::star}) {
    AxiomEntry e = pass_entry("idempotence." + std::string(to_string(op)),
                              "x " + std::string(symbol(op)) + " x = x", kGroupOrder);
    std::array<std::uint8_t, kGroupOrder> xs{}, out{};
    for (int i = 0; i < kGroupOrder; ++i) xs[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    k.gather(bq.table(op), xs.data(), xs.data(), out.data(), xs.size());
    if (const auto at = k.first_mismatch(out.data(), xs.data(), xs.size()); at < xs.size()) {
      const Element x = Element::from_index(static_cast<int>(at));
      fail_with(e, {{{"x", x}}, format_normal(bq.op(op, x, x)), format_normal(x)});
    }
    report.entries.push_back(std::move(e));
  }

  // (2) right invertibility: (a o b) /o b = a and (a /o b) o b = a
  const std::array<std::pair<Op, Op>, 2> inverse_pairs{{{Op::circ, Op::circ_div}, {Op::star, Op::star_div}}};
  for (const auto& [fwd, div] : inverse_pairs) {
    for (const bool div_first : {false, true}) {
      const Op inner = div_first ? div : fwd;
      const Op outer = div_first ? fwd : div;
      AxiomEntry e = pass_entry(
          "invertibility." + std::string(to_string(inner)) + "." + std::string(to_string(outer)),
          "(a " + std::string(symbol(inner)) + " b) " + std::string(symbol(outer)) + " b = a", kPairs);
      k.gather(bq.table(inner), A, B, t1.data(), kPairs);
      k.gather(bq.table(outer), t1.data(), B, lhs.data(), kPairs);
      if (const auto at = k.first_mismatch(lhs.data(), A, kPairs); at < kPairs) {
        const Element a = Element::from_index(A[at]), b = Element::from_index(B[at]);
        fail_with(e, {{{"a", a}, {"b", b}}, format_normal(Element::from_index(lhs[at])), format_normal(a)});
      }
      report.entries.push_back(std::move(e));
    }
  }

  // (3) self-distributivity (a d b) s c = (a s c) d (b s c), pairs (b, c) vectorised per a
  for (Op d : kAllOps) {
    for (Op s : kAllOps) {
      AxiomEntry e = pass_entry("distributivity." + std::string(to_string(d)) + "." + std::string(to_string(s)),
                                "(a " + std::string(symbol(d)) + " b) " + std::string(symbol(s)) + " c = (a " +
                                    std::string(symbol(s)) + " c) " + std::string(symbol(d)) + " (b " +
                                    std::string(symbol(s)) + " c)",
                                kPairs * kGroupOrder);
      k.gather(bq.table(s), A, B, t2.data(), kPairs);  // b s c with (b, c) = (A, B)
      for (int a = 0; a < kGroupOrder && e.status == AxiomEntry::Status::pass; ++a) {
        std::fill(fill.begin(), fill.end(), static_cast<std::uint8_t>(a));
        k.gather(bq.table(d), fill.data(), A, t1.data(), kPairs);  // a d b
        k.gather(bq.table(s), t1.data(), B, lhs.data(), kPairs);   // (a d b) s c
        k.gather(bq.table(s), fill.data(), B, t1.data(), kPairs);  // a s c
        k.gather(bq.table(d), t1.data(), t2.data(), rhs.data(), kPairs);
        if (const auto at = k.first_mismatch(lhs.data(), rhs.data(), kPairs); at < kPairs) {
          fail_with(e, {{{"a", Element::from_index(a)}, {"b", Element::from_index(A[at])},
                         {"c", Element::from_index(B[at])}},
                        format_normal(Element::from_index(lhs[at])),
                        format_normal(Element::from_index(rhs[at]))});
        }
      }
      report.entries.push_back(std::move(e));
    }
  }

  // (4)-(5) f axioms
  const std::array<std::string, 5> f_ids{"f.total", "f.bijective", "f.inverse", "f.equivariance.circ",
                                         "f.equivariance.star"};
  if (!bq.has_f()) {
    for (const auto& id : f_ids) {
      AxiomEntry e = pass_entry(id, "", 0);
      e.status = AxiomEntry::Status::skipped;
      e.note = "no f attached";
      report.entries.push_back(std::move(e));
    }
  } else {
    const FCandidate& f = bq.f();
    const FVerdicts& v = f.verdicts;

    AxiomEntry total = pass_entry("f.total", "f(x) defined for every x", kGroupOrder);
    if (!v.total) {
      total.status = AxiomEntry::Status::fail;
      total.note = std::to_string(v.defined) + " of 64 defined";
      for (int i = 0; i < kGroupOrder; ++i) {
        if (!f.map.defined(Element::from_index(i))) {
          total.counterexample = Counterexample{{{"x", Element::from_index(i)}}, "undefined", "defined"};
          break;
        }
      }
    }
    report.entries.push_back(std::move(total));

    AxiomEntry bij = pass_entry("f.bijective", "f is a permutation of the carrier", kGroupOrder);
    if (v.collision) {
      const auto [x, y] = *v.collision;
      fail_with(bij, {{{"x", x}, {"y", y}}, show(f.map.apply(x)), show(f.map.apply(y))});
      bij.note = "f(x) = f(y) with x != y";
    } else if (!v.total) {
      bij.status = AxiomEntry::Status::fail;
      bij.note = "injective on its " + std::to_string(v.defined) + "-element domain but not total";
    }
    report.entries.push_back(std::move(bij));

    AxiomEntry inverse = pass_entry("f.inverse", "f(f^-1(x)) = f^-1(f(x)) = x", kGroupOrder);
    for (int i = 0; i < kGroupOrder && inverse.status == AxiomEntry::Status::pass; ++i) {
      const Element x = Element::from_index(i);
      const auto pre = f.map.preimages(x);
      if (pre.size() != 1) {
        fail_with(inverse, {{{"x", x}}, "f^-1(x) has " + std::to_string(pre.size()) + " values", format_normal(x)});
        continue;
      }
      const auto fx = f.map.apply(x);
      const auto back = fx ? f.map.preimages(*fx) : std::vector<Element>{};
      if (back.size() != 1 || back.front() != x) fail_with(inverse, {{{"x", x}}, "f^-1(f(x)) != x", format_normal(x)});
    }
    report.entries.push_back(std::move(inverse));

    for (Op op : {Op::circ, Op::star}) {
      AxiomEntry e = pass_entry("f.equivariance." + std::string(to_string(op)),
                                "f(a " + std::string(symbol(op)) + " b) = f(a) " + std::string(symbol(op)) + " f(b)",
                                kPairs);
      std::size_t checked = 0;
      for (std::size_t i = 0; i < kPairs; ++i) {
        const Element a = Element::from_index(A[i]), b = Element::from_index(B[i]);
        const auto fa = f.map.apply(a), fb = f.map.apply(b), fab = f.map.apply(bq.op(op, a, b));
        if (!fa || !fb || !fab) continue;
        ++checked;
        const Element rhs_value = bq.op(op, *fa, *fb);
        if (*fab != rhs_value && e.status == AxiomEntry::Status::pass)
          fail_with(e, {{{"a", a}, {"b", b}}, format_normal(*fab), format_normal(rhs_value)});
      }
      if (checked < kPairs) e.note = "checked on " + std::to_string(checked) + " of 4096 pairs where f is defined";
      report.entries.push_back(std::move(e));
    }

    AxiomEntry mult = pass_entry("f.multiplicative", "f(xy) = f(x) f(y)", kPairs);
    if (v.product_witness) {
      const auto [x, y] = *v.product_witness;
      const Element fxfy = bq.group().mul(*f.map.apply(x), *f.map.apply(y));
      fail_with(mult, {{{"x", x}, {"y", y}}, show(f.map.apply(bq.group().mul(x, y))), format_normal(fxfy)});
    }
    if (v.pairs_checked < kPairs)
      mult.note = "checked on " + std::to_string(v.pairs_checked) + " of 4096 pairs where f is defined";
    report.entries.push_back(std::move(mult));
  }

  // (6)-(7) strange relations x d (a o b) = x d (a * b), x d (a /o b) = x d (a /* b)
  const std::array<std::pair<Op, Op>, 2> strange{{{Op::circ, Op::star}, {Op::circ_div, Op::star_div}}};
  for (std::size_t family = 0; family < strange.size(); ++family) {
    const auto [left_op, right_op] = strange[family];
    std::vector<std::uint8_t> u(kPairs), w(kPairs);
    k.gather(bq.table(left_op), A, B, u.data(), kPairs);
    k.gather(bq.table(right_op), A, B, w.data(), kPairs);
    for (Op d : kAllOps) {
      AxiomEntry e = pass_entry("strange." + std::to_string(family + 1) + "." + std::string(to_string(d)),
                                "x " + std::string(symbol(d)) + " (a " + std::string(symbol(left_op)) + " b) = x " +
                                    std::string(symbol(d)) + " (a " + std::string(symbol(right_op)) + " b)",
                                kPairs * kGroupOrder);
      for (int x = 0; x < kGroupOrder && e.status == AxiomEntry::Status::pass; ++x) {
        std::fill(fill.begin(), fill.end(), static_cast<std::uint8_t>(x));
        k.gather(bq.table(d), fill.data(), u.data(), lhs.data(), kPairs);
        k.gather(bq.table(d), fill.data(), w.data(), rhs.data(), kPairs);
        if (const auto at = k.first_mismatch(lhs.data(), rhs.data(), kPairs); at < kPairs) {
          fail_with(e, {{{"x", Element::from_index(x)}, {"a", Element::from_index(A[at])},
                         {"b", Element::from_index(B[at])}},
                        format_normal(Element::from_index(lhs[at])),
                        format_normal(Element::from_index(rhs[at]))});
        }
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace lvb
