#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "lvb/biquandle.hpp"
#include "lvb/calibration.hpp"
#include "lvb/words.hpp"
#include "oracle.hpp"

namespace {

using lvb::AxiomEntry;
using lvb::Element;
using lvb::Op;

const lvb::TorusGroup& G() { return lvb::standard_group(); }
oracle::V to_v(Element e) { return {e.k(), e.l()}; }

oracle::V conj(oracle::V x, oracle::V y, int times) {
  const oracle::V p = oracle::power(y, times);
  return oracle::mul(oracle::mul(p, x), oracle::inv(p));
}

TEST(Biquandle, OperationsAreConjugations) {
  for (int n : {1, 2, 3}) {
    const auto bq = lvb::standard_biquandle(n);
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) {
        const Element x = Element::from_index(i), y = Element::from_index(j);
        ASSERT_EQ(to_v(bq.op(Op::circ, x, y)), conj(to_v(x), to_v(y), 1));
        ASSERT_EQ(to_v(bq.op(Op::star, x, y)), conj(to_v(x), to_v(y), n + 1));
        ASSERT_EQ(to_v(bq.op(Op::circ_div, x, y)), conj(to_v(x), to_v(y), -1));
        ASSERT_EQ(to_v(bq.op(Op::star_div, x, y)), conj(to_v(x), to_v(y), -(n + 1)));
      }
  }
}

TEST(Biquandle, AuditPassesForTheTwistTwoInstance) {
  const auto report = lvb::audit(lvb::standard_biquandle(2));
  EXPECT_TRUE(report.all_passed());
  int checked = 0;
  for (const auto& e : report.entries) {
    if (e.id.starts_with("f.")) {
      EXPECT_EQ(e.status, AxiomEntry::Status::skipped) << e.id;
      continue;
    }
    ++checked;
    EXPECT_EQ(e.status, AxiomEntry::Status::pass) << e.id;
  }
  EXPECT_EQ(checked, 2 + 4 + 16 + 8);
  EXPECT_EQ(report.find("distributivity.star.circ_div")->domain, 262144u);
  EXPECT_EQ(report.find("strange.1.circ")->domain, 262144u);
}

TEST(Biquandle, TwistOneFailsStrangeRelationsWithCheckableCounterexample) {
  const auto bq = lvb::standard_biquandle(1);
  const auto report = lvb::audit(bq);
  EXPECT_FALSE(report.all_passed());
  for (const auto& e : report.entries) {
    if (!e.id.starts_with("strange.")) {
      if (!e.id.starts_with("f.")) EXPECT_EQ(e.status, AxiomEntry::Status::pass) << e.id;
      continue;
    }
    const Op d = *lvb::parse_op(e.id.substr(e.id.rfind('.') + 1));
    // * conjugates by y^2 here and [x, y^2] is central, so only o and /o break.
    if (d == Op::star || d == Op::star_div) {
      EXPECT_EQ(e.status, AxiomEntry::Status::pass) << e.id;
      continue;
    }
    ASSERT_EQ(e.status, AxiomEntry::Status::fail) << e.id;
    ASSERT_TRUE(e.counterexample.has_value());
    const auto& in = e.counterexample->inputs;
    ASSERT_EQ(in.size(), 3u);
    const bool first = e.id.starts_with("strange.1");
    const Element x = in[0].second, a = in[1].second, b = in[2].second;
    const Element lhs = bq.op(d, x, bq.op(first ? Op::circ : Op::circ_div, a, b));
    const Element rhs = bq.op(d, x, bq.op(first ? Op::star : Op::star_div, a, b));
    EXPECT_NE(lhs, rhs);
    EXPECT_EQ(lvb::format_normal(lhs), e.counterexample->lhs);
    EXPECT_EQ(lvb::format_normal(rhs), e.counterexample->rhs);
  }
}

TEST(Biquandle, AuditIsDeterministic) {
  auto bq = lvb::standard_biquandle(1);
  bq.attach_f(lvb::make_f(G(), lvb::FKind::substitution));
  const auto a = lvb::audit(bq), b = lvb::audit(bq);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].status, b.entries[i].status);
    EXPECT_EQ(a.entries[i].counterexample.has_value(), b.entries[i].counterexample.has_value());
    if (a.entries[i].counterexample) EXPECT_EQ(a.entries[i].counterexample->inputs, b.entries[i].counterexample->inputs);
  }
}

std::size_t non_multiplicative_pairs(const lvb::FMap& f) {
  std::size_t n = 0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      const Element x = Element::from_index(i), y = Element::from_index(j);
      if (*f.apply(G().mul(x, y)) != G().mul(*f.apply(x), *f.apply(y))) ++n;
    }
  return n;
}

TEST(FCandidates, SubstitutionSendsGeneratorsAsStated) {
  const auto f = lvb::make_f(G(), lvb::FKind::substitution);
  EXPECT_EQ(*f.map.apply(G().a()), G().mul(G().a(), G().b()));
  EXPECT_EQ(*f.map.apply(G().b()), G().b());
}

TEST(FCandidates, SubstitutionVerdicts) {
  const auto f = lvb::make_f(G(), lvb::FKind::substitution);
  std::set<Element> images;
  for (int i = 0; i < 64; ++i) images.insert(*f.map.apply(Element::from_index(i)));
  EXPECT_EQ(images.size(), 16u);
  EXPECT_TRUE(f.verdicts.total);
  EXPECT_FALSE(f.verdicts.bijective);
  ASSERT_TRUE(f.verdicts.collision.has_value());
  const auto [x, y] = *f.verdicts.collision;
  EXPECT_NE(x, y);
  EXPECT_EQ(f.map.apply(x), f.map.apply(y));
  EXPECT_FALSE(f.verdicts.multiplicative);
  EXPECT_EQ(f.verdicts.pairs_checked, 4096u);
  EXPECT_EQ(non_multiplicative_pairs(f.map), 1024u);
}

TEST(FCandidates, ShearVerdicts) {
  const auto f = lvb::make_f(G(), lvb::FKind::shear);
  EXPECT_TRUE(f.verdicts.bijective);
  EXPECT_FALSE(f.verdicts.multiplicative);
  ASSERT_TRUE(f.verdicts.product_witness.has_value());
  const auto [x, y] = *f.verdicts.product_witness;
  EXPECT_NE(*f.map.apply(G().mul(x, y)), G().mul(*f.map.apply(x), *f.map.apply(y)));
  EXPECT_EQ(non_multiplicative_pairs(f.map), 2560u);
}

TEST(FCandidates, NoAutomorphismSendsAbInverseToA) {
  // An automorphism is fixed by the images of a and b; try all 64 x 64.
  const Element ab_inv = lvb::eval_word("ab^-1", G());
  int automorphisms = 0;
  for (int i = 0; i < 64; ++i)
    for (int j = 0; j < 64; ++j) {
      const Element fa = Element::from_index(i), fb = Element::from_index(j);
      lvb::FMap f;
      for (int g = 0; g < 64; ++g) {
        const auto [k, m] = G().word_exponents(Element::from_index(g));
        f.set(Element::from_index(g), G().mul(G().power(fa, k), G().power(fb, m)));
      }
      const auto v = lvb::check_f(G(), f);
      if (!v.bijective || !v.multiplicative) continue;
      ++automorphisms;
      EXPECT_NE(*f.apply(ab_inv), G().a());
    }
  EXPECT_EQ(automorphisms, 512);
}

TEST(FCandidates, PartialSubstitutionTable) {
  const auto f = lvb::partial_substitution_f(G());
  EXPECT_TRUE(f.verdicts.conflicts.empty());
  EXPECT_EQ(f.verdicts.defined, 8);
  EXPECT_TRUE(f.verdicts.injective);
  EXPECT_FALSE(f.verdicts.bijective);
  auto ev = [](const char* w) { return lvb::eval_word(w, G()); };
  EXPECT_EQ(*f.map.apply(ev("a")), ev("ab"));
  EXPECT_EQ(*f.map.apply(ev("b")), ev("b"));
  EXPECT_EQ(*f.map.apply(ev("ab^-1")), ev("a"));
  EXPECT_EQ(*f.map.apply(ev("(ab)^2 a^-1")), ev("a^2 b^-1 a^-1"));
  EXPECT_EQ(*f.map.apply(ev("ab")), ev("ab^2"));
}

TEST(FCandidates, IdentityTablePassesEveryFAxiom) {
  std::ifstream in(std::string(LVB_DATA_DIR) + "/identity_f.txt");
  ASSERT_TRUE(in);
  std::stringstream s;
  s << in.rdbuf();
  const auto table = lvb::parse_f_table(s.str());
  EXPECT_EQ(table, lvb::FMap::identity());
  auto bq = lvb::standard_biquandle(2);
  bq.attach_f(lvb::make_f_explicit(G(), table));
  const auto report = lvb::audit(bq);
  EXPECT_TRUE(report.all_passed());
  for (const char* id : {"f.total", "f.bijective", "f.inverse", "f.equivariance.circ", "f.equivariance.star", "f.multiplicative"})
    EXPECT_EQ(report.find(id)->status, AxiomEntry::Status::pass) << id;
}

TEST(FCandidates, TableFormatRoundTrip) {
  for (auto kind : {lvb::FKind::substitution, lvb::FKind::shear}) {
    const auto f = lvb::make_f(G(), kind);
    EXPECT_EQ(lvb::parse_f_table(lvb::format_f_table(f.map)), f.map);
  }
  EXPECT_EQ(lvb::parse_f_table("a b^2 a^3 # comment\n\n e e\n").apply(Element::from_normal(1, 2)),
            Element::from_normal(3, 0));
}

TEST(FCandidates, TableErrors) {
  EXPECT_THROW(lvb::parse_f_table("a -> b\na -> a\n"), std::invalid_argument);
  EXPECT_THROW(lvb::parse_f_table("a\n"), std::invalid_argument);
  EXPECT_THROW(lvb::parse_f_table("c d\n"), std::invalid_argument);
}

TEST(FCandidates, AuditReportsShearEquivarianceFailure) {
  auto bq = lvb::standard_biquandle(2);
  bq.attach_f(lvb::make_f(G(), lvb::FKind::shear));
  const auto report = lvb::audit(bq);
  EXPECT_EQ(report.find("f.bijective")->status, AxiomEntry::Status::pass);
  EXPECT_EQ(report.find("f.inverse")->status, AxiomEntry::Status::pass);
  EXPECT_EQ(report.find("f.multiplicative")->status, AxiomEntry::Status::fail);
  const auto* eq = report.find("f.equivariance.circ");
  ASSERT_EQ(eq->status, AxiomEntry::Status::fail);
  const Element a = eq->counterexample->inputs[0].second, b = eq->counterexample->inputs[1].second;
  const auto& m = bq.f().map;
  EXPECT_NE(*m.apply(bq.op(Op::circ, a, b)), bq.op(Op::circ, *m.apply(a), *m.apply(b)));
}

TEST(Biquandle, MissingFIsReported) {
  const auto bq = lvb::standard_biquandle(2);
  EXPECT_THROW(bq.apply_f(lvb::FDirection::forward, G().a()), lvb::MissingF);
}

TEST(Biquandle, QuandleOnlyCollapsesStar) {
  const auto q = lvb::standard_biquandle(2).quandle_only();
  EXPECT_EQ(q.table(Op::star), q.table(Op::circ));
  EXPECT_EQ(q.apply_f(lvb::FDirection::inverse, G().a()), G().a());
  EXPECT_TRUE(lvb::audit(q).all_passed());
}

TEST(Biquandle, OpNames) {
  for (Op op : lvb::kAllOps) EXPECT_EQ(lvb::parse_op(lvb::to_string(op)), op);
  EXPECT_EQ(lvb::parse_op("*"), Op::star);
  EXPECT_FALSE(lvb::parse_op("plus").has_value());
}

}  // namespace
