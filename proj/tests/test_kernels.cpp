#include <gtest/gtest.h>

#include <random>

#include "lvb/biquandle.hpp"
#include "lvb/calibration.hpp"
#include "lvb/kernels.hpp"

namespace {

namespace k = lvb::kernels;

std::vector<std::uint8_t> random_indices(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = static_cast<std::uint8_t>(rng() % 64);
  return v;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (k::avx2_kernels() == nullptr) GTEST_SKIP() << "AVX2 not available in this build or CPU";
  }
  const k::KernelSet& scalar = k::scalar_kernels();
  const k::KernelSet& simd = *k::avx2_kernels();
};

TEST_F(KernelEquivalence, GatherOnAllTablesAndOddLengths) {
  std::mt19937 rng(7);
  const auto bq = lvb::standard_biquandle(2);
  for (lvb::Op op : lvb::kAllOps) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 15u, 16u, 17u, 33u, 4096u, 4099u}) {
      const auto row = random_indices(rng, n), col = random_indices(rng, n);
      std::vector<std::uint8_t> a(n), b(n);
      scalar.gather(bq.table(op), row.data(), col.data(), a.data(), n);
      simd.gather(bq.table(op), row.data(), col.data(), b.data(), n);
      EXPECT_EQ(a, b) << n;
    }
  }
}

TEST_F(KernelEquivalence, GatherReadsTheLastTableEntry) {
  k::PaddedTable t;
  t.set(63, 63, 0xAB);
  std::vector<std::uint8_t> r(20, 63), out(20);
  simd.gather(t, r.data(), r.data(), out.data(), out.size());
  for (auto v : out) EXPECT_EQ(v, 0xAB);
}

TEST_F(KernelEquivalence, FirstMismatch) {
  std::mt19937 rng(11);
  for (std::size_t n : {0u, 1u, 31u, 32u, 33u, 100u, 4096u}) {
    auto x = random_indices(rng, n);
    auto y = x;
    EXPECT_EQ(scalar.first_mismatch(x.data(), y.data(), n), n);
    EXPECT_EQ(simd.first_mismatch(x.data(), y.data(), n), n);
    for (int trial = 0; trial < 20 && n > 0; ++trial) {
      y = x;
      const std::size_t at = rng() % n;
      y[at] ^= 1;
      if (rng() % 2 && at + 1 < n) y[n - 1] ^= 2;
      EXPECT_EQ(scalar.first_mismatch(x.data(), y.data(), n), at);
      EXPECT_EQ(simd.first_mismatch(x.data(), y.data(), n), at);
    }
  }
}

TEST_F(KernelEquivalence, TorusMultiplyMatchesGroupTable) {
  const auto& g = lvb::standard_group();
  std::vector<std::uint8_t> x(4096), y(4096), a(4096), b(4096);
  for (std::size_t i = 0; i < 4096; ++i) {
    x[i] = static_cast<std::uint8_t>(i >> 6);
    y[i] = static_cast<std::uint8_t>(i & 63);
  }
  for (std::size_t n : {4096u, 4095u, 13u}) {
    scalar.torus_mul(x.data(), y.data(), a.data(), n);
    simd.torus_mul(x.data(), y.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(a[i], b[i]) << i;
      ASSERT_EQ(a[i], g.mul(lvb::Element::from_index(x[i]), lvb::Element::from_index(y[i])).index());
    }
  }
}

TEST(Kernels, ScalarTorusMultiplyMatchesGroupTable) {
  const auto& g = lvb::standard_group();
  std::vector<std::uint8_t> x(4096), y(4096), out(4096);
  for (std::size_t i = 0; i < 4096; ++i) {
    x[i] = static_cast<std::uint8_t>(i >> 6);
    y[i] = static_cast<std::uint8_t>(i & 63);
  }
  k::scalar_kernels().torus_mul(x.data(), y.data(), out.data(), out.size());
  for (std::size_t i = 0; i < 4096; ++i)
    ASSERT_EQ(out[i], g.mul(lvb::Element::from_index(x[i]), lvb::Element::from_index(y[i])).index());
}

TEST(Kernels, AuditIsIdenticalUnderEitherIsa) {
  if (k::avx2_kernels() == nullptr) GTEST_SKIP() << "AVX2 not available";
  const auto before = k::active_isa();
  auto bq = lvb::standard_biquandle(1);
  bq.attach_f(lvb::make_f(lvb::standard_group(), lvb::FKind::shear));
  ASSERT_TRUE(k::set_active_isa(k::Isa::scalar));
  const auto scalar_report = lvb::audit(bq);
  ASSERT_TRUE(k::set_active_isa(k::Isa::avx2));
  const auto simd_report = lvb::audit(bq);
  k::set_active_isa(before);
  ASSERT_EQ(scalar_report.entries.size(), simd_report.entries.size());
  for (std::size_t i = 0; i < scalar_report.entries.size(); ++i) {
    const auto& s = scalar_report.entries[i];
    const auto& v = simd_report.entries[i];
    EXPECT_EQ(s.id, v.id);
    EXPECT_EQ(s.status, v.status) << s.id;
    ASSERT_EQ(s.counterexample.has_value(), v.counterexample.has_value()) << s.id;
    if (s.counterexample) {
      EXPECT_EQ(s.counterexample->inputs, v.counterexample->inputs) << s.id;
      EXPECT_EQ(s.counterexample->lhs, v.counterexample->lhs) << s.id;
    }
  }
}

TEST(Kernels, ScalarIsAlwaysSelectable) {
  const auto before = k::active_isa();
  EXPECT_TRUE(k::set_active_isa(k::Isa::scalar));
  EXPECT_EQ(k::active_isa(), k::Isa::scalar);
  k::set_active_isa(before);
}

}  // namespace
