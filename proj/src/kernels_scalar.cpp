#include <algorithm>

#include "lvb/kernels.hpp"

namespace lvb::kernels {
namespace {

void gather_scalar(const PaddedTable& table, const std::uint8_t* row, const std::uint8_t* col, std::uint8_t* out,
                   std::size_t n) {
  const std::uint8_t* t = table.data();
  for (std::size_t i = 0; i < n; ++i) out[i] = t[(static_cast<std::size_t>(row[i]) << 6) | col[i]];
}

std::size_t first_mismatch_scalar(const std::uint8_t* x, const std::uint8_t* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != y[i]) return i;
  return n;
}

void torus_mul_scalar(const std::uint8_t* g, const std::uint8_t* h, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const int x1 = g[i] >> 3, y1 = g[i] & 7;
    const int x2 = h[i] >> 3, y2 = h[i] & 7;
    const int x = (x1 + ((y1 & 1) ? -x2 : x2)) & 7;
    const int y = (y1 + ((x1 & 1) ? -y2 : y2)) & 7;
    out[i] = static_cast<std::uint8_t>(x * 8 + y);
  }
}

constexpr KernelSet kScalarKernels{Isa::scalar, gather_scalar, first_mismatch_scalar, torus_mul_scalar};

}  // namespace

PaddedTable::PaddedTable(std::span<const std::uint8_t> table) : PaddedTable() {
  std::copy_n(table.begin(), std::min(table.size(), kTableSize), bytes_.begin());
}

const KernelSet& scalar_kernels() { return kScalarKernels; }

}  // namespace lvb::kernels
