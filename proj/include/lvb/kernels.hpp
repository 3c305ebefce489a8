#pragma once

// Batched lookup kernels behind the exhaustive axiom sweeps.
//
// Every kernel has a scalar reference version and, on x86-64 builds with
// LVB_HAVE_AVX2, an AVX2 version. The active set is chosen at runtime from
// CPUID and can be forced with set_active_isa() or LVB_ISA=scalar|avx2.
// The variants must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lvb::kernels {

inline constexpr std::size_t kTableSize = 64 * 64;
// Gathers read 4 bytes per lane; the last entry needs 3 bytes of slack.
inline constexpr std::size_t kTablePadding = 4;

/// A 64x64 byte table, row-major, padded for 32-bit gathers.
class PaddedTable {
 public:
  PaddedTable() : bytes_(kTableSize + kTablePadding, 0) {}
  explicit PaddedTable(std::span<const std::uint8_t> table);

  std::uint8_t at(int row, int col) const { return bytes_[static_cast<std::size_t>(row * 64 + col)]; }
  void set(int row, int col, std::uint8_t v) { bytes_[static_cast<std::size_t>(row * 64 + col)] = v; }
  const std::uint8_t* data() const { return bytes_.data(); }
  std::span<const std::uint8_t> view() const { return {bytes_.data(), kTableSize}; }

  friend bool operator==(const PaddedTable&, const PaddedTable&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

enum class Isa { scalar, avx2 };

struct KernelSet {
  Isa isa;
  /// out[i] = table[row[i] * 64 + col[i]]; row and col entries are < 64.
  void (*gather)(const PaddedTable& table, const std::uint8_t* row, const std::uint8_t* col, std::uint8_t* out,
                 std::size_t n);
  /// Index of the first i with x[i] != y[i], or n.
  std::size_t (*first_mismatch)(const std::uint8_t* x, const std::uint8_t* y, std::size_t n);
  /// Product of torus vertices by the closed form
  /// (x1, y1)(x2, y2) = (x1 + (-1)^y1 x2, y1 + (-1)^x1 y2) mod 8,
  /// on element indices 8x + y. Valid for the standard orientation.
  void (*torus_mul)(const std::uint8_t* g, const std::uint8_t* h, std::uint8_t* out, std::size_t n);
};

const KernelSet& scalar_kernels();
/// Nullptr when the build or the CPU lacks AVX2.
const KernelSet* avx2_kernels();

const KernelSet& active();
Isa active_isa();
/// Returns false (and changes nothing) if `isa` is unavailable.
bool set_active_isa(Isa isa);
std::string_view to_string(Isa isa);

}  // namespace lvb::kernels
