#include <immintrin.h>

#include "kernels_internal.hpp"

namespace lvb::kernels::detail {
namespace {

// Eight lanes of (row << 6 | col) gathered as 32-bit loads, low byte kept.
inline __m256i gather8(const std::uint8_t* table, const std::uint8_t* row, const std::uint8_t* col) {
  const __m256i r = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(row)));
  const __m256i c = _mm256_cvtepu8_epi32(_mm_loadl_epi64(reinterpret_cast<const __m128i*>(col)));
  const __m256i idx = _mm256_or_si256(_mm256_slli_epi32(r, 6), c);
  const __m256i v = _mm256_i32gather_epi32(reinterpret_cast<const int*>(table), idx, 1);
  return _mm256_and_si256(v, _mm256_set1_epi32(0xFF));
}

void gather_avx2(const PaddedTable& table, const std::uint8_t* row, const std::uint8_t* col, std::uint8_t* out,
                 std::size_t n) {
  const std::uint8_t* t = table.data();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i lo = gather8(t, row + i, col + i);
    const __m256i hi = gather8(t, row + i + 8, col + i + 8);
    // Narrow 2x8 dwords to 16 bytes, undoing the per-lane interleave of packus.
    const __m256i words = _mm256_permute4x64_epi64(_mm256_packus_epi32(lo, hi), 0xD8);
    const __m128i bytes = _mm_packus_epi16(_mm256_castsi256_si128(words), _mm256_extracti128_si256(words, 1));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), bytes);
  }
  for (; i < n; ++i) out[i] = t[(static_cast<std::size_t>(row[i]) << 6) | col[i]];
}

std::size_t first_mismatch_avx2(const std::uint8_t* x, const std::uint8_t* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const unsigned equal = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(a, b)));
    if (equal != 0xFFFFFFFFu) return i + static_cast<std::size_t>(__builtin_ctz(~equal));
  }
  for (; i < n; ++i)
    if (x[i] != y[i]) return i;
  return n;
}

// (-1)^parity * v mod 8, lane-wise on bytes: parity mask m is 0x00 or 0xFF,
// and (v ^ m) - m is v or -v.
inline __m256i signed_by(__m256i v, __m256i parity_bit) {
  const __m256i m = _mm256_sub_epi8(_mm256_setzero_si256(), parity_bit);
  return _mm256_sub_epi8(_mm256_xor_si256(v, m), m);
}

void torus_mul_avx2(const std::uint8_t* g, const std::uint8_t* h, std::uint8_t* out, std::size_t n) {
  const __m256i seven = _mm256_set1_epi8(7);
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(h + i));
    // No byte shifts in AVX2: shift 16-bit lanes and mask.
    const __m256i x1 = _mm256_and_si256(_mm256_srli_epi16(a, 3), seven);
    const __m256i y1 = _mm256_and_si256(a, seven);
    const __m256i x2 = _mm256_and_si256(_mm256_srli_epi16(b, 3), seven);
    const __m256i y2 = _mm256_and_si256(b, seven);
    const __m256i x = _mm256_and_si256(_mm256_add_epi8(x1, signed_by(x2, _mm256_and_si256(y1, one))), seven);
    const __m256i y = _mm256_and_si256(_mm256_add_epi8(y1, signed_by(y2, _mm256_and_si256(x1, one))), seven);
    const __m256i r = _mm256_or_si256(_mm256_and_si256(_mm256_slli_epi16(x, 3), _mm256_set1_epi8(0x38)), y);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), r);
  }
  for (; i < n; ++i) {
    const int xa = g[i] >> 3, ya = g[i] & 7;
    const int xb = h[i] >> 3, yb = h[i] & 7;
    const int x = (xa + ((ya & 1) ? -xb : xb)) & 7;
    const int y = (ya + ((xa & 1) ? -yb : yb)) & 7;
    out[i] = static_cast<std::uint8_t>(x * 8 + y);
  }
}

}  // namespace

const KernelSet kAvx2Kernels{Isa::avx2, gather_avx2, first_mismatch_avx2, torus_mul_avx2};

}  // namespace lvb::kernels::detail
