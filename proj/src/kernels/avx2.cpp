#include "subfield/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace subfield::kernels {

namespace {

// (a + b) mod p for a, b < p <= 127: the wrapped difference s - p is larger
// than s exactly when s < p, so an unsigned min picks the reduced value.
inline __m256i add_mod_vec(__m256i a, __m256i b, __m256i pv) {
  const __m256i s = _mm256_add_epi8(a, b);
  return _mm256_min_epu8(s, _mm256_sub_epi8(s, pv));
}

inline std::size_t zeros_in(__m256i v) {
  const __m256i eq = _mm256_cmpeq_epi8(v, _mm256_setzero_si256());
  return static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(_mm256_movemask_epi8(eq))));
}

void add_mod_avx2(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), add_mod_vec(a, b, pv));
  }
  scalar_kernels().add_mod(acc + i, row + i, n - i, p);
}

std::size_t count_nonzero_avx2(const std::uint8_t* v, std::size_t n) {
  std::size_t zeros = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) zeros += zeros_in(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
  return (i - zeros) + scalar_kernels().count_nonzero(v + i, n - i);
}

std::size_t add_mod_weight_avx2(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t zeros = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i r = add_mod_vec(a, b, pv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
    zeros += zeros_in(r);
  }
  return (i - zeros) + scalar_kernels().add_mod_weight(acc + i, row + i, n - i, p);
}

}  // namespace

namespace detail {

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", add_mod_avx2, count_nonzero_avx2, add_mod_weight_avx2};
  return &table;
}

}  // namespace detail

}  // namespace subfield::kernels
