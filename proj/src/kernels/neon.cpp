#include "subfield/kernels.hpp"

#include <arm_neon.h>

namespace subfield::kernels {

namespace {

inline uint8x16_t add_mod_vec(uint8x16_t a, uint8x16_t b, uint8x16_t pv) {
  const uint8x16_t s = vaddq_u8(a, b);
  return vminq_u8(s, vsubq_u8(s, pv));
}

// Lanes are 0 or 1 after the mask-and, so the horizontal add stays below 256.
inline std::size_t nonzeros_in(uint8x16_t v) {
  return vaddvq_u8(vandq_u8(vtstq_u8(v, v), vdupq_n_u8(1)));
}

void add_mod_neon(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  const uint8x16_t pv = vdupq_n_u8(p);
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) vst1q_u8(acc + i, add_mod_vec(vld1q_u8(acc + i), vld1q_u8(row + i), pv));
  scalar_kernels().add_mod(acc + i, row + i, n - i, p);
}

std::size_t count_nonzero_neon(const std::uint8_t* v, std::size_t n) {
  std::size_t w = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) w += nonzeros_in(vld1q_u8(v + i));
  return w + scalar_kernels().count_nonzero(v + i, n - i);
}

std::size_t add_mod_weight_neon(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  const uint8x16_t pv = vdupq_n_u8(p);
  std::size_t w = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const uint8x16_t r = add_mod_vec(vld1q_u8(acc + i), vld1q_u8(row + i), pv);
    vst1q_u8(acc + i, r);
    w += nonzeros_in(r);
  }
  return w + scalar_kernels().add_mod_weight(acc + i, row + i, n - i, p);
}

}  // namespace

namespace detail {

const KernelTable* neon_kernels() {
  static const KernelTable table{"neon", add_mod_neon, count_nonzero_neon, add_mod_weight_neon};
  return &table;
}

}  // namespace detail

}  // namespace subfield::kernels
