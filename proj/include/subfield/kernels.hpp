#pragma once

// Inner loops of codeword enumeration over GF(p), p <= kMaxKernelPrime.
//
// Every kernel has a portable scalar reference and optional SIMD variants
// (AVX2 on x86-64, NEON on AArch64). The active table is picked once at
// startup from CPU features; SUBFIELD_KERNELS=scalar|avx2|neon overrides the
// choice. All variants must produce bit-identical results.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace subfield::kernels {

/// Symbols are stored as bytes and a + b must not wrap, so 2(p-1) < 256.
inline constexpr std::uint32_t kMaxKernelPrime = 127;

struct KernelTable {
  std::string_view name;
  /// acc[i] = (acc[i] + row[i]) mod p.
  void (*add_mod)(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p);
  /// Number of nonzero bytes.
  std::size_t (*count_nonzero)(const std::uint8_t* v, std::size_t n);
  /// add_mod followed by count_nonzero on the updated acc, in one pass.
  std::size_t (*add_mod_weight)(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p);
};

const KernelTable& scalar_kernels();
/// Every variant compiled in and supported by the running CPU, scalar first.
std::vector<const KernelTable*> available_kernels();
/// The table used by the library.
const KernelTable& active_kernels();

inline void add_mod(std::span<std::uint8_t> acc, std::span<const std::uint8_t> row, std::uint8_t p) {
  active_kernels().add_mod(acc.data(), row.data(), acc.size(), p);
}

inline std::size_t count_nonzero(std::span<const std::uint8_t> v) {
  return active_kernels().count_nonzero(v.data(), v.size());
}

inline std::size_t add_mod_weight(std::span<std::uint8_t> acc, std::span<const std::uint8_t> row,
                                  std::uint8_t p) {
  return active_kernels().add_mod_weight(acc.data(), row.data(), acc.size(), p);
}

namespace detail {
const KernelTable* avx2_kernels();  // nullptr when not compiled in
const KernelTable* neon_kernels();
}  // namespace detail

}  // namespace subfield::kernels
