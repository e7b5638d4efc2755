#include "subfield/kernels.hpp"

namespace subfield::kernels {

namespace {

void add_mod_scalar(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = acc[i] + row[i];
    acc[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
  }
}

std::size_t count_nonzero_scalar(const std::uint8_t* v, std::size_t n) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) w += v[i] != 0;
  return w;
}

std::size_t add_mod_weight_scalar(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  std::size_t w = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned s = acc[i] + row[i];
    const auto r = static_cast<std::uint8_t>(s >= p ? s - p : s);
    acc[i] = r;
    w += r != 0;
  }
  return w;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", add_mod_scalar, count_nonzero_scalar, add_mod_weight_scalar};
  return table;
}

}  // namespace subfield::kernels
