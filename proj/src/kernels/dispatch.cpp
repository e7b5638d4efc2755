#include "subfield/kernels.hpp"

#include <cstdlib>
#include <string>

namespace subfield::kernels {

namespace detail {
#if !defined(SUBFIELD_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif
#if !defined(SUBFIELD_HAVE_NEON)
const KernelTable* neon_kernels() { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(SUBFIELD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& select() {
  const auto candidates = available_kernels();
  if (const char* env = std::getenv("SUBFIELD_KERNELS")) {
    const std::string wanted(env);
    for (const auto* k : candidates)
      if (k->name == wanted) return *k;
  }
  // Last entry is the widest supported variant.
  return *candidates.back();
}

}  // namespace

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const auto* k = detail::avx2_kernels(); k != nullptr && cpu_has_avx2()) out.push_back(k);
  // NEON is baseline on AArch64.
  if (const auto* k = detail::neon_kernels(); k != nullptr) out.push_back(k);
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace subfield::kernels
