#include <algorithm>

#include "subfield/dual.hpp"

namespace subfield {

namespace {

// Volume of a Hamming ball of radius t in GF(q)^n.
BigInt ball_volume(std::uint64_t n, std::uint64_t q, std::uint64_t t) {
  t = std::min(t, n);
  BigInt v = 0;
  BigInt term = 1;  // (q-1)^i C(n, i)
  for (std::uint64_t i = 0; i <= t; ++i) {
    v += term;
    term = term * (q - 1) * (n - i) / (i + 1);
  }
  return v;
}

bool fits(std::uint64_t n, std::uint64_t q, std::uint64_t k, std::uint64_t d) {
  if (k > n) return false;
  const std::uint64_t t = d == 0 ? 0 : (d - 1) / 2;
  return ball_volume(n, q, t) <= ipow(q, n - k);
}

}  // namespace

std::uint64_t sphere_packing(BoundMode mode, std::uint64_t n, std::uint64_t q, std::uint64_t fixed) {
  if (mode == BoundMode::max_k_given_d) {
    const BigInt vol = ball_volume(n, q, fixed == 0 ? 0 : (fixed - 1) / 2);
    std::uint64_t k = n;
    BigInt cap = 1;  // q^(n-k)
    while (k > 0 && vol > cap) {
      --k;
      cap *= q;
    }
    return k;
  }
  if (fixed > n) return 0;
  std::uint64_t best = 1;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (!fits(n, q, fixed, d)) break;
    best = d;
  }
  return best;
}

std::vector<std::string> CodeFlags::names() const {
  std::vector<std::string> out;
  if (dimension_optimal) out.emplace_back("dimension_optimal");
  if (distance_optimal) out.emplace_back("distance_optimal");
  if (mds) out.emplace_back("mds");
  if (almost_mds) out.emplace_back("almost_mds");
  return out;
}

bool CodeFlags::contains(const CodeFlags& other) const {
  return (!other.dimension_optimal || dimension_optimal) && (!other.distance_optimal || distance_optimal) &&
         (!other.mds || mds) && (!other.almost_mds || almost_mds);
}

CodeFlags classify(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q) {
  CodeFlags f;
  f.mds = d + k == n + 1;
  f.almost_mds = d + k == n;
  f.dimension_optimal = k == sphere_packing(BoundMode::max_k_given_d, n, q, d);
  f.distance_optimal = d == sphere_packing(BoundMode::max_d_given_k, n, q, k);
  return f;
}

}  // namespace subfield
