#pragma once

// What the weight distribution says about the dual code: the low-weight dual
// counts from the first four power moments, an independent search for the
// same counts, and sphere-packing optimality.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subfield/bigint.hpp"
#include "subfield/code.hpp"

namespace subfield {

/// A_1, A_2, A_3 of the dual code.
struct DualCounts {
  BigInt a1 = 0;
  BigInt a2 = 0;
  BigInt a3 = 0;
  friend bool operator==(const DualCounts&, const DualCounts&) = default;
};

/// Solves the first, second and third power-moment identities in turn.
/// Throws std::domain_error if sum A_i is not p^k or a solve is fractional or
/// negative (a corrupted distribution).
DualCounts pless_dual_a123(const WeightDistribution& wd, std::uint32_t p);

/// True when all four identities hold exactly with `dual` substituted.
bool power_moments_hold(const WeightDistribution& wd, std::uint32_t p, const DualCounts& dual);

/// Number of dual codewords of weight exactly w (1, 2 or 3) of the code
/// generated by g over GF(p), scalar multiples counted separately. Found by
/// searching for column dependencies with all-nonzero coefficients.
/// The weight-3 search does C(n, 2) (p-1)^2 lookups, and that figure is what is
/// held against the budget.
std::uint64_t low_weight_dual_count(const GeneratorMatrix& g, unsigned w, const EnumerationOptions& options = {});

enum class BoundMode { max_k_given_d, max_d_given_k };

/// Largest k (resp. d) with q^k * sum_{i <= (d-1)/2} (q-1)^i C(n, i) <= q^n.
/// max_d_given_k is capped at n and returns 0 when k > n.
std::uint64_t sphere_packing(BoundMode mode, std::uint64_t n, std::uint64_t q, std::uint64_t fixed);

struct CodeFlags {
  bool dimension_optimal = false;
  bool distance_optimal = false;
  bool mds = false;
  bool almost_mds = false;

  /// Names of the set flags in a fixed order.
  std::vector<std::string> names() const;
  bool contains(const CodeFlags& other) const;
  friend bool operator==(const CodeFlags&, const CodeFlags&) = default;
};

CodeFlags classify(std::uint64_t n, std::uint64_t k, std::uint64_t d, std::uint64_t q);

struct DualReport {
  std::uint64_t n = 0;
  std::uint64_t k_dual = 0;
  DualCounts counts;
  /// Smallest w <= 3 with A_w > 0; nullopt means d >= 4 (or a zero dual).
  std::optional<std::uint64_t> d_perp;
  /// Classification of the dual; empty when d_perp is undetermined.
  CodeFlags flags;
};

DualReport dual_report(const WeightDistribution& wd);

}  // namespace subfield
