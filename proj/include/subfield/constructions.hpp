#pragma once

// The two code families: C1 generated by columns (x, y, 1) with x a square,
// and C2 generated by columns (Norm(x), y, 1) over GF(p^2), each extended by
// the unit columns (1, 0, 0) and (0, 1, 0). Their subfield codes over GF(p)
// have closed-form weight distributions, reproduced here alongside the
// parameter claims they imply.

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "subfield/code.hpp"
#include "subfield/dual.hpp"

namespace subfield {

enum class CodeFamily { C1, C2 };

std::string to_string(CodeFamily family);

struct CodeFamilySpec {
  CodeFamily family = CodeFamily::C1;
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
};

/// Validates (family, p, m) and fills in the length. Throws
/// std::invalid_argument with a user-facing message on violation.
CodeFamilySpec family_spec(CodeFamily family, std::uint32_t p, std::uint32_t m);

/// 3 x ((q^2 + q)/2 + 2) matrix over GF(p^m), p odd.
GeneratorMatrix build_c1(std::uint32_t p, std::uint32_t m);
/// 3 x (p^2 (p^2 - 1) + 2) matrix over GF(p^2).
GeneratorMatrix build_c2(std::uint32_t p);
GeneratorMatrix build_family(const CodeFamilySpec& spec);

/// Visits the codeword ((Tr(a f(x) + b y) + c)_{x,y}, Tr(a), Tr(b)) for every
/// (a, b, c) in GF(q) x GF(q) x GF(p), where f(x) = x on the squares (C1) or
/// Norm(x) on GF(q)* (C2). Columns are in the same order as build_family.
std::uint64_t enumerate_family_codewords(const CodeFamilySpec& spec,
                                         const std::function<void(std::span<const std::uint32_t>)>& visit,
                                         std::uint64_t budget = kDefaultBudget);

/// Rows of the m-odd or m-even table, evaluated exactly, same-weight rows
/// merged, zero-multiplicity rows dropped.
WeightDistribution closed_form_wd_c1(std::uint32_t p, std::uint32_t m);
WeightDistribution closed_form_wd_c2(std::uint32_t p);
WeightDistribution closed_form_wd(const CodeFamilySpec& spec);

struct CodeParameters {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
};

struct ClaimSet {
  CodeFamilySpec spec;
  CodeParameters primal;
  CodeParameters dual;
  /// Flags asserted for the dual code.
  CodeFlags dual_flags;
  WeightDistribution weights;
};

ClaimSet expected_claims(CodeFamily family, std::uint32_t p, std::uint32_t m);

}  // namespace subfield
