#pragma once

// Linear codes given by generator matrices: subfield expansion, the trace
// representation, row reduction and exhaustive weight enumeration.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subfield/bigint.hpp"
#include "subfield/field.hpp"

namespace subfield {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

struct EnumerationOptions {
  /// Upper bound on enumerated words (or work units, for dual searches).
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; 0 means hardware concurrency. Results never depend on it.
  unsigned threads = 1;
};

/// A k x n matrix over a FiniteField, entries held as element codes.
class GeneratorMatrix {
 public:
  using Code = FiniteField::Code;

  /// Zero-filled. Throws std::invalid_argument unless rows, cols >= 1.
  GeneratorMatrix(FiniteField field, std::size_t rows, std::size_t cols);
  GeneratorMatrix(FiniteField field, std::size_t rows, std::size_t cols, std::vector<Code> entries);
  static GeneratorMatrix from_elements(const std::vector<std::vector<FieldElement>>& rows);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Code at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Code v);
  FieldElement element(std::size_t r, std::size_t c) const { return field_.element(at(r, c)); }
  std::span<const Code> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Code> entries() const { return entries_; }

 private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Code> entries_;
};

/// m elements of GF(p^m), required to be linearly independent over GF(p).
struct Basis {
  std::vector<FieldElement> elements;
};

Basis polynomial_basis(const FiniteField& field);
bool is_basis(const FiniteField& field, std::span<const FieldElement> elements);

/// Replaces every entry by its coordinate column in `basis`; the result is a
/// (k m) x n matrix over GF(p) whose row space is the subfield code. Row
/// i*m + j holds coordinate j of row i. Throws std::invalid_argument if the
/// basis is dependent or belongs to another field.
GeneratorMatrix subfield_expand(const GeneratorMatrix& g, const Basis& basis);
GeneratorMatrix subfield_expand(const GeneratorMatrix& g);

/// Nonzero rows of the reduced row echelon form, over the matrix's own field.
std::vector<std::vector<FiniteField::Code>> reduced_basis(const GeneratorMatrix& g);
std::size_t rank(const GeneratorMatrix& g);

/// Calls `visit` with (Tr(sum_i a_i g_i1), ..., Tr(sum_i a_i g_in)) for every
/// (a_1, ..., a_k) in GF(q)^k, in mixed-radix order of the tuple codes.
/// Returns the number of tuples visited. Throws BudgetExceeded if q^k > budget.
std::uint64_t trace_code_enumerate(const GeneratorMatrix& g,
                                   const std::function<void(std::span<const std::uint32_t>)>& visit,
                                   std::uint64_t budget = kDefaultBudget);

/// Visits every distinct codeword of the row space of a GF(p) matrix once.
std::uint64_t for_each_codeword(const GeneratorMatrix& g,
                                const std::function<void(std::span<const std::uint32_t>)>& visit,
                                std::uint64_t budget = kDefaultBudget);

/// Sparse weight -> multiplicity map of a GF(p)-linear code.
struct WeightDistribution {
  std::uint64_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::map<std::uint64_t, BigInt> counts;

  BigInt total() const;
  /// "1 + 4x^4 + 6x^5 + ..."
  std::string enumerator() const;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Exact distribution over all p^rank distinct codewords of a GF(p) matrix.
/// Throws BudgetExceeded when p^rank exceeds the budget and
/// std::invalid_argument for a matrix over an extension field.
WeightDistribution weight_distribution(const GeneratorMatrix& g, const EnumerationOptions& options = {});

/// Smallest nonzero weight, or nullopt for the zero code.
std::optional<std::uint64_t> min_distance(const WeightDistribution& wd);

}  // namespace subfield
