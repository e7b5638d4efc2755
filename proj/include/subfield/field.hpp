#pragma once

// Exact arithmetic in GF(p^m).
//
// Elements are addressed by a dense integer code: the coordinate vector
// (c_0, ..., c_{m-1}) in the polynomial basis 1, a, ..., a^{m-1} is stored as
// c_0 + c_1 p + ... + c_{m-1} p^{m-1}. Elements of the prime subfield are
// therefore exactly the codes 0..p-1. Multiplication goes through log/antilog
// tables built once per field.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace subfield {

class FieldElement;

/// A value of the prime subfield GF(p), always reduced into [0, p).
struct PrimeElement {
  std::uint32_t value = 0;
  friend auto operator<=>(const PrimeElement&, const PrimeElement&) = default;
};

namespace detail {
struct FieldTables;
}

class FiniteField {
 public:
  using Code = std::uint32_t;

  /// Largest supported field order.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;

  /// Monic modulus, constant term first, length degree() + 1.
  std::span<const std::uint32_t> modulus() const;

  FieldElement generator() const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(Code code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t v) const;
  /// generator()^k.
  FieldElement power_of_generator(std::uint64_t k) const;

  // Code-level arithmetic. These skip field-identity checks and are what the
  // enumeration loops use.
  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const;
  Code pow(Code a, std::int64_t e) const;
  Code scale(Code a, std::uint32_t s) const;  // s in GF(p)
  Code exp(std::uint64_t k) const;            // generator^k
  std::uint32_t log(Code a) const;            // a != 0
  std::uint32_t coeff(Code a, std::uint32_t i) const;

  std::uint32_t trace(Code a) const;
  std::uint32_t norm(Code a) const;
  int quadratic_character(Code a) const;

  /// Same (p, m). Construction is deterministic, so equal parameters imply an
  /// identical representation.
  bool same_as(const FiniteField& other) const;
  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.same_as(b); }

  std::string describe() const;

 private:
  friend FiniteField make_field(std::uint32_t p, std::uint32_t m);
  explicit FiniteField(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}

  std::shared_ptr<const detail::FieldTables> t_;
};

/// Builds GF(p^m) over the lexicographically smallest (constant term first)
/// monic primitive polynomial of degree m. Throws std::invalid_argument for a
/// non-prime p, m < 1, or p^m above kMaxOrder.
FiniteField make_field(std::uint32_t p, std::uint32_t m);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

class FieldElement {
 public:
  using Code = FiniteField::Code;

  FieldElement(FiniteField field, Code code);

  const FiniteField& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<std::uint32_t> coeffs() const;

  /// Any integer exponent; negative exponents need a nonzero base.
  FieldElement pow(std::int64_t e) const;
  FieldElement inverse() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_.same_as(b.field_) && a.code_ == b.code_;
  }

 private:
  FiniteField field_;
  Code code_;
};

/// Tr(x) = x + x^p + ... + x^{p^{m-1}}.
PrimeElement trace(const FieldElement& x);
/// x^{(q-1)/(p-1)}, with norm(0) = 0.
PrimeElement norm(const FieldElement& x);
/// +1 on nonzero squares, -1 on nonsquares, 0 at zero. Throws
/// std::domain_error for a nonzero argument in characteristic 2.
int quadratic_character(const FieldElement& x);
/// U = {x^2 : x in GF(q)} ordered 0 first, then by generator exponent.
/// Throws std::domain_error in characteristic 2.
std::vector<FieldElement> squares(const FiniteField& field);

}  // namespace subfield
