#pragma once

// Additive and multiplicative characters of GF(q), quadratic Gauss and Weil
// sums, and the exact point counts that the weight formulas are built from.
//
// Complex values are only ever compared against each other within a
// tolerance. Anything that feeds a weight distribution is an integer count,
// and each closed form below has a brute-force twin (`*_direct` /
// `*_enumerate`) so the two can be checked against each other.

#include <complex>
#include <cstdint>

#include "subfield/field.hpp"

namespace subfield {

using ComplexValue = std::complex<double>;

/// Cardinalities of {a in GF(q)* : eta(a) = +-1, Tr(a) = 0 or != 0}.
struct CountQuadruple {
  std::uint64_t sq_tr0 = 0;
  std::uint64_t sq_trx = 0;
  std::uint64_t nsq_tr0 = 0;
  std::uint64_t nsq_trx = 0;

  std::uint64_t total() const { return sq_tr0 + sq_trx + nsq_tr0 + nsq_trx; }
  friend bool operator==(const CountQuadruple&, const CountQuadruple&) = default;
};

/// chi_a(x) = exp(2 pi i Tr(a x) / p).
ComplexValue additive_char(const FieldElement& a, const FieldElement& x);

/// psi_j(g^k) = exp(2 pi i j k / (q - 1)) for nonzero x.
ComplexValue multiplicative_char(std::uint64_t j, const FieldElement& x);

/// Quadratic Gauss sum G(eta, chi_1), closed form. Odd characteristic only.
ComplexValue gauss_sum_closed(const FiniteField& field);
/// Same sum evaluated term by term over GF(q)*.
ComplexValue gauss_sum_numeric(const FiniteField& field);

/// sum_x chi_1(a2 x^2 + a1 x + a0) via the completed-square closed form.
/// Throws std::domain_error when a2 = 0 or p = 2.
ComplexValue weil_sum_quadratic(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0);
ComplexValue weil_sum_quadratic_direct(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0);

CountQuadruple lemma31_counts(const FiniteField& field);
CountQuadruple lemma31_counts_enumerate(const FiniteField& field);

// N0(a, b, c) = #{(x, y) : x in U, y in GF(q), Tr(a x + b y) + c = 0},
// U the set of squares. Odd characteristic only.
std::uint64_t n0_c1(const FieldElement& a, const FieldElement& b, PrimeElement c);
std::uint64_t n0_c1_direct(const FieldElement& a, const FieldElement& b, PrimeElement c);
/// #{(x, y) in GF(q)^2 : Tr(a x^2 + b y) + c = 0}.
std::uint64_t n0_c1_full_square_direct(const FieldElement& a, const FieldElement& b, PrimeElement c);
/// #{y : Tr(b y) + c = 0}, i.e. the x = 0 slice.
std::uint64_t n0_c1_zero_slice_direct(const FieldElement& b, PrimeElement c);

// N0(a, b, c) = #{(x, y) : x in GF(q)*, y in GF(q), Tr(a Norm(x) + b y) + c = 0}
// for q = p^2.
std::uint64_t n0_c2(const FieldElement& a, const FieldElement& b, PrimeElement c);
std::uint64_t n0_c2_direct(const FieldElement& a, const FieldElement& b, PrimeElement c);

/// Legendre symbol of c modulo p, with 0 for c = 0.
int legendre(std::uint32_t c, std::uint32_t p);

}  // namespace subfield
