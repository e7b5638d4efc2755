#include "subfield/char_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace subfield {

namespace {

void require_odd(const FiniteField& f, const char* what) {
  if (f.characteristic() == 2) throw std::domain_error(std::string(what) + " needs odd characteristic");
}

void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_as(b.field())) throw std::invalid_argument("arguments belong to different fields");
}

ComplexValue root_of_unity(std::uint64_t num, std::uint64_t den) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num % den) / static_cast<double>(den));
}

std::int64_t ipow(std::int64_t b, std::uint64_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// (-1)^k for k >= 0.
std::int64_t sign_pow(std::uint64_t k) { return (k % 2 == 0) ? 1 : -1; }

std::uint64_t halve(std::int64_t v) {
  if (v < 0 || v % 2 != 0) throw std::logic_error("closed-form count is not a non-negative integer");
  return static_cast<std::uint64_t>(v / 2);
}

}  // namespace

int legendre(std::uint32_t c, std::uint32_t p) {
  c %= p;
  if (c == 0) return 0;
  if (p == 2) return 1;
  std::uint64_t e = (p - 1) / 2, b = c, acc = 1;
  while (e != 0) {
    if (e & 1U) acc = acc * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return acc == 1 ? 1 : -1;
}

ComplexValue additive_char(const FieldElement& a, const FieldElement& x) {
  require_same(a, x);
  const auto& f = a.field();
  return root_of_unity(f.trace(f.mul(a.code(), x.code())), f.characteristic());
}

ComplexValue multiplicative_char(std::uint64_t j, const FieldElement& x) {
  if (x.is_zero()) throw std::domain_error("multiplicative characters are defined on GF(q)*");
  const auto& f = x.field();
  const std::uint64_t n = f.order() - 1;
  return root_of_unity((j % n) * f.log(x.code()) % n, n);
}

ComplexValue gauss_sum_closed(const FiniteField& field) {
  require_odd(field, "Gauss sum");
  const std::uint32_t p = field.characteristic();
  const std::uint32_t m = field.degree();
  const double root_q = std::sqrt(static_cast<double>(field.order()));
  const double sign = static_cast<double>(sign_pow(m - 1));
  if (p % 4 == 1) return {sign * root_q, 0.0};
  // i^m
  static constexpr ComplexValue kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return sign * kIPowers[m % 4] * root_q;
}

ComplexValue gauss_sum_numeric(const FiniteField& field) {
  require_odd(field, "Gauss sum");
  const std::uint32_t p = field.characteristic();
  ComplexValue s = 0;
  for (FiniteField::Code x = 1; x < field.order(); ++x)
    s += static_cast<double>(field.quadratic_character(x)) * root_of_unity(field.trace(x), p);
  return s;
}

ComplexValue weil_sum_quadratic(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0) {
  require_same(a2, a1);
  require_same(a2, a0);
  const auto& f = a2.field();
  require_odd(f, "Weil sum");
  if (a2.is_zero()) throw std::domain_error("leading coefficient a2 must be nonzero");
  const FieldElement shift = a0 - a1 * a1 / (f.from_int(4) * a2);
  return root_of_unity(trace(shift).value, f.characteristic()) * static_cast<double>(quadratic_character(a2)) *
         gauss_sum_closed(f);
}

ComplexValue weil_sum_quadratic_direct(const FieldElement& a2, const FieldElement& a1, const FieldElement& a0) {
  require_same(a2, a1);
  require_same(a2, a0);
  const auto& f = a2.field();
  require_odd(f, "Weil sum");
  if (a2.is_zero()) throw std::domain_error("leading coefficient a2 must be nonzero");
  ComplexValue s = 0;
  for (FiniteField::Code x = 0; x < f.order(); ++x) {
    const auto v = f.add(f.add(f.mul(a2.code(), f.mul(x, x)), f.mul(a1.code(), x)), a0.code());
    s += root_of_unity(f.trace(v), f.characteristic());
  }
  return s;
}

CountQuadruple lemma31_counts(const FiniteField& field) {
  require_odd(field, "square/trace counts");
  const std::int64_t p = field.characteristic();
  const std::uint64_t m = field.degree();
  const std::int64_t pm1 = ipow(p, m - 1);
  if (m % 2 == 1) {
    const auto tr0 = halve(pm1 - 1);
    const auto trx = halve(pm1 * (p - 1));
    return {tr0, trx, tr0, trx};
  }
  const std::int64_t t = (p - 1) * ipow(p, (m - 2) / 2) * sign_pow(static_cast<std::uint64_t>(p - 1) * m / 4);
  const std::int64_t s = ipow(p, (m - 2) / 2) * sign_pow(static_cast<std::uint64_t>(p - 1) * m / 4);
  return {halve(pm1 - 1 - t), halve((p - 1) * (pm1 + s)), halve(pm1 - 1 + t), halve((p - 1) * (pm1 - s))};
}

CountQuadruple lemma31_counts_enumerate(const FiniteField& field) {
  require_odd(field, "square/trace counts");
  CountQuadruple c;
  for (FiniteField::Code a = 1; a < field.order(); ++a) {
    const bool square = field.quadratic_character(a) == 1;
    const bool tr0 = field.trace(a) == 0;
    if (square) {
      ++(tr0 ? c.sq_tr0 : c.sq_trx);
    } else {
      ++(tr0 ? c.nsq_tr0 : c.nsq_trx);
    }
  }
  return c;
}

std::uint64_t n0_c1(const FieldElement& a, const FieldElement& b, PrimeElement c) {
  require_same(a, b);
  const auto& f = a.field();
  require_odd(f, "N0 for C1");
  const std::int64_t p = f.characteristic();
  const std::uint64_t m = f.degree();
  const std::uint32_t cv = c.value % static_cast<std::uint32_t>(p);
  const std::int64_t p2m = ipow(p, 2 * m), pm = ipow(p, m);
  const std::int64_t p2m1 = ipow(p, 2 * m - 1), pm1 = ipow(p, m - 1);

  if (a.is_zero() && b.is_zero()) return cv == 0 ? halve(p2m + pm) : 0;
  if (!b.is_zero()) return halve(p2m1 + pm1);

  // a != 0, b = 0
  const int eta_a = quadratic_character(a);
  if (m % 2 == 1) {
    if (cv == 0) return halve(p2m1 + pm);
    const std::int64_t eps = sign_pow(static_cast<std::uint64_t>(p - 1) * (m + 1) / 4);
    const std::int64_t sigma = eta_a * legendre(cv, static_cast<std::uint32_t>(p));
    return halve(p2m1 + sigma * eps * ipow(p, (3 * m - 1) / 2));
  }
  const std::int64_t eps = sign_pow(static_cast<std::uint64_t>(p - 1) * m / 4);
  const std::int64_t root = ipow(p, (3 * m - 2) / 2);
  if (cv == 0) return halve(p2m1 + pm - eta_a * (p - 1) * root * eps);
  return halve(p2m1 + eta_a * root * eps);
}

std::uint64_t n0_c1_direct(const FieldElement& a, const FieldElement& b, PrimeElement c) {
  require_same(a, b);
  const auto& f = a.field();
  const std::uint32_t p = f.characteristic();
  if (p == 2) throw std::domain_error("N0 for C1 needs odd characteristic");
  std::vector<bool> is_square(f.order(), false);
  for (FiniteField::Code x = 0; x < f.order(); ++x) is_square[f.mul(x, x)] = true;
  std::uint64_t count = 0;
  for (FiniteField::Code x = 0; x < f.order(); ++x) {
    if (!is_square[x]) continue;
    const auto ax = f.mul(a.code(), x);
    for (FiniteField::Code y = 0; y < f.order(); ++y)
      count += (f.trace(f.add(ax, f.mul(b.code(), y))) + c.value) % p == 0;
  }
  return count;
}

std::uint64_t n0_c1_full_square_direct(const FieldElement& a, const FieldElement& b, PrimeElement c) {
  require_same(a, b);
  const auto& f = a.field();
  const std::uint32_t p = f.characteristic();
  std::uint64_t count = 0;
  for (FiniteField::Code x = 0; x < f.order(); ++x) {
    const auto ax2 = f.mul(a.code(), f.mul(x, x));
    for (FiniteField::Code y = 0; y < f.order(); ++y)
      count += (f.trace(f.add(ax2, f.mul(b.code(), y))) + c.value) % p == 0;
  }
  return count;
}

std::uint64_t n0_c1_zero_slice_direct(const FieldElement& b, PrimeElement c) {
  const auto& f = b.field();
  const std::uint32_t p = f.characteristic();
  std::uint64_t count = 0;
  for (FiniteField::Code y = 0; y < f.order(); ++y) count += (f.trace(f.mul(b.code(), y)) + c.value) % p == 0;
  return count;
}

std::uint64_t n0_c2(const FieldElement& a, const FieldElement& b, PrimeElement c) {
  require_same(a, b);
  const auto& f = a.field();
  if (f.degree() != 2) throw std::invalid_argument("N0 for C2 is only available for m = 2");
  const std::uint64_t p = f.characteristic();
  const std::uint32_t cv = c.value % static_cast<std::uint32_t>(p);
  const std::uint64_t p2 = p * p;

  if (a.is_zero() && b.is_zero()) return cv == 0 ? p2 * (p2 - 1) : 0;
  if (!b.is_zero()) return p * (p2 - 1);
  // a != 0, b = 0. Tr(a Norm(x)) = Norm(x) Tr(a) because Norm(x) lies in GF(p).
  if (trace(a).value == 0) return cv == 0 ? p2 * (p2 - 1) : 0;
  return cv == 0 ? 0 : p2 * (p + 1);
}

std::uint64_t n0_c2_direct(const FieldElement& a, const FieldElement& b, PrimeElement c) {
  require_same(a, b);
  const auto& f = a.field();
  if (f.degree() != 2) throw std::invalid_argument("N0 for C2 is only available for m = 2");
  const std::uint32_t p = f.characteristic();
  std::uint64_t count = 0;
  for (FiniteField::Code x = 1; x < f.order(); ++x) {
    const auto an = f.mul(a.code(), f.pow(x, p + 1));
    for (FiniteField::Code y = 0; y < f.order(); ++y)
      count += (f.trace(f.add(an, f.mul(b.code(), y))) + c.value) % p == 0;
  }
  return count;
}

}  // namespace subfield
