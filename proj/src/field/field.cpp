#include "subfield/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace subfield {

namespace detail {

struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> radix;   // p^i
  std::vector<std::uint32_t> exp;     // exp[k] = g^k, k < q-1
  std::vector<std::uint32_t> log;     // log[0] unused
  std::vector<std::uint32_t> trace;   // per code
};

}  // namespace detail

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // length m, constant term first

// a * b mod (f, p); f monic of degree m, given without its leading 1.
Poly mulmod(const Poly& a, const Poly& b, const std::vector<std::uint32_t>& f, std::uint64_t p) {
  const std::size_t m = a.size();
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t d = 2 * m - 1; d >= m; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < m; ++i) prod[d - m + i] = (prod[d - m + i] + (p - c) * f[i]) % p;
  }
  prod.resize(m);
  return prod;
}

Poly powmod_x(std::uint64_t e, const std::vector<std::uint32_t>& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  Poly result(m, 0);
  result[0] = 1;
  Poly base(m, 0);
  if (m == 1) {
    base[0] = (p - f[0]) % p;  // x == -f0
  } else {
    base[1] = 1;
  }
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, f, p);
    e >>= 1U;
    if (e != 0) base = mulmod(base, base, f, p);
  }
  return result;
}

bool is_one(const Poly& a) {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](std::uint64_t c) { return c == 0; });
}

// x has order exactly q-1 in Z_p[x]/(f). That also forces the quotient ring to
// be a field, so f is irreducible.
bool is_primitive(const std::vector<std::uint32_t>& f, std::uint64_t p, std::uint64_t q,
                  const std::vector<std::uint64_t>& factors) {
  if (f[0] == 0) return false;
  if (!is_one(powmod_x(q - 1, f, p))) return false;
  return std::none_of(factors.begin(), factors.end(),
                      [&](std::uint64_t r) { return is_one(powmod_x((q - 1) / r, f, p)); });
}

std::vector<std::uint32_t> find_primitive_modulus(std::uint32_t p, std::uint32_t m, std::uint64_t q) {
  const auto factors = prime_factors(q - 1);
  std::vector<std::uint32_t> f(m + 1, 0);
  f[m] = 1;
  // Lexicographic order with the constant term most significant.
  for (std::uint64_t t = 0; t < q; ++t) {
    std::uint64_t rest = t;
    for (std::uint32_t i = m; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_primitive(f, p, q, factors)) return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto r : factors) {
      std::uint64_t e = (p - 1) / r, b = g, acc = 1;
      while (e != 0) {
        if (e & 1U) acc = acc * b % p;
        b = b * b % p;
        e >>= 1U;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<std::uint32_t>(g);
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

FiniteField make_field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("degree m must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > FiniteField::kMaxOrder)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                  " exceeds the 2^20 cap");
  }

  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = find_primitive_modulus(p, m, q);
  t->radix.resize(m);
  for (std::uint32_t i = 0, r = 1; i < m; ++i, r *= p) t->radix[i] = r;

  t->exp.resize(q - 1);
  t->log.assign(q, 0);
  if (m == 1) {
    const std::uint64_t g = smallest_primitive_root(p);
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      t->exp[k] = static_cast<std::uint32_t>(cur);
      cur = cur * g % p;
    }
  } else {
    std::vector<std::uint32_t> c(m, 0);
    c[0] = 1;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      std::uint32_t code = 0;
      for (std::uint32_t i = 0; i < m; ++i) code += c[i] * t->radix[i];
      t->exp[k] = code;
      // multiply by x
      const std::uint32_t top = c[m - 1];
      for (std::uint32_t i = m - 1; i > 0; --i) c[i] = c[i - 1];
      c[0] = 0;
      for (std::uint32_t i = 0; i < m; ++i)
        c[i] = static_cast<std::uint32_t>((c[i] + static_cast<std::uint64_t>(p - top) * t->modulus[i]) % p);
    }
  }
  for (std::uint32_t k = 0; k + 1 < q; ++k) t->log[t->exp[k]] = k;

  FiniteField field(t);

  // Trace is Z_p-linear: Tr(sum c_i a^i) = sum c_i Tr(a^i).
  std::vector<std::uint32_t> basis_trace(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    const FiniteField::Code b = t->radix[i];
    FiniteField::Code acc = 0, x = b;
    for (std::uint32_t j = 0; j < m; ++j) {
      acc = field.add(acc, x);
      x = field.pow(x, p);
    }
    if (acc >= p) throw std::logic_error("trace left the prime subfield");
    basis_trace[i] = acc;
  }
  t->trace.resize(q);
  for (std::uint32_t code = 0; code < q; ++code) {
    std::uint64_t s = 0;
    std::uint32_t rest = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      s += static_cast<std::uint64_t>(rest % p) * basis_trace[i];
      rest /= p;
    }
    t->trace[code] = static_cast<std::uint32_t>(s % p);
  }
  return field;
}

std::uint32_t FiniteField::characteristic() const { return t_->p; }
std::uint32_t FiniteField::degree() const { return t_->m; }
std::uint32_t FiniteField::order() const { return t_->q; }
std::span<const std::uint32_t> FiniteField::modulus() const { return t_->modulus; }

FieldElement FiniteField::generator() const { return FieldElement(*this, t_->exp.size() > 1 ? t_->exp[1] : 1); }
FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }
FieldElement FiniteField::element(Code code) const { return FieldElement(*this, code); }

FieldElement FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_->m) throw std::invalid_argument("coefficient vector has wrong length");
  Code code = 0;
  for (std::uint32_t i = 0; i < t_->m; ++i) {
    if (coeffs[i] >= t_->p) throw std::invalid_argument("coefficient out of range");
    code += coeffs[i] * t_->radix[i];
  }
  return FieldElement(*this, code);
}

FieldElement FiniteField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(t_->p);
  return FieldElement(*this, static_cast<Code>(((v % p) + p) % p));
}

FieldElement FiniteField::power_of_generator(std::uint64_t k) const { return FieldElement(*this, exp(k)); }

FiniteField::Code FiniteField::add(Code a, Code b) const {
  const std::uint32_t p = t_->p;
  if (p == 2) return a ^ b;
  if (t_->m == 1) {
    const Code s = a + b;
    return s >= p ? s - p : s;
  }
  Code r = 0;
  for (std::uint32_t i = 0; i < t_->m; ++i) {
    std::uint32_t d = a % p + b % p;
    if (d >= p) d -= p;
    r += d * t_->radix[i];
    a /= p;
    b /= p;
  }
  return r;
}

FiniteField::Code FiniteField::neg(Code a) const {
  const std::uint32_t p = t_->p;
  if (p == 2) return a;
  Code r = 0;
  for (std::uint32_t i = 0; i < t_->m; ++i) {
    const std::uint32_t d = a % p;
    r += (d == 0 ? 0 : p - d) * t_->radix[i];
    a /= p;
  }
  return r;
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t n = t_->q - 1;
  std::uint32_t s = t_->log[a] + t_->log[b];
  if (s >= n) s -= n;
  return t_->exp[s];
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t n = t_->q - 1;
  const std::uint32_t l = t_->log[a];
  return t_->exp[l == 0 ? 0 : n - l];
}

FiniteField::Code FiniteField::div(Code a, Code b) const {
  if (b == 0) throw std::domain_error("division by zero");
  return mul(a, inv(b));
}

FiniteField::Code FiniteField::pow(Code a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const auto n = static_cast<std::int64_t>(t_->q - 1);
  const std::int64_t er = ((e % n) + n) % n;
  const auto l = static_cast<std::uint64_t>(t_->log[a]);
  return t_->exp[(l * static_cast<std::uint64_t>(er)) % static_cast<std::uint64_t>(n)];
}

FiniteField::Code FiniteField::scale(Code a, std::uint32_t s) const { return mul(a, s % t_->p); }

FiniteField::Code FiniteField::exp(std::uint64_t k) const { return t_->exp[k % (t_->q - 1)]; }

std::uint32_t FiniteField::log(Code a) const {
  if (a == 0) throw std::domain_error("logarithm of zero");
  return t_->log[a];
}

std::uint32_t FiniteField::coeff(Code a, std::uint32_t i) const { return (a / t_->radix[i]) % t_->p; }

std::uint32_t FiniteField::trace(Code a) const { return t_->trace[a]; }

std::uint32_t FiniteField::norm(Code a) const {
  if (a == 0) return 0;
  const std::uint64_t e = (static_cast<std::uint64_t>(t_->q) - 1) / (t_->p - 1);
  return pow(a, static_cast<std::int64_t>(e));
}

int FiniteField::quadratic_character(Code a) const {
  if (a == 0) return 0;
  if (t_->p == 2) throw std::domain_error("quadratic character is undefined in characteristic 2");
  return (t_->log[a] % 2 == 0) ? 1 : -1;
}

bool FiniteField::same_as(const FiniteField& other) const {
  return t_ == other.t_ || (t_->p == other.t_->p && t_->m == other.t_->m);
}

std::string FiniteField::describe() const {
  return "GF(" + std::to_string(t_->p) + (t_->m > 1 ? "^" + std::to_string(t_->m) : std::string{}) + ")";
}

FieldElement::FieldElement(FiniteField field, Code code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_.order()) throw std::invalid_argument("element code out of range");
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  std::vector<std::uint32_t> c(field_.degree());
  for (std::uint32_t i = 0; i < c.size(); ++i) c[i] = field_.coeff(code_, i);
  return c;
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_as(b.field()))
    throw std::invalid_argument("operands belong to different fields: " + a.field().describe() + " vs " +
                                b.field().describe());
}
}  // namespace

FieldElement FieldElement::pow(std::int64_t e) const { return FieldElement(field_, field_.pow(code_, e)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(code_)); }
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(code_)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.add(a.code_, b.code_));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.sub(a.code_, b.code_));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.mul(a.code_, b.code_));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.div(a.code_, b.code_));
}

PrimeElement trace(const FieldElement& x) { return {x.field().trace(x.code())}; }
PrimeElement norm(const FieldElement& x) { return {x.field().norm(x.code())}; }
int quadratic_character(const FieldElement& x) { return x.field().quadratic_character(x.code()); }

std::vector<FieldElement> squares(const FiniteField& field) {
  if (field.characteristic() == 2)
    throw std::domain_error("the square set is only used in odd characteristic");
  std::vector<FieldElement> out;
  out.reserve((field.order() + 1) / 2);
  out.push_back(field.zero());
  for (std::uint64_t k = 0; k + 1 < field.order(); k += 2) out.push_back(field.power_of_generator(k));
  return out;
}

}  // namespace subfield
