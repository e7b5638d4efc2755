#include "subfield/constructions.hpp"

#include <stdexcept>
#include <vector>

#include "subfield/errors.hpp"

namespace subfield {

std::string to_string(CodeFamily family) { return family == CodeFamily::C1 ? "c1" : "c2"; }

CodeFamilySpec family_spec(CodeFamily family, std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  CodeFamilySpec spec{family, p, m, 0};
  if (family == CodeFamily::C1) {
    if (p == 2) throw std::invalid_argument("family c1 requires odd p");
    if (m < 1) throw std::invalid_argument("family c1 requires m >= 1");
  } else if (m != 2) {
    throw std::invalid_argument("family c2 requires m = 2");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > FiniteField::kMaxOrder) throw std::invalid_argument("field order p^m exceeds the 2^20 cap");
  }
  spec.n = family == CodeFamily::C1 ? (q * q + q) / 2 + 2 : q * (q - 1) + 2;
  return spec;
}

namespace {

// 0 first, then g^0, g^1, ..., g^{q-2}.
std::vector<FiniteField::Code> field_in_power_order(const FiniteField& f) {
  std::vector<FiniteField::Code> out{0};
  for (std::uint64_t k = 0; k + 1 < f.order(); ++k) out.push_back(f.exp(k));
  return out;
}

// First-row values f(x) of the main column block, one per x, in column order.
std::vector<FiniteField::Code> first_row_values(const CodeFamilySpec& spec, const FiniteField& f) {
  std::vector<FiniteField::Code> xs;
  if (spec.family == CodeFamily::C1) {
    for (const auto& u : squares(f)) xs.push_back(u.code());
  } else {
    for (std::uint64_t k = 0; k + 1 < f.order(); ++k) xs.push_back(f.norm(f.exp(k)));
  }
  return xs;
}

GeneratorMatrix build(const CodeFamilySpec& spec) {
  const FiniteField f = make_field(spec.p, spec.m);
  const auto xs = first_row_values(spec, f);
  const auto ys = field_in_power_order(f);
  GeneratorMatrix g(f, 3, spec.n);
  std::size_t col = 0;
  for (auto x : xs)
    for (auto y : ys) {
      g.set(0, col, x);
      g.set(1, col, y);
      g.set(2, col, 1);
      ++col;
    }
  g.set(0, col, 1);
  g.set(1, col + 1, 1);
  return g;
}

void add_row(WeightDistribution& wd, const BigInt& weight, const BigInt& mult) {
  if (mult < 0 || weight < 0) throw std::logic_error("closed-form table produced a negative entry");
  if (mult == 0) return;
  wd.counts[static_cast<std::uint64_t>(weight)] += mult;
}

BigInt exact_half(const BigInt& v) {
  if (v % 2 != 0) throw std::logic_error("closed-form table entry is not an integer");
  return v / 2;
}

BigInt sign_pow(std::uint64_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

GeneratorMatrix build_c1(std::uint32_t p, std::uint32_t m) { return build(family_spec(CodeFamily::C1, p, m)); }
GeneratorMatrix build_c2(std::uint32_t p) { return build(family_spec(CodeFamily::C2, p, 2)); }
GeneratorMatrix build_family(const CodeFamilySpec& spec) { return build(family_spec(spec.family, spec.p, spec.m)); }

std::uint64_t enumerate_family_codewords(const CodeFamilySpec& in,
                                         const std::function<void(std::span<const std::uint32_t>)>& visit,
                                         std::uint64_t budget) {
  const CodeFamilySpec spec = family_spec(in.family, in.p, in.m);
  const FiniteField f = make_field(spec.p, spec.m);
  const std::uint64_t q = f.order();
  const std::uint64_t tuples = q * q * spec.p;
  if (tuples > budget) throw BudgetExceeded("(a, b, c) parameter space exceeds the enumeration budget");

  const auto xs = first_row_values(spec, f);
  const auto ys = field_in_power_order(f);
  const std::uint32_t p = spec.p;
  std::vector<std::uint32_t> word(spec.n);
  std::vector<std::uint32_t> tr_ax(xs.size()), tr_by(ys.size());
  for (FiniteField::Code a = 0; a < q; ++a) {
    for (std::size_t i = 0; i < xs.size(); ++i) tr_ax[i] = f.trace(f.mul(a, xs[i]));
    for (FiniteField::Code b = 0; b < q; ++b) {
      for (std::size_t j = 0; j < ys.size(); ++j) tr_by[j] = f.trace(f.mul(b, ys[j]));
      for (std::uint32_t c = 0; c < p; ++c) {
        std::size_t col = 0;
        for (auto tx : tr_ax)
          for (auto ty : tr_by) word[col++] = (tx + ty + c) % p;
        word[col++] = f.trace(a);
        word[col++] = f.trace(b);
        visit(word);
      }
    }
  }
  return tuples;
}

WeightDistribution closed_form_wd_c1(std::uint32_t p, std::uint32_t m) {
  const auto spec = family_spec(CodeFamily::C1, p, m);
  const BigInt P = p;
  auto pw = [&](std::uint64_t e) { return ipow(P, e); };

  WeightDistribution wd;
  wd.n = spec.n;
  wd.k = 2 * m + 1;
  wd.p = p;
  add_row(wd, 0, 1);

  // Rows shared by both parities.
  const BigInt base = exact_half(pw(2 * m) + pw(m) - pw(2 * m - 1) - pw(m - 1));
  add_row(wd, exact_half(pw(2 * m) + pw(m)), P - 1);
  add_row(wd, base, (pw(m - 1) - 1) * pw(m));
  add_row(wd, base + 1, (pw(m) - pw(m - 1)) * (2 * pw(m) - P));
  add_row(wd, base + 2, P * (pw(m) - pw(m - 1)) * (pw(m) - pw(m - 1)));

  if (m % 2 == 1) {
    const BigInt half = exact_half(pw(2 * m) - pw(2 * m - 1));
    add_row(wd, half, pw(m - 1) - 1);
    add_row(wd, half + 1, pw(m) - pw(m - 1));
    const BigInt shift = pw((3 * m - 1) / 2) * sign_pow(std::uint64_t{m + 1} * (p - 1) / 4);
    const BigInt a = pw(2 * m) + pw(m) - pw(2 * m - 1);
    const BigInt mult0 = exact_half((pw(m - 1) - 1) * (P - 1));
    const BigInt mult1 = exact_half(pw(m - 1) * (P - 1) * (P - 1));
    add_row(wd, exact_half(a - shift), mult0);
    add_row(wd, exact_half(a - shift) + 1, mult1);
    add_row(wd, exact_half(a + shift), mult0);
    add_row(wd, exact_half(a + shift) + 1, mult1);
    return wd;
  }

  // m even: (sqrt(-1))^{(p-1)m/2} is the real sign (-1)^{(p-1)m/4}.
  const BigInt eps = sign_pow(std::uint64_t{m} * (p - 1) / 4);
  const BigInt s = pw((m - 2) / 2) * eps;
  const BigInt t = (P - 1) * pw((3 * m - 2) / 2) * eps;
  const BigInt u = pw((3 * m - 2) / 2) * eps;
  const BigInt b = pw(2 * m) - pw(2 * m - 1);
  const BigInt a = b + pw(m);
  const BigInt pm1 = pw(m - 1);
  add_row(wd, exact_half(b + t), exact_half(pm1 - 1 - (P - 1) * s));
  add_row(wd, exact_half(b + t) + 1, exact_half((P - 1) * (pm1 + s)));
  add_row(wd, exact_half(b - t), exact_half(pm1 - 1 + (P - 1) * s));
  add_row(wd, exact_half(b - t) + 1, exact_half((P - 1) * (pm1 - s)));
  add_row(wd, exact_half(a - u), exact_half((P - 1) * (pm1 - 1 - (P - 1) * s)));
  add_row(wd, exact_half(a - u) + 1, exact_half((P - 1) * (P - 1) * (pm1 + s)));
  add_row(wd, exact_half(a + u), exact_half((P - 1) * (pm1 - 1 + (P - 1) * s)));
  add_row(wd, exact_half(a + u) + 1, exact_half((P - 1) * (P - 1) * (pm1 - s)));
  return wd;
}

WeightDistribution closed_form_wd_c2(std::uint32_t p) {
  const auto spec = family_spec(CodeFamily::C2, p, 2);
  const BigInt P = p;
  const BigInt p2 = P * P;
  WeightDistribution wd;
  wd.n = spec.n;
  wd.k = 4;
  wd.p = p;
  add_row(wd, 0, 1);
  add_row(wd, p2 * (p2 - 1), P - 1);
  add_row(wd, p2 * (p2 - 1) + 1, P - 1);
  add_row(wd, (p2 - P) * (p2 - 1), P * (P - 1));
  add_row(wd, (p2 - P) * (p2 - 1) + 1, P * (P - 1) * (2 * P - 1));
  add_row(wd, (p2 - P) * (p2 - 1) + 2, (p2 - P) * (p2 - P));
  add_row(wd, p2 * (P + 1) * (P - 2) + 1, (P - 1) * (P - 1));
  return wd;
}

WeightDistribution closed_form_wd(const CodeFamilySpec& spec) {
  return spec.family == CodeFamily::C1 ? closed_form_wd_c1(spec.p, spec.m) : closed_form_wd_c2(spec.p);
}

ClaimSet expected_claims(CodeFamily family, std::uint32_t p, std::uint32_t m) {
  ClaimSet claims;
  claims.spec = family_spec(family, p, m);
  const std::uint64_t n = claims.spec.n;
  const BigInt P = p;
  auto pw = [&](std::uint64_t e) { return ipow(P, e); };

  if (family == CodeFamily::C1) {
    BigInt d;
    if (m == 1) {
      d = exact_half(P * P - P + 2);
    } else if (m % 2 == 1) {
      d = exact_half(pw(2 * m) + pw(m) - pw(2 * m - 1) - pw((3 * m - 1) / 2));
    } else {
      d = exact_half(pw(2 * m) - pw(2 * m - 1) - (P - 1) * pw((3 * m - 2) / 2));
    }
    claims.primal = {n, 2ULL * m + 1, static_cast<std::uint64_t>(d)};
    claims.dual = {n, n - 2ULL * m - 1, 3};
    claims.dual_flags.dimension_optimal = true;
    claims.dual_flags.almost_mds = m == 1;
    claims.weights = closed_form_wd_c1(p, m);
  } else {
    const BigInt d = P * P * (P + 1) * (P - 2) + 1;
    claims.primal = {n, 4, static_cast<std::uint64_t>(d)};
    claims.dual = {n, n - 4, 2};
    // For p = 2 the only optimality statement is a database lookup.
    claims.dual_flags.distance_optimal = p != 2;
    claims.weights = closed_form_wd_c2(p);
  }
  return claims;
}

}  // namespace subfield
