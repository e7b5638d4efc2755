#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "subfield/dual.hpp"
#include "subfield/errors.hpp"

namespace subfield {

namespace {

struct Moments {
  BigInt s[4];  // sum_i i^t A_i
  BigInt pk;    // p^k
};

Moments moments_of(const WeightDistribution& wd, std::uint32_t p) {
  if (wd.p != 0 && wd.p != p) throw std::invalid_argument("distribution alphabet does not match p");
  Moments mo;
  for (const auto& [w, c] : wd.counts) {
    if (c < 0) throw std::domain_error("negative multiplicity in weight distribution");
    const BigInt wi = w;
    mo.s[0] += c;
    mo.s[1] += wi * c;
    mo.s[2] += wi * wi * c;
    mo.s[3] += wi * wi * wi * c;
  }
  mo.pk = ipow(p, wd.k);
  if (mo.s[0] != mo.pk)
    throw std::domain_error("weight distribution sums to " + mo.s[0].str() + ", expected p^k = " + mo.pk.str());
  return mo;
}

// S_t p^t / p^k, the bracketed right-hand side of the t-th moment identity.
BigInt scaled(const Moments& mo, std::uint32_t p, unsigned t) {
  const BigInt num = mo.s[t] * ipow(p, t);
  if (num % mo.pk != 0) throw std::domain_error("power moment is not divisible by p^(k-t)");
  return num / mo.pk;
}

// Right-hand brackets of the moment identities as functions of (A1, A2, A3).
struct Brackets {
  BigInt b1, b2, b3;
};

Brackets brackets(const BigInt& p, const BigInt& n, const DualCounts& d) {
  Brackets b;
  b.b1 = p * n - n - d.a1;
  b.b2 = (p - 1) * n * (p * n - n + 1) - (2 * p * n - p - 2 * n + 2) * d.a1 + 2 * d.a2;
  b.b3 = (p - 1) * n * (p * p * n * n - 2 * p * n * n + 3 * p * n - p + n * n - 3 * n + 2) -
         (3 * p * p * n * n - 3 * p * p * n - 6 * p * n * n + 12 * p * n + p * p - 6 * p + 3 * n * n - 9 * n + 6) *
             d.a1 +
         6 * (p * n - p - n + 2) * d.a2 - 6 * d.a3;
  return b;
}

}  // namespace

DualCounts pless_dual_a123(const WeightDistribution& wd, std::uint32_t p) {
  const Moments mo = moments_of(wd, p);
  const BigInt P = p, N = wd.n;
  DualCounts d;
  // Each bracket is affine in the newest unknown, so solve them in order.
  d.a1 = P * N - N - scaled(mo, p, 1);

  const BigInt r2 = scaled(mo, p, 2) - brackets(P, N, d).b2;  // = 2 A2 with A2 = 0 plugged in
  if (r2 % 2 != 0) throw std::domain_error("second power moment gives a fractional A2");
  d.a2 = r2 / 2;

  const BigInt r3 = brackets(P, N, d).b3 - scaled(mo, p, 3);  // = 6 A3 with A3 = 0 plugged in
  if (r3 % 6 != 0) throw std::domain_error("third power moment gives a fractional A3");
  d.a3 = r3 / 6;

  if (d.a1 < 0 || d.a2 < 0 || d.a3 < 0) throw std::domain_error("power moments give a negative dual count");
  return d;
}

bool power_moments_hold(const WeightDistribution& wd, std::uint32_t p, const DualCounts& dual) {
  Moments mo;
  try {
    mo = moments_of(wd, p);
  } catch (const std::domain_error&) {
    return false;
  }
  const BigInt P = p;
  const Brackets b = brackets(P, wd.n, dual);
  return mo.s[1] * P == mo.pk * b.b1 && mo.s[2] * P * P == mo.pk * b.b2 && mo.s[3] * P * P * P == mo.pk * b.b3;
}

namespace {

using Column = std::vector<std::uint32_t>;

struct ColumnHash {
  std::size_t operator()(const Column& c) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : c) h = (h ^ v) * 1099511628211ULL;
    return h;
  }
};

bool is_zero(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](std::uint32_t v) { return v == 0; });
}

}  // namespace

std::uint64_t low_weight_dual_count(const GeneratorMatrix& g, unsigned w, const EnumerationOptions& options) {
  if (g.field().degree() != 1) throw std::invalid_argument("low_weight_dual_count expects a matrix over GF(p)");
  if (w < 1 || w > 3) throw std::invalid_argument("only weights 1, 2 and 3 are supported");
  const std::uint64_t p = g.field().characteristic();
  const std::size_t n = g.cols();

  const BigInt work = w == 3 ? binomial(n, 2) * (p - 1) * (p - 1) : BigInt(n);
  if (work > options.budget) throw BudgetExceeded("dual low-weight search exceeds the enumeration budget");

  // Row reduction leaves the dual unchanged.
  const auto basis = reduced_basis(g);
  const std::size_t r = basis.size();
  std::vector<Column> cols(n, Column(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) cols[c][i] = basis[i][c];

  std::vector<std::uint64_t> inv(p, 0);
  for (std::uint64_t a = 1; a < p; ++a)
    for (std::uint64_t b = 1; b < p; ++b)
      if (a * b % p == 1) inv[a] = b;

  if (w == 1) {
    const auto zeros = static_cast<std::uint64_t>(std::count_if(cols.begin(), cols.end(), is_zero));
    return zeros * (p - 1);
  }

  if (w == 2) {
    // Group nonzero columns by projective point: scale so the leading entry is 1.
    // Two zero columns carry (p-1)^2 words: both coefficients are free.
    std::unordered_map<Column, std::uint64_t, ColumnHash> classes;
    std::uint64_t zeros = 0;
    for (const auto& c : cols) {
      if (is_zero(c)) {
        ++zeros;
        continue;
      }
      const auto lead = *std::find_if(c.begin(), c.end(), [](std::uint32_t v) { return v != 0; });
      Column norm(r);
      for (std::size_t i = 0; i < r; ++i) norm[i] = static_cast<std::uint32_t>(c[i] * inv[lead] % p);
      ++classes[norm];
    }
    std::uint64_t pairs = 0;
    for (const auto& [key, s] : classes) pairs += s * (s - 1) / 2;
    return pairs * (p - 1) + zeros * (zeros - 1) / 2 * (p - 1) * (p - 1);
  }

  // w == 3: fix the first coefficient to 1, choose the second, and look up
  // which later columns complete the dependency for some third coefficient.
  std::unordered_map<Column, std::vector<std::uint32_t>, ColumnHash> positions;
  for (std::size_t c = 0; c < n; ++c) positions[cols[c]].push_back(static_cast<std::uint32_t>(c));

  const unsigned requested = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(requested, std::max<std::size_t>(1, n / 16)));
  std::vector<std::uint64_t> partial(workers, 0);
  auto scan = [&](unsigned worker) {
    Column t(r), target(r);
    std::uint64_t found = 0;
    for (std::size_t i = worker; i < n; i += workers) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::uint64_t c2 = 1; c2 < p; ++c2) {
          for (std::size_t e = 0; e < r; ++e) t[e] = static_cast<std::uint32_t>((p - (cols[i][e] + c2 * cols[j][e]) % p) % p);
          for (std::uint64_t c3 = 1; c3 < p; ++c3) {
            for (std::size_t e = 0; e < r; ++e) target[e] = static_cast<std::uint32_t>(t[e] * inv[c3] % p);
            const auto it = positions.find(target);
            if (it == positions.end()) continue;
            const auto& idx = it->second;
            found += static_cast<std::uint64_t>(idx.end() - std::upper_bound(idx.begin(), idx.end(), j));
          }
        }
      }
    }
    partial[worker] = found;
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned wk = 0; wk < workers; ++wk) pool.emplace_back(scan, wk);
  }
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total * (p - 1);
}

DualReport dual_report(const WeightDistribution& wd) {
  DualReport rep;
  rep.n = wd.n;
  rep.k_dual = wd.n - wd.k;
  rep.counts = pless_dual_a123(wd, wd.p);
  if (rep.counts.a1 > 0) {
    rep.d_perp = 1;
  } else if (rep.counts.a2 > 0) {
    rep.d_perp = 2;
  } else if (rep.counts.a3 > 0) {
    rep.d_perp = 3;
  }
  if (rep.d_perp) rep.flags = classify(rep.n, rep.k_dual, *rep.d_perp, wd.p);
  return rep;
}

}  // namespace subfield
