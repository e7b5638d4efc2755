#include <algorithm>
#include <stdexcept>
#include <thread>

#include "subfield/code.hpp"
#include "subfield/errors.hpp"
#include "subfield/kernels.hpp"

namespace subfield {

namespace {

std::uint64_t codeword_count(std::uint32_t p, std::size_t rank, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    if (total > budget / p) throw BudgetExceeded("p^rank codewords exceed the enumeration budget");
    total *= p;
  }
  if (total > budget) throw BudgetExceeded("p^rank codewords exceed the enumeration budget");
  return total;
}

void require_prime_field(const GeneratorMatrix& g) {
  if (g.field().degree() != 1)
    throw std::invalid_argument("expected a matrix over the prime field; expand it with subfield_expand first");
}

unsigned worker_count(unsigned requested, std::uint64_t work) {
  unsigned t = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(1, work / 64)));
}

// Enumerates messages start..end-1 of the reduced basis in base-p counter order.
// Stepping the counter from idx to idx+1 wraps the trailing p-1 digits to 0 and
// bumps the next digit, which adds prefix[j] = row_0 + ... + row_j once.
template <class Word>
void histogram_range(const std::vector<std::vector<Word>>& prefix, const std::vector<std::vector<Word>>& rows,
                     std::uint32_t p, std::uint64_t start, std::uint64_t end, std::vector<std::uint64_t>& hist) {
  const std::size_t r = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<std::uint32_t> digits(r + 1, 0);
  std::vector<Word> word(n, 0);
  std::uint64_t rest = start;
  for (std::size_t i = 0; i < r; ++i) {
    digits[i] = static_cast<std::uint32_t>(rest % p);
    rest /= p;
    for (std::uint32_t t = 0; t < digits[i]; ++t)
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t s = word[c] + rows[i][c];
        word[c] = static_cast<Word>(s >= p ? s - p : s);
      }
  }

  if constexpr (sizeof(Word) == 1) {
    const auto& k = kernels::active_kernels();
    ++hist[k.count_nonzero(word.data(), n)];
    for (std::uint64_t idx = start + 1; idx < end; ++idx) {
      std::size_t j = 0;
      while (digits[j] == p - 1) digits[j++] = 0;
      ++digits[j];
      ++hist[k.add_mod_weight(word.data(), prefix[j].data(), n, static_cast<std::uint8_t>(p))];
    }
  } else {
    auto weight = [&] {
      return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Word v) { return v != 0; }));
    };
    ++hist[weight()];
    for (std::uint64_t idx = start + 1; idx < end; ++idx) {
      std::size_t j = 0;
      while (digits[j] == p - 1) digits[j++] = 0;
      ++digits[j];
      const auto& pr = prefix[j];
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t s = static_cast<std::uint64_t>(word[c]) + pr[c];
        word[c] = static_cast<Word>(s >= p ? s - p : s);
      }
      ++hist[weight()];
    }
  }
}

template <class Word>
std::vector<std::uint64_t> histogram(const std::vector<std::vector<FiniteField::Code>>& basis, std::uint32_t p,
                                     std::uint64_t total, std::size_t n, unsigned threads) {
  std::vector<std::vector<Word>> rows(basis.size(), std::vector<Word>(n));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) rows[i][c] = static_cast<Word>(basis[i][c]);
  std::vector<std::vector<Word>> prefix(rows.size() + 1, std::vector<Word>(n, 0));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint64_t s = static_cast<std::uint64_t>(j == 0 ? 0 : prefix[j - 1][c]) + rows[j][c];
      prefix[j][c] = static_cast<Word>(s % p);
    }

  const unsigned workers = worker_count(threads, total);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
  auto chunk = [&](unsigned w) {
    const std::uint64_t s = total * w / workers;
    const std::uint64_t e = total * (w + 1) / workers;
    if (s < e) histogram_range(prefix, rows, p, s, e, partial[w]);
  };
  if (workers == 1) {
    chunk(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(chunk, w);
  }
  std::vector<std::uint64_t> hist(n + 1, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i <= n; ++i) hist[i] += part[i];
  return hist;
}

}  // namespace

std::uint64_t for_each_codeword(const GeneratorMatrix& g,
                                const std::function<void(std::span<const std::uint32_t>)>& visit,
                                std::uint64_t budget) {
  require_prime_field(g);
  const auto basis = reduced_basis(g);
  const std::uint32_t p = g.field().characteristic();
  const std::uint64_t total = codeword_count(p, basis.size(), budget);
  std::vector<std::uint32_t> word(g.cols());
  std::vector<std::uint32_t> digits(basis.size(), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    std::fill(word.begin(), word.end(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto d = static_cast<std::uint64_t>(rest % p);
      rest /= p;
      if (d == 0) continue;
      for (std::size_t c = 0; c < word.size(); ++c)
        word[c] = static_cast<std::uint32_t>((word[c] + d * basis[i][c]) % p);
    }
    visit(word);
  }
  return total;
}

WeightDistribution weight_distribution(const GeneratorMatrix& g, const EnumerationOptions& options) {
  require_prime_field(g);
  const std::uint32_t p = g.field().characteristic();
  const auto basis = reduced_basis(g);
  WeightDistribution wd;
  wd.n = g.cols();
  wd.k = static_cast<std::uint32_t>(basis.size());
  wd.p = p;
  if (basis.empty()) {
    wd.counts[0] = 1;
    return wd;
  }
  const std::uint64_t total = codeword_count(p, basis.size(), options.budget);
  const auto hist = p <= kernels::kMaxKernelPrime
                        ? histogram<std::uint8_t>(basis, p, total, g.cols(), options.threads)
                        : histogram<std::uint32_t>(basis, p, total, g.cols(), options.threads);
  for (std::size_t w = 0; w < hist.size(); ++w)
    if (hist[w] != 0) wd.counts[w] = hist[w];
  return wd;
}

BigInt WeightDistribution::total() const {
  BigInt s = 0;
  for (const auto& [w, c] : counts) s += c;
  return s;
}

std::string WeightDistribution::enumerator() const {
  std::string out;
  for (const auto& [w, c] : counts) {
    if (!out.empty()) out += " + ";
    if (w == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str();
    out += "x";
    if (w != 1) out += "^" + std::to_string(w);
  }
  return out;
}

std::optional<std::uint64_t> min_distance(const WeightDistribution& wd) {
  for (const auto& [w, c] : wd.counts)
    if (w > 0 && c > 0) return w;
  return std::nullopt;
}

}  // namespace subfield
