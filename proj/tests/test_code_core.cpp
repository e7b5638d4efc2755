#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "subfield/constructions.hpp"
#include "subfield/dual.hpp"
#include "subfield/errors.hpp"

using namespace subfield;

namespace {

using Word = std::vector<std::uint32_t>;

std::set<Word> row_space(const GeneratorMatrix& g) {
  std::set<Word> out;
  for_each_codeword(g, [&](std::span<const std::uint32_t> w) { out.emplace(w.begin(), w.end()); });
  return out;
}

std::set<Word> trace_words(const GeneratorMatrix& g) {
  std::set<Word> out;
  trace_code_enumerate(g, [&](std::span<const std::uint32_t> w) { out.emplace(w.begin(), w.end()); });
  return out;
}

Basis random_basis(const FiniteField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<FiniteField::Code> pick(1, f.order() - 1);
  for (;;) {
    Basis b;
    for (std::uint32_t i = 0; i < f.degree(); ++i) b.elements.push_back(f.element(pick(rng)));
    if (is_basis(f, b.elements)) return b;
  }
}

WeightDistribution from_map(std::uint64_t n, std::uint32_t k, std::uint32_t p,
                            std::map<std::uint64_t, std::uint64_t> counts) {
  WeightDistribution wd;
  wd.n = n;
  wd.k = k;
  wd.p = p;
  for (auto [w, c] : counts) wd.counts[w] = c;
  return wd;
}

}  // namespace

TEST_CASE("rank examples") {
  const auto f = make_field(3, 1);
  GeneratorMatrix id(f, 3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, 1);
  CHECK(rank(id) == 3);
  CHECK(rank(GeneratorMatrix(f, 3, 3)) == 0);
  CHECK(rank(subfield_expand(build_c1(3, 2))) == 5);
  CHECK_THROWS_AS(GeneratorMatrix(f, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorMatrix(f, 2, 2, {0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("subfield_expand examples") {
  std::mt19937_64 rng(5);
  const auto f7 = make_field(7, 1);
  const auto g = oracle::random_matrix(f7, 3, 6, rng);
  const auto e = subfield_expand(g);
  CHECK(std::vector<std::uint32_t>(e.entries().begin(), e.entries().end()) ==
        std::vector<std::uint32_t>(g.entries().begin(), g.entries().end()));

  const auto f9 = make_field(3, 2);
  GeneratorMatrix a(f9, 1, 1);
  a.set(0, 0, f9.generator().code());
  const auto ea = subfield_expand(a, polynomial_basis(f9));
  REQUIRE(ea.rows() == 2);
  REQUIRE(ea.cols() == 1);
  CHECK(ea.at(0, 0) == 0);
  CHECK(ea.at(1, 0) == 1);

  Basis dependent{{f9.one(), f9.from_int(2)}};
  CHECK_FALSE(is_basis(f9, dependent.elements));
  CHECK_THROWS_AS(subfield_expand(a, dependent), std::invalid_argument);
}

TEST_CASE("trace representation spans the expanded row space") {
  std::mt19937_64 rng(17);
  for (auto [p, m] : {std::pair{2U, 2U}, {2U, 3U}, {3U, 2U}, {5U, 2U}, {3U, 3U}}) {
    const auto f = make_field(p, m);
    for (int t = 0; t < 5; ++t) {
      const auto g = oracle::random_matrix(f, 2, 7, rng);
      CHECK(trace_words(g) == row_space(subfield_expand(g)));
    }
  }
  const auto f9 = make_field(3, 2);
  std::uint64_t visits = 0;
  bool first_is_zero = false;
  trace_code_enumerate(oracle::random_matrix(f9, 2, 4, rng), [&](std::span<const std::uint32_t> w) {
    if (visits++ == 0) first_is_zero = std::all_of(w.begin(), w.end(), [](auto v) { return v == 0; });
  });
  CHECK(visits == 81);
  CHECK(first_is_zero);
}

TEST_CASE("subfield code does not depend on the basis") {
  std::mt19937_64 rng(99);
  for (auto [p, m] : {std::pair{3U, 2U}, {3U, 3U}, {5U, 2U}}) {
    const auto f = make_field(p, m);
    CAPTURE(f.order());
    const auto g = oracle::random_matrix(f, 2, 6, rng);
    const auto reference = row_space(subfield_expand(g));
    const auto reference_wd = weight_distribution(subfield_expand(g));
    for (int t = 0; t < 20; ++t) {
      const auto b = random_basis(f, rng);
      const auto e = subfield_expand(g, b);
      CHECK(row_space(e) == reference);
      CHECK(weight_distribution(e) == reference_wd);
    }
  }
}

TEST_CASE("weight distribution matches the dedup oracle") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 131U}) {
    const auto f = make_field(p, 1);
    for (int t = 0; t < 6; ++t) {
      const std::size_t rows = p == 131 ? 2 : 1 + t % 4;
      auto g = oracle::random_matrix(f, rows, 9 + t, rng);
      if (t % 2 == 1) {
        // force a dependent row
        for (std::size_t c = 0; c < g.cols(); ++c) g.set(rows - 1, c, g.at(0, c) * 2 % p);
      }
      const auto wd = weight_distribution(g);
      CHECK(oracle::to_plain(wd) == oracle::weight_distribution(g));
      CHECK(wd.total() == oracle::ipow(p, wd.k));
      CHECK(wd.counts.at(0) == 1);
      CHECK(wd.counts.rbegin()->first <= wd.n);
    }
  }
}

TEST_CASE("weight distribution is independent of thread count") {
  const auto g = subfield_expand(build_c1(3, 3));
  const auto base = weight_distribution(g, {kDefaultBudget, 1});
  for (unsigned t : {2U, 3U, 7U, 0U}) CHECK(weight_distribution(g, {kDefaultBudget, t}) == base);
  const auto g2 = subfield_expand(build_c2(5));
  CHECK(weight_distribution(g2, {kDefaultBudget, 4}) == weight_distribution(g2, {kDefaultBudget, 1}));
}

TEST_CASE("known weight distributions of small family members") {
  const auto wd1 = weight_distribution(subfield_expand(build_c1(3, 1)));
  CHECK(oracle::to_plain(wd1) == std::map<std::uint64_t, std::uint64_t>{{0, 1}, {4, 4}, {5, 6}, {6, 14}, {7, 2}});
  CHECK(wd1.enumerator() == "1 + 4x^4 + 6x^5 + 14x^6 + 2x^7");
  CHECK(min_distance(wd1) == 4);

  const auto wd2 = weight_distribution(subfield_expand(build_c1(3, 2)));
  CHECK(oracle::to_plain(wd2) == std::map<std::uint64_t, std::uint64_t>{
                                     {0, 1}, {18, 2}, {19, 2}, {28, 8}, {30, 18}, {31, 90}, {32, 108}, {36, 4}, {37, 8}, {45, 2}});
  CHECK(min_distance(weight_distribution(subfield_expand(build_c2(2)))) == 1);
  CHECK(min_distance(weight_distribution(subfield_expand(build_c2(3)))) == 37);
}

TEST_CASE("zero code and budgets") {
  const auto f = make_field(3, 1);
  const auto wd = weight_distribution(GeneratorMatrix(f, 2, 4));
  CHECK(wd.k == 0);
  CHECK(oracle::to_plain(wd) == std::map<std::uint64_t, std::uint64_t>{{0, 1}});
  CHECK_FALSE(min_distance(wd).has_value());

  const auto g = subfield_expand(build_c1(3, 2));
  CHECK_THROWS_AS(weight_distribution(g, {100, 1}), BudgetExceeded);
  CHECK_NOTHROW(weight_distribution(g, {243, 1}));
  CHECK_THROWS_AS(trace_code_enumerate(build_c1(3, 2), [](auto) {}, 700), BudgetExceeded);
  CHECK_THROWS_AS(low_weight_dual_count(g, 3, {10, 1}), BudgetExceeded);
  CHECK_THROWS_AS(weight_distribution(build_c1(3, 2)), std::invalid_argument);
}

TEST_CASE("dual of C1(3,1) by full enumeration") {
  const auto g = subfield_expand(build_c1(3, 1));
  // every vector of GF(3)^8 orthogonal to all rows
  std::map<std::uint64_t, std::uint64_t> dual;
  for (std::uint64_t idx = 0; idx < oracle::ipow(3, 8); ++idx) {
    Word v(8);
    std::uint64_t rest = idx;
    for (auto& x : v) {
      x = rest % 3;
      rest /= 3;
    }
    bool orth = true;
    for (std::size_t r = 0; r < g.rows() && orth; ++r) {
      std::uint32_t s = 0;
      for (std::size_t c = 0; c < 8; ++c) s += v[c] * g.at(r, c);
      orth = s % 3 == 0;
    }
    if (orth) ++dual[static_cast<std::uint64_t>(std::count_if(v.begin(), v.end(), [](auto x) { return x != 0; }))];
  }
  CHECK(dual[0] == 1);
  CHECK(dual[1] == 0);
  CHECK(dual[2] == 0);
  CHECK(dual[3] == 22);
  std::uint64_t total = 0;
  for (auto [w, c] : dual) total += c;
  CHECK(total == 243);

  const auto moments = pless_dual_a123(weight_distribution(g), 3);
  CHECK(moments == DualCounts{0, 0, 22});
  CHECK(low_weight_dual_count(g, 1) == 0);
  CHECK(low_weight_dual_count(g, 2) == 0);
  CHECK(low_weight_dual_count(g, 3) == 22);
}

TEST_CASE("power moment solve examples") {
  CHECK(pless_dual_a123(from_map(2, 2, 3, {{0, 1}, {1, 4}, {2, 4}}), 3) == DualCounts{0, 0, 0});

  const auto c2 = pless_dual_a123(weight_distribution(subfield_expand(build_c2(3))), 3);
  CHECK(c2.a1 == 0);
  CHECK(c2.a2 > 0);

  auto corrupted = from_map(8, 3, 3, {{0, 1}, {4, 4}, {5, 6}, {6, 14}, {7, 2}});
  CHECK(power_moments_hold(corrupted, 3, {0, 0, 22}));
  CHECK_FALSE(power_moments_hold(corrupted, 3, {0, 0, 21}));
  corrupted.counts[6] = 13;
  CHECK_THROWS_AS(pless_dual_a123(corrupted, 3), std::domain_error);
  corrupted.counts[6] = 14;
  corrupted.counts[4] = 5;
  corrupted.counts[5] = 5;
  CHECK_THROWS_AS(pless_dual_a123(corrupted, 3), std::domain_error);
}

TEST_CASE("low-weight dual search matches brute force and the moments") {
  std::mt19937_64 rng(41);
  for (std::uint32_t p : {2U, 3U, 5U}) {
    const auto f = make_field(p, 1);
    for (int t = 0; t < 12; ++t) {
      auto g = oracle::random_matrix(f, 2 + t % 3, 6 + t % 5, rng);
      // duplicate, scaled and zero columns
      if (t % 3 == 0)
        for (std::size_t r = 0; r < g.rows(); ++r) g.set(r, 1, g.at(r, 0));
      if (t % 4 == 1)
        for (std::size_t r = 0; r < g.rows(); ++r) g.set(r, 2, 0);
      if (t % 5 == 2)
        for (std::size_t r = 0; r < g.rows(); ++r) g.set(r, 3, g.at(r, 4) * (p - 1) % p);
      const DualCounts searched{low_weight_dual_count(g, 1), low_weight_dual_count(g, 2), low_weight_dual_count(g, 3)};
      CHECK(searched.a1 == oracle::dual_weight_count(g, 1));
      CHECK(searched.a2 == oracle::dual_weight_count(g, 2));
      CHECK(searched.a3 == oracle::dual_weight_count(g, 3));
      const auto wd = weight_distribution(g);
      CHECK(pless_dual_a123(wd, p) == searched);
      CHECK(power_moments_hold(wd, p, searched));
      if (t % 4 == 1) CHECK(searched.a1 >= p - 1);
    }
  }
  CHECK_THROWS_AS(low_weight_dual_count(subfield_expand(build_c1(3, 1)), 4), std::invalid_argument);
}

TEST_CASE("sphere-packing examples") {
  CHECK(sphere_packing(BoundMode::max_k_given_d, 47, 3, 3) == 42);
  for (std::uint64_t n : {1, 5, 47, 200})
    for (std::uint64_t q : {2, 3, 7}) CHECK(sphere_packing(BoundMode::max_k_given_d, n, q, 1) == n);
  CHECK(sphere_packing(BoundMode::max_d_given_k, 74, 3, 70) == 2);
  CHECK(sphere_packing(BoundMode::max_k_given_d, 8, 3, 3) == 5);
  CHECK(sphere_packing(BoundMode::max_d_given_k, 14, 2, 10) == 4);
  CHECK(sphere_packing(BoundMode::max_d_given_k, 5, 2, 6) == 0);
  CHECK(sphere_packing(BoundMode::max_d_given_k, 4, 2, 1) == 4);
}

TEST_CASE("sphere-packing monotonicity and consistency") {
  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::uint64_t n = 1; n <= 30; ++n) {
      std::uint64_t prev = n;
      for (std::uint64_t d = 1; d <= n; ++d) {
        const auto k = sphere_packing(BoundMode::max_k_given_d, n, q, d);
        CHECK(k <= prev);
        prev = k;
        if (k >= 1) CHECK(sphere_packing(BoundMode::max_d_given_k, n, q, k) >= d);
      }
      std::uint64_t prevd = n;
      for (std::uint64_t k = 1; k <= n; ++k) {
        const auto d = sphere_packing(BoundMode::max_d_given_k, n, q, k);
        CHECK(d <= prevd);
        prevd = d;
      }
    }
}

TEST_CASE("classify") {
  const auto f1 = classify(8, 5, 3, 3);
  CHECK(f1.almost_mds);
  CHECK(f1.dimension_optimal);
  CHECK_FALSE(f1.mds);
  const auto f2 = classify(74, 70, 2, 3);
  CHECK(f2.distance_optimal);
  CHECK(f2.names() == std::vector<std::string>{"distance_optimal"});
  const auto f3 = classify(4, 1, 4, 2);
  CHECK(f3.mds);
  CHECK(classify(47, 42, 3, 3).dimension_optimal);
  CHECK_FALSE(classify(14, 10, 2, 2).distance_optimal);
  CHECK(f1.contains(CodeFlags{}));
  CHECK_FALSE(CodeFlags{}.contains(f1));
}

TEST_CASE("dual report") {
  const auto rep = dual_report(weight_distribution(subfield_expand(build_c1(3, 1))));
  CHECK(rep.n == 8);
  CHECK(rep.k_dual == 5);
  CHECK(rep.d_perp == 3);
  CHECK(rep.flags.almost_mds);
  const auto none = dual_report(from_map(2, 2, 3, {{0, 1}, {1, 4}, {2, 4}}));
  CHECK_FALSE(none.d_perp.has_value());
  CHECK(none.flags.names().empty());
}

TEST_CASE("subfield dual distance is at least the dual distance") {
  std::mt19937_64 rng(2025);
  for (auto [p, m] : {std::pair{2U, 2U}, {3U, 2U}}) {
    const auto f = make_field(p, m);
    CAPTURE(f.order());
    int compared = 0;
    for (int t = 0; compared < 50; ++t) {
      const std::size_t k = 1 + t % 3;
      const std::size_t n = k + 2 + t % 4;
      const auto g = oracle::random_matrix(f, k, n, rng);
      const auto d_dual = oracle::dual_distance(g);
      const auto d_sub_dual = oracle::dual_distance(subfield_expand(g));
      // a zero dual has no minimum distance
      if (d_dual == 0 || d_sub_dual == 0) continue;
      ++compared;
      CHECK(d_sub_dual >= d_dual);
    }
  }
}
