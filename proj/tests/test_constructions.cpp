#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "subfield/constructions.hpp"
#include "subfield/dual.hpp"
#include "subfield/errors.hpp"

using namespace subfield;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kC1Grid{{3, 1}, {3, 2}, {3, 3}, {5, 1},
                                                                   {5, 2}, {7, 1}, {11, 1}};
const std::vector<std::uint32_t> kC2Grid{2, 3, 5};

}  // namespace

TEST_CASE("family parameter validation") {
  CHECK(family_spec(CodeFamily::C1, 3, 1).n == 8);
  CHECK(family_spec(CodeFamily::C1, 3, 2).n == 47);
  CHECK(family_spec(CodeFamily::C2, 2, 2).n == 14);
  CHECK(family_spec(CodeFamily::C2, 3, 2).n == 74);
  CHECK(family_spec(CodeFamily::C2, 5, 2).n == 602);

  auto message = [](auto&& fn) {
    try {
      fn();
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message([] { build_c1(2, 3); }) == "family c1 requires odd p");
  CHECK(message([] { family_spec(CodeFamily::C2, 3, 3); }) == "family c2 requires m = 2");
  CHECK(message([] { build_c1(9, 1); }) == "p must be prime, got 9");
  CHECK_THROWS_AS(family_spec(CodeFamily::C1, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(family_spec(CodeFamily::C1, 3, 13), std::invalid_argument);
}

TEST_CASE("generator matrix layout") {
  const auto g = build_c1(3, 1);
  REQUIRE(g.rows() == 3);
  REQUIRE(g.cols() == 8);
  // x in U = {0, 1}, y in 0, g^0, g^1 = 0, 1, 2
  const std::vector<std::uint32_t> row0{0, 0, 0, 1, 1, 1, 1, 0};
  const std::vector<std::uint32_t> row1{0, 1, 2, 0, 1, 2, 0, 1};
  const std::vector<std::uint32_t> row2{1, 1, 1, 1, 1, 1, 0, 0};
  CHECK(std::vector<std::uint32_t>(g.row(0).begin(), g.row(0).end()) == row0);
  CHECK(std::vector<std::uint32_t>(g.row(1).begin(), g.row(1).end()) == row1);
  CHECK(std::vector<std::uint32_t>(g.row(2).begin(), g.row(2).end()) == row2);

  const auto g2 = build_c2(3);
  const auto& f = g2.field();
  for (std::size_t c = 0; c + 2 < g2.cols(); ++c) {
    CHECK(g2.at(0, c) < 3);  // norms lie in GF(3)
    CHECK(g2.at(0, c) != 0);
    CHECK(g2.at(2, c) == 1);
  }
  CHECK(g2.at(0, 72) == 1);
  CHECK(g2.at(1, 73) == 1);
  CHECK(f.order() == 9);
}

TEST_CASE("lengths and ranks over the grid") {
  for (auto [p, m] : kC1Grid) {
    CAPTURE(p);
    CAPTURE(m);
    const std::uint64_t q = oracle::ipow(p, m);
    const auto g = subfield_expand(build_c1(p, m));
    CHECK(g.cols() == (q * q + q) / 2 + 2);
    CHECK(rank(g) == 2 * m + 1);
  }
  for (auto p : kC2Grid) {
    const auto g = subfield_expand(build_c2(p));
    CHECK(g.cols() == p * p * (p * p - 1) + 2);
    CHECK(rank(g) == 4);
  }
}

TEST_CASE("closed-form distributions equal brute force over the grid") {
  for (auto [p, m] : kC1Grid) {
    CAPTURE(p);
    CAPTURE(m);
    const auto closed = closed_form_wd_c1(p, m);
    CHECK(closed == weight_distribution(subfield_expand(build_c1(p, m))));
    CHECK(closed.total() == oracle::ipow(p, 2 * m + 1));
  }
  for (auto p : kC2Grid) {
    CAPTURE(p);
    const auto closed = closed_form_wd_c2(p);
    CHECK(closed == weight_distribution(subfield_expand(build_c2(p))));
    CHECK(closed.total() == oracle::ipow(p, 4));
  }
}

TEST_CASE("closed forms on small cases agree with an independent dedup enumeration") {
  for (auto [p, m] : {std::pair{3U, 1U}, {5U, 1U}, {3U, 2U}})
    CHECK(oracle::to_plain(closed_form_wd_c1(p, m)) == oracle::weight_distribution(subfield_expand(build_c1(p, m))));
  for (auto p : {2U, 3U})
    CHECK(oracle::to_plain(closed_form_wd_c2(p)) == oracle::weight_distribution(subfield_expand(build_c2(p))));
}

TEST_CASE("closed forms are well formed beyond the grid") {
  for (auto [p, m] : {std::pair{3U, 4U}, {3U, 5U}, {5U, 3U}, {7U, 2U}, {13U, 1U}, {3U, 10U}}) {
    CAPTURE(p);
    CAPTURE(m);
    const auto wd = closed_form_wd_c1(p, m);
    CHECK(wd.total() == oracle::ipow(p, 2 * m + 1));
    CHECK(wd.counts.rbegin()->first <= wd.n);
    CHECK_NOTHROW(pless_dual_a123(wd, p));
    CHECK(min_distance(wd) == expected_claims(CodeFamily::C1, p, m).primal.d);
  }
  for (auto p : {7U, 11U, 31U}) {
    const auto wd = closed_form_wd_c2(p);
    CHECK(wd.total() == oracle::ipow(p, 4));
    CHECK_NOTHROW(pless_dual_a123(wd, p));
  }
}

TEST_CASE("parameter-space enumeration of the families") {
  const auto spec = family_spec(CodeFamily::C2, 3, 2);
  std::map<std::vector<std::uint32_t>, int> seen;
  const auto tuples = enumerate_family_codewords(spec, [&](std::span<const std::uint32_t> w) {
    ++seen[std::vector<std::uint32_t>(w.begin(), w.end())];
  });
  CHECK(tuples == 243);
  CHECK(seen.size() == 81);
  for (const auto& [w, c] : seen) CHECK(c == 3);
  std::set<std::vector<std::uint32_t>> words;
  for (const auto& [w, c] : seen) words.insert(w);
  std::set<std::vector<std::uint32_t>> rows;
  for_each_codeword(subfield_expand(build_c2(3)),
                    [&](std::span<const std::uint32_t> w) { rows.emplace(w.begin(), w.end()); });
  CHECK(words == rows);

  std::set<std::vector<std::uint32_t>> c1;
  CHECK(enumerate_family_codewords(family_spec(CodeFamily::C1, 3, 1),
                                   [&](std::span<const std::uint32_t> w) { c1.emplace(w.begin(), w.end()); }) == 27);
  CHECK(c1.size() == 27);

  std::uint64_t visits = 0;
  CHECK(trace_code_enumerate(build_c1(3, 1), [&](auto) { ++visits; }) == 27);
  CHECK(visits == 27);
  CHECK_THROWS_AS(enumerate_family_codewords(spec, [](auto) {}, 200), BudgetExceeded);
}

TEST_CASE("claims") {
  const auto c11 = expected_claims(CodeFamily::C1, 3, 1);
  CHECK(c11.primal.n == 8);
  CHECK(c11.primal.k == 3);
  CHECK(c11.primal.d == 4);
  CHECK(c11.dual.k == 5);
  CHECK(c11.dual.d == 3);
  CHECK(c11.dual_flags.almost_mds);
  CHECK(c11.dual_flags.dimension_optimal);

  const auto c12 = expected_claims(CodeFamily::C1, 3, 2);
  CHECK(c12.primal.d == 18);
  CHECK(c12.dual.k == 42);
  CHECK(c12.dual_flags.dimension_optimal);
  CHECK_FALSE(c12.dual_flags.almost_mds);

  const auto c22 = expected_claims(CodeFamily::C2, 2, 2);
  CHECK(c22.primal.d == 1);
  CHECK(c22.dual.k == 10);
  CHECK(c22.dual_flags.names().empty());

  const auto c23 = expected_claims(CodeFamily::C2, 3, 2);
  CHECK(c23.primal.n == 74);
  CHECK(c23.primal.d == 37);
  CHECK(c23.dual.d == 2);
  CHECK(c23.dual_flags.distance_optimal);
}

TEST_CASE("claims agree with the dual report over the grid") {
  auto check = [](const ClaimSet& claims) {
    const auto wd = weight_distribution(subfield_expand(build_family(claims.spec)));
    CHECK(min_distance(wd) == claims.primal.d);
    CHECK(wd.k == claims.primal.k);
    const auto rep = dual_report(wd);
    CHECK(rep.k_dual == claims.dual.k);
    CHECK(rep.d_perp == claims.dual.d);
    CHECK(rep.flags.contains(claims.dual_flags));
  };
  for (auto [p, m] : kC1Grid) check(expected_claims(CodeFamily::C1, p, m));
  for (auto p : kC2Grid) check(expected_claims(CodeFamily::C2, p, 2));
}

TEST_CASE("moments agree with the dual search over the grid") {
  auto check = [](const CodeFamilySpec& spec) {
    CAPTURE(spec.p);
    CAPTURE(spec.m);
    const auto g = subfield_expand(build_family(spec));
    const auto moments = pless_dual_a123(weight_distribution(g), spec.p);
    CHECK(moments.a1 == low_weight_dual_count(g, 1));
    CHECK(moments.a2 == low_weight_dual_count(g, 2));
    CHECK(moments.a3 == low_weight_dual_count(g, 3));
    if (g.cols() <= 80) CHECK(moments.a3 == oracle::dual_weight_count(g, 3));
  };
  for (auto [p, m] : kC1Grid) check(family_spec(CodeFamily::C1, p, m));
  for (auto p : kC2Grid) check(family_spec(CodeFamily::C2, p, 2));
}
