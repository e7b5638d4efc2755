#include <algorithm>

#include "subfield/cli.hpp"
#include "subfield/dual.hpp"

namespace subfield::cli {

namespace {

void add(VerifyReport& r, std::string name, std::string expected, std::string computed) {
  const bool pass = expected == computed;
  r.checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : " ") + s;
  return out.empty() ? "-" : out;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

VerifyReport verify(const CodeFamilySpec& in, const EnumerationOptions& options) {
  const ClaimSet claims = expected_claims(in.family, in.p, in.m);
  VerifyReport r;
  r.spec = claims.spec;

  const GeneratorMatrix g = subfield_expand(build_family(claims.spec));
  const WeightDistribution brute = weight_distribution(g, options);
  const auto d = min_distance(brute);

  add(r, "length", std::to_string(claims.primal.n), std::to_string(brute.n));
  add(r, "dimension", std::to_string(claims.primal.k), std::to_string(brute.k));
  add(r, "weight_enumerator", claims.weights.enumerator(), brute.enumerator());
  add(r, "min_distance", std::to_string(claims.primal.d), d ? std::to_string(*d) : "-");
  add(r, "dual_dimension", std::to_string(claims.dual.k), std::to_string(brute.n - brute.k));

  // Power moments of the claimed distribution against a direct search of the
  // enumerated code's column dependencies.
  const DualCounts moments = pless_dual_a123(claims.weights, claims.spec.p);
  const BigInt found[3] = {low_weight_dual_count(g, 1, options), low_weight_dual_count(g, 2, options),
                           low_weight_dual_count(g, 3, options)};
  add(r, "dual_A1", moments.a1.str(), found[0].str());
  add(r, "dual_A2", moments.a2.str(), found[1].str());
  add(r, "dual_A3", moments.a3.str(), found[2].str());
  const DualCounts searched{found[0], found[1], found[2]};
  add(r, "power_moments", "hold", power_moments_hold(brute, claims.spec.p, searched) ? "hold" : "fail");

  std::optional<std::uint64_t> d_perp;
  for (unsigned w = 1; w <= 3 && !d_perp; ++w)
    if (found[w - 1] > 0) d_perp = w;
  add(r, "dual_distance", std::to_string(claims.dual.d), d_perp ? std::to_string(*d_perp) : "ge4");

  CodeFlags flags;
  if (d_perp) flags = classify(brute.n, brute.n - brute.k, *d_perp, claims.spec.p);
  CheckResult fc{"dual_flags", join(claims.dual_flags.names()), join(flags.names()), false};
  fc.pass = d_perp.has_value() && flags.contains(claims.dual_flags);
  r.checks.push_back(std::move(fc));
  return r;
}

}  // namespace subfield::cli
