#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "subfield/cli.hpp"

namespace subfield::cli {

namespace {

using nlohmann::json;

// Integers above 2^53 are emitted as decimal strings so JSON consumers that
// parse numbers as doubles stay exact.
json json_number(const BigInt& v) {
  static const BigInt kExactLimit = BigInt(1) << 53;
  if (v <= kExactLimit && v >= -kExactLimit) return static_cast<std::int64_t>(v);
  return v.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

std::string title_of(const CodeFamilySpec& spec) {
  std::string t = spec.family == CodeFamily::C1 ? "C1" : "C2";
  return t + " p=" + std::to_string(spec.p) + " m=" + std::to_string(spec.m);
}

// Two-column key/value layout shared by the table renderings.
std::string key_value_table(const std::string& title, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  if (!title.empty()) os << title << "\n";
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return os.str();
}

std::string key_value_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [k, v] : rows) os << k << "," << v << "\n";
  return os.str();
}

json weights_json(const WeightDistribution& wd) {
  json arr = json::array();
  for (const auto& [w, c] : wd.counts) arr.push_back({{"w", w}, {"count", json_number(c)}});
  return arr;
}

std::string weight_table(const WeightDistribution& wd) {
  std::size_t ww = std::string("Weight").size(), cw = std::string("Multiplicity").size();
  for (const auto& [w, c] : wd.counts) {
    ww = std::max(ww, std::to_string(w).size());
    cw = std::max(cw, c.str().size());
  }
  std::ostringstream os;
  os << std::right << std::setw(static_cast<int>(ww)) << "Weight" << "  " << std::setw(static_cast<int>(cw))
     << "Multiplicity" << "\n";
  for (const auto& [w, c] : wd.counts)
    os << std::setw(static_cast<int>(ww)) << w << "  " << std::setw(static_cast<int>(cw)) << c.str() << "\n";
  return os.str();
}

std::string weight_csv(const WeightDistribution& wd) {
  std::ostringstream os;
  os << "weight,count\n";
  for (const auto& [w, c] : wd.counts) os << w << "," << c.str() << "\n";
  return os.str();
}

std::string d_perp_text(const DualReport& r) { return r.d_perp ? std::to_string(*r.d_perp) : "ge4"; }

std::string params(const CodeParameters& c) {
  return "[" + std::to_string(c.n) + ", " + std::to_string(c.k) + ", " + std::to_string(c.d) + "]";
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace

std::string emit(const WeightDistribution& wd, const CodeFamilySpec& spec, Format format) {
  const auto d = min_distance(wd);
  if (format == Format::json) {
    json j{{"family", to_string(spec.family)},
           {"p", spec.p},
           {"m", spec.m},
           {"n", wd.n},
           {"k", wd.k},
           {"d", d ? json(*d) : json(nullptr)},
           {"weights", weights_json(wd)}};
    return dump(j);
  }
  if (format == Format::csv) return weight_csv(wd);
  std::ostringstream os;
  os << title_of(spec) << ": [" << wd.n << ", " << wd.k << ", " << (d ? std::to_string(*d) : "-") << "]\n";
  os << weight_table(wd);
  return os.str();
}

std::string emit(const DualReport& r, Format format) {
  if (format == Format::json) {
    json j{{"n", r.n},
           {"k_dual", r.k_dual},
           {"A1", json_number(r.counts.a1)},
           {"A2", json_number(r.counts.a2)},
           {"A3", json_number(r.counts.a3)},
           {"d_perp", r.d_perp ? json(*r.d_perp) : json("ge4")},
           {"flags", r.flags.names()}};
    return dump(j);
  }
  const std::vector<std::pair<std::string, std::string>> rows{
      {"n", std::to_string(r.n)},        {"k_dual", std::to_string(r.k_dual)}, {"A1", r.counts.a1.str()},
      {"A2", r.counts.a2.str()},         {"A3", r.counts.a3.str()},            {"d_perp", d_perp_text(r)},
      {"flags", join(r.flags.names(), format == Format::csv ? ";" : " ")}};
  return format == Format::csv ? key_value_csv(rows) : key_value_table("Dual code", rows);
}

std::string emit(const ClaimSet& c, Format format) {
  if (format == Format::json) {
    json j{{"family", to_string(c.spec.family)},
           {"p", c.spec.p},
           {"m", c.spec.m},
           {"primal", {{"n", c.primal.n}, {"k", c.primal.k}, {"d", c.primal.d}}},
           {"dual", {{"n", c.dual.n}, {"k", c.dual.k}, {"d", c.dual.d}}},
           {"dual_flags", c.dual_flags.names()},
           {"weights", weights_json(c.weights)}};
    return dump(j);
  }
  if (format == Format::csv) {
    std::vector<std::pair<std::string, std::string>> rows{
        {"n", std::to_string(c.primal.n)},      {"k", std::to_string(c.primal.k)},
        {"d", std::to_string(c.primal.d)},      {"k_dual", std::to_string(c.dual.k)},
        {"d_dual", std::to_string(c.dual.d)},   {"dual_flags", join(c.dual_flags.names(), ";")}};
    for (const auto& [w, cnt] : c.weights.counts) rows.emplace_back("A" + std::to_string(w), cnt.str());
    return key_value_csv(rows);
  }
  std::ostringstream os;
  os << key_value_table("Claims for " + title_of(c.spec),
                        {{"n", std::to_string(c.primal.n)},
                         {"k", std::to_string(c.primal.k)},
                         {"d", std::to_string(c.primal.d)},
                         {"code", params(c.primal)},
                         {"dual", params(c.dual)},
                         {"dual flags", join(c.dual_flags.names(), " ")}});
  os << weight_table(c.weights);
  return os.str();
}

std::string emit(const VerifyReport& r, Format format) {
  if (format == Format::json) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
    json j{{"family", to_string(r.spec.family)},
           {"p", r.spec.p},
           {"m", r.spec.m},
           {"checks", checks},
           {"status", r.passed() ? "pass" : "fail"}};
    return dump(j);
  }
  std::ostringstream os;
  if (format == Format::csv) {
    os << "check,expected,computed,status\n";
    for (const auto& c : r.checks)
      os << c.name << ",\"" << c.expected << "\",\"" << c.computed << "\"," << (c.pass ? "pass" : "fail") << "\n";
    return os.str();
  }
  std::size_t nw = 5, ew = 8, cw = 8;
  for (const auto& c : r.checks) {
    nw = std::max(nw, c.name.size());
    ew = std::max(ew, c.expected.size());
    cw = std::max(cw, c.computed.size());
  }
  os << "Verification of " << title_of(r.spec) << "\n" << std::left;
  os << std::setw(static_cast<int>(nw) + 2) << "check" << std::setw(static_cast<int>(ew) + 2) << "expected"
     << std::setw(static_cast<int>(cw) + 2) << "computed" << "status\n";
  for (const auto& c : r.checks)
    os << std::setw(static_cast<int>(nw) + 2) << c.name << std::setw(static_cast<int>(ew) + 2) << c.expected
       << std::setw(static_cast<int>(cw) + 2) << c.computed << (c.pass ? "pass" : "fail") << "\n";
  os << "overall: " << (r.passed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string emit(const GaussReport& g, Format format) {
  const double diff = std::abs(g.closed - g.numeric);
  if (format == Format::json) {
    json j{{"p", g.p},
           {"m", g.m},
           {"closed", {{"re", g.closed.real()}, {"im", g.closed.imag()}}},
           {"numeric", {{"re", g.numeric.real()}, {"im", g.numeric.imag()}}},
           {"abs_diff", diff}};
    return dump(j);
  }
  if (format == Format::csv) {
    std::ostringstream os;
    os << "quantity,re,im\n"
       << "closed," << format_double(g.closed.real()) << "," << format_double(g.closed.imag()) << "\n"
       << "numeric," << format_double(g.numeric.real()) << "," << format_double(g.numeric.imag()) << "\n";
    return os.str();
  }
  auto text = [](ComplexValue z) { return format_double(z.real()) + " + " + format_double(z.imag()) + "i"; };
  return key_value_table("Quadratic Gauss sum over GF(" + std::to_string(g.p) + "^" + std::to_string(g.m) + ")",
                         {{"closed", text(g.closed)}, {"numeric", text(g.numeric)}, {"|difference|", format_double(diff)}});
}

std::string emit(const FiniteField& f, Format format) {
  std::vector<std::uint32_t> modulus(f.modulus().begin(), f.modulus().end());
  const auto gen = f.generator();
  std::string poly;
  for (std::size_t i = modulus.size(); i-- > 0;) {
    if (modulus[i] == 0) continue;
    std::string term;
    if (i == 0 || modulus[i] != 1) term += std::to_string(modulus[i]);
    if (i >= 1) term += "x";
    if (i >= 2) term += "^" + std::to_string(i);
    poly += (poly.empty() ? "" : " + ") + term;
  }
  if (format == Format::json) {
    json j{{"p", f.characteristic()},
           {"m", f.degree()},
           {"q", f.order()},
           {"modulus", modulus},
           {"generator", gen.coeffs()}};
    return dump(j);
  }
  std::vector<std::string> gc;
  for (auto c : gen.coeffs()) gc.push_back(std::to_string(c));
  const std::vector<std::pair<std::string, std::string>> rows{{"q", std::to_string(f.order())},
                                                              {"modulus", poly},
                                                              {"generator", "(" + join(gc, " ") + ")"}};
  return format == Format::csv ? key_value_csv(rows) : key_value_table(f.describe(), rows);
}

}  // namespace subfield::cli
