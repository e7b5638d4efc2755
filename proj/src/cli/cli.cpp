#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "subfield/cli.hpp"
#include "subfield/dual.hpp"
#include "subfield/errors.hpp"

namespace subfield::cli {

namespace {

const std::vector<std::string> kCommands{"wd", "verify", "dual", "claims", "gauss", "field-info"};

bool needs_family(const std::string& command) { return command != "gauss" && command != "field-info"; }

std::uint32_t default_m(const RunConfig& cfg) {
  if (cfg.m != 0) return cfg.m;
  return needs_family(cfg.command) && cfg.family == CodeFamily::C2 ? 2 : 1;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  const std::uint32_t m = default_m(cfg);
  if (cfg.command == "field-info") {
    out << emit(make_field(cfg.p, m), cfg.format);
    return kSuccess;
  }
  if (cfg.command == "gauss") {
    const FiniteField f = make_field(cfg.p, m);
    if (cfg.p == 2) throw std::invalid_argument("gauss requires odd p");
    out << emit(GaussReport{cfg.p, m, gauss_sum_closed(f), gauss_sum_numeric(f)}, cfg.format);
    return kSuccess;
  }

  if (!cfg.family_given) throw std::invalid_argument("--family is required for " + cfg.command);
  const CodeFamilySpec spec = family_spec(cfg.family, cfg.p, m);
  const EnumerationOptions opts{cfg.budget, cfg.threads};
  if (cfg.command == "wd") {
    out << emit(closed_form_wd(spec), spec, cfg.format);
    return kSuccess;
  }
  if (cfg.command == "dual") {
    out << emit(dual_report(closed_form_wd(spec)), cfg.format);
    return kSuccess;
  }
  if (cfg.command == "claims") {
    out << emit(expected_claims(spec.family, spec.p, spec.m), cfg.format);
    return kSuccess;
  }
  const VerifyReport report = verify(spec, opts);
  out << emit(report, cfg.format);
  return report.passed() ? kSuccess : kMismatch;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subfield codes of two families of linear codes over GF(p^m)", "subfield-codes"};
  RunConfig cfg;
  std::string family;
  const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};

  app.add_option("command", cfg.command, "wd | verify | dual | claims | gauss | field-info")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--family", family, "c1 or c2")->check(CLI::IsMember({"c1", "c2"}));
  app.add_option("--p", cfg.p, "prime characteristic")->required();
  app.add_option("--m", cfg.m, "extension degree")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "table, json or csv")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--budget", cfg.budget, "enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads, 0 for all cores");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kArgumentError;
  }
  cfg.family_given = !family.empty();
  if (cfg.family_given) cfg.family = family == "c1" ? CodeFamily::C1 : CodeFamily::C2;

  try {
    return dispatch(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  }
}

}  // namespace subfield::cli
