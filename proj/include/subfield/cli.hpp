#pragma once

// `subfield-codes` front end: argument handling, report rendering and the
// closed-form-versus-enumeration verification run.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "subfield/char_sums.hpp"
#include "subfield/constructions.hpp"

namespace subfield::cli {

enum class Format { table, json, csv };

enum ExitCode : int {
  kSuccess = 0,
  kMismatch = 1,
  kArgumentError = 2,
  kBudgetExceeded = 3,
};

struct RunConfig {
  std::string command;
  CodeFamily family = CodeFamily::C1;
  bool family_given = false;
  std::uint32_t p = 0;
  std::uint32_t m = 0;  // 0: family default
  Format format = Format::table;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyReport {
  CodeFamilySpec spec;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Builds the family, enumerates its subfield code and checks every claim.
VerifyReport verify(const CodeFamilySpec& spec, const EnumerationOptions& options = {});

struct GaussReport {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  ComplexValue closed;
  ComplexValue numeric;
};

std::string emit(const WeightDistribution& wd, const CodeFamilySpec& spec, Format format);
std::string emit(const DualReport& report, Format format);
std::string emit(const ClaimSet& claims, Format format);
std::string emit(const VerifyReport& report, Format format);
std::string emit(const GaussReport& report, Format format);
std::string emit(const FiniteField& field, Format format);

/// Runs one command; `args` excludes the program name. Returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace subfield::cli
