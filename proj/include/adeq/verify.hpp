#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adeq/semigroup.hpp"

namespace adeq {

struct ReportRow {
  std::string check;
  std::string anchor;
  bool pass = false;
  std::string witness;  // nonempty on failure
};

struct VerificationReport {
  std::string instance;
  std::vector<ReportRow> rows;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

// Runs every applicable check on (S, S0) and returns one row per anchor.
// Rows whose hypotheses are absent (quasi-ideal, left adequate, regular)
// pass vacuously; when the transversal analysis itself fails the report
// contains a single failing row carrying the error.
VerificationReport run_verification_suite(const FiniteSemigroup& s,
                                          const ElementSubset& s0,
                                          const std::string& instance = "");

// The fixed instance set driven by `corpus run`: at least 15 named
// semigroups of orders 1 through 27 spanning bands, groups, inverse and
// non-regular cases.
std::vector<std::pair<std::string, FiniteSemigroup>> builtin_corpus();

// Runs search_transversals on each corpus instance and the verification
// suite on every transversal found, in deterministic order.
std::vector<VerificationReport> run_corpus(int max_generators = 2);

std::string report_to_text(const VerificationReport& report);
// The schema is an array of {check, anchor, pass, witness} objects.
std::string report_to_json(const VerificationReport& report);
std::string reports_to_text(const std::vector<VerificationReport>& reports);
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace adeq
