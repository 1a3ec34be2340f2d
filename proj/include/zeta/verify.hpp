#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zeta/json_io.hpp"

namespace zeta {

/// One named identity check inside a suite.  `detail` carries the count of
/// instances verified on success and the first counterexample on failure;
/// it never mentions timing or thread counts, so reports are byte-stable.
struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const SuiteCheck&) const = default;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool pass() const;

  bool operator==(const SuiteReport&) const = default;
};

struct VerifyOptions {
  unsigned threads = 1;
  std::uint64_t budget = 10'000'000;
};

/// Runs a named verification suite: one of mobius, euler, dedekind,
/// hasseweil, cycles, arith, decomp, or all (the seven in that order).
/// Throws UnknownSuiteError for anything else.  Results are independent of
/// opts.threads.
std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyOptions& opts = {});

Json report_to_json(const SuiteReport& r);
Json reports_to_json(const std::vector<SuiteReport>& rs);

}  // namespace zeta
