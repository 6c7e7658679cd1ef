#ifndef PQRS_SUITE_HPP
#define PQRS_SUITE_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pqrs/rational.hpp"

namespace pqrs {

/// Configuration for the batch identity/algebra runner. pNum/qNum pin the
/// sampling point used by numeric diagnostics (the Hermite-type sweep);
/// all polynomial and matrix identities stay fully symbolic regardless.
struct SuiteConfig {
  int nmax = 10;
  int fockNmax = 8;
  std::optional<Rational> pNum;
  std::optional<Rational> qNum;
  std::vector<std::string> suites = {"pqcore", "poly", "ops", "fock"};
  unsigned long long seed = 0;
  bool corruptLadder = false;
};

/// One emitted report line. detail carries the failure residual (or the
/// numeric diagnostic) in canonical text form; report carries the full
/// structured payload.
struct CheckLine {
  std::string suite;
  std::string name;
  std::vector<long long> indices;
  bool pass = false;
  std::string detail;
  nlohmann::json report;
};

/// Runs the selected suites in canonical order (pqcore, poly, ops, fock)
/// and returns one line per identity cell or aggregated random sweep.
/// Deterministic for a fixed config. Two-mode checks run at
/// min(fockNmax, 6).
std::vector<CheckLine> runSuites(const SuiteConfig& cfg);

bool allPass(const std::vector<CheckLine>& lines);

/// "suite,name,indices,status,detail" with indices joined by ';'.
std::string renderCsv(const std::vector<CheckLine>& lines);

/// {"config": ..., "lines": [...], "allPass": bool}
std::string renderJson(const SuiteConfig& cfg, const std::vector<CheckLine>& lines);

}  // namespace pqrs

#endif
