#pragma once

// Property suites run by `subcodes verify`. Failed checks point at bugs;
// findings record places where measured values disagree with published claims.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "subcodes/metrics.hpp"
#include "subcodes/rng.hpp"

namespace subcodes {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  std::vector<std::string> findings;

  bool passed() const;
  void check(std::string name, bool ok, std::string detail = {});
  /// One "PASS|FAIL name: detail" line per check, then "FINDING ..." lines.
  std::string text() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random pairs or triples for the metric suites.
  std::size_t samples = 10'000;
  /// Random codes for the cyclic-shift suite.
  std::size_t codes = 100;
};

const std::vector<std::string>& suite_names();
/// Runs one suite, or every suite for "all".
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

Word random_word(const Field& field, std::size_t length, Rng& rng);
/// Random k x n generator of full rank over `field`.
FieldMatrix random_generator(const Field& field, std::size_t k, std::size_t n, Rng& rng);

}  // namespace subcodes
