#pragma once

#include <limits>
#include <string>

#include "subcodes/error.hpp"

namespace subcodes {

template <class Dist>
MetricReport min_over_pairs(std::string name, std::size_t count, Dist&& dist, SearchLimits limits) {
  require(count >= 2, ErrorCode::TooFewCodewords, "need at least two codewords");
  const std::uint64_t pairs = static_cast<std::uint64_t>(count) * (count - 1) / 2;
  require(limits.force || pairs <= limits.max_pairs, ErrorCode::SearchTooLarge,
          std::to_string(pairs) + " pairs exceed the guard of " + std::to_string(limits.max_pairs));
  MetricReport report{std::move(name), std::numeric_limits<std::size_t>::max(), 0, 0, pairs};
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const std::size_t d = dist(i, j);
      if (d < report.min) {
        report.min = d;
        report.witness_i = i;
        report.witness_j = j;
      }
    }
  }
  return report;
}

}  // namespace subcodes
