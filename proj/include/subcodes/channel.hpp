#pragma once

// Random insertion/deletion channel and an exhaustive nearest-codeword decoder.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcodes/metrics.hpp"
#include "subcodes/rng.hpp"

namespace subcodes {

struct ChannelSpec {
  std::size_t insertions = 0;
  std::size_t deletions = 0;
  std::uint64_t seed = 0;
};

/// Deletions at uniform positions first, then insertions of uniform symbols
/// at uniform positions.
Word apply_channel(const Word& w, std::size_t insertions, std::size_t deletions, Rng& rng);
Word apply_channel(const Word& w, const ChannelSpec& spec);

struct DecodeResult {
  /// Index of the unique nearest codeword; empty when the minimum is tied.
  std::optional<std::size_t> index;
  std::size_t distance = 0;

  bool ambiguous() const { return !index.has_value(); }
};

DecodeResult decode_nearest(const VectorCode& code, const Word& received);

/// Largest e with 2e < d.
std::size_t correction_capability(std::size_t d_insdel);

enum class TrialOutcome { ok, wrong, ambiguous };
std::string to_string(TrialOutcome o);

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t codeword = 0;
  TrialOutcome result = TrialOutcome::ok;
};

struct TrialReport {
  std::vector<TrialRecord> records;
  std::size_t successes = 0;
  std::size_t wrong = 0;
  std::size_t ambiguous = 0;

  double success_rate() const;
  /// trial,seed,ins,del,result rows with a header line.
  std::string transcript_csv(const ChannelSpec& spec) const;
};

/// Trial i uses seed spec.seed + i to pick the codeword and drive the channel.
TrialReport run_trials(const VectorCode& code, const ChannelSpec& spec, std::size_t trials);

}  // namespace subcodes
