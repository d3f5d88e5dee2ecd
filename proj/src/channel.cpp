#include "subcodes/channel.hpp"

#include <limits>

#include "subcodes/error.hpp"

namespace subcodes {

Word apply_channel(const Word& w, std::size_t insertions, std::size_t deletions, Rng& rng) {
  require(deletions <= w.size(), ErrorCode::TooManyDeletions,
          "cannot delete " + std::to_string(deletions) + " symbols from a word of length " + std::to_string(w.size()));
  Word out = w;
  auto& s = out.symbols;
  for (std::size_t i = 0; i < deletions; ++i) s.erase(s.begin() + static_cast<std::ptrdiff_t>(rng.below(s.size())));
  for (std::size_t i = 0; i < insertions; ++i) {
    const auto pos = rng.below(s.size() + 1);
    const auto sym = w.field.from_index(rng.below(w.field.order()));
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), sym);
  }
  return out;
}

Word apply_channel(const Word& w, const ChannelSpec& spec) {
  Rng rng(spec.seed);
  return apply_channel(w, spec.insertions, spec.deletions, rng);
}

DecodeResult decode_nearest(const VectorCode& code, const Word& received) {
  DecodeResult best{std::nullopt, std::numeric_limits<std::size_t>::max()};
  bool tied = false;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& cw = code.codewords[i].symbols;
    const std::size_t d = cw.size() + received.size() - 2 * lcs_length(cw, received.symbols);
    if (d < best.distance) {
      best = {i, d};
      tied = false;
    } else if (d == best.distance) {
      tied = true;
    }
  }
  if (tied) best.index.reset();
  return best;
}

std::size_t correction_capability(std::size_t d_insdel) { return d_insdel == 0 ? 0 : (d_insdel + 1) / 2 - 1; }

std::string to_string(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::ok: return "ok";
    case TrialOutcome::wrong: return "wrong";
    case TrialOutcome::ambiguous: return "ambiguous";
  }
  return "?";
}

double TrialReport::success_rate() const {
  return records.empty() ? 1.0 : static_cast<double>(successes) / static_cast<double>(records.size());
}

std::string TrialReport::transcript_csv(const ChannelSpec& spec) const {
  std::string out = "trial,seed,ins,del,result\n";
  for (const auto& r : records) {
    out += std::to_string(r.trial) + ',' + std::to_string(r.seed) + ',' + std::to_string(spec.insertions) + ',' +
           std::to_string(spec.deletions) + ',' + to_string(r.result) + '\n';
  }
  return out;
}

TrialReport run_trials(const VectorCode& code, const ChannelSpec& spec, std::size_t trials) {
  require(code.size() >= 1 || trials == 0, ErrorCode::EmptySet, "code has no codewords");
  TrialReport report;
  report.records.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    TrialRecord rec{i, spec.seed + i};
    Rng rng(rec.seed);
    rec.codeword = static_cast<std::size_t>(rng.below(code.size()));
    const Word received = apply_channel(code.codewords[rec.codeword], spec.insertions, spec.deletions, rng);
    const auto decoded = decode_nearest(code, received);
    if (decoded.ambiguous()) {
      rec.result = TrialOutcome::ambiguous;
      ++report.ambiguous;
    } else if (*decoded.index == rec.codeword) {
      ++report.successes;
    } else {
      rec.result = TrialOutcome::wrong;
      ++report.wrong;
    }
    report.records.push_back(rec);
  }
  return report;
}

}  // namespace subcodes
