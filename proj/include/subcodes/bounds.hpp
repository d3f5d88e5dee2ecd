#pragma once

// Closed-form code bounds and the zero-distance witness for high-rate
// linear codes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subcodes/bigint.hpp"
#include "subcodes/metrics.hpp"

namespace subcodes {

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  BigInt value;
  /// The measured quantity the bound was compared with, if any.
  std::optional<BigInt> observed{};
  /// "<=" or ">=": how observed must relate to value.
  std::string relation = "<=";
  std::optional<bool> satisfied{};

  BoundReport& compare(BigInt measured, std::string rel = "<=");
};

BoundReport singleton_bound(std::size_t n, std::size_t d, std::uint64_t q, Metric::Kind metric);
std::size_t half_singleton(std::size_t n, std::size_t k);

struct StrongHalfSingleton {
  /// min_r 2(d_r - 2r + 2)
  std::int64_t doubled = 0;
  /// min_r (d_r - 2r + 2)
  std::int64_t plain = 0;
};
StrongHalfSingleton strong_half_singleton(const std::vector<std::size_t>& ghw);

BigInt levenshtein_bound(std::size_t n, std::uint64_t q);
BigInt klo_bound(std::uint64_t q);

/// Parity-check matrix over the alphabet field: rows span the dual of the generator.
FieldMatrix parity_check(const Field& field, const FieldMatrix& generator);
/// A nonzero codeword whose left cyclic shift is again a codeword.
Word cyclic_shift_witness(const VectorCode& code);
Word left_shift(const Word& w);

struct BoundsVerification {
  std::size_t d_hamming = 0;
  std::size_t d_subspace = 0;
  std::size_t d_subset = 0;
  std::size_t d_insdel = 0;
  bool chain_holds = false;
  std::vector<BoundReport> bounds;
  /// Violated bounds and other discrepancies worth a human look.
  std::vector<std::string> findings;
};

BoundsVerification verify_bounds(const VectorCode& code, SearchLimits limits = {});

}  // namespace subcodes
