#pragma once

// Distances between words over F_{q^n} and exhaustive code-level minima.
//
// Hamming and insdel distances depend on coordinate positions; subspace and
// subset distances only look at the symbol sets (through their F_q-span for
// the subspace distance). The r-th variants fold words into blocks of r
// symbols first, padding the last block with zeros.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcodes/gf.hpp"
#include "subcodes/linalg.hpp"
#include "subcodes/provenance.hpp"

namespace subcodes {

struct Word {
  Field field;
  std::vector<FieldElement> symbols;

  std::size_t size() const { return symbols.size(); }
  friend bool operator==(const Word& a, const Word& b) { return a.symbols == b.symbols && a.field == b.field; }
};

struct FoldedWord {
  std::size_t block_len = 1;
  std::vector<std::vector<FieldElement>> blocks;

  friend bool operator==(const FoldedWord&, const FoldedWord&) = default;
};

using FieldMatrix = std::vector<std::vector<FieldElement>>;

struct VectorCode {
  Field field;
  std::size_t length = 0;
  std::vector<Word> codewords{};
  /// k x length generator over the alphabet field, present for linear codes.
  std::optional<FieldMatrix> generator{};
  Provenance provenance{};

  std::size_t size() const { return codewords.size(); }
  bool linear() const { return generator.has_value(); }
};

/// Validates equal lengths and drops repeated words (first occurrence wins).
VectorCode make_vector_code(const Field& field, std::size_t length, std::vector<Word> words,
                            Provenance provenance = {});
/// All message * generator words, messages in lexicographic order.
VectorCode linear_code(const Field& field, const FieldMatrix& generator, Provenance provenance = {});
/// Rank of a matrix over the alphabet field.
std::size_t field_rank(const Field& field, const FieldMatrix& m);
bool is_codeword(const VectorCode& code, const std::vector<FieldElement>& word);

struct Metric {
  enum class Kind { hamming, insdel, subspace, subset };
  Kind kind = Kind::hamming;
  /// Fold length r; 1 means the plain distance.
  std::size_t block_len = 1;

  std::string name() const;
  static Metric parse(const std::string& name, std::size_t block_len = 1);
};

struct MetricReport {
  std::string metric;
  std::size_t min = 0;
  std::size_t witness_i = 0;
  std::size_t witness_j = 0;
  std::uint64_t pairs = 0;

  std::string csv() const;
};

struct SearchLimits {
  std::uint64_t max_pairs = 10'000'000;
  bool force = false;
};

std::size_t hamming_distance(const Word& a, const Word& b);
std::size_t lcs_length(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b);
std::size_t insdel_distance(const Word& a, const Word& b);
Subspace symbol_span(const Word& w);
std::size_t subspace_distance(const Word& a, const Word& b);
std::size_t subset_distance(const Word& a, const Word& b);

FoldedWord fold(const Word& a, std::size_t block_len);
std::size_t r_subspace_distance(const Word& a, const Word& b, std::size_t r);
std::size_t r_subset_distance(const Word& a, const Word& b, std::size_t r);

/// Distances on already folded words; blocks are read as vectors in F_q^{n r}.
std::size_t folded_subspace_distance(const Field& field, const FoldedWord& a, const FoldedWord& b);
std::size_t folded_subset_distance(const FoldedWord& a, const FoldedWord& b);

std::size_t distance(const Word& a, const Word& b, const Metric& metric);

/// Exact minimum over all unordered pairs i < j; the witness is the first
/// minimizing pair in (i, j) order.
template <class Dist>
MetricReport min_over_pairs(std::string name, std::size_t count, Dist&& dist, SearchLimits limits);

MetricReport code_min_distance(const VectorCode& code, const Metric& metric, SearchLimits limits = {});

/// d_1 < ... < d_k by enumerating every r-dimensional subcode.
std::vector<std::size_t> generalized_hamming_weights(const VectorCode& code,
                                                     std::uint64_t max_subcodes = 1'000'000);

}  // namespace subcodes

#include "subcodes/detail/min_over_pairs.hpp"
