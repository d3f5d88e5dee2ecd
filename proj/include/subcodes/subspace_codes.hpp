#pragma once

// Constant-dimension subspace codes: lifted rank-metric codes, spreads,
// orbit codes of Sidon spaces and the block-matrix enlargement of the lifted
// Gabidulin code, plus the closed-form cardinalities attached to them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcodes/bigint.hpp"
#include "subcodes/gf.hpp"
#include "subcodes/linalg.hpp"
#include "subcodes/metrics.hpp"
#include "subcodes/provenance.hpp"
#include "subcodes/rank_metric.hpp"

namespace subcodes {

struct SubspaceCode {
  std::uint32_t q = 2;
  std::size_t ambient = 0;
  std::vector<Subspace> members;
  std::optional<std::size_t> constant_dim;
  std::size_t declared_distance = 0;
  Provenance provenance;

  std::size_t size() const { return members.size(); }
};

/// Validates ambient and distinctness; sets constant_dim when all members agree.
SubspaceCode make_subspace_code(std::uint32_t q, std::size_t ambient, std::vector<Subspace> members,
                                std::size_t declared_distance, Provenance provenance = {});

MetricReport subspace_code_min_distance(const SubspaceCode& code, SearchLimits limits = {});

/// Row spaces of (I | A) for every member A.
SubspaceCode lift_rank_code(const RankCode& code);

/// The F_{q^{k+1}}-lines of F_{q^{n+1}}: a partition of the nonzero vectors
/// of F_q^{n+1} into (k+1)-dimensional subspaces.
SubspaceCode spread(std::uint32_t q, std::size_t k_plus_1, std::size_t n_plus_1);

/// Multiplication by x as a map on subspaces of F_{q^n} = F_q^n.
Subspace scale_subspace(const Field& field, const Subspace& v, FieldElement x);

bool sidon_check(const Field& field, const Subspace& v, std::uint64_t max_elements = std::uint64_t{1} << 16);
/// First k-dimensional Sidon space in enumeration order; requires 2k < n.
std::optional<Subspace> sidon_search(const Field& field, std::size_t k);
/// {x V : x != 0} with duplicates removed, in order of first appearance.
SubspaceCode orbit_cyclic_code(const Field& field, const Subspace& v);

struct BlockEnlargedOptions {
  /// Use only G = I, which reproduces the lifted Gabidulin code.
  bool identity_only = false;
  /// Run the exhaustive sweeps that fit within `limits`.
  bool verify = true;
  SearchLimits limits;
  MaterializeLimits materialize;
};

struct BlockEnlargedFamily {
  /// Distinct row spaces of (G | G A).
  SubspaceCode code;
  /// The n rows of (G | G A) read as elements of F_{q^{2n}}, one word per (G, A).
  VectorCode words;
  std::vector<FieldElement> h2_elements{};
  std::size_t h1_count = 0;
  std::size_t g_count = 0;
  std::size_t a_count = 0;
  BigRational formula{};
  std::optional<MetricReport> subspace_report{};
  std::optional<MetricReport> word_subset_report{};
  std::optional<MetricReport> word_subspace_report{};
};

/// G = [[I, H1], [0, H2]] with H2 a multiplication matrix of F_{q^{n/2}}
/// (greedy, no two chosen matrices share a row) and H1 taken from
/// Gabidulin(q, n/2, t - n/2); A runs over Gabidulin(q, n, t).
BlockEnlargedFamily block_enlarged_family(const Field& field, std::size_t t, BlockEnlargedOptions options = {});

enum class CardinalityFormula { thm7_1, cor7_1, cor7_2, thm7_2 };

struct CardinalityParams {
  std::uint32_t q = 2;
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t s = 0;
};

struct CardinalityResult {
  BigRational value;
  bool integral = true;
  std::vector<std::string> warnings;
};

CardinalityFormula parse_cardinality_formula(const std::string& name);
std::string to_string(CardinalityFormula f);
CardinalityResult cardinality_calculator(CardinalityFormula formula, const CardinalityParams& params);

}  // namespace subcodes
