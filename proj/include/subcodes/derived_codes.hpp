#pragma once

// Codes over extension-field alphabets derived from subspace codes and from
// difference sets in F_{2^n}^*.

#include <cstddef>
#include <vector>

#include "subcodes/gf.hpp"
#include "subcodes/metrics.hpp"
#include "subcodes/provenance.hpp"
#include "subcodes/subspace_codes.hpp"

namespace subcodes {

struct DifferenceSet {
  Field field;
  std::vector<FieldElement> members;
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
};

struct FoldedCode {
  Field field;
  std::size_t block_len = 1;
  std::vector<FoldedWord> codewords{};
  Provenance provenance{};

  std::size_t size() const { return codewords.size(); }
};

/// Field F_{q^N} whose coordinates match the ambient space of `sc`.
Field span_field(const SubspaceCode& sc);

/// RREF rows of each member, padded to length l with pairwise sums
/// b_i + b_j (i < j) and then the rows again.
VectorCode span_code(const SubspaceCode& sc, std::size_t l);
/// First l RREF rows of each member; needs t + 1 <= l <= k where the
/// declared distance is 2k - 2t.
VectorCode partial_span_code(const SubspaceCode& sc, std::size_t l);
/// First l vectors of each member: nonzero vectors in lexicographic order,
/// then zero.
VectorCode all_vectors_code(const SubspaceCode& sc, std::size_t l, std::uint64_t max_vectors = 1U << 16);
/// The guaranteed insdel distance 2(l - q^{k - d/2}) of an all-vectors code.
std::size_t all_vectors_guarantee(const SubspaceCode& sc, std::size_t l);

/// Trace-zero elements of F_{2^n}, checked to be a difference set.
DifferenceSet singer_difference_set(const Field& field);
/// Intersection size |yD n D| for every y != 0, 1.
std::vector<std::size_t> translate_intersections(const Field& field, const std::vector<FieldElement>& d);
/// max |yD n D| over y != 1.
std::size_t m_of_D(const Field& field, const std::vector<FieldElement>& d);
/// Verifies all translates meet D in exactly lambda points.
bool is_difference_set(const Field& field, const std::vector<FieldElement>& d, std::size_t lambda);

/// One codeword (w x_1, ..., w x_D) per nonzero w, each coordinate its own block.
FoldedCode evaluation_folded_code(const Field& field, const std::vector<FieldElement>& d);
FoldedCode folded_code_from_vector_code(const VectorCode& code, std::size_t s);

/// Subspace or subset minimum over the blocks of a folded code.
MetricReport folded_code_min_distance(const FoldedCode& code, Metric::Kind kind, SearchLimits limits = {});

}  // namespace subcodes
