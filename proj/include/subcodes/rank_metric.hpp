#pragma once

// Rank-metric codes built from linearized (q-)polynomials.
//
// A member a_0 x + a_1 x^q + ... + a_t x^{q^t} acts on the source field
// F_{q^k}; its coefficients live in the target field F_{q^{k+h}}, reached
// through the coordinate embedding. Square codes use source == target.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "subcodes/bigint.hpp"
#include "subcodes/gf.hpp"
#include "subcodes/matrix.hpp"
#include "subcodes/metrics.hpp"
#include "subcodes/provenance.hpp"

namespace subcodes {

struct LinearizedPoly {
  /// a_0, ..., a_t.
  std::vector<FieldElement> coeffs;

  std::size_t q_degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_zero() const;
  friend bool operator==(const LinearizedPoly&, const LinearizedPoly&) = default;
};

/// Sum a_i * x^{q^i} with x and the coefficients in the same field.
FieldElement linearized_eval(const Field& field, const LinearizedPoly& p, FieldElement x);
/// n x n matrix over F_q; row i is the image of basis_i.
FqMatrix poly_to_matrix(const Field& field, const LinearizedPoly& p);

struct RankCode {
  Field source;
  Field target;
  std::size_t t = 0;
  std::vector<LinearizedPoly> members;
  /// Used instead of `members` for codes given directly as matrices.
  std::vector<FqMatrix> explicit_members;
  std::size_t declared_distance = 0;
  bool linear = false;
  Provenance provenance;

  std::size_t size() const { return members.empty() ? explicit_members.size() : members.size(); }
  std::size_t rows() const;
  std::size_t cols() const;
  bool square() const { return source == target; }
  /// Evaluates member i at x in the source field (result in the target).
  FieldElement eval(std::size_t i, FieldElement x) const;
  FqMatrix matrix(std::size_t i) const;
};

RankCode make_explicit_rank_code(const Field& field, std::vector<FqMatrix> matrices, bool linear = false);

struct MaterializeLimits {
  std::uint64_t max_members = std::uint64_t{1} << 22;
};

/// All q-polynomials of q-degree at most t over F_{q^n} (q^{n(t+1)} members).
RankCode gabidulin_code(const Field& field, std::size_t t, MaterializeLimits limits = {});
/// Maps F_{q^k} -> F_{q^{k+h}} of the form sum a_i phi(x^{q^i}).
RankCode gabidulin_rect(const Field& src, const Field& dst, std::size_t t, MaterializeLimits limits = {});

FqMatrix matrix_sub(const FqMatrix& a, const FqMatrix& b);

/// Linear codes: min rank over nonzero members. Otherwise min rank(A - B).
std::size_t rank_distance_of_code(const RankCode& code, SearchLimits limits = {});

BigInt mrd_bound(std::uint32_t q, std::size_t rows, std::size_t cols, std::size_t d);
bool mrd_check(const RankCode& code, std::size_t rows, std::size_t cols, std::size_t d);
/// mrd_check against the code's own shape and verified rank distance.
bool is_mrd(const RankCode& code);

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t q);

struct RankDistribution {
  std::vector<BigInt> counts;

  BigInt total() const;
  friend bool operator==(const RankDistribution&, const RankDistribution&) = default;
};

/// Rank distribution of an n x n MRD code with rank distance d.
RankDistribution delsarte_rank_distribution(std::size_t n, std::size_t d, std::uint32_t q);
RankDistribution empirical_rank_distribution(const RankCode& code, MaterializeLimits limits = {});

}  // namespace subcodes
