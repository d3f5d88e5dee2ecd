#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "subcodes/gf.hpp"
#include "subcodes/matrix.hpp"

namespace subcodes {

using FqVector = std::vector<std::uint32_t>;

struct RrefResult {
  FqMatrix matrix;
  std::size_t rank = 0;
};

/// Reduced row echelon form; zero rows are kept at the bottom.
RrefResult rref(const FqMatrix& m);
std::size_t rank(const FqMatrix& m);

/// F_q-linear subspace of F_q^N, stored as its RREF basis (no zero rows).
/// Two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of F_q^ambient.
  Subspace(std::uint32_t q, std::size_t ambient);
  /// Takes a basis that must already be in RREF with no zero rows.
  static Subspace from_rref(FqMatrix basis);

  std::uint32_t q() const { return basis_.q(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FqMatrix& basis() const { return basis_; }

  bool contains(std::span<const std::uint32_t> v) const;
  /// Every vector of the subspace in lexicographic order (zero first).
  std::vector<FqVector> vectors() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Lexicographic on the flattened basis (after ambient and dimension).
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(FqMatrix basis) : basis_(std::move(basis)) {}
  FqMatrix basis_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const;
};

/// Returns true iff `m` is in reduced row echelon form with no zero rows.
bool is_rref_basis(const FqMatrix& m);

Subspace span(std::uint32_t q, std::size_t ambient, const std::vector<FqVector>& vectors);
Subspace row_space(const FqMatrix& m);
Subspace subspace_sum(const Subspace& u, const Subspace& v);
std::size_t subspace_intersection_dim(const Subspace& u, const Subspace& v);
/// dim U + dim V - 2 dim(U cap V).
std::size_t subspace_distance(const Subspace& u, const Subspace& v);
/// Null space {x : m x = 0} inside F_q^{cols}.
Subspace kernel(const FqMatrix& m);

/// Image of the subspace under right multiplication v -> v * m.
Subspace image(const Subspace& s, const FqMatrix& m);

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit);

struct EnumerationLimits {
  /// Guard on q^N.
  std::uint64_t max_space = std::uint64_t{1} << 20;
  /// Guard on the number of subspaces produced.
  std::uint64_t max_count = 5'000'000;
};

/// Every k-dimensional subspace of F_q^N exactly once, ordered
/// lexicographically by flattened RREF basis.
std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::size_t ambient, std::size_t dim,
                                          EnumerationLimits limits = {});

/// Walks every RREF matrix with `dim` rows and `cols` columns whose free
/// entries range over `values` (values[0] is zero) and pivots equal `one`.
/// Visiting order follows pivot sets in lexicographic order, then free
/// entries as an odometer.
template <class T>
void for_each_rref_shape(std::size_t dim, std::size_t cols, const std::vector<T>& values, T one,
                         const std::function<void(const std::vector<T>&)>& visit);

std::vector<FqVector> field_elements_as_vectors(const Field& f, std::span<const FieldElement> elements);
FieldElement vector_as_field_element(const Field& f, std::span<const std::uint32_t> v);

}  // namespace subcodes

#include "subcodes/detail/rref_shape.hpp"
