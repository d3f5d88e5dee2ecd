#pragma once

// Arithmetic in F_{q^n} for prime q, as F_q[x]/(modulus).
//
// Elements are stored as a packed index whose base-q digits are the
// coefficient vector with the constant coefficient most significant. Integer
// order on the index is therefore the canonical element order used
// everywhere in the library: lexicographic on (c_0, c_1, ..., c_{n-1}).

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "subcodes/matrix.hpp"

namespace subcodes {

struct FieldElement {
  std::uint64_t index = 0;

  bool is_zero() const { return index == 0; }
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

bool is_prime(std::uint64_t v);

namespace detail {
struct FieldData;
}

/// Immutable handle to F_{q^n}; copies share the same tables.
class Field {
 public:
  /// Builds F_{q^n}. When `modulus` is omitted the lexicographically smallest
  /// (constant term first) monic irreducible of degree n is used.
  static Field create(std::uint32_t q, int n,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Trial division by every monic polynomial of degree 1..deg/2.
  static bool is_irreducible(std::uint32_t q, std::span<const std::uint32_t> poly);

  std::uint32_t q() const;
  int degree() const;
  /// Coefficients constant term first, length degree()+1, monic.
  const std::vector<std::uint32_t>& modulus() const;
  /// q^n.
  std::uint64_t order() const;

  FieldElement zero() const { return {}; }
  FieldElement one() const;
  /// c * 1 for c in F_q.
  FieldElement scalar(std::uint32_t c) const;
  /// x^i in the power basis (coefficient vector e_i).
  FieldElement basis(int i) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  FieldElement from_index(std::uint64_t index) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;
  std::uint32_t coeff(FieldElement a, int i) const;
  /// All elements in canonical order.
  std::vector<FieldElement> elements() const;
  /// First primitive element in canonical order.
  FieldElement primitive() const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::int64_t e) const;

  /// x^{q^i}.
  FieldElement frobenius(FieldElement x, int i) const;
  /// Sum of the n Frobenius conjugates; always lies in F_q.
  std::uint32_t trace(FieldElement x) const;
  /// True iff x lies in the subfield F_{q^k}; k must divide n.
  bool subfield_member(FieldElement x, int k) const;
  /// Matrix of y -> x*y: row i holds the coefficients of x * basis(i).
  FqMatrix multiplication_matrix(FieldElement x) const;

  bool same_as(const Field& other) const { return data_ == other.data_; }
  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  FieldElement mul_slow(FieldElement a, FieldElement b) const;

  std::shared_ptr<const detail::FieldData> data_;
};

/// Operations adaptor for detail::rref_in_place and friends.
struct FieldOps {
  using value_type = FieldElement;
  const Field* field;

  value_type zero() const { return {}; }
  value_type one() const { return field->one(); }
  bool is_zero(value_type a) const { return a.is_zero(); }
  value_type add(value_type a, value_type b) const { return field->add(a, b); }
  value_type sub(value_type a, value_type b) const { return field->sub(a, b); }
  value_type mul(value_type a, value_type b) const { return field->mul(a, b); }
  value_type inv(value_type a) const { return field->inv(a); }
};

/// The coordinate embedding F_{q^k} -> F_{q^{k+h}}: basis_i of the source goes
/// to basis_i of the destination.
class LinearEmbedding {
 public:
  LinearEmbedding(Field src, Field dst);

  const Field& source() const { return src_; }
  const Field& target() const { return dst_; }
  FieldElement operator()(FieldElement x) const;
  /// k x (k+h) matrix over F_q; row i is the image of basis_i.
  FqMatrix matrix() const;

 private:
  Field src_;
  Field dst_;
};

LinearEmbedding embed_linear(const Field& src, const Field& dst);

}  // namespace subcodes
