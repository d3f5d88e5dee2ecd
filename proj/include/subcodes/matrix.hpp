#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace subcodes {

/// Dense row-major matrix over the prime field F_q, entries in [0, q).
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::uint32_t q, std::size_t rows, std::size_t cols);

  static FqMatrix identity(std::uint32_t q, std::size_t n);
  static FqMatrix from_rows(std::uint32_t q, std::size_t cols,
                            const std::vector<std::vector<std::uint32_t>>& rows);

  std::uint32_t q() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<std::uint32_t>& data() const { return data_; }
  std::vector<std::vector<std::uint32_t>> to_rows() const;

  FqMatrix operator*(const FqMatrix& rhs) const;
  FqMatrix operator+(const FqMatrix& rhs) const;
  FqMatrix transpose() const;

  /// Horizontal concatenation (this | rhs).
  FqMatrix hconcat(const FqMatrix& rhs) const;
  /// Vertical concatenation (this over rhs).
  FqMatrix vconcat(const FqMatrix& rhs) const;

  bool is_zero() const;

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
  friend auto operator<=>(const FqMatrix&, const FqMatrix&) = default;

 private:
  std::uint32_t q_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

}  // namespace subcodes
