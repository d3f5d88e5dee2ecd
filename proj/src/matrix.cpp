#include "subcodes/matrix.hpp"

#include "subcodes/error.hpp"

namespace subcodes {

FqMatrix::FqMatrix(std::uint32_t q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix FqMatrix::identity(std::uint32_t q, std::size_t n) {
  FqMatrix m(q, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(std::uint32_t q, std::size_t cols,
                             const std::vector<std::vector<std::uint32_t>>& rows) {
  FqMatrix m(q, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorCode::LengthMismatch, "matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c] % q;
  }
  return m;
}

std::vector<std::vector<std::uint32_t>> FqMatrix::to_rows() const {
  std::vector<std::vector<std::uint32_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

FqMatrix FqMatrix::operator*(const FqMatrix& rhs) const {
  require(cols_ == rhs.rows_ && q_ == rhs.q_, ErrorCode::LengthMismatch, "matrix product shape");
  FqMatrix out(q_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = static_cast<std::uint32_t>((out(i, j) + a * rhs(k, j)) % q_);
      }
    }
  }
  return out;
}

FqMatrix FqMatrix::operator+(const FqMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_ && q_ == rhs.q_, ErrorCode::LengthMismatch,
          "matrix sum shape");
  FqMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = (data_[i] + rhs.data_[i]) % q_;
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(q_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

FqMatrix FqMatrix::hconcat(const FqMatrix& rhs) const {
  require(rows_ == rhs.rows_, ErrorCode::LengthMismatch, "hconcat row count");
  FqMatrix out(q_, rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

FqMatrix FqMatrix::vconcat(const FqMatrix& rhs) const {
  require(cols_ == rhs.cols_, ErrorCode::LengthMismatch, "vconcat column count");
  FqMatrix out(q_, rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

bool FqMatrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

}  // namespace subcodes
