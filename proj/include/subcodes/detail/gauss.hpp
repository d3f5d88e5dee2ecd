#pragma once

// Gaussian elimination shared by the prime-field and extension-field layers.
// `Ops` supplies value_type, zero(), one(), add, sub, mul, inv and is_zero.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace subcodes::detail {

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint32_t q;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const { return (a + b) % q; }
  value_type sub(value_type a, value_type b) const { return (a + q - b) % q; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % q);
  }
  value_type inv(value_type a) const {
    // Fermat: a^(q-2)
    std::uint64_t result = 1, base = a % q;
    for (std::uint32_t e = q - 2; e != 0; e >>= 1) {
      if (e & 1U) result = result * base % q;
      base = base * base % q;
    }
    return static_cast<value_type>(result);
  }
};

/// Brings the row-major `rows x cols` matrix in `a` to reduced row echelon form.
/// Nonzero rows end up on top; returns the pivot column of each of them.
template <class Ops>
std::vector<std::size_t> rref_in_place(std::vector<typename Ops::value_type>& a, std::size_t rows,
                                       std::size_t cols, const Ops& ops) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && ops.is_zero(a[sel * cols + c])) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    }
    auto lead_inv = ops.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], lead_inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto f = a[i * cols + c];
      if (ops.is_zero(f)) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(f, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Ops>
std::size_t rank_of(std::vector<typename Ops::value_type> a, std::size_t rows, std::size_t cols,
                    const Ops& ops) {
  return rref_in_place(a, rows, cols, ops).size();
}

/// Null-space basis of the matrix (x with A x = 0), one vector per free column,
/// already in reduced row echelon order.
template <class Ops>
std::vector<std::vector<typename Ops::value_type>> kernel_basis(std::vector<typename Ops::value_type> a,
                                                                std::size_t rows, std::size_t cols,
                                                                const Ops& ops) {
  auto pivots = rref_in_place(a, rows, cols, ops);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename Ops::value_type>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename Ops::value_type> v(cols, ops.zero());
    v[f] = ops.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = ops.sub(ops.zero(), a[i * cols + f]);
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  std::vector<typename Ops::value_type> flat;
  for (const auto& v : basis) flat.insert(flat.end(), v.begin(), v.end());
  auto k = rref_in_place(flat, basis.size(), cols, ops).size();
  for (std::size_t i = 0; i < k; ++i) {
    basis[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * cols),
                    flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
  }
  basis.resize(k);
  return basis;
}

}  // namespace subcodes::detail
