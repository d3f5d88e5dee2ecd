#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace subcodes {

template <class T>
void for_each_rref_shape(std::size_t dim, std::size_t cols, const std::vector<T>& values, T one,
                         const std::function<void(const std::vector<T>&)>& visit) {
  if (dim > cols) return;
  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;
  while (true) {
    // Free slots: entries right of the row's pivot that are not pivot columns.
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> slots;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = pivots[r] + 1; c < cols; ++c)
        if (!is_pivot[c]) slots.push_back(r * cols + c);

    std::vector<T> m(dim * cols, values[0]);
    for (std::size_t r = 0; r < dim; ++r) m[r * cols + pivots[r]] = one;
    std::vector<std::size_t> digit(slots.size(), 0);
    bool done = false;
    while (!done) {
      for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s]] = values[digit[s]];
      visit(m);
      done = true;
      for (std::size_t s = slots.size(); s > 0; --s) {
        if (++digit[s - 1] < values.size()) {
          done = false;
          break;
        }
        digit[s - 1] = 0;
      }
    }

    // next combination of pivot columns
    std::size_t i = dim;
    while (i > 0 && pivots[i - 1] == cols - dim + (i - 1)) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (std::size_t j = i; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace subcodes
