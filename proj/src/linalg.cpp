#include "subcodes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "subcodes/detail/gauss.hpp"
#include "subcodes/error.hpp"

namespace subcodes {

RrefResult rref(const FqMatrix& m) {
  auto data = m.data();
  detail::PrimeOps ops{m.q()};
  auto pivots = detail::rref_in_place(data, m.rows(), m.cols(), ops);
  FqMatrix out(m.q(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = data[r * m.cols() + c];
  return {std::move(out), pivots.size()};
}

std::size_t rank(const FqMatrix& m) {
  return detail::rank_of(m.data(), m.rows(), m.cols(), detail::PrimeOps{m.q()});
}

Subspace::Subspace(std::uint32_t q, std::size_t ambient) : basis_(q, 0, ambient) {}

bool is_rref_basis(const FqMatrix& m) {
  std::size_t prev = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t p = 0;
    while (p < m.cols() && m(r, p) == 0) ++p;
    if (p == m.cols()) return false;
    if (m(r, p) != 1) return false;
    if (r > 0 && p <= prev) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, p) != 0) return false;
    prev = p;
  }
  return true;
}

Subspace Subspace::from_rref(FqMatrix basis) {
  require(is_rref_basis(basis), ErrorCode::InvalidParams, "basis is not in reduced row echelon form");
  return Subspace(std::move(basis));
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  require(v.size() == ambient(), ErrorCode::LengthMismatch, "vector length differs from ambient");
  const std::uint32_t q = basis_.q();
  FqVector w(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t p = 0;
    while (basis_(r, p) == 0) ++p;
    const std::uint64_t f = w[p];
    if (f == 0) continue;
    for (std::size_t c = p; c < ambient(); ++c)
      w[c] = static_cast<std::uint32_t>((w[c] + q - (f * basis_(r, c)) % q) % q);
  }
  return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

std::vector<FqVector> Subspace::vectors() const {
  const std::uint32_t q = basis_.q();
  std::vector<FqVector> out;
  std::vector<std::uint32_t> coef(dim(), 0);
  while (true) {
    FqVector v(ambient(), 0);
    for (std::size_t r = 0; r < dim(); ++r) {
      if (coef[r] == 0) continue;
      for (std::size_t c = 0; c < ambient(); ++c)
        v[c] = static_cast<std::uint32_t>((v[c] + std::uint64_t{coef[r]} * basis_(r, c)) % q);
    }
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < dim() && ++coef[i] == q) coef[i++] = 0;
    if (i == dim()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.q() <=> b.q(); c != 0) return c;
  const auto& x = a.basis_.data();
  const auto& y = b.basis_.data();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

std::size_t SubspaceHash::operator()(const Subspace& s) const {
  std::size_t h = s.ambient() * 0x9e3779b97f4a7c15ULL + s.dim();
  for (auto v : s.basis().data()) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

Subspace row_space(const FqMatrix& m) {
  auto r = rref(m);
  FqMatrix basis(m.q(), r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(i, c) = r.matrix(i, c);
  return Subspace::from_rref(std::move(basis));
}

Subspace span(std::uint32_t q, std::size_t ambient, const std::vector<FqVector>& vectors) {
  FqMatrix m(q, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require(vectors[i].size() == ambient, ErrorCode::LengthMismatch,
            "vector of length " + std::to_string(vectors[i].size()) + " in ambient " +
                std::to_string(ambient));
    for (std::size_t c = 0; c < ambient; ++c) m(i, c) = vectors[i][c] % q;
  }
  return row_space(m);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require(u.ambient() == v.ambient() && u.q() == v.q(), ErrorCode::AmbientMismatch,
          "subspaces live in different spaces");
  return row_space(u.basis().vconcat(v.basis()));
}

std::size_t subspace_intersection_dim(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - subspace_sum(u, v).dim();
}

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
  const auto s = subspace_sum(u, v).dim();
  return 2 * s - u.dim() - v.dim();
}

Subspace kernel(const FqMatrix& m) {
  auto basis = detail::kernel_basis(m.data(), m.rows(), m.cols(), detail::PrimeOps{m.q()});
  if (basis.empty()) return Subspace(m.q(), m.cols());
  return Subspace::from_rref(FqMatrix::from_rows(m.q(), m.cols(), basis));
}

Subspace image(const Subspace& s, const FqMatrix& m) {
  require(s.ambient() == m.rows(), ErrorCode::LengthMismatch, "image: shape mismatch");
  if (s.dim() == 0) return Subspace(s.q(), m.cols());
  return row_space(s.basis() * m);
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > limit / std::max<std::uint64_t>(base, 1)) return limit + 1;
    r *= base;
  }
  return r;
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t q, std::size_t ambient, std::size_t dim,
                                          EnumerationLimits limits) {
  require(dim <= ambient, ErrorCode::ParameterOutOfRange, "dimension exceeds ambient");
  require(checked_power(q, ambient, limits.max_space) <= limits.max_space, ErrorCode::EnumerationTooLarge,
          "q^N exceeds the enumeration guard");
  // Gaussian binomial estimate for the count guard.
  long double count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= (std::pow(static_cast<long double>(q), ambient - i) - 1) /
             (std::pow(static_cast<long double>(q), dim - i) - 1);
  }
  require(count <= static_cast<long double>(limits.max_count), ErrorCode::EnumerationTooLarge,
          "too many subspaces to enumerate");

  std::vector<std::uint32_t> values(q);
  for (std::uint32_t i = 0; i < q; ++i) values[i] = i;
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(count + 0.5L));
  for_each_rref_shape<std::uint32_t>(dim, ambient, values, 1U, [&](const std::vector<std::uint32_t>& m) {
    FqMatrix basis(q, dim, ambient);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < ambient; ++c) basis(r, c) = m[r * ambient + c];
    out.push_back(Subspace::from_rref(std::move(basis)));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FqVector> field_elements_as_vectors(const Field& f, std::span<const FieldElement> elements) {
  std::vector<FqVector> out;
  out.reserve(elements.size());
  for (auto e : elements) out.push_back(f.coeffs(e));
  return out;
}

FieldElement vector_as_field_element(const Field& f, std::span<const std::uint32_t> v) {
  return f.from_coeffs(v);
}

}  // namespace subcodes
