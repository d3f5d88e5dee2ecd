#include "subcodes/rank_metric.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "subcodes/error.hpp"
#include "subcodes/linalg.hpp"

namespace subcodes {

namespace {

std::vector<LinearizedPoly> all_polys(const Field& coeff_field, std::size_t t, MaterializeLimits limits) {
  const std::uint64_t total = checked_power(coeff_field.order(), t + 1, limits.max_members);
  require(total <= limits.max_members, ErrorCode::EnumerationTooLarge,
          "code has more than " + std::to_string(limits.max_members) + " members");
  std::vector<LinearizedPoly> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    LinearizedPoly p{std::vector<FieldElement>(t + 1)};
    std::uint64_t rest = idx;
    // a_0 is the most significant digit
    for (std::size_t i = t + 1; i-- > 0;) {
      p.coeffs[i] = coeff_field.from_index(rest % coeff_field.order());
      rest /= coeff_field.order();
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

bool LinearizedPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](FieldElement a) { return a.is_zero(); });
}

FieldElement linearized_eval(const Field& field, const LinearizedPoly& p, FieldElement x) {
  FieldElement acc = field.zero();
  FieldElement conj = x;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
    if (i > 0) conj = field.pow(conj, field.q());
    acc = field.add(acc, field.mul(p.coeffs[i], conj));
  }
  return acc;
}

FqMatrix poly_to_matrix(const Field& field, const LinearizedPoly& p) {
  const auto n = static_cast<std::size_t>(field.degree());
  FqMatrix m(field.q(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto image = linearized_eval(field, p, field.basis(static_cast<int>(i)));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = field.coeff(image, static_cast<int>(j));
  }
  return m;
}

std::size_t RankCode::rows() const {
  if (members.empty() && !explicit_members.empty()) return explicit_members.front().rows();
  return static_cast<std::size_t>(source.degree());
}

std::size_t RankCode::cols() const {
  if (members.empty() && !explicit_members.empty()) return explicit_members.front().cols();
  return static_cast<std::size_t>(target.degree());
}

FieldElement RankCode::eval(std::size_t i, FieldElement x) const {
  require(i < members.size(), ErrorCode::ParameterOutOfRange, "member index out of range");
  const auto& p = members[i];
  if (square()) return linearized_eval(source, p, x);
  const LinearEmbedding phi(source, target);
  FieldElement acc = target.zero();
  FieldElement conj = x;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    if (j > 0) conj = source.pow(conj, source.q());
    acc = target.add(acc, target.mul(p.coeffs[j], phi(conj)));
  }
  return acc;
}

FqMatrix RankCode::matrix(std::size_t i) const {
  if (members.empty()) {
    require(i < explicit_members.size(), ErrorCode::ParameterOutOfRange, "member index out of range");
    return explicit_members[i];
  }
  if (square()) return poly_to_matrix(source, members[i]);
  const std::size_t k = rows();
  const std::size_t m = cols();
  FqMatrix out(source.q(), k, m);
  for (std::size_t r = 0; r < k; ++r) {
    auto image = eval(i, source.basis(static_cast<int>(r)));
    for (std::size_t c = 0; c < m; ++c) out(r, c) = target.coeff(image, static_cast<int>(c));
  }
  return out;
}

RankCode make_explicit_rank_code(const Field& field, std::vector<FqMatrix> matrices, bool linear) {
  RankCode code{field, field, 0, {}, std::move(matrices), 0, linear, {}};
  code.provenance.construction = "explicit";
  return code;
}

RankCode gabidulin_code(const Field& field, std::size_t t, MaterializeLimits limits) {
  const auto n = static_cast<std::size_t>(field.degree());
  require(t < n, ErrorCode::ParameterOutOfRange, "q-degree t must be below n");
  RankCode code{field, field, t, all_polys(field, t, limits), {}, n - t, true, {}};
  code.provenance.construction = "gabidulin";
  code.provenance.with("q", std::to_string(field.q()))
      .with("n", std::to_string(n))
      .with("t", std::to_string(t));
  return code;
}

RankCode gabidulin_rect(const Field& src, const Field& dst, std::size_t t, MaterializeLimits limits) {
  const LinearEmbedding phi(src, dst);
  const auto k = static_cast<std::size_t>(src.degree());
  require(t < k, ErrorCode::ParameterOutOfRange, "q-degree t must be below k");
  RankCode code{src, dst, t, all_polys(dst, t, limits), {}, k - t, true, {}};
  code.provenance.construction = "gabidulin_rect";
  code.provenance.with("q", std::to_string(src.q()))
      .with("k", std::to_string(k))
      .with("h", std::to_string(dst.degree() - src.degree()))
      .with("t", std::to_string(t));
  return code;
}

FqMatrix matrix_sub(const FqMatrix& a, const FqMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::LengthMismatch, "matrix shapes differ");
  FqMatrix out(a.q(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = (a(r, c) + a.q() - b(r, c)) % a.q();
  return out;
}

std::size_t rank_distance_of_code(const RankCode& code, SearchLimits limits) {
  const std::size_t count = code.size();
  require(count >= 2, ErrorCode::TooFewCodewords, "rank distance needs at least two members");
  if (code.linear) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < count; ++i) {
      auto m = code.matrix(i);
      if (m.is_zero()) continue;
      best = std::min(best, rank(m));
    }
    return best;
  }
  std::vector<FqMatrix> mats;
  mats.reserve(count);
  for (std::size_t i = 0; i < count; ++i) mats.push_back(code.matrix(i));
  auto report = min_over_pairs(
      "rank", count, [&](std::size_t i, std::size_t j) { return rank(matrix_sub(mats[i], mats[j])); }, limits);
  return report.min;
}

BigInt mrd_bound(std::uint32_t q, std::size_t rows, std::size_t cols, std::size_t d) {
  const std::size_t lo = std::min(rows, cols), hi = std::max(rows, cols);
  require(d >= 1 && d <= lo, ErrorCode::ParameterOutOfRange, "rank distance outside 1..min(m,n)");
  return big_pow(q, hi * (lo - d + 1));
}

bool mrd_check(const RankCode& code, std::size_t rows, std::size_t cols, std::size_t d) {
  return BigInt(code.size()) == mrd_bound(code.source.q(), rows, cols, d);
}

bool is_mrd(const RankCode& code) {
  return mrd_check(code, code.rows(), code.cols(), rank_distance_of_code(code));
}

BigInt gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t q) {
  require(k <= n, ErrorCode::ParameterOutOfRange, "gaussian binomial needs k <= n");
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= big_pow(q, n - i) - 1;
    den *= big_pow(q, k - i) - 1;
  }
  require(num % den == 0, ErrorCode::InternalConsistency, "gaussian binomial division not exact");
  return num / den;
}

BigInt RankDistribution::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

RankDistribution delsarte_rank_distribution(std::size_t n, std::size_t d, std::uint32_t q) {
  require(d >= 1 && d <= n, ErrorCode::ParameterOutOfRange, "need 1 <= d <= n");
  RankDistribution dist;
  dist.counts.assign(n + 1, 0);
  dist.counts[0] = 1;
  for (std::size_t r = d; r <= n; ++r) {
    BigInt sum = 0;
    for (std::size_t i = 0; i + d <= r; ++i) {
      // q^{n(n-d+1)} / q^{n(n+i-r)} = q^{n(r-i-d+1)}, exponent >= n
      BigInt term = big_pow(q, i * (i == 0 ? 0 : i - 1) / 2) * gaussian_binomial(r, i, q) *
                    (big_pow(q, n * (r - i - d + 1)) - 1);
      if (i % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    dist.counts[r] = gaussian_binomial(n, r, q) * sum;
    require(dist.counts[r] >= 0, ErrorCode::InternalConsistency, "negative rank count");
  }
  require(dist.total() == big_pow(q, n * (n - d + 1)), ErrorCode::InternalConsistency,
          "rank distribution does not sum to the code size");
  return dist;
}

RankDistribution empirical_rank_distribution(const RankCode& code, MaterializeLimits limits) {
  require(code.size() <= limits.max_members, ErrorCode::EnumerationTooLarge, "code too large for a census");
  RankDistribution dist;
  dist.counts.assign(std::min(code.rows(), code.cols()) + 1, 0);
  for (std::size_t i = 0; i < code.size(); ++i) dist.counts[rank(code.matrix(i))] += 1;
  return dist;
}

}  // namespace subcodes
