#include "subcodes/bounds.hpp"

#include <algorithm>

#include "subcodes/detail/gauss.hpp"
#include "subcodes/error.hpp"

namespace subcodes {

BoundReport& BoundReport::compare(BigInt measured, std::string rel) {
  relation = std::move(rel);
  satisfied = relation == "<=" ? measured <= value : measured >= value;
  observed = std::move(measured);
  return *this;
}

BoundReport singleton_bound(std::size_t n, std::size_t d, std::uint64_t q, Metric::Kind metric) {
  require(n >= 1 && q >= 2, ErrorCode::ParameterOutOfRange, "need n >= 1 and q >= 2");
  BoundReport r;
  r.params = {{"n", std::to_string(n)}, {"d", std::to_string(d)}, {"q", std::to_string(q)}};
  if (metric == Metric::Kind::hamming) {
    require(d >= 1 && d <= n, ErrorCode::ParameterOutOfRange, "Hamming distance must lie in [1, n]");
    r.name = "singleton_hamming";
    r.value = big_pow(q, n - d + 1);
    return r;
  }
  require(d >= 1 && d <= 2 * n, ErrorCode::ParameterOutOfRange, "distance must lie in [1, 2n]");
  r.name = "singleton_" + Metric{metric, 1}.name();
  r.value = big_pow(q, n - (d + 1) / 2 + 1);
  return r;
}

std::size_t half_singleton(std::size_t n, std::size_t k) {
  require(k >= 1 && k <= n, ErrorCode::ParameterOutOfRange, "need 1 <= k <= n");
  const auto v = 2 * (static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(k) + 2);
  return static_cast<std::size_t>(std::max<std::int64_t>(v, 2));
}

StrongHalfSingleton strong_half_singleton(const std::vector<std::size_t>& ghw) {
  require(!ghw.empty(), ErrorCode::NonMonotoneInput, "empty weight hierarchy");
  for (std::size_t i = 1; i < ghw.size(); ++i)
    require(ghw[i - 1] < ghw[i], ErrorCode::NonMonotoneInput, "weights must be strictly increasing");
  std::int64_t best = INT64_MAX;
  for (std::size_t r = 1; r <= ghw.size(); ++r)
    best = std::min(best, static_cast<std::int64_t>(ghw[r - 1]) - 2 * static_cast<std::int64_t>(r) + 2);
  return {2 * best, best};
}

BigInt levenshtein_bound(std::size_t n, std::uint64_t q) {
  require(n >= 2 && q >= 2, ErrorCode::ParameterOutOfRange, "need n >= 2 and q >= 2");
  BigInt num = big_pow(q, n - 1) + BigInt(n - 2) * big_pow(q, n - 2) + q;
  return num / n;
}

BigInt klo_bound(std::uint64_t q) {
  require(q >= 2, ErrorCode::ParameterOutOfRange, "need q >= 2");
  require(q % 2 == 0, ErrorCode::ParityViolation, "bound holds for even q only");
  BigInt bq = q;
  return bq * bq * (bq + 1) / 4;
}

FieldMatrix parity_check(const Field& field, const FieldMatrix& generator) {
  require(!generator.empty(), ErrorCode::NotLinear, "empty generator");
  const std::size_t k = generator.size();
  const std::size_t n = generator.front().size();
  std::vector<FieldElement> flat;
  for (const auto& row : generator) {
    require(row.size() == n, ErrorCode::LengthMismatch, "ragged generator");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return detail::kernel_basis(std::move(flat), k, n, FieldOps{&field});
}

Word left_shift(const Word& w) {
  Word out = w;
  if (!out.symbols.empty()) std::rotate(out.symbols.begin(), out.symbols.begin() + 1, out.symbols.end());
  return out;
}

namespace {

bool in_row_space(const Field& field, const FieldMatrix& g, const std::vector<FieldElement>& x) {
  FieldMatrix ext = g;
  ext.push_back(x);
  return field_rank(field, ext) == field_rank(field, g);
}

}  // namespace

Word cyclic_shift_witness(const VectorCode& code) {
  require(code.generator.has_value(), ErrorCode::NotLinear, "witness needs a linear code");
  const Field& field = code.field;
  const auto& g = *code.generator;
  const std::size_t n = code.length;
  const std::size_t k = field_rank(field, g);
  require(2 * k > n, ErrorCode::RateTooLow, "need k > n/2");

  const FieldMatrix h = parity_check(field, g);
  // H x^T = 0 certifies x; the rotated copy certifies (x_2, ..., x_n, x_1).
  FieldMatrix stacked = h;
  for (const auto& row : h) {
    std::vector<FieldElement> rot(n);
    for (std::size_t j = 0; j < n; ++j) rot[j] = row[(j + n - 1) % n];
    stacked.push_back(std::move(rot));
  }
  std::vector<FieldElement> flat;
  for (const auto& row : stacked) flat.insert(flat.end(), row.begin(), row.end());
  const auto ker = detail::kernel_basis(std::move(flat), stacked.size(), n, FieldOps{&field});
  require(!ker.empty(), ErrorCode::InternalConsistency, "stacked parity check has trivial kernel");

  Word x{field, ker.front()};
  require(in_row_space(field, g, x.symbols) && in_row_space(field, g, left_shift(x).symbols),
          ErrorCode::InternalConsistency, "witness failed the membership check");
  return x;
}

BoundsVerification verify_bounds(const VectorCode& code, SearchLimits limits) {
  BoundsVerification out;
  const std::size_t n = code.length;
  const std::uint64_t big_q = code.field.order();
  out.d_hamming = code_min_distance(code, {Metric::Kind::hamming, 1}, limits).min;
  out.d_subspace = code_min_distance(code, {Metric::Kind::subspace, 1}, limits).min;
  out.d_subset = code_min_distance(code, {Metric::Kind::subset, 1}, limits).min;
  out.d_insdel = code_min_distance(code, {Metric::Kind::insdel, 1}, limits).min;
  out.chain_holds = out.d_subspace <= out.d_subset && out.d_subset <= out.d_insdel && out.d_insdel <= 2 * out.d_hamming;
  if (!out.chain_holds) out.findings.push_back("distance chain d_S <= d_subset <= d_insdel <= 2 d_H violated");

  auto add = [&](BoundReport r) {
    if (r.satisfied == false) out.findings.push_back(r.name + " violated");
    out.bounds.push_back(std::move(r));
  };
  const BigInt size = code.size();
  const std::pair<Metric::Kind, std::size_t> measured[] = {{Metric::Kind::hamming, out.d_hamming},
                                                           {Metric::Kind::insdel, out.d_insdel},
                                                           {Metric::Kind::subspace, out.d_subspace},
                                                           {Metric::Kind::subset, out.d_subset}};
  for (const auto& [kind, d] : measured) {
    if (d == 0) continue;
    add(singleton_bound(n, d, big_q, kind).compare(size));
  }

  if (code.linear()) {
    const std::size_t k = field_rank(code.field, *code.generator);
    BoundReport hs{"half_singleton", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}, half_singleton(n, k)};
    add(hs.compare(out.d_insdel));
    if (2 * k <= n) {
      BoundReport hs_subset = hs;
      hs_subset.name = "half_singleton_subset";
      add(hs_subset.compare(out.d_subset));
    }
    try {
      const auto ghw = generalized_hamming_weights(code);
      std::string ghw_text;
      for (std::size_t r = 0; r < ghw.size(); ++r) {
        ghw_text += (r ? "," : "") + std::to_string(ghw[r]);
        if (ghw[r] > n - k + r + 1) out.findings.push_back("generalized Singleton d_r <= n-k+r violated");
      }
      const auto shs = strong_half_singleton(ghw);
      BoundReport doubled{"strong_half_singleton_doubled", {{"ghw", ghw_text}}, shs.doubled};
      add(doubled.compare(out.d_insdel));
      BoundReport plain{"strong_half_singleton_plain", {{"ghw", ghw_text}}, shs.plain};
      add(plain.compare(out.d_subset));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchTooLarge) throw;
      out.findings.push_back("generalized weights skipped: too many subcodes");
    }
    if (2 * k > n) {
      const Word x = cyclic_shift_witness(code);
      if (subset_distance(x, left_shift(x)) != 0 || out.d_subspace != 0 || out.d_subset != 0)
        out.findings.push_back("high-rate linear code with nonzero subset distance");
    }
  }
  return out;
}

}  // namespace subcodes
