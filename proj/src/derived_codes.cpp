#include "subcodes/derived_codes.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "subcodes/error.hpp"

namespace subcodes {

namespace {

std::vector<FieldElement> rows_as_elements(const Field& field, const Subspace& s) {
  std::vector<FieldElement> out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(field.from_coeffs(s.basis().row(r)));
  return out;
}

std::size_t max_dim(const SubspaceCode& sc) {
  std::size_t k = 0;
  for (const auto& s : sc.members) k = std::max(k, s.dim());
  return k;
}

Provenance derived_provenance(std::string name, const SubspaceCode& sc, std::size_t l) {
  Provenance prov{std::move(name), {}, {}};
  prov.with("source", sc.provenance.construction).with("l", std::to_string(l));
  for (const auto& [k, v] : sc.provenance.params) prov.with("source." + k, v);
  return prov;
}

}  // namespace

Field span_field(const SubspaceCode& sc) { return Field::create(sc.q, static_cast<int>(sc.ambient)); }

VectorCode span_code(const SubspaceCode& sc, std::size_t l) {
  require(l >= max_dim(sc), ErrorCode::LengthTooShort,
          "length " + std::to_string(l) + " cannot hold a basis of dimension " + std::to_string(max_dim(sc)));
  const Field field = span_field(sc);
  std::vector<Word> words;
  words.reserve(sc.size());
  for (const auto& s : sc.members) {
    auto rows = rows_as_elements(field, s);
    std::vector<FieldElement> symbols = rows;
    for (std::size_t i = 0; i < rows.size() && symbols.size() < l; ++i)
      for (std::size_t j = i + 1; j < rows.size() && symbols.size() < l; ++j)
        symbols.push_back(field.add(rows[i], rows[j]));
    for (std::size_t i = 0; symbols.size() < l; ++i)
      symbols.push_back(rows.empty() ? field.zero() : rows[i % rows.size()]);
    words.push_back({field, std::move(symbols)});
  }
  auto prov = derived_provenance("span_code", sc, l);
  prov.note("padding: pairwise sums b_i + b_j in index order, then basis rows cyclically");
  return make_vector_code(field, l, std::move(words), std::move(prov));
}

VectorCode partial_span_code(const SubspaceCode& sc, std::size_t l) {
  require(sc.constant_dim.has_value(), ErrorCode::PreconditionViolation, "partial span code needs constant dimension");
  const std::size_t k = *sc.constant_dim;
  require(sc.declared_distance % 2 == 0 && sc.declared_distance <= 2 * k, ErrorCode::PreconditionViolation,
          "declared distance must be 2k - 2t");
  const std::size_t t = k - sc.declared_distance / 2;
  require(l >= t + 1 && l <= k, ErrorCode::LengthOutOfRange,
          "need " + std::to_string(t + 1) + " <= l <= " + std::to_string(k));
  const Field field = span_field(sc);
  std::vector<Word> words;
  for (const auto& s : sc.members) {
    auto rows = rows_as_elements(field, s);
    rows.resize(l);
    words.push_back({field, std::move(rows)});
  }
  auto prov = derived_provenance("partial_span_code", sc, l);
  prov.with("t", std::to_string(t));
  return make_vector_code(field, l, std::move(words), std::move(prov));
}

std::size_t all_vectors_guarantee(const SubspaceCode& sc, std::size_t l) {
  require(sc.constant_dim.has_value(), ErrorCode::PreconditionViolation, "all-vectors code needs constant dimension");
  const std::size_t k = *sc.constant_dim;
  require(sc.declared_distance <= 2 * k, ErrorCode::PreconditionViolation, "declared distance exceeds 2k");
  const std::uint64_t floor_len = checked_power(sc.q, k - sc.declared_distance / 2, UINT64_MAX);
  require(l > floor_len && l <= checked_power(sc.q, k, UINT64_MAX), ErrorCode::LengthOutOfRange,
          "need q^{k-d/2} < l <= q^k");
  return 2 * (l - floor_len);
}

VectorCode all_vectors_code(const SubspaceCode& sc, std::size_t l, std::uint64_t max_vectors) {
  all_vectors_guarantee(sc, l);
  const std::size_t k = *sc.constant_dim;
  require(checked_power(sc.q, k, max_vectors) <= max_vectors, ErrorCode::EnumerationTooLarge,
          "subspaces too large to list");
  const Field field = span_field(sc);
  std::vector<Word> words;
  for (const auto& s : sc.members) {
    std::vector<FieldElement> symbols;
    for (const auto& v : s.vectors()) {
      auto e = field.from_coeffs(v);
      if (!e.is_zero()) symbols.push_back(e);
    }
    symbols.push_back(field.zero());
    symbols.resize(l);
    words.push_back({field, std::move(symbols)});
  }
  auto prov = derived_provenance("all_vectors_code", sc, l);
  prov.note("vector order: nonzero lexicographic, zero last");
  return make_vector_code(field, l, std::move(words), std::move(prov));
}

std::vector<std::size_t> translate_intersections(const Field& field, const std::vector<FieldElement>& d) {
  require(!d.empty(), ErrorCode::EmptySet, "empty set");
  std::unordered_set<std::uint64_t> members;
  for (auto x : d) {
    require(!x.is_zero(), ErrorCode::InvalidParams, "set must not contain zero");
    members.insert(x.index);
  }
  std::vector<std::size_t> out;
  const auto one = field.one();
  for (auto y : field.elements()) {
    if (y.is_zero() || y == one) continue;
    std::size_t hits = 0;
    for (auto x : d) hits += members.count(field.mul(y, x).index);
    out.push_back(hits);
  }
  return out;
}

std::size_t m_of_D(const Field& field, const std::vector<FieldElement>& d) {
  const auto counts = translate_intersections(field, d);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

bool is_difference_set(const Field& field, const std::vector<FieldElement>& d, std::size_t lambda) {
  const auto counts = translate_intersections(field, d);
  return std::all_of(counts.begin(), counts.end(), [lambda](std::size_t c) { return c == lambda; });
}

DifferenceSet singer_difference_set(const Field& field) {
  require(field.q() == 2, ErrorCode::InvalidParams, "Singer sets are built over F_2");
  const auto n = static_cast<std::uint64_t>(field.degree());
  require(n >= 3, ErrorCode::ParameterTooSmall, "need n >= 3");
  DifferenceSet ds{field, {}, (std::uint64_t{1} << n) - 1, 0, 0};
  for (auto x : field.elements())
    if (!x.is_zero() && field.trace(x) == 0) ds.members.push_back(x);
  ds.k = ds.members.size();
  ds.lambda = (std::uint64_t{1} << (n - 2)) - 1;
  require(ds.k == (std::uint64_t{1} << (n - 1)) - 1, ErrorCode::PropertyViolation, "trace-zero set has wrong size");
  require(is_difference_set(field, ds.members, ds.lambda), ErrorCode::PropertyViolation,
          "trace-zero set is not a difference set");
  return ds;
}

FoldedCode evaluation_folded_code(const Field& field, const std::vector<FieldElement>& d) {
  require(!d.empty(), ErrorCode::EmptySet, "empty evaluation set");
  FoldedCode code{field, 1};
  std::set<std::vector<std::uint64_t>> seen;
  for (auto w : field.elements()) {
    if (w.is_zero()) continue;
    FoldedWord word{1, {}};
    std::vector<std::uint64_t> key;
    for (auto x : d) {
      auto s = field.mul(w, x);
      word.blocks.push_back({s});
      key.push_back(s.index);
    }
    if (seen.insert(std::move(key)).second) code.codewords.push_back(std::move(word));
  }
  code.provenance = Provenance{"evaluation_folded", {}, {}};
  code.provenance.with("n", std::to_string(field.degree())).with("D", std::to_string(d.size()));
  code.provenance.note("w runs over nonzero elements in canonical order; one symbol per block");
  return code;
}

FoldedCode folded_code_from_vector_code(const VectorCode& code, std::size_t s) {
  FoldedCode out{code.field, s};
  for (const auto& w : code.codewords) out.codewords.push_back(fold(w, s));
  out.provenance = code.provenance;
  out.provenance.with("fold", std::to_string(s));
  return out;
}

MetricReport folded_code_min_distance(const FoldedCode& code, Metric::Kind kind, SearchLimits limits) {
  Metric metric{kind, code.block_len};
  switch (kind) {
    case Metric::Kind::subset:
      return min_over_pairs(
          metric.name(), code.size(),
          [&](std::size_t i, std::size_t j) { return folded_subset_distance(code.codewords[i], code.codewords[j]); },
          limits);
    case Metric::Kind::subspace:
      return min_over_pairs(
          metric.name(), code.size(),
          [&](std::size_t i, std::size_t j) {
            return folded_subspace_distance(code.field, code.codewords[i], code.codewords[j]);
          },
          limits);
    default:
      fail(ErrorCode::InvalidParams, "folded codes support subset and subspace metrics only");
  }
}

}  // namespace subcodes
