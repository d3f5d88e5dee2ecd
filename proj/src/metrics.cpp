#include "subcodes/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "subcodes/detail/gauss.hpp"
#include "subcodes/error.hpp"

namespace subcodes {

namespace {

void require_same_field(const Word& a, const Word& b) {
  require(a.field == b.field, ErrorCode::FieldMismatch, "words over different fields");
}

std::vector<FieldElement> symbol_set(const std::vector<FieldElement>& symbols) {
  std::vector<FieldElement> s(symbols);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

template <class T>
std::size_t sorted_set_distance(const std::vector<T>& x, const std::vector<T>& y) {
  std::size_t common = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return x.size() + y.size() - 2 * common;
}

std::vector<std::vector<FieldElement>> block_set(const FoldedWord& w) {
  auto s = w.blocks;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Subspace block_span(const Field& field, const FoldedWord& w) {
  const auto n = static_cast<std::size_t>(field.degree());
  std::vector<FqVector> vectors;
  vectors.reserve(w.blocks.size());
  for (const auto& block : w.blocks) {
    FqVector v;
    v.reserve(n * w.block_len);
    for (auto e : block) {
      auto c = field.coeffs(e);
      v.insert(v.end(), c.begin(), c.end());
    }
    vectors.push_back(std::move(v));
  }
  return span(field.q(), n * w.block_len, vectors);
}

}  // namespace

VectorCode make_vector_code(const Field& field, std::size_t length, std::vector<Word> words,
                            Provenance provenance) {
  VectorCode code{field, length, {}, std::nullopt, std::move(provenance)};
  std::set<std::vector<FieldElement>> seen;
  for (auto& w : words) {
    require(w.size() == length, ErrorCode::LengthMismatch, "codeword length differs from code length");
    require(w.field == field, ErrorCode::FieldMismatch, "codeword over a different field");
    if (seen.insert(w.symbols).second) code.codewords.push_back(std::move(w));
  }
  return code;
}

std::size_t field_rank(const Field& field, const FieldMatrix& m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  std::vector<FieldElement> flat;
  for (const auto& row : m) {
    require(row.size() == cols, ErrorCode::LengthMismatch, "ragged matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return detail::rank_of(std::move(flat), m.size(), cols, FieldOps{&field});
}

VectorCode linear_code(const Field& field, const FieldMatrix& generator, Provenance provenance) {
  require(!generator.empty(), ErrorCode::NotLinear, "empty generator");
  const std::size_t k = generator.size();
  const std::size_t len = generator.front().size();
  require(field_rank(field, generator) == k, ErrorCode::NotLinear, "generator rows are dependent");
  const std::uint64_t limit = std::uint64_t{1} << 20;
  const std::uint64_t total = checked_power(field.order(), k, limit);
  require(total <= limit, ErrorCode::EnumerationTooLarge, "too many codewords to materialize");

  VectorCode code{field, len, {}, generator, std::move(provenance)};
  code.codewords.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    // message digit 0 is the most significant
    std::vector<FieldElement> msg(k);
    std::uint64_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      msg[i] = field.from_index(rest % field.order());
      rest /= field.order();
    }
    Word w{field, std::vector<FieldElement>(len, field.zero())};
    for (std::size_t i = 0; i < k; ++i) {
      if (msg[i].is_zero()) continue;
      for (std::size_t j = 0; j < len; ++j)
        w.symbols[j] = field.add(w.symbols[j], field.mul(msg[i], generator[i][j]));
    }
    code.codewords.push_back(std::move(w));
  }
  return code;
}

bool is_codeword(const VectorCode& code, const std::vector<FieldElement>& word) {
  if (word.size() != code.length) return false;
  if (code.generator) {
    FieldMatrix m = *code.generator;
    m.push_back(word);
    return field_rank(code.field, m) == code.generator->size();
  }
  return std::any_of(code.codewords.begin(), code.codewords.end(),
                     [&](const Word& w) { return w.symbols == word; });
}

std::string Metric::name() const {
  std::string base;
  switch (kind) {
    case Kind::hamming: base = "hamming"; break;
    case Kind::insdel: base = "insdel"; break;
    case Kind::subspace: base = "subspace"; break;
    case Kind::subset: base = "subset"; break;
  }
  if (block_len == 1) return base;
  return "r_" + base + "(" + std::to_string(block_len) + ")";
}

Metric Metric::parse(const std::string& name, std::size_t block_len) {
  require(block_len >= 1, ErrorCode::InvalidParams, "block length must be positive");
  Metric m;
  m.block_len = block_len;
  if (name == "hamming") {
    m.kind = Kind::hamming;
  } else if (name == "insdel") {
    m.kind = Kind::insdel;
  } else if (name == "subspace" || name == "r_subspace") {
    m.kind = Kind::subspace;
  } else if (name == "subset" || name == "r_subset") {
    m.kind = Kind::subset;
  } else {
    fail(ErrorCode::InvalidParams, "unknown metric '" + name + "'");
  }
  require(block_len == 1 || m.kind == Kind::subspace || m.kind == Kind::subset, ErrorCode::InvalidParams,
          "block length only applies to subspace and subset metrics");
  return m;
}

std::string MetricReport::csv() const {
  std::ostringstream os;
  os << metric << ',' << min << ',' << witness_i << ',' << witness_j << ',' << pairs;
  return os.str();
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  require_same_field(a, b);
  require(a.size() == b.size(), ErrorCode::LengthMismatch, "hamming distance needs equal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a.symbols[i] != b.symbols[i];
  return d;
}

std::size_t lcs_length(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t insdel_distance(const Word& a, const Word& b) {
  require_same_field(a, b);
  return a.size() + b.size() - 2 * lcs_length(a.symbols, b.symbols);
}

Subspace symbol_span(const Word& w) {
  return span(w.field.q(), static_cast<std::size_t>(w.field.degree()),
              field_elements_as_vectors(w.field, w.symbols));
}

std::size_t subspace_distance(const Word& a, const Word& b) {
  require_same_field(a, b);
  return subspace_distance(symbol_span(a), symbol_span(b));
}

std::size_t subset_distance(const Word& a, const Word& b) {
  require_same_field(a, b);
  return sorted_set_distance(symbol_set(a.symbols), symbol_set(b.symbols));
}

FoldedWord fold(const Word& a, std::size_t block_len) {
  require(block_len >= 1, ErrorCode::InvalidParams, "block length must be positive");
  FoldedWord out{block_len, {}};
  for (std::size_t start = 0; start < a.size(); start += block_len) {
    std::vector<FieldElement> block(block_len, a.field.zero());
    for (std::size_t i = 0; i < block_len && start + i < a.size(); ++i) block[i] = a.symbols[start + i];
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::size_t folded_subspace_distance(const Field& field, const FoldedWord& a, const FoldedWord& b) {
  require(a.block_len == b.block_len, ErrorCode::LengthMismatch, "different block lengths");
  return subspace_distance(block_span(field, a), block_span(field, b));
}

std::size_t folded_subset_distance(const FoldedWord& a, const FoldedWord& b) {
  require(a.block_len == b.block_len, ErrorCode::LengthMismatch, "different block lengths");
  return sorted_set_distance(block_set(a), block_set(b));
}

std::size_t r_subspace_distance(const Word& a, const Word& b, std::size_t r) {
  require_same_field(a, b);
  return folded_subspace_distance(a.field, fold(a, r), fold(b, r));
}

std::size_t r_subset_distance(const Word& a, const Word& b, std::size_t r) {
  require_same_field(a, b);
  return folded_subset_distance(fold(a, r), fold(b, r));
}

std::size_t distance(const Word& a, const Word& b, const Metric& metric) {
  switch (metric.kind) {
    case Metric::Kind::hamming: return hamming_distance(a, b);
    case Metric::Kind::insdel: return insdel_distance(a, b);
    case Metric::Kind::subspace:
      return metric.block_len == 1 ? subspace_distance(a, b) : r_subspace_distance(a, b, metric.block_len);
    case Metric::Kind::subset:
      return metric.block_len == 1 ? subset_distance(a, b) : r_subset_distance(a, b, metric.block_len);
  }
  return 0;
}

MetricReport code_min_distance(const VectorCode& code, const Metric& metric, SearchLimits limits) {
  const auto& words = code.codewords;
  const std::size_t count = words.size();
  require(count >= 2, ErrorCode::TooFewCodewords, "need at least two codewords");
  switch (metric.kind) {
    case Metric::Kind::subspace: {
      std::vector<Subspace> spans;
      spans.reserve(count);
      for (const auto& w : words) spans.push_back(block_span(code.field, fold(w, metric.block_len)));
      return min_over_pairs(
          metric.name(), count, [&](std::size_t i, std::size_t j) { return subspace_distance(spans[i], spans[j]); },
          limits);
    }
    case Metric::Kind::subset: {
      std::vector<std::vector<std::vector<FieldElement>>> sets;
      sets.reserve(count);
      for (const auto& w : words) sets.push_back(block_set(fold(w, metric.block_len)));
      return min_over_pairs(
          metric.name(), count,
          [&](std::size_t i, std::size_t j) { return sorted_set_distance(sets[i], sets[j]); }, limits);
    }
    default:
      return min_over_pairs(
          metric.name(), count, [&](std::size_t i, std::size_t j) { return distance(words[i], words[j], metric); },
          limits);
  }
}

std::vector<std::size_t> generalized_hamming_weights(const VectorCode& code, std::uint64_t max_subcodes) {
  require(code.generator.has_value(), ErrorCode::NotLinear, "generalized weights need a generator");
  const auto& g = *code.generator;
  const Field& f = code.field;
  const std::size_t k = g.size();
  const std::size_t len = code.length;
  const long double big_q = static_cast<long double>(f.order());
  long double total = 0;
  for (std::size_t r = 1; r <= k; ++r) {
    long double c = 1;
    for (std::size_t i = 0; i < r; ++i) c *= (std::pow(big_q, k - i) - 1) / (std::pow(big_q, r - i) - 1);
    total += c;
  }
  require(total <= static_cast<long double>(max_subcodes), ErrorCode::SearchTooLarge,
          "too many subcodes to enumerate");

  const auto values = f.elements();
  std::vector<std::size_t> weights;
  for (std::size_t r = 1; r <= k; ++r) {
    std::size_t best = len + 1;
    for_each_rref_shape<FieldElement>(r, k, values, f.one(), [&](const std::vector<FieldElement>& m) {
      std::size_t support = 0;
      for (std::size_t j = 0; j < len; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < r && !nonzero; ++i) {
          FieldElement acc = f.zero();
          for (std::size_t l = 0; l < k; ++l) acc = f.add(acc, f.mul(m[i * k + l], g[l][j]));
          nonzero = !acc.is_zero();
        }
        support += nonzero;
      }
      best = std::min(best, support);
    });
    weights.push_back(best);
  }
  return weights;
}

}  // namespace subcodes
