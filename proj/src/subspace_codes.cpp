#include "subcodes/subspace_codes.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "subcodes/error.hpp"

namespace subcodes {

SubspaceCode make_subspace_code(std::uint32_t q, std::size_t ambient, std::vector<Subspace> members,
                                std::size_t declared_distance, Provenance provenance) {
  SubspaceCode code{q, ambient, {}, std::nullopt, declared_distance, std::move(provenance)};
  std::unordered_set<Subspace, SubspaceHash> seen;
  for (auto& s : members) {
    require(s.ambient() == ambient && s.q() == q, ErrorCode::AmbientMismatch, "member outside the ambient space");
    require(seen.insert(s).second, ErrorCode::InvalidParams, "duplicate subspace in code");
    code.members.push_back(std::move(s));
  }
  if (!code.members.empty()) {
    const auto k = code.members.front().dim();
    if (std::all_of(code.members.begin(), code.members.end(), [k](const Subspace& s) { return s.dim() == k; }))
      code.constant_dim = k;
  }
  return code;
}

MetricReport subspace_code_min_distance(const SubspaceCode& code, SearchLimits limits) {
  return min_over_pairs(
      "subspace", code.size(),
      [&](std::size_t i, std::size_t j) { return subspace_distance(code.members[i], code.members[j]); }, limits);
}

SubspaceCode lift_rank_code(const RankCode& code) {
  const std::size_t n = code.rows();
  const std::size_t m = code.cols();
  const auto q = code.source.q();
  std::vector<Subspace> members;
  members.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    members.push_back(Subspace::from_rref(FqMatrix::identity(q, n).hconcat(code.matrix(i))));
  }
  Provenance prov{"lifted_rank_code", code.provenance.params, {}};
  prov.with("source", code.provenance.construction);
  return make_subspace_code(q, n + m, std::move(members), 2 * code.declared_distance, std::move(prov));
}

Subspace scale_subspace(const Field& field, const Subspace& v, FieldElement x) {
  return image(v, field.multiplication_matrix(x));
}

SubspaceCode spread(std::uint32_t q, std::size_t k_plus_1, std::size_t n_plus_1) {
  require(k_plus_1 >= 1 && n_plus_1 >= 1, ErrorCode::InvalidParams, "dimensions must be positive");
  require(n_plus_1 % k_plus_1 == 0, ErrorCode::DivisibilityViolation,
          std::to_string(k_plus_1) + " does not divide " + std::to_string(n_plus_1));
  const Field field = Field::create(q, static_cast<int>(n_plus_1));
  std::vector<FqVector> sub_vectors;
  for (auto x : field.elements())
    if (field.subfield_member(x, static_cast<int>(k_plus_1))) sub_vectors.push_back(field.coeffs(x));
  const Subspace subfield = span(q, n_plus_1, sub_vectors);
  require(subfield.dim() == k_plus_1, ErrorCode::InternalConsistency, "subfield has the wrong dimension");

  std::vector<Subspace> members;
  std::vector<bool> covered(field.order(), false);
  for (auto x : field.elements()) {
    if (x.is_zero() || covered[x.index]) continue;
    Subspace line = scale_subspace(field, subfield, x);
    for (const auto& v : line.vectors()) covered[field.from_coeffs(v).index] = true;
    members.push_back(std::move(line));
  }
  Provenance prov{"spread", {}, {}};
  prov.with("q", std::to_string(q))
      .with("k_plus_1", std::to_string(k_plus_1))
      .with("n_plus_1", std::to_string(n_plus_1));
  prov.note("members are x * F_{q^{k+1}} for x in canonical element order");
  return make_subspace_code(q, n_plus_1, std::move(members), 2 * k_plus_1, std::move(prov));
}

namespace {

std::vector<FieldElement> nonzero_elements(const Field& field, const Subspace& v) {
  std::vector<FieldElement> out;
  for (const auto& vec : v.vectors()) {
    auto e = field.from_coeffs(vec);
    if (!e.is_zero()) out.push_back(e);
  }
  return out;
}

// Canonical representative of the line a F_q: the smallest nonzero multiple.
FieldElement line_of(const Field& field, FieldElement a) {
  FieldElement best = a;
  for (std::uint32_t c = 2; c < field.q(); ++c) best = std::min(best, field.mul(field.scalar(c), a));
  return best;
}

}  // namespace

bool sidon_check(const Field& field, const Subspace& v, std::uint64_t max_elements) {
  require(v.ambient() == static_cast<std::size_t>(field.degree()) && v.q() == field.q(),
          ErrorCode::AmbientMismatch, "subspace is not inside the field");
  require(checked_power(field.q(), v.dim(), max_elements) <= max_elements, ErrorCode::EnumerationTooLarge,
          "subspace too large for an exhaustive Sidon check");
  const auto elems = nonzero_elements(field, v);
  std::vector<FieldElement> lines(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) lines[i] = line_of(field, elems[i]);

  // product -> the unordered pair of lines that first produced it
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) {
      const auto prod = field.mul(elems[i], elems[j]).index;
      auto key = std::minmax(lines[i].index, lines[j].index);
      auto [it, inserted] = seen.try_emplace(prod, key);
      if (!inserted && it->second != std::pair<std::uint64_t, std::uint64_t>(key)) return false;
    }
  }
  return true;
}

std::optional<Subspace> sidon_search(const Field& field, std::size_t k) {
  const auto n = static_cast<std::size_t>(field.degree());
  require(k >= 1 && 2 * k < n, ErrorCode::PreconditionViolation, "Sidon search needs 1 <= k < n/2");
  for (auto& candidate : enumerate_subspaces(field.q(), n, k)) {
    if (sidon_check(field, candidate)) return candidate;
  }
  return std::nullopt;
}

SubspaceCode orbit_cyclic_code(const Field& field, const Subspace& v) {
  const auto n = static_cast<std::size_t>(field.degree());
  require(v.ambient() == n && v.q() == field.q(), ErrorCode::AmbientMismatch, "subspace is not inside the field");
  std::vector<Subspace> members;
  std::unordered_set<Subspace, SubspaceHash> seen;
  for (auto x : field.elements()) {
    if (x.is_zero()) continue;
    auto image = scale_subspace(field, v, x);
    if (seen.insert(image).second) members.push_back(std::move(image));
  }
  const bool sidon = checked_power(field.q(), v.dim(), 1U << 16) <= (1U << 16) && sidon_check(field, v);
  Provenance prov{"orbit_cyclic", {}, {}};
  prov.with("q", std::to_string(field.q())).with("n", std::to_string(n)).with("k", std::to_string(v.dim()));
  prov.with("sidon", sidon ? "true" : "false");
  std::size_t declared = 0;
  if (sidon && v.dim() >= 1) {
    declared = 2 * v.dim() - 2;
  } else if (members.size() >= 2) {
    declared = subspace_code_min_distance(make_subspace_code(field.q(), n, members, 0)).min;
  }
  return make_subspace_code(field.q(), n, std::move(members), declared, std::move(prov));
}

BlockEnlargedFamily block_enlarged_family(const Field& field, std::size_t t, BlockEnlargedOptions options) {
  const auto n = static_cast<std::size_t>(field.degree());
  require(n % 2 == 0, ErrorCode::InvalidParams, "block enlargement needs even n");
  const std::size_t half = n / 2;
  require(t >= half && t < n, ErrorCode::ParameterOutOfRange, "need n/2 <= t < n");
  const auto q = field.q();

  BlockEnlargedFamily fam{.code = {}, .words = VectorCode{.field = field}};
  std::vector<FqMatrix> gs;
  if (options.identity_only) {
    gs.push_back(FqMatrix::identity(q, n));
  } else {
    const Field small = Field::create(q, static_cast<int>(half));
    std::vector<FqMatrix> h2s;
    for (auto y : small.elements()) {
      if (y.is_zero()) continue;
      auto m = small.multiplication_matrix(y);
      bool clash = false;
      for (const auto& chosen : h2s) {
        for (std::size_t i = 0; i < half && !clash; ++i)
          for (std::size_t j = 0; j < half && !clash; ++j)
            clash = std::equal(m.row(i).begin(), m.row(i).end(), chosen.row(j).begin());
        if (clash) break;
      }
      if (clash) continue;
      h2s.push_back(std::move(m));
      fam.h2_elements.push_back(y);
    }
    require(!h2s.empty(), ErrorCode::InfeasibleParameters, "no admissible H2 matrices");
    const RankCode h1_code = gabidulin_code(small, t - half, options.materialize);
    fam.h1_count = h1_code.size();
    for (const auto& h2 : h2s) {
      for (std::size_t i = 0; i < h1_code.size(); ++i) {
        const FqMatrix top = FqMatrix::identity(q, half).hconcat(h1_code.matrix(i));
        const FqMatrix bottom = FqMatrix(q, half, half).hconcat(h2);
        gs.push_back(top.vconcat(bottom));
      }
    }
  }
  fam.g_count = gs.size();

  const RankCode a_code = gabidulin_code(field, t, options.materialize);
  fam.a_count = a_code.size();
  require(fam.g_count * fam.a_count <= options.materialize.max_members, ErrorCode::EnumerationTooLarge,
          "block family too large to materialize");

  const Field wide = Field::create(q, static_cast<int>(2 * n));
  std::vector<FqMatrix> a_mats;
  a_mats.reserve(a_code.size());
  for (std::size_t i = 0; i < a_code.size(); ++i) a_mats.push_back(a_code.matrix(i));

  std::vector<Subspace> subspaces;
  std::unordered_set<Subspace, SubspaceHash> seen;
  std::vector<Word> words;
  words.reserve(fam.g_count * fam.a_count);
  for (const auto& g : gs) {
    for (const auto& a : a_mats) {
      const FqMatrix rows = g.hconcat(g * a);
      Word w{wide, {}};
      for (std::size_t r = 0; r < n; ++r) w.symbols.push_back(wide.from_coeffs(rows.row(r)));
      words.push_back(std::move(w));
      auto s = row_space(rows);
      if (seen.insert(s).second) subspaces.push_back(std::move(s));
    }
  }

  Provenance prov{"block_enlarged", {}, {}};
  prov.with("q", std::to_string(q)).with("n", std::to_string(n)).with("t", std::to_string(t));
  prov.with("g_count", std::to_string(fam.g_count));
  prov.note("H2 chosen greedily in canonical element order of F_{q^{n/2}}");
  fam.code = make_subspace_code(q, 2 * n, std::move(subspaces), 2 * (n - t), prov);
  fam.words = make_vector_code(wide, n, std::move(words), prov);
  fam.formula = cardinality_calculator(CardinalityFormula::thm7_2, {q, n, t, 0}).value;

  if (options.verify) {
    auto attempt = [&](auto&& fn) -> std::optional<MetricReport> {
      try {
        return fn();
      } catch (const Error& e) {
        if (e.code() == ErrorCode::SearchTooLarge || e.code() == ErrorCode::TooFewCodewords) return std::nullopt;
        throw;
      }
    };
    fam.subspace_report = attempt([&] { return subspace_code_min_distance(fam.code, options.limits); });
    fam.word_subset_report = attempt([&] { return code_min_distance(fam.words, {Metric::Kind::subset, 1}, options.limits); });
    fam.word_subspace_report =
        attempt([&] { return code_min_distance(fam.words, {Metric::Kind::subspace, 1}, options.limits); });
  }
  return fam;
}

CardinalityFormula parse_cardinality_formula(const std::string& name) {
  if (name == "thm7_1") return CardinalityFormula::thm7_1;
  if (name == "cor7_1") return CardinalityFormula::cor7_1;
  if (name == "cor7_2") return CardinalityFormula::cor7_2;
  if (name == "thm7_2") return CardinalityFormula::thm7_2;
  fail(ErrorCode::InvalidParams, "unknown cardinality formula '" + name + "'");
}

std::string to_string(CardinalityFormula f) {
  switch (f) {
    case CardinalityFormula::thm7_1: return "thm7_1";
    case CardinalityFormula::cor7_1: return "cor7_1";
    case CardinalityFormula::cor7_2: return "cor7_2";
    case CardinalityFormula::thm7_2: return "thm7_2";
  }
  return "?";
}

CardinalityResult cardinality_calculator(CardinalityFormula formula, const CardinalityParams& p) {
  require(p.q >= 2 && p.n >= 1, ErrorCode::ParameterOutOfRange, "need q >= 2 and n >= 1");
  require(p.t < p.n, ErrorCode::ParameterOutOfRange, "need t < n");
  CardinalityResult out;
  const bool high_t = 2 * p.t >= p.n;
  switch (formula) {
    case CardinalityFormula::thm7_1:
      out.value = BigRational(big_pow(p.q, p.n * (p.t + 1)));
      break;
    case CardinalityFormula::cor7_1: {
      BigInt v = big_pow(p.q, p.n * (p.t + 1));
      if (high_t) {
        const auto dist = delsarte_rank_distribution(p.n, p.n - p.t, p.q);
        for (std::size_t i = p.n - p.t; i <= p.t; ++i) v += dist.counts[i];
      } else {
        out.warnings.push_back("t < n/2: only the lifted code term q^{n(t+1)} applies");
      }
      out.value = BigRational(v);
      break;
    }
    case CardinalityFormula::cor7_2: {
      if (!high_t) {
        out.warnings.push_back("t < n/2: cardinality is q^{s n (t+1)}");
        out.value = BigRational(big_pow(p.q, p.s * p.n * (p.t + 1)));
        break;
      }
      const auto dist = delsarte_rank_distribution(p.n, p.n - p.t, p.q);
      BigInt inner = 0;
      for (std::size_t i = p.t; i + p.t <= p.n; ++i) inner += dist.counts[i];
      BigInt v = 0;
      BigInt inner_pow = 1;  // inner^0 = 1, including inner = 0
      for (std::size_t j = 0; j <= p.s; ++j) {
        v += big_pow(p.q, (p.s - j) * p.n * (p.t + 1)) * inner_pow;
        inner_pow *= inner;
      }
      out.value = BigRational(v);
      break;
    }
    case CardinalityFormula::thm7_2: {
      require(p.n % 2 == 0, ErrorCode::ParameterOutOfRange, "thm7_2 needs even n");
      require(high_t, ErrorCode::ParameterOutOfRange, "thm7_2 needs t >= n/2");
      const std::size_t exponent = 3 * p.n * (p.t + 1) / 2 - p.n * p.n / 4;
      BigRational v(big_pow(p.q, exponent));
      v *= BigRational(4 * (big_pow(p.q, p.n / 2) - 1), BigInt(p.n * p.n));
      out.value = v;
      break;
    }
  }
  out.integral = boost::multiprecision::denominator(out.value) == 1;
  if (!out.integral) out.warnings.push_back("closed form is not an integer at these parameters");
  return out;
}

}  // namespace subcodes
