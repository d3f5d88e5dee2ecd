#include "subcodes/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "subcodes/bounds.hpp"
#include "subcodes/derived_codes.hpp"
#include "subcodes/error.hpp"
#include "subcodes/rank_metric.hpp"
#include "subcodes/subspace_codes.hpp"

namespace subcodes {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void SuiteReport::check(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string SuiteReport::text() const {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS " : "FAIL ") + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  for (const auto& f : findings) out += "FINDING " + f + '\n';
  return out;
}

Word random_word(const Field& field, std::size_t length, Rng& rng) {
  Word w{field, {}};
  for (std::size_t i = 0; i < length; ++i) w.symbols.push_back(field.from_index(rng.below(field.order())));
  return w;
}

FieldMatrix random_generator(const Field& field, std::size_t k, std::size_t n, Rng& rng) {
  require(k >= 1 && k <= n, ErrorCode::ParameterOutOfRange, "need 1 <= k <= n");
  for (;;) {
    FieldMatrix g;
    for (std::size_t i = 0; i < k; ++i) g.push_back(random_word(field, n, rng).symbols);
    if (field_rank(field, g) == k) return g;
  }
}

namespace {

std::string counts_text(const RankDistribution& d) {
  std::string s;
  for (std::size_t i = 0; i < d.counts.size(); ++i) s += (i ? "," : "") + d.counts[i].str();
  return s;
}

void pseudometric(SuiteReport& r, const VerifyOptions& o) {
  const Field f = Field::create(2, 3);
  Rng rng(o.seed);
  std::size_t bad_s = 0, bad_subset = 0, bad_axioms = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Word x = random_word(f, 5, rng), y = random_word(f, 5, rng), z = random_word(f, 5, rng);
    bad_s += subspace_distance(x, z) > subspace_distance(x, y) + subspace_distance(y, z);
    bad_subset += subset_distance(x, z) > subset_distance(x, y) + subset_distance(y, z);
    bad_axioms += subspace_distance(x, x) != 0 || subset_distance(x, x) != 0 ||
                  subspace_distance(x, y) != subspace_distance(y, x) || subset_distance(x, y) != subset_distance(y, x);
  }
  const auto n = std::to_string(o.samples);
  r.check("triangle_subspace", bad_s == 0, std::to_string(bad_s) + " violations in " + n + " triples");
  r.check("triangle_subset", bad_subset == 0, std::to_string(bad_subset) + " violations in " + n + " triples");
  r.check("symmetry_and_zero", bad_axioms == 0, std::to_string(bad_axioms) + " violations");
}

bool chain_holds(const Word& a, const Word& b) {
  const auto ds = subspace_distance(a, b), dsub = subset_distance(a, b), di = insdel_distance(a, b),
             dh = hamming_distance(a, b);
  return ds <= dsub && dsub <= di && di <= 2 * dh;
}

void chain(SuiteReport& r, const VerifyOptions& o) {
  const Field f8 = Field::create(2, 3);
  Rng rng(o.seed);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Word a = random_word(f8, 5, rng), b = random_word(f8, 5, rng);
    bad += !chain_holds(a, b);
  }
  r.check("chain_random_F8^5", bad == 0, std::to_string(bad) + " violations in " + std::to_string(o.samples) + " pairs");

  const Field f4 = Field::create(2, 2);
  std::vector<Word> all;
  for (auto a : f4.elements())
    for (auto b : f4.elements()) all.push_back({f4, {a, b}});
  std::size_t bad_ex = 0, pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j, ++pairs) bad_ex += !chain_holds(all[i], all[j]);
  r.check("chain_exhaustive_F4^2", bad_ex == 0,
          std::to_string(bad_ex) + " violations in " + std::to_string(pairs) + " pairs");
}

void delsarte(SuiteReport& r, const VerifyOptions&) {
  for (auto [n, t] : {std::pair<int, std::size_t>{3, 1}, {4, 2}}) {
    const Field f = Field::create(2, n);
    const auto code = gabidulin_code(f, t);
    const auto formula = delsarte_rank_distribution(static_cast<std::size_t>(n), n - t, 2);
    const auto census = empirical_rank_distribution(code);
    r.check("delsarte_q2_n" + std::to_string(n) + "_t" + std::to_string(t), formula.counts == census.counts,
            "formula " + counts_text(formula) + " census " + counts_text(census) + " total " + census.total().str());
  }
}

bool partitions_nonzero(const SubspaceCode& sc) {
  std::map<FqVector, int> hits;
  for (const auto& s : sc.members)
    for (const auto& v : s.vectors())
      if (std::any_of(v.begin(), v.end(), [](auto c) { return c != 0; })) ++hits[v];
  const std::uint64_t nonzero = checked_power(sc.q, sc.ambient, UINT64_MAX) - 1;
  return hits.size() == nonzero && std::all_of(hits.begin(), hits.end(), [](const auto& h) { return h.second == 1; });
}

void spread_suite(SuiteReport& r, const VerifyOptions&) {
  for (auto [n, expected] : {std::pair<std::size_t, std::size_t>{4, 5}, {6, 21}}) {
    const auto sc = spread(2, 2, n);
    const auto tag = "spread_2_2_" + std::to_string(n);
    r.check(tag + "_size", sc.size() == expected, std::to_string(sc.size()) + " members");
    r.check(tag + "_partition", partitions_nonzero(sc), "each nonzero vector in exactly one member");
    const auto rep = subspace_code_min_distance(sc);
    r.check(tag + "_distance", rep.min == 4 && sc.declared_distance == 4, "min " + std::to_string(rep.min));
  }
}

void orbit_suite(SuiteReport& r, const VerifyOptions&) {
  const Field f = Field::create(2, 5);
  const auto v = sidon_search(f, 2);
  r.check("sidon_found", v.has_value(), "q=2 n=5 k=2");
  if (!v) return;
  r.check("sidon_verified", sidon_check(f, *v));
  const auto code = orbit_cyclic_code(f, *v);
  r.check("orbit_size", code.size() == 31, std::to_string(code.size()) + " members");
  const auto rep = subspace_code_min_distance(code);
  r.check("orbit_distance", rep.min == 2, "min " + std::to_string(rep.min) + ", expected 2k-2 = 2");
  std::unordered_set<Subspace, SubspaceHash> members(code.members.begin(), code.members.end());
  const auto alpha = f.primitive();
  const bool closed = std::all_of(code.members.begin(), code.members.end(),
                                  [&](const Subspace& s) { return members.count(scale_subspace(f, s, alpha)) == 1; });
  r.check("orbit_cyclic_closure", closed);
  const auto words = partial_span_code(code, 2);
  const auto di = code_min_distance(words, {Metric::Kind::insdel, 1}).min;
  const auto ds = code_min_distance(words, {Metric::Kind::subspace, 1}).min;
  r.check("partial_span_insdel", di >= 2, "insdel " + std::to_string(di));
  r.check("partial_span_subspace", ds >= 2, "subspace " + std::to_string(ds));
}

void thm21(SuiteReport& r, const VerifyOptions& o) {
  const Field f = Field::create(2, 1);
  Rng rng(o.seed);
  std::size_t ok = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < o.codes; ++i) {
    const std::size_t n = 2 + rng.below(5);
    const std::size_t k = n / 2 + 1 + rng.below(n - n / 2);
    const auto code = linear_code(f, random_generator(f, k, n, rng));
    try {
      const Word x = cyclic_shift_witness(code);
      const Word y = left_shift(x);
      const bool nonzero = std::any_of(x.symbols.begin(), x.symbols.end(), [](auto s) { return !s.is_zero(); });
      if (nonzero && is_codeword(code, x.symbols) && is_codeword(code, y.symbols) && subset_distance(x, y) == 0)
        ++ok;
      else if (first_failure.empty())
        first_failure = "code " + std::to_string(i);
    } catch (const Error& e) {
      if (first_failure.empty()) first_failure = "code " + std::to_string(i) + ": " + e.what();
    }
  }
  r.check("cyclic_shift_witness", ok == o.codes,
          std::to_string(ok) + "/" + std::to_string(o.codes) + (first_failure.empty() ? "" : " first failure " + first_failure));
}

void thm91(SuiteReport& r, const VerifyOptions&) {
  for (int n : {3, 4, 5}) {
    const Field f = Field::create(2, n);
    const auto ds = singer_difference_set(f);
    const auto tag = "singer_n" + std::to_string(n);
    r.check(tag + "_params", ds.v == (1U << n) - 1 && ds.k == (1U << (n - 1)) - 1 && ds.lambda == (1U << (n - 2)) - 1,
            "(" + std::to_string(ds.v) + "," + std::to_string(ds.k) + "," + std::to_string(ds.lambda) + ")");
    const auto m = m_of_D(f, ds.members);
    r.check(tag + "_m_of_D", m == ds.lambda, "m(D) = " + std::to_string(m));

    const auto code = evaluation_folded_code(f, ds.members);
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::size_t i = 0; i < code.size(); ++i)
      for (std::size_t j = i + 1; j < code.size(); ++j) {
        const auto d = folded_subset_distance(code.codewords[i], code.codewords[j]);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
    const std::size_t expected = 2 * (ds.k - ds.lambda);
    r.check(tag + "_equidistant", lo == expected && hi == expected,
            "subset distance range [" + std::to_string(lo) + "," + std::to_string(hi) + "], expected " +
                std::to_string(expected));
    const std::size_t claimed = std::size_t{1} << (n - 2);
    r.findings.push_back(tag + ": subset distance measured " + std::to_string(lo) + "; stated D - m(D) = " +
                         std::to_string(ds.k - m) + "; claimed 2^(n-2) = " + std::to_string(claimed));
    r.findings.push_back(tag + ": code size measured " + std::to_string(code.size()) + "; claimed 2^(n-2) = " +
                         std::to_string(claimed));
  }
}

const std::vector<std::pair<std::string, std::function<void(SuiteReport&, const VerifyOptions&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<void(SuiteReport&, const VerifyOptions&)>>> all{
      {"pseudometric", pseudometric}, {"chain", chain}, {"delsarte", delsarte}, {"spread", spread_suite},
      {"orbit", orbit_suite},         {"thm21", thm21}, {"thm91", thm91}};
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  SuiteReport report{name, {}, {}};
  bool found = false;
  for (const auto& [suite, fn] : suites()) {
    if (name != "all" && name != suite) continue;
    found = true;
    fn(report, options);
  }
  require(found, ErrorCode::InvalidParams, "unknown suite '" + name + "'");
  return report;
}

}  // namespace subcodes
