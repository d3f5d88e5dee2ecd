#include "subcodes/serialize.hpp"

#include <fstream>
#include <sstream>

#include "subcodes/error.hpp"

namespace subcodes {

namespace {

constexpr std::uint64_t kSafeInteger = std::uint64_t{1} << 53;

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad field '") + key + "': " + e.what());
  }
}

const Json& at(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_kind(const Json& j, const std::string& kind) {
  const auto actual = get<std::string>(j, "kind");
  require(actual == kind, ErrorCode::ParseError, "expected kind '" + kind + "', found '" + actual + "'");
}

Json word_to_json(const Field& f, const std::vector<FieldElement>& symbols) {
  Json out = Json::array();
  for (auto s : symbols) out.push_back(element_to_json(f, s));
  return out;
}

std::vector<FieldElement> word_from_json(const Field& f, const Json& j) {
  require(j.is_array(), ErrorCode::ParseError, "word must be an array");
  std::vector<FieldElement> out;
  for (const auto& e : j) out.push_back(element_from_json(f, e));
  return out;
}

Json matrix_to_json(const FqMatrix& m) { return m.to_rows(); }

FqMatrix matrix_from_json(std::uint32_t q, const Json& j) {
  std::vector<std::vector<std::uint32_t>> rows;
  try {
    rows = j.get<std::vector<std::vector<std::uint32_t>>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad matrix: ") + e.what());
  }
  for (const auto& r : rows)
    for (auto v : r) require(v < q, ErrorCode::ParseError, "matrix entry out of range");
  require(!rows.empty(), ErrorCode::ParseError, "empty matrix");
  return FqMatrix::from_rows(q, rows.front().size(), rows);
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (abs(v) <= kSafeInteger) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad integer string");
    }
  }
  fail(ErrorCode::ParseError, "expected an integer");
}

Json rational_to_json(const BigRational& v) {
  if (denominator(v) == 1) return big_to_json(numerator(v));
  return Json(numerator(v).str() + "/" + denominator(v).str());
}

Json to_json(const Field& f) {
  return Json{{"q", f.q()}, {"n", f.degree()}, {"modulus", f.modulus()}};
}

Field field_from_json(const Json& j) {
  const auto q = get<std::uint32_t>(j, "q");
  const auto n = get<int>(j, "n");
  const auto modulus = get<std::vector<std::uint32_t>>(j, "modulus");
  return Field::create(q, n, modulus);
}

Json element_to_json(const Field& f, FieldElement e) { return f.coeffs(e); }

FieldElement element_from_json(const Field& f, const Json& j) {
  std::vector<std::uint32_t> c;
  try {
    c = j.get<std::vector<std::uint32_t>>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad field element: ") + e.what());
  }
  require(c.size() == static_cast<std::size_t>(f.degree()), ErrorCode::ParseError, "field element has wrong length");
  return f.from_coeffs(c);
}

Json to_json(const Provenance& p) {
  Json params = Json::object();
  for (const auto& [k, v] : p.params) params[k] = v;
  Json out{{"construction", p.construction}, {"params", params}};
  if (!p.notes.empty()) out["notes"] = p.notes;
  return out;
}

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  if (j.is_null()) return p;
  p.construction = get<std::string>(j, "construction");
  for (const auto& [k, v] : at(j, "params").items()) p.params.emplace_back(k, v.get<std::string>());
  if (j.contains("notes")) p.notes = get<std::vector<std::string>>(j, "notes");
  return p;
}

Json to_json(const VectorCode& c) {
  Json words = Json::array();
  for (const auto& w : c.codewords) words.push_back(word_to_json(c.field, w.symbols));
  Json out{{"kind", "vector_code"}, {"field", to_json(c.field)}, {"length", c.length}, {"codewords", words}};
  if (c.generator) {
    Json g = Json::array();
    for (const auto& row : *c.generator) g.push_back(word_to_json(c.field, row));
    out["generator"] = g;
  }
  out["provenance"] = to_json(c.provenance);
  return out;
}

VectorCode vector_code_from_json(const Json& j) {
  expect_kind(j, "vector_code");
  const Field f = field_from_json(at(j, "field"));
  const auto length = get<std::size_t>(j, "length");
  std::vector<Word> words;
  for (const auto& w : at(j, "codewords")) words.push_back({f, word_from_json(f, w)});
  auto code = make_vector_code(f, length, std::move(words),
                               provenance_from_json(j.contains("provenance") ? j.at("provenance") : Json()));
  if (j.contains("generator")) {
    FieldMatrix g;
    for (const auto& row : j.at("generator")) {
      g.push_back(word_from_json(f, row));
      require(g.back().size() == length, ErrorCode::ParseError, "generator row has wrong length");
    }
    require(field_rank(f, g) == g.size(), ErrorCode::ParseError, "generator rows are dependent");
    code.generator = std::move(g);
  }
  return code;
}

Json to_json(const FoldedCode& c) {
  Json words = Json::array();
  for (const auto& w : c.codewords) {
    Json blocks = Json::array();
    for (const auto& b : w.blocks) blocks.push_back(word_to_json(c.field, b));
    words.push_back(blocks);
  }
  return Json{{"kind", "folded_code"}, {"field", to_json(c.field)}, {"block_len", c.block_len},
              {"codewords", words}, {"provenance", to_json(c.provenance)}};
}

FoldedCode folded_code_from_json(const Json& j) {
  expect_kind(j, "folded_code");
  FoldedCode c{field_from_json(at(j, "field")), get<std::size_t>(j, "block_len")};
  require(c.block_len >= 1, ErrorCode::ParseError, "block_len must be positive");
  for (const auto& w : at(j, "codewords")) {
    FoldedWord fw{c.block_len, {}};
    for (const auto& b : w) {
      fw.blocks.push_back(word_from_json(c.field, b));
      require(fw.blocks.back().size() == c.block_len, ErrorCode::ParseError, "block has wrong length");
    }
    c.codewords.push_back(std::move(fw));
  }
  if (j.contains("provenance")) c.provenance = provenance_from_json(j.at("provenance"));
  return c;
}

Json to_json(const RankCode& c) {
  Json out{{"kind", "rank_code"}, {"field", to_json(c.source)}};
  if (!c.square()) out["target_field"] = to_json(c.target);
  out["t"] = c.t;
  out["linear"] = c.linear;
  out["declared_distance"] = c.declared_distance;
  if (!c.members.empty()) {
    Json members = Json::array();
    for (const auto& p : c.members) members.push_back(word_to_json(c.target, p.coeffs));
    out["members"] = members;
  } else {
    Json mats = Json::array();
    for (const auto& m : c.explicit_members) mats.push_back(matrix_to_json(m));
    out["matrices"] = mats;
  }
  out["provenance"] = to_json(c.provenance);
  return out;
}

RankCode rank_code_from_json(const Json& j) {
  expect_kind(j, "rank_code");
  const Field src = field_from_json(at(j, "field"));
  const Field dst = j.contains("target_field") ? field_from_json(j.at("target_field")) : src;
  RankCode c{src, dst, get<std::size_t>(j, "t"), {}, {}, get<std::size_t>(j, "declared_distance"),
             get<bool>(j, "linear"), {}};
  if (j.contains("members")) {
    for (const auto& m : j.at("members")) {
      LinearizedPoly p{word_from_json(dst, m)};
      require(p.coeffs.size() == c.t + 1, ErrorCode::ParseError, "member has wrong number of coefficients");
      c.members.push_back(std::move(p));
    }
  } else {
    for (const auto& m : at(j, "matrices")) c.explicit_members.push_back(matrix_from_json(src.q(), m));
  }
  if (j.contains("provenance")) c.provenance = provenance_from_json(j.at("provenance"));
  return c;
}

Json to_json(const SubspaceCode& c) {
  Json subspaces = Json::array();
  for (const auto& s : c.members) subspaces.push_back(Json{{"basis", matrix_to_json(s.basis())}});
  Json out{{"kind", "subspace_code"}, {"q", c.q}, {"ambient", c.ambient}};
  out["constant_dim"] = c.constant_dim ? Json(*c.constant_dim) : Json(nullptr);
  out["declared_distance"] = c.declared_distance;
  out["subspaces"] = subspaces;
  out["provenance"] = to_json(c.provenance);
  return out;
}

SubspaceCode subspace_code_from_json(const Json& j) {
  expect_kind(j, "subspace_code");
  const auto q = get<std::uint32_t>(j, "q");
  require(is_prime(q), ErrorCode::ParseError, "q must be prime");
  const auto ambient = get<std::size_t>(j, "ambient");
  std::vector<Subspace> members;
  for (const auto& s : at(j, "subspaces")) {
    const auto& basis = at(s, "basis");
    if (basis.empty()) {
      members.emplace_back(q, ambient);
      continue;
    }
    FqMatrix m = matrix_from_json(q, basis);
    require(m.cols() == ambient, ErrorCode::ParseError, "basis has the wrong ambient dimension");
    require(is_rref_basis(m), ErrorCode::ParseError, "basis is not in reduced row echelon form");
    members.push_back(Subspace::from_rref(std::move(m)));
  }
  auto code = make_subspace_code(q, ambient, std::move(members), get<std::size_t>(j, "declared_distance"),
                                 provenance_from_json(j.contains("provenance") ? j.at("provenance") : Json()));
  if (j.contains("constant_dim") && !j.at("constant_dim").is_null())
    require(code.constant_dim == get<std::size_t>(j, "constant_dim"), ErrorCode::ParseError,
            "constant_dim does not match the members");
  return code;
}

Json to_json(const DifferenceSet& d) {
  return Json{{"kind", "difference_set"}, {"field", to_json(d.field)}, {"members", word_to_json(d.field, d.members)},
              {"v", d.v},          {"k", d.k},                  {"lambda", d.lambda}};
}

DifferenceSet difference_set_from_json(const Json& j) {
  expect_kind(j, "difference_set");
  const Field f = field_from_json(at(j, "field"));
  DifferenceSet d{f, word_from_json(f, at(j, "members")), get<std::uint64_t>(j, "v"), get<std::uint64_t>(j, "k"),
                  get<std::uint64_t>(j, "lambda")};
  require(d.v == f.order() - 1 && d.k == d.members.size(), ErrorCode::ParseError, "parameters do not match members");
  require(is_difference_set(f, d.members, d.lambda), ErrorCode::ParseError, "members do not form a difference set");
  return d;
}

Json to_json(const MetricReport& r) {
  return Json{{"metric", r.metric}, {"min", r.min}, {"witness_i", r.witness_i}, {"witness_j", r.witness_j},
              {"pairs", r.pairs}};
}

Json to_json(const RankDistribution& d) {
  Json counts = Json::array();
  for (const auto& c : d.counts) counts.push_back(big_to_json(c));
  return Json{{"counts", counts}};
}

std::string rank_distribution_csv(const RankDistribution& d) {
  std::string out = "rank,count\n";
  for (std::size_t i = 0; i < d.counts.size(); ++i) out += std::to_string(i) + "," + d.counts[i].str() + "\n";
  return out;
}

Json to_json(const BoundReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json out{{"bound", r.name}, {"params", params}, {"value", big_to_json(r.value)}};
  if (r.observed) {
    out["observed"] = big_to_json(*r.observed);
    out["relation"] = r.relation;
  }
  if (r.satisfied) out["satisfied"] = *r.satisfied;
  return out;
}

std::string bounds_csv(const std::vector<BoundReport>& reports) {
  std::string out = "bound,params,value,observed,satisfied\n";
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ";") + k + "=" + v;
    out += r.name + "," + params + "," + r.value.str() + "," + (r.observed ? r.observed->str() : "") + "," +
           (r.satisfied ? (*r.satisfied ? "true" : "false") : "") + "\n";
  }
  return out;
}

Json artifact_to_json(const Artifact& a) {
  return std::visit([](const auto& v) { return to_json(v); }, a);
}

Artifact artifact_from_json(const Json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "vector_code") return vector_code_from_json(j);
  if (kind == "folded_code") return folded_code_from_json(j);
  if (kind == "rank_code") return rank_code_from_json(j);
  if (kind == "subspace_code") return subspace_code_from_json(j);
  if (kind == "difference_set") return difference_set_from_json(j);
  fail(ErrorCode::ParseError, "unknown artifact kind '" + kind + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Artifact read_artifact(const std::filesystem::path& path) { return artifact_from_json(parse_json(read_file(path))); }

}  // namespace subcodes
