#pragma once

// Canonical JSON for every artifact the library produces. Objects keep their
// key order so equal values always serialize to identical bytes.

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "subcodes/bigint.hpp"
#include "subcodes/bounds.hpp"
#include "subcodes/derived_codes.hpp"
#include "subcodes/metrics.hpp"
#include "subcodes/rank_metric.hpp"
#include "subcodes/subspace_codes.hpp"

namespace subcodes {

using Json = nlohmann::ordered_json;

/// Integers beyond 2^53 become decimal strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);
/// "p/q" unless integral.
Json rational_to_json(const BigRational& v);

Json to_json(const Field& f);
Field field_from_json(const Json& j);
Json element_to_json(const Field& f, FieldElement e);
FieldElement element_from_json(const Field& f, const Json& j);
Json to_json(const Provenance& p);
Provenance provenance_from_json(const Json& j);

Json to_json(const VectorCode& c);
VectorCode vector_code_from_json(const Json& j);
Json to_json(const FoldedCode& c);
FoldedCode folded_code_from_json(const Json& j);
Json to_json(const RankCode& c);
RankCode rank_code_from_json(const Json& j);
Json to_json(const SubspaceCode& c);
SubspaceCode subspace_code_from_json(const Json& j);
Json to_json(const DifferenceSet& d);
DifferenceSet difference_set_from_json(const Json& j);

Json to_json(const MetricReport& r);
Json to_json(const RankDistribution& d);
std::string rank_distribution_csv(const RankDistribution& d);
Json to_json(const BoundReport& r);
std::string bounds_csv(const std::vector<BoundReport>& reports);

using Artifact = std::variant<VectorCode, FoldedCode, RankCode, SubspaceCode, DifferenceSet>;
Json artifact_to_json(const Artifact& a);
Artifact artifact_from_json(const Json& j);

/// Two-space indentation with a trailing newline.
std::string dump(const Json& j);
/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);
Artifact read_artifact(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

}  // namespace subcodes
