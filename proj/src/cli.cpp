#include "subcodes/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "subcodes/bounds.hpp"
#include "subcodes/channel.hpp"
#include "subcodes/derived_codes.hpp"
#include "subcodes/error.hpp"
#include "subcodes/serialize.hpp"
#include "subcodes/subspace_codes.hpp"
#include "subcodes/verify.hpp"

namespace fs = std::filesystem;

namespace subcodes {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  require(EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) == 1,
          ErrorCode::InternalConsistency, "SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return os.str();
}

std::string sha256_file(const fs::path& path) { return sha256_hex(read_file(path)); }

void write_atomic(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(f), ErrorCode::InvalidParams, "cannot write " + tmp.string());
    f << contents;
    f.close();
    require(!f.fail(), ErrorCode::InvalidParams, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

namespace {

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 1;
  bool force = false;
  std::string out;
};

struct Run {
  std::vector<std::string> argv;
  std::string command;
  Json params = Json::object();
  std::optional<std::vector<std::uint32_t>> modulus;
  std::vector<fs::path> inputs;
  std::vector<fs::path> outputs;
  std::ostream* out = nullptr;
  Globals* globals = nullptr;

  SearchLimits limits() const { return {SearchLimits{}.max_pairs, globals->force}; }

  /// Sends text to --out (or `path` when given) or else to stdout.
  void emit(const std::string& text, std::optional<fs::path> path = std::nullopt) {
    if (!path && globals->out.empty()) {
      *out << text;
      return;
    }
    const fs::path target = path ? *path : fs::path(globals->out);
    write_atomic(target, text);
    outputs.push_back(target);
  }

  Artifact load(const std::string& path) {
    inputs.emplace_back(path);
    return read_artifact(path);
  }
};

template <class T>
T expect(Artifact a, const char* what) {
  if (auto* v = std::get_if<T>(&a)) return std::move(*v);
  fail(ErrorCode::ParseError, std::string("input is not a ") + what);
}

void record_min(Provenance& p, const std::string& key, std::size_t measured) {
  p.with("verified_" + key, std::to_string(measured));
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::uint32_t q = 2;
  int n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::size_t l = 0;
  std::string from;
  bool partial = false;
  bool identity_only = false;
  bool words = false;
};

int finish_subspace(Run& run, SubspaceCode code) {
  if (code.size() >= 2) {
    const auto rep = subspace_code_min_distance(code, run.limits());
    record_min(code.provenance, "subspace_distance", rep.min);
    if (rep.min < code.declared_distance) {
      run.emit(dump(to_json(code)));
      return exit_verification_failed;
    }
  }
  run.emit(dump(to_json(code)));
  return exit_ok;
}

int finish_vector(Run& run, VectorCode code, std::size_t guaranteed, Metric::Kind kind) {
  int status = exit_ok;
  if (code.size() >= 2) {
    for (auto m : {Metric::Kind::subspace, Metric::Kind::subset, Metric::Kind::insdel}) {
      const auto rep = code_min_distance(code, {m, 1}, run.limits());
      record_min(code.provenance, Metric{m, 1}.name() + "_distance", rep.min);
      if (m == kind && rep.min < guaranteed) status = exit_verification_failed;
    }
    code.provenance.with("guaranteed_" + Metric{kind, 1}.name(), std::to_string(guaranteed));
  }
  run.emit(dump(to_json(code)));
  return status;
}

int cmd_construct(Run& run, const ConstructArgs& a) {
  const auto& kind = a.kind;
  auto need = [](bool ok, const std::string& what) { require(ok, ErrorCode::InvalidParams, what); };
  if (kind == "gabidulin" || kind == "lifted-mrd") {
    need(a.n >= 1, "--n is required");
    const Field f = Field::create(a.q, a.n);
    run.modulus = f.modulus();
    auto rc = gabidulin_code(f, a.t);
    const auto d = rank_distance_of_code(rc, run.limits());
    if (kind == "lifted-mrd") return finish_subspace(run, lift_rank_code(rc));
    record_min(rc.provenance, "rank_distance", d);
    run.emit(dump(to_json(rc)));
    return d >= rc.declared_distance ? exit_ok : exit_verification_failed;
  }
  if (kind == "spread") {
    need(a.n >= 1 && a.k >= 1, "--k and --n are required");
    auto sc = spread(a.q, a.k, static_cast<std::size_t>(a.n));
    run.modulus = Field::create(a.q, a.n).modulus();
    return finish_subspace(run, std::move(sc));
  }
  if (kind == "sidon-orbit") {
    need(a.n >= 1 && a.k >= 1, "--k and --n are required");
    const Field f = Field::create(a.q, a.n);
    run.modulus = f.modulus();
    const auto v = sidon_search(f, a.k);
    if (!v) {
      *run.out << "no Sidon space of dimension " << a.k << " found\n";
      return exit_verification_failed;
    }
    return finish_subspace(run, orbit_cyclic_code(f, *v));
  }
  if (kind == "block-enlarged") {
    need(a.n >= 1, "--n is required");
    const Field f = Field::create(a.q, a.n);
    run.modulus = f.modulus();
    BlockEnlargedOptions opts;
    opts.identity_only = a.identity_only;
    opts.verify = false;
    auto fam = block_enlarged_family(f, a.t, opts);
    for (auto* p : {&fam.code.provenance, &fam.words.provenance}) {
      p->with("formula", rational_to_json(fam.formula).dump())
          .with("words", std::to_string(fam.words.size()))
          .with("distinct_subspaces", std::to_string(fam.code.size()));
    }
    if (a.words) return finish_vector(run, std::move(fam.words), 0, Metric::Kind::subset);
    return finish_subspace(run, std::move(fam.code));
  }
  if (kind == "span" || kind == "all-vectors") {
    need(!a.from.empty() && a.l >= 1, "--from and --l are required");
    auto sc = expect<SubspaceCode>(run.load(a.from), "subspace code");
    run.modulus = span_field(sc).modulus();
    if (kind == "all-vectors")
      return finish_vector(run, all_vectors_code(sc, a.l), all_vectors_guarantee(sc, a.l), Metric::Kind::insdel);
    if (a.partial) {
      const std::size_t t = *sc.constant_dim - sc.declared_distance / 2;
      auto code = partial_span_code(sc, a.l);
      return finish_vector(run, std::move(code), 2 * (a.l - t), Metric::Kind::subspace);
    }
    return finish_vector(run, span_code(sc, a.l), sc.declared_distance, Metric::Kind::subspace);
  }
  if (kind == "folded-eval" || kind == "singer-ds") {
    DifferenceSet ds = [&] {
      if (!a.from.empty()) return expect<DifferenceSet>(run.load(a.from), "difference set");
      need(a.n >= 1, "--n is required");
      return singer_difference_set(Field::create(2, a.n));
    }();
    run.modulus = ds.field.modulus();
    if (kind == "singer-ds") {
      run.emit(dump(to_json(ds)));
      return exit_ok;
    }
    auto code = evaluation_folded_code(ds.field, ds.members);
    const auto rep = folded_code_min_distance(code, Metric::Kind::subset, run.limits());
    record_min(code.provenance, "subset_distance", rep.min);
    code.provenance.with("lambda", std::to_string(ds.lambda));
    run.emit(dump(to_json(code)));
    return rep.min == 2 * (ds.k - ds.lambda) ? exit_ok : exit_verification_failed;
  }
  fail(ErrorCode::InvalidParams, "unknown construction '" + kind + "'");
}

// metric ---------------------------------------------------------------------

int cmd_metric(Run& run, const std::string& path, const std::string& metric_name, std::size_t block_len) {
  auto art = run.load(path);
  MetricReport rep;
  if (auto* vc = std::get_if<VectorCode>(&art)) {
    run.modulus = vc->field.modulus();
    rep = code_min_distance(*vc, Metric::parse(metric_name, block_len), run.limits());
  } else if (auto* fc = std::get_if<FoldedCode>(&art)) {
    run.modulus = fc->field.modulus();
    rep = folded_code_min_distance(*fc, Metric::parse(metric_name).kind, run.limits());
  } else if (auto* sc = std::get_if<SubspaceCode>(&art)) {
    require(metric_name == "subspace", ErrorCode::InvalidParams, "subspace codes support --metric subspace only");
    rep = subspace_code_min_distance(*sc, run.limits());
  } else if (auto* rc = std::get_if<RankCode>(&art)) {
    require(metric_name == "rank", ErrorCode::InvalidParams, "rank codes support --metric rank only");
    require(rc->size() >= 2, ErrorCode::TooFewCodewords, "need at least two codewords");
    run.modulus = rc->source.modulus();
    rep = MetricReport{"rank", rank_distance_of_code(*rc, run.limits())};
  } else {
    fail(ErrorCode::InvalidParams, "no metric applies to a difference set");
  }
  run.emit(run.globals->format == "csv" ? rep.csv() + "\n" : dump(to_json(rep)));
  return exit_ok;
}

// verify ---------------------------------------------------------------------

int cmd_verify(Run& run, const std::string& suite, const VerifyOptions& base) {
  VerifyOptions opts = base;
  opts.seed = run.globals->seed;
  const auto report = run_suite(suite, opts);
  if (run.globals->out.empty()) {
    *run.out << report.text() << (report.passed() ? "suite passed\n" : "suite FAILED\n");
  } else {
    Json checks = Json::array();
    for (const auto& c : report.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    run.emit(dump(Json{{"suite", suite}, {"passed", report.passed()}, {"checks", checks}, {"findings", report.findings}}));
  }
  return report.passed() ? exit_ok : exit_verification_failed;
}

// bounds ---------------------------------------------------------------------

struct BoundsArgs {
  std::size_t n = 0;
  std::uint64_t q = 2;
  std::size_t k = 0;
  std::size_t d = 0;
  std::string code;
};

int cmd_bounds(Run& run, const BoundsArgs& a) {
  std::vector<BoundReport> table;
  std::vector<std::string> findings;
  Json extra = Json::object();
  if (!a.code.empty()) {
    auto vc = expect<VectorCode>(run.load(a.code), "vector code");
    run.modulus = vc.field.modulus();
    auto v = verify_bounds(vc, run.limits());
    table = std::move(v.bounds);
    findings = std::move(v.findings);
    extra = Json{{"d_hamming", v.d_hamming}, {"d_subspace", v.d_subspace}, {"d_subset", v.d_subset},
                 {"d_insdel", v.d_insdel}, {"chain_holds", v.chain_holds}};
  } else {
    require(a.n >= 1, ErrorCode::InvalidParams, "give --n or --code");
    const std::pair<std::string, std::string> nq[] = {{"n", std::to_string(a.n)}, {"q", std::to_string(a.q)}};
    if (a.n >= 2) table.push_back({"levenshtein", {nq[0], nq[1]}, levenshtein_bound(a.n, a.q)});
    if (a.n == 4 && a.q % 2 == 0) table.push_back({"klo", {nq[1]}, klo_bound(a.q)});
    if (a.k >= 1)
      table.push_back({"half_singleton", {nq[0], {"k", std::to_string(a.k)}}, half_singleton(a.n, a.k)});
    if (a.d >= 1) {
      for (auto m : {Metric::Kind::hamming, Metric::Kind::insdel, Metric::Kind::subspace, Metric::Kind::subset}) {
        if (m == Metric::Kind::hamming ? a.d > a.n : a.d > 2 * a.n) continue;
        table.push_back(singleton_bound(a.n, a.d, a.q, m));
      }
    }
  }
  if (run.globals->format == "csv") {
    run.emit(bounds_csv(table));
  } else {
    Json rows = Json::array();
    for (const auto& r : table) rows.push_back(to_json(r));
    Json doc{{"bounds", rows}};
    if (!extra.empty()) doc["distances"] = extra;
    doc["findings"] = findings;
    run.emit(dump(doc));
  }
  return exit_ok;
}

// simulate -------------------------------------------------------------------

int cmd_simulate(Run& run, const std::string& path, ChannelSpec spec, std::size_t trials) {
  auto vc = expect<VectorCode>(run.load(path), "vector code");
  run.modulus = vc.field.modulus();
  spec.seed = run.globals->seed;
  const auto d = code_min_distance(vc, {Metric::Kind::insdel, 1}, run.limits()).min;
  const auto cap = correction_capability(d);
  const bool within = spec.insertions + spec.deletions <= cap;
  const auto report = run_trials(vc, spec, trials);
  Json summary{{"trials", trials},
               {"insertions", spec.insertions},
               {"deletions", spec.deletions},
               {"seed", spec.seed},
               {"prng", Rng::algorithm},
               {"d_insdel", d},
               {"capability", cap},
               {"within_guarantee", within},
               {"successes", report.successes},
               {"wrong", report.wrong},
               {"ambiguous", report.ambiguous},
               {"success_rate", report.success_rate()}};
  if (!run.globals->out.empty()) {
    run.emit(report.transcript_csv(spec));
    run.emit(dump(summary), fs::path(run.globals->out + ".summary.json"));
  }
  *run.out << dump(summary);
  return within && report.successes != trials ? exit_verification_failed : exit_ok;
}

// fold -----------------------------------------------------------------------

int cmd_fold(Run& run, const std::string& path, std::size_t s) {
  auto vc = expect<VectorCode>(run.load(path), "vector code");
  run.modulus = vc.field.modulus();
  run.emit(dump(to_json(folded_code_from_vector_code(vc, s))));
  return exit_ok;
}

// manifest -------------------------------------------------------------------

Json hashes(const std::vector<fs::path>& paths) {
  Json out = Json::array();
  for (const auto& p : paths) out.push_back(Json{{"path", p.string()}, {"sha256", sha256_file(p)}});
  return out;
}

void write_manifest(const Run& run) {
  if (run.outputs.empty()) return;
  Json m{{"tool", "subcodes"},
         {"version", kToolVersion},
         {"command", run.command},
         {"argv", run.argv},
         {"params", run.params},
         {"modulus", run.modulus ? Json(*run.modulus) : Json(nullptr)},
         {"seed", run.globals->seed},
         {"prng", Rng::algorithm},
         {"inputs", hashes(run.inputs)},
         {"outputs", hashes(run.outputs)}};
  fs::path path = run.outputs.front();
  path += ".manifest.json";
  write_atomic(path, dump(m));
}

int cmd_replay(std::ostream& out, std::ostream& err, const std::string& manifest_path) {
  const Json m = parse_json(read_file(manifest_path));
  require(m.contains("argv") && m.contains("outputs"), ErrorCode::ParseError, "not a run manifest");
  const auto argv = m.at("argv").get<std::vector<std::string>>();
  require(std::find(argv.begin(), argv.end(), "replay") == argv.end(), ErrorCode::ParseError,
          "manifest replays another manifest");
  for (const auto& in : m.value("inputs", Json::array())) {
    const auto path = in.at("path").get<std::string>();
    if (sha256_file(path) != in.at("sha256").get<std::string>()) {
      out << "input changed: " << path << "\n";
      return exit_verification_failed;
    }
  }
  std::ostringstream sink;
  const int status = run_cli(argv, sink, err);
  bool same = true;
  for (const auto& o : m.at("outputs")) {
    const auto path = o.at("path").get<std::string>();
    const bool match = fs::exists(path) && sha256_file(path) == o.at("sha256").get<std::string>();
    out << (match ? "match " : "MISMATCH ") << path << "\n";
    same = same && match;
  }
  if (status == exit_usage) return exit_usage;
  return same ? exit_ok : exit_verification_failed;
}

void collect_params(const CLI::App* app, Json& params) {
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const auto& res = opt->results();
    std::string name = opt->get_name();
    name.erase(0, name.find_first_not_of('-'));
    if (opt->get_expected_min() == 0) {
      params[name] = true;
    } else if (res.size() == 1) {
      params[name] = res.front();
    } else {
      params[name] = res;
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subspace, subset and insdel code constructions and checks", "subcodes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", g.seed, "Seed for every randomized step");
  app.add_flag("--force", g.force, "Lift the pair-count guards");
  app.add_option("--out", g.out, "Output file (a manifest is written next to it)");
  app.set_version_flag("--version", kToolVersion);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a code and write it as JSON");
  construct->add_option("kind", ca.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"gabidulin", "lifted-mrd", "spread", "sidon-orbit", "block-enlarged", "span",
                             "all-vectors", "folded-eval", "singer-ds"}));
  construct->add_option("--q", ca.q, "Base field size");
  construct->add_option("--n", ca.n, "Extension degree or ambient dimension");
  construct->add_option("--k", ca.k, "Subspace dimension");
  construct->add_option("--t", ca.t, "q-degree bound");
  construct->add_option("--l", ca.l, "Codeword length for derived codes");
  construct->add_option("--from", ca.from, "Input artifact for derived codes");
  construct->add_flag("--partial", ca.partial, "span: keep only the first l basis rows");
  construct->add_flag("--identity-only", ca.identity_only, "block-enlarged: use G = I only");
  construct->add_flag("--words", ca.words, "block-enlarged: write the word-level code");

  std::string metric_path, metric_name;
  std::size_t block_len = 1;
  auto* metric = app.add_subcommand("metric", "Exhaustive minimum distance with witness");
  metric->add_option("code", metric_path, "Code file")->required();
  metric->add_option("--metric", metric_name, "hamming|insdel|subspace|subset|rank")->required();
  metric->add_option("--block-len", block_len, "Fold length for the r-th distances");

  std::string suite = "all";
  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--samples", vopts.samples, "Random pairs or triples");
  verify->add_option("--codes", vopts.codes, "Random codes for thm21");

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Table of closed-form bounds");
  bounds->add_option("--n", ba.n);
  bounds->add_option("--q", ba.q);
  bounds->add_option("--k", ba.k);
  bounds->add_option("--d", ba.d);
  bounds->add_option("--code", ba.code, "Vector code file to check against");

  std::string sim_path;
  ChannelSpec spec;
  std::size_t trials = 1000;
  auto* simulate = app.add_subcommand("simulate", "Channel trials with nearest-codeword decoding");
  simulate->add_option("code", sim_path)->required();
  simulate->add_option("--ins", spec.insertions);
  simulate->add_option("--del", spec.deletions);
  simulate->add_option("--trials", trials);

  std::string fold_path;
  std::size_t s = 1;
  auto* fold_cmd = app.add_subcommand("fold", "Fold a vector code into blocks");
  fold_cmd->add_option("code", fold_path)->required();
  fold_cmd->add_option("--s", s)->required()->check(CLI::PositiveNumber);

  std::string manifest_path;
  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare output hashes");
  replay->add_option("manifest", manifest_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  Run run;
  run.argv = args;
  run.out = &out;
  run.globals = &g;
  try {
    int status = exit_ok;
    CLI::App* sub = app.get_subcommands().front();
    run.command = sub->get_name();
    collect_params(sub, run.params);
    if (sub == construct) status = cmd_construct(run, ca);
    else if (sub == metric) status = cmd_metric(run, metric_path, metric_name, block_len);
    else if (sub == verify) status = cmd_verify(run, suite, vopts);
    else if (sub == bounds) status = cmd_bounds(run, ba);
    else if (sub == simulate) status = cmd_simulate(run, sim_path, spec, trials);
    else if (sub == fold_cmd) status = cmd_fold(run, fold_path, s);
    else if (sub == replay) return cmd_replay(out, err, manifest_path);
    write_manifest(run);
    return status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

}  // namespace subcodes
