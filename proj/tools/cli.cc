// Copyright 2026 The hcauthor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include "hcauthor/attribution.h"
#include "hcauthor/discrepancy.h"
#include "hcauthor/errors.h"
#include "hcauthor/feature_space.h"
#include "hcauthor/ingest.h"
#include "hcauthor/robustness.h"

namespace hcauthor {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::size_t ngram = 1;
  double gamma0 = kDefaultGamma0;
  double alpha = kDefaultAlpha;
  bool hc_plus = false;
  bool no_collapse_names = false;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::size_t top_k = 20;
  std::string output;

  AttributionOptions Attribution(bool explain) const {
    AttributionOptions o;
    o.discrepancy.ngram = ngram;
    o.discrepancy.hc.gamma0 = gamma0;
    o.discrepancy.hc.hc_plus = hc_plus;
    o.alpha = alpha;
    o.explain = explain;
    return o;
  }
};

std::string Fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

// Header block echoing the effective configuration.
Json ConfigJson(const std::string &command, const RunConfig &cfg,
                const Json &extra = Json::object()) {
  Json j = Json::object();
  j["command"] = command;
  j["ngram"] = cfg.ngram;
  j["gamma0"] = cfg.gamma0;
  j["alpha"] = cfg.alpha;
  j["hc_plus"] = cfg.hc_plus;
  j["collapse_names"] = !cfg.no_collapse_names;
  j["seed"] = cfg.seed;
  j["format"] = cfg.format;
  j["top_k"] = cfg.top_k;
  for (const auto &[k, v] : extra.items()) j[k] = v;
  return j;
}

void WriteCsvHeader(std::ostream &out, const Json &config) {
  for (const auto &[k, v] : config.items()) {
    out << "# " << k << '=';
    if (v.is_string()) {
      out << v.get<std::string>();
    } else if (v.is_number_float()) {
      out << Fmt(v.get<double>());
    } else {
      out << v.dump();
    }
    out << '\n';
  }
}

// Quotes a CSV field when needed.
std::string Csv(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

Corpus LoadCorpus(const std::string &path, bool collapse,
                  const std::string &corpus_id = "") {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  const std::filesystem::path p(path);
  const std::string id = corpus_id.empty() ? p.stem().string() : corpus_id;
  Corpus c;
  try {
    const std::string ext = p.extension().string();
    c = (ext == ".xml" || ext == ".XML") ? ParseMorphXml(in, id)
                                         : ParseJsonl(in, id);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
  return collapse ? CollapseNames(c) : c;
}

std::vector<Corpus> LoadCorpora(const std::vector<std::string> &paths,
                                bool collapse) {
  std::vector<Corpus> out;
  std::set<std::string> ids;
  for (const std::string &path : paths) {
    out.push_back(LoadCorpus(path, collapse));
    if (!ids.insert(out.back().corpus_id).second) {
      throw DataError("two corpora are named '" + out.back().corpus_id + "'");
    }
  }
  return out;
}

std::vector<Document> LoadQueries(const std::vector<std::string> &paths,
                                  bool collapse) {
  std::vector<Document> out;
  for (const std::string &path : paths) {
    Corpus c = LoadCorpus(path, collapse);
    for (Document &d : c.documents) out.push_back(std::move(d));
  }
  return out;
}

// Writes to the --output file, or to `out` when none was given.
class Sink {
 public:
  Sink(const std::string &path, std::ostream &fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream &operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream *stream_ = nullptr;
};

// --- ingest -----------------------------------------------------------------

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string corpus_id;
};

int CmdIngest(const RunConfig &cfg, const IngestArgs &a, std::ostream &out,
              std::ostream &err) {
  Corpus merged;
  for (const std::string &path : a.inputs) {
    Corpus c = LoadCorpus(path, !cfg.no_collapse_names, a.corpus_id);
    if (merged.corpus_id.empty()) merged.corpus_id = c.corpus_id;
    for (Document &d : c.documents) merged.documents.push_back(std::move(d));
  }
  if (!a.corpus_id.empty()) merged.corpus_id = a.corpus_id;
  merged.Validate();

  Sink sink(cfg.output, out);
  EmitJsonl(merged, *sink);

  // Counts go to stderr so that stdout stays a clean corpus file.
  std::set<FeatureToken> lemmas;
  err << "corpus " << merged.corpus_id << ": " << merged.size()
      << " documents, " << merged.token_count() << " tokens\n";
  for (const Document &d : merged.documents) {
    std::set<FeatureToken> own(d.tokens.begin(), d.tokens.end());
    lemmas.insert(own.begin(), own.end());
    err << "  " << d.doc_id << ": " << d.tokens.size() << " tokens, "
        << own.size() << " lemmas\n";
  }
  err << "unique lemmas: " << lemmas.size() << '\n';
  return kExitOk;
}

// --- discrepancy ------------------------------------------------------------

struct CorporaArgs {
  std::vector<std::string> corpora;
  std::vector<std::string> queries;
};

int CmdDiscrepancy(const RunConfig &cfg, const CorporaArgs &a,
                   std::ostream &out) {
  const std::vector<Corpus> corpora =
      LoadCorpora(a.corpora, !cfg.no_collapse_names);
  const std::vector<Document> queries =
      LoadQueries(a.queries, !cfg.no_collapse_names);
  const AttributionOptions ao = cfg.Attribution(false);
  const std::vector<EmbeddingRow> rows =
      DiscrepancyMatrix(corpora, queries, ao.discrepancy);

  Json extra;
  extra["leave_one_out"] = "home corpus";
  const Json config = ConfigJson("discrepancy", cfg, extra);
  Sink sink(cfg.output, out);
  if (cfg.format == "json") {
    Json j;
    j["config"] = config;
    j["corpora"] = Json::array();
    for (const Corpus &c : corpora) j["corpora"].push_back(c.corpus_id);
    j["rows"] = Json::array();
    for (const EmbeddingRow &r : rows) {
      Json row;
      row["doc_id"] = r.doc_id;
      row["home"] = r.home ? Json(corpora[*r.home].corpus_id) : Json(nullptr);
      row["d_hc"] = r.d_hc;
      j["rows"].push_back(row);
    }
    *sink << j.dump(2) << '\n';
    return kExitOk;
  }
  WriteCsvHeader(*sink, config);
  *sink << "doc_id,home";
  for (const Corpus &c : corpora) *sink << ',' << Csv(c.corpus_id);
  *sink << '\n';
  for (const EmbeddingRow &r : rows) {
    *sink << Csv(r.doc_id) << ','
          << (r.home ? Csv(corpora[*r.home].corpus_id) : std::string());
    for (double d : r.d_hc) *sink << ',' << Fmt(d);
    *sink << '\n';
  }
  return kExitOk;
}

// --- attribute --------------------------------------------------------------

struct Row {
  AttributionReport report;
  std::optional<std::size_t> home;
};

std::string DecisionLabel(const Decision &d) {
  return d.attributed ? d.corpus_id : "Unattributable";
}

Json ReportJson(const Row &row, const std::vector<std::string> &ids) {
  Json j;
  j["doc_id"] = row.report.doc_id;
  j["home"] = row.home ? Json(ids[*row.home]) : Json(nullptr);
  j["attribution"] = DecisionLabel(row.report.decision);
  j["tie"] = row.report.decision.tie;
  j["verifications"] = Json::array();
  for (const VerificationResult &v : row.report.verifications) {
    Json e;
    e["corpus"] = v.corpus_id;
    e["p_value"] = v.p_value;
    e["rejected"] = v.rejected;
    e["t"] = std::isfinite(v.t_stat) ? Json(v.t_stat) : Json(Fmt(v.t_stat));
    e["x_prime"] = v.x_prime;
    e["df"] = v.df;
    e["degenerate_spread"] = v.degenerate_spread;
    j["verifications"].push_back(e);
  }
  return j;
}

int CmdAttribute(const RunConfig &cfg, const CorporaArgs &a,
                 std::ostream &out) {
  const std::vector<Corpus> corpora =
      LoadCorpora(a.corpora, !cfg.no_collapse_names);
  const AttributionOptions ao = cfg.Attribution(false);
  std::vector<std::string> ids;
  for (const Corpus &c : corpora) ids.push_back(c.corpus_id);

  std::vector<Row> rows;
  std::optional<LooSummary> summary;
  if (a.queries.empty()) {
    const ProfiledCorpora pc =
        ProfiledCorpora::Build(corpora, ao.discrepancy.ngram);
    summary = AttributeLeaveOneOut(pc, ao);
    for (const LooOutcome &o : summary->outcomes) {
      rows.push_back({o.report, o.home});
    }
  } else {
    for (const Document &q : LoadQueries(a.queries, !cfg.no_collapse_names)) {
      rows.push_back({Attribute(q, corpora, ao), std::nullopt});
    }
  }

  Json extra;
  extra["mode"] = a.queries.empty() ? "leave_one_out" : "query";
  const Json config = ConfigJson("attribute", cfg, extra);
  Sink sink(cfg.output, out);
  if (cfg.format == "json") {
    Json j;
    j["config"] = config;
    j["corpora"] = ids;
    j["documents"] = Json::array();
    for (const Row &r : rows) j["documents"].push_back(ReportJson(r, ids));
    if (summary) {
      Json s;
      s["accuracy"] = summary->accuracy();
      s["correct"] = summary->correct();
      s["attributable"] = summary->attributable();
      s["total"] = summary->total();
      s["by_corpus"] = Json::array();
      for (std::size_t h = 0; h < ids.size(); ++h) {
        Json c;
        c["corpus"] = ids[h];
        c["correct"] = summary->correct_by_corpus[h];
        c["attributable"] = summary->attributable_by_corpus[h];
        c["total"] = summary->total_by_corpus[h];
        s["by_corpus"].push_back(c);
      }
      j["summary"] = s;
    }
    *sink << j.dump(2) << '\n';
    return kExitOk;
  }

  // Rows are candidate corpora, one p-value and one rejection column per
  // document, followed by the decision (and the true home in
  // leave-one-out mode).
  WriteCsvHeader(*sink, config);
  if (summary) {
    *sink << "# accuracy=" << Fmt(summary->accuracy())
          << " correct=" << summary->correct()
          << " attributable=" << summary->attributable()
          << " total=" << summary->total() << '\n';
  }
  *sink << "corpus";
  for (const Row &r : rows) {
    *sink << ',' << Csv(r.report.doc_id) << ','
          << Csv(r.report.doc_id + ":rejected");
  }
  *sink << '\n';
  for (std::size_t j = 0; j < ids.size(); ++j) {
    *sink << Csv(ids[j]);
    for (const Row &r : rows) {
      const VerificationResult &v = r.report.verifications[j];
      *sink << ',' << Fmt(v.p_value) << ',' << (v.rejected ? "true" : "false");
    }
    *sink << '\n';
  }
  *sink << "attribution";
  for (const Row &r : rows) {
    *sink << ',' << Csv(DecisionLabel(r.report.decision)) << ',';
  }
  *sink << '\n';
  if (summary) {
    *sink << "home";
    for (const Row &r : rows) *sink << ',' << Csv(ids[*r.home]) << ',';
    *sink << '\n';
  }
  return kExitOk;
}

// --- explain ----------------------------------------------------------------

struct ExplainArgs {
  std::string corpus_a;
  std::vector<std::string> corpus_b;
};

int CmdExplain(const RunConfig &cfg, const ExplainArgs &a, std::ostream &out) {
  const Corpus ca = LoadCorpus(a.corpus_a, !cfg.no_collapse_names);
  const std::vector<Corpus> bs = LoadCorpora(a.corpus_b, !cfg.no_collapse_names);
  const Corpus cb = bs.size() == 1 ? bs.front() : UnionCorpus(bs, "union");
  const AttributionOptions ao = cfg.Attribution(true);
  const DiscrepancyResult r = CorpusCorpus(ca, cb, ao.discrepancy);

  std::vector<SelectedFeature> features;
  if (r.d_hc > 0.0) features = r.hc_detail.selected;
  if (features.size() > cfg.top_k) features.resize(cfg.top_k);

  Json extra;
  extra["corpus_a"] = ca.corpus_id;
  extra["corpus_b"] = cb.corpus_id;
  extra["d_hc"] = r.d_hc;
  extra["i_star"] = r.hc_detail.i_star;
  const Json config = ConfigJson("explain", cfg, extra);
  Sink sink(cfg.output, out);
  auto score = [](const SelectedFeature &f) {
    return -std::log10(f.p_value) * f.sign;
  };
  if (cfg.format == "json") {
    Json j;
    j["config"] = config;
    j["features"] = Json::array();
    for (const SelectedFeature &f : features) {
      Json e;
      e["feature"] = f.feature.str();
      e["score"] = score(f);
      e["p_value"] = f.p_value;
      e["sign"] = f.sign;
      j["features"].push_back(e);
    }
    *sink << j.dump(2) << '\n';
    return kExitOk;
  }
  WriteCsvHeader(*sink, config);
  *sink << "rank,feature,score,p_value,sign\n";
  for (std::size_t i = 0; i < features.size(); ++i) {
    const SelectedFeature &f = features[i];
    *sink << i + 1 << ',' << Csv(f.feature.str()) << ',' << Fmt(score(f))
          << ',' << Fmt(f.p_value) << ',' << f.sign << '\n';
  }
  return kExitOk;
}

// --- robustness / synth -----------------------------------------------------

struct SynthArgs {
  SyntheticSuiteOptions suite;
  std::string out_dir;
};

struct RobustnessArgs {
  std::string mode;
  std::vector<std::string> corpora;
  bool synthetic = false;
  std::size_t iterations = 100;
  bool no_resample = false;
  bool per_document = false;
  std::size_t k = 4;
  std::size_t splits = 130;
  bool all_folds = false;
  std::vector<double> budgets = {1, 2, 5, 10, 20, 40};
  std::size_t trials = 10;
  std::vector<double> gammas = {0.1, 0.2, 0.25, 0.3, 0.35, 0.4, 0.5};
};

int CmdRobustness(const RunConfig &cfg, const RobustnessArgs &a,
                  const SynthArgs &synth, std::ostream &out,
                  std::ostream &err) {
  const std::optional<RobustnessMode> mode = ParseMode(a.mode);
  if (!mode) {
    err << "unknown robustness mode '" << a.mode
        << "' (expected bootstrap, kfold, length or gamma)\n";
    return kExitUsage;
  }
  if (a.synthetic == !a.corpora.empty()) {
    err << "give either --corpus files or --synthetic\n";
    return kExitUsage;
  }
  std::vector<Corpus> corpora;
  if (a.synthetic) {
    SyntheticSuiteOptions s = synth.suite;
    s.seed = cfg.seed;
    corpora = SyntheticSuite(s);
  } else {
    corpora = LoadCorpora(a.corpora, !cfg.no_collapse_names);
  }
  const AttributionOptions ao = cfg.Attribution(false);

  RobustnessReport report;
  switch (*mode) {
    case RobustnessMode::kBootstrap: {
      BootstrapOptions b;
      b.iterations = a.iterations;
      b.seed = cfg.seed;
      b.resample = !a.no_resample;
      b.per_document = a.per_document;
      report = BootstrapAccuracy(corpora, b, ao);
      break;
    }
    case RobustnessMode::kKfold: {
      KfoldOptions k;
      k.k = a.k;
      k.splits = a.splits;
      k.seed = cfg.seed;
      k.all_folds = a.all_folds;
      report = KfoldAccuracy(corpora, k, ao);
      break;
    }
    case RobustnessMode::kLengthSweep: {
      LengthSweepOptions l;
      l.budgets = a.budgets;
      l.trials = a.trials;
      l.seed = cfg.seed;
      report = LengthSweep(corpora, l, ao);
      break;
    }
    case RobustnessMode::kGammaSweep: {
      GammaSweepOptions g;
      g.gammas = a.gammas;
      g.baseline = cfg.gamma0;
      report = GammaSweep(corpora, g, ao);
      break;
    }
  }

  Json extra;
  extra["mode"] = ModeName(report.mode);
  extra["data"] = a.synthetic ? "synthetic" : "files";
  for (const auto &[k, v] : report.params) extra[k] = v;
  const Json config = ConfigJson("robustness", cfg, extra);
  Sink sink(cfg.output, out);
  if (cfg.format == "json") {
    Json j;
    j["config"] = config;
    j["accuracy_mean"] = report.accuracy_mean;
    j["accuracy_sd"] = report.accuracy_sd;
    j["trials"] = report.trials;
    j["invalid_trials"] = report.invalid_trials;
    j["flagged"] = report.flagged;
    j["per_trial"] = report.per_trial;
    j["curve"] = Json::array();
    for (const CurvePoint &p : report.curve) {
      Json e;
      e["x"] = p.x;
      e["accuracy_mean"] = p.accuracy_mean;
      e["accuracy_sd"] = p.accuracy_sd;
      e["flagged"] = p.flagged;
      if (p.stability) e["stability"] = *p.stability;
      j["curve"].push_back(e);
    }
    *sink << j.dump(2) << '\n';
    return kExitOk;
  }
  WriteCsvHeader(*sink, config);
  *sink << "# accuracy_mean=" << Fmt(report.accuracy_mean)
        << " accuracy_sd=" << Fmt(report.accuracy_sd)
        << " trials=" << report.trials
        << " invalid_trials=" << report.invalid_trials
        << " flagged=" << report.flagged << '\n';
  if (report.curve.empty()) {
    *sink << "trial,accuracy\n";
    for (std::size_t t = 0; t < report.per_trial.size(); ++t) {
      *sink << t << ',' << Fmt(report.per_trial[t]) << '\n';
    }
  } else {
    const bool gamma = report.mode == RobustnessMode::kGammaSweep;
    *sink << (gamma ? "gamma0" : "verses") << ",accuracy,accuracy_sd,"
          << (gamma ? "stability" : "flagged") << '\n';
    for (const CurvePoint &p : report.curve) {
      *sink << Fmt(p.x) << ',' << Fmt(p.accuracy_mean) << ','
            << Fmt(p.accuracy_sd) << ','
            << (gamma ? Fmt(p.stability.value_or(1.0))
                      : std::to_string(p.flagged))
            << '\n';
    }
  }
  return kExitOk;
}

int CmdSynth(const RunConfig &cfg, const SynthArgs &a, std::ostream &err) {
  SyntheticSuiteOptions s = a.suite;
  s.seed = cfg.seed;
  const std::vector<Corpus> suite = SyntheticSuite(s);
  std::filesystem::create_directories(a.out_dir);
  for (const Corpus &c : suite) {
    const std::string path =
        (std::filesystem::path(a.out_dir) / (c.corpus_id + ".jsonl")).string();
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DataError("cannot write '" + path + "'");
    EmitJsonl(c, f);
    err << path << '\n';
  }
  return kExitOk;
}

void AddCommon(CLI::App *sub, RunConfig &cfg) {
  sub->add_option("--ngram", cfg.ngram, "n-gram order")
      ->check(CLI::Range(1, 3));
  sub->add_option("--gamma0", cfg.gamma0, "HC search fraction")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_option("--alpha", cfg.alpha, "rejection level")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_flag("--hc-plus", cfg.hc_plus, "ignore p-values below 1/N");
  sub->add_flag("--no-collapse-names", cfg.no_collapse_names,
                "keep proper-name and gentilic lemmas");
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--top-k", cfg.top_k, "features to list (explain)");
  sub->add_option("-o,--output", cfg.output, "output file (default stdout)");
}

void AddSynthOptions(CLI::App *sub, SynthArgs &a) {
  sub->add_option("--authors", a.suite.authors);
  sub->add_option("--vocab", a.suite.vocab_size);
  sub->add_option("--perturbed", a.suite.perturbed);
  sub->add_option("--intensity", a.suite.intensity);
  sub->add_option("--docs", a.suite.docs);
  sub->add_option("--doc-len", a.suite.doc_len);
  sub->add_option("--zipf", a.suite.zipf_exponent);
  sub->add_option("--band-begin", a.suite.band_begin);
  sub->add_option("--band-end", a.suite.band_end);
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Authorship analysis with HC-discrepancy", "hcauthor"};
  app.require_subcommand(1);

  RunConfig cfg;
  IngestArgs ingest;
  CorporaArgs matrix, attribute;
  ExplainArgs explain;
  RobustnessArgs robust;
  SynthArgs synth;

  CLI::App *c_ingest =
      app.add_subcommand("ingest", "normalise XML or JSONL into JSONL");
  AddCommon(c_ingest, cfg);
  c_ingest->add_option("inputs", ingest.inputs, "input files")->required();
  c_ingest->add_option("--corpus-id", ingest.corpus_id);

  CLI::App *c_disc =
      app.add_subcommand("discrepancy", "document x corpus HC matrix");
  AddCommon(c_disc, cfg);
  c_disc->add_option("-c,--corpus", matrix.corpora, "one file per corpus")
      ->required();
  c_disc->add_option("-q,--query", matrix.queries, "query documents");

  CLI::App *c_attr = app.add_subcommand(
      "attribute", "attribute queries, or every document leave-one-out");
  AddCommon(c_attr, cfg);
  c_attr->add_option("-c,--corpus", attribute.corpora, "one file per corpus")
      ->required();
  c_attr->add_option("-q,--query", attribute.queries, "query documents");

  CLI::App *c_expl =
      app.add_subcommand("explain", "signed discriminating features");
  AddCommon(c_expl, cfg);
  c_expl->add_option("-a,--corpus-a", explain.corpus_a)->required();
  c_expl->add_option("-b,--corpus-b", explain.corpus_b,
                     "one or more files, joined")
      ->required();

  CLI::App *c_rob = app.add_subcommand("robustness", "accuracy analyses");
  AddCommon(c_rob, cfg);
  c_rob->add_option("-m,--mode", robust.mode,
                    "bootstrap, kfold, length or gamma")
      ->required();
  c_rob->add_option("-c,--corpus", robust.corpora, "one file per corpus");
  c_rob->add_flag("--synthetic", robust.synthetic, "use the synthetic suite");
  c_rob->add_option("--iterations", robust.iterations)->check(CLI::PositiveNumber);
  c_rob->add_flag("--no-resample", robust.no_resample);
  c_rob->add_flag("--per-document", robust.per_document);
  c_rob->add_option("-k", robust.k);
  c_rob->add_option("--splits", robust.splits)->check(CLI::PositiveNumber);
  c_rob->add_flag("--all-folds", robust.all_folds);
  c_rob->add_option("--budgets", robust.budgets, "verse budgets")
      ->delimiter(',');
  c_rob->add_option("--trials", robust.trials)->check(CLI::PositiveNumber);
  c_rob->add_option("--gammas", robust.gammas)->delimiter(',');
  AddSynthOptions(c_rob, synth);

  CLI::App *c_synth =
      app.add_subcommand("synth", "write the synthetic suite as JSONL");
  AddCommon(c_synth, cfg);
  c_synth->add_option("--out-dir", synth.out_dir)->required();
  AddSynthOptions(c_synth, synth);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_ingest->parsed()) return CmdIngest(cfg, ingest, out, err);
    if (c_disc->parsed()) return CmdDiscrepancy(cfg, matrix, out);
    if (c_attr->parsed()) return CmdAttribute(cfg, attribute, out);
    if (c_expl->parsed()) return CmdExplain(cfg, explain, out);
    if (c_rob->parsed()) return CmdRobustness(cfg, robust, synth, out, err);
    if (c_synth->parsed()) return CmdSynth(cfg, synth, err);
  } catch (const ArgumentError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace hcauthor
