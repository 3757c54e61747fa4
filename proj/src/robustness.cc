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

#include "hcauthor/robustness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "hcauthor/errors.h"
#include "hcauthor/feature_space.h"
#include "hcauthor/rng.h"

namespace hcauthor {

namespace {

std::string LemmaName(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "w%04zu", k);
  return buf;
}

std::string Num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

AttributionOptions Quiet(AttributionOptions options) {
  options.explain = false;
  return options;
}

void Finish(RobustnessReport &report) {
  report.trials = report.per_trial.size();
  const auto [mean, sd] = MeanAndSd(report.per_trial);
  report.accuracy_mean = mean;
  report.accuracy_sd = sd;
}

struct Tally {
  std::size_t correct = 0;
  std::size_t attributable = 0;

  void Add(const AttributionReport &r, std::size_t home) {
    if (!r.decision.attributed) return;
    ++attributable;
    if (r.decision.index == home) ++correct;
  }
  double accuracy() const {
    return attributable == 0 ? 0.0
                             : static_cast<double>(correct) /
                                   static_cast<double>(attributable);
  }
};

// A contiguous stretch [begin, end) of a document as a document of its own.
Document Window(const Document &d, std::size_t begin, std::size_t end) {
  Document w;
  w.doc_id = d.doc_id;
  w.source_ref = d.source_ref;
  w.tokens.assign(d.tokens.begin() + begin, d.tokens.begin() + end);
  if (!d.morphs.empty()) {
    w.morphs.assign(d.morphs.begin() + begin, d.morphs.begin() + end);
  }
  std::size_t verses = 0;
  for (std::size_t b : d.verse_breaks) {
    if (b >= begin && b < end) {
      w.verse_breaks.push_back(b - begin);
      ++verses;
    }
  }
  if (!w.verse_breaks.empty() && w.verse_breaks.front() != 0) {
    w.verse_breaks.insert(w.verse_breaks.begin(), 0);
    ++verses;
  }
  w.verse_count = verses;
  return w;
}

}  // namespace

// --- Synthetic authors ------------------------------------------------------

std::vector<double> SyntheticAuthorSpec::Weights() const {
  if (vocab_size == 0) throw ArgumentError("synthetic vocabulary is empty");
  if (base_weights.size() != vocab_size) {
    throw ArgumentError("base weights do not match the vocabulary size");
  }
  if (!(intensity > 0.0)) throw ArgumentError("intensity must be positive");
  std::vector<double> w = base_weights;
  for (double x : w) {
    if (!(x >= 0.0)) throw ArgumentError("base weights must be nonnegative");
  }
  for (std::size_t k : perturbed_features) {
    if (k >= vocab_size) throw ArgumentError("perturbed feature out of range");
    w[k] *= intensity;
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0.0)) throw ArgumentError("weights sum to zero");
  for (double &x : w) x /= total;
  return w;
}

std::vector<double> ZipfWeights(std::size_t vocab_size, double exponent) {
  std::vector<double> w(vocab_size);
  double total = 0.0;
  for (std::size_t k = 0; k < vocab_size; ++k) {
    w[k] = 1.0 / std::pow(static_cast<double>(k + 1), exponent);
    total += w[k];
  }
  for (double &x : w) x /= total;
  return w;
}

Corpus GenerateAuthor(const SyntheticAuthorSpec &spec, std::size_t n_docs,
                      std::size_t doc_len, const std::string &corpus_id) {
  if (doc_len == 0) throw ArgumentError("synthetic documents need a length");
  const std::vector<double> w = spec.Weights();
  std::vector<double> cdf(w.size());
  std::partial_sum(w.begin(), w.end(), cdf.begin());
  std::vector<FeatureToken> lemmas;
  lemmas.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    lemmas.push_back(FeatureToken::Lemma(LemmaName(k)));
  }

  Corpus c;
  c.corpus_id = corpus_id;
  for (std::size_t d = 0; d < n_docs; ++d) {
    Rng rng(MixSeed(spec.seed, d));
    Document doc;
    doc.doc_id = corpus_id + "-" + std::to_string(d);
    doc.tokens.reserve(doc_len);
    for (std::size_t t = 0; t < doc_len; ++t) {
      const double u = rng.Uniform() * cdf.back();
      std::size_t k = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
      if (k >= cdf.size()) k = cdf.size() - 1;
      doc.tokens.push_back(lemmas[k]);
    }
    c.documents.push_back(std::move(doc));
  }
  return c;
}

std::vector<SyntheticAuthorSpec> SyntheticAuthors(
    const SyntheticSuiteOptions &options) {
  const std::size_t end =
      options.band_end == 0 ? options.vocab_size : options.band_end;
  if (end > options.vocab_size || options.band_begin >= end) {
    throw ArgumentError("perturbation band is empty or out of range");
  }
  const std::size_t band = end - options.band_begin;
  if (options.authors * options.perturbed > band) {
    throw ArgumentError("perturbation band too narrow for disjoint sets");
  }
  std::vector<std::size_t> pool(band);
  std::iota(pool.begin(), pool.end(), options.band_begin);
  Rng rng(MixSeed(options.seed, 0x5eed));
  rng.Shuffle(std::span<std::size_t>(pool));

  const std::vector<double> base =
      ZipfWeights(options.vocab_size, options.zipf_exponent);
  std::vector<SyntheticAuthorSpec> specs;
  for (std::size_t a = 0; a < options.authors; ++a) {
    SyntheticAuthorSpec s;
    s.vocab_size = options.vocab_size;
    s.base_weights = base;
    s.perturbed_features.assign(
        pool.begin() + a * options.perturbed,
        pool.begin() + (a + 1) * options.perturbed);
    std::sort(s.perturbed_features.begin(), s.perturbed_features.end());
    s.intensity = options.intensity;
    s.seed = MixSeed(options.seed, a + 1);
    specs.push_back(std::move(s));
  }
  return specs;
}

std::vector<Corpus> SyntheticSuite(const SyntheticSuiteOptions &options) {
  std::vector<Corpus> out;
  const std::vector<SyntheticAuthorSpec> specs = SyntheticAuthors(options);
  for (std::size_t a = 0; a < specs.size(); ++a) {
    out.push_back(GenerateAuthor(specs[a], options.docs, options.doc_len,
                                 "A" + std::to_string(a)));
  }
  return out;
}

// --- Modes ------------------------------------------------------------------

const char *ModeName(RobustnessMode mode) {
  switch (mode) {
    case RobustnessMode::kBootstrap:
      return "bootstrap";
    case RobustnessMode::kKfold:
      return "kfold";
    case RobustnessMode::kLengthSweep:
      return "length_sweep";
    case RobustnessMode::kGammaSweep:
      return "gamma_sweep";
  }
  return "unknown";
}

std::optional<RobustnessMode> ParseMode(const std::string &name) {
  if (name == "bootstrap") return RobustnessMode::kBootstrap;
  if (name == "kfold") return RobustnessMode::kKfold;
  if (name == "length" || name == "length_sweep") {
    return RobustnessMode::kLengthSweep;
  }
  if (name == "gamma" || name == "gamma_sweep") {
    return RobustnessMode::kGammaSweep;
  }
  return std::nullopt;
}

std::pair<double, double> MeanAndSd(std::span<const double> values) {
  if (values.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : values) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / (n - 1.0))};
}

double LooAccuracy(std::span<const Corpus> corpora,
                   const AttributionOptions &options) {
  const ProfiledCorpora pc =
      ProfiledCorpora::Build(corpora, options.discrepancy.ngram,
                             options.discrepancy.ngram_options);
  return AttributeLeaveOneOut(pc.corpora, Quiet(options)).accuracy();
}

RobustnessReport BootstrapAccuracy(std::span<const Corpus> corpora,
                                   const BootstrapOptions &bootstrap,
                                   const AttributionOptions &options) {
  const ProfiledCorpora pc =
      ProfiledCorpora::Build(corpora, options.discrepancy.ngram,
                             options.discrepancy.ngram_options);
  const AttributionOptions quiet = Quiet(options);

  // Occurrence list: (corpus, document, feature) for every unit of count.
  struct Occurrence {
    std::uint32_t corpus;
    std::uint32_t doc;
    std::uint32_t feature;
  };
  std::vector<Occurrence> occ;
  std::vector<std::pair<std::size_t, std::size_t>> doc_range;
  for (std::size_t c = 0; c < pc.corpora.size(); ++c) {
    const CorpusProfile &cp = pc.corpora[c];
    for (std::size_t d = 0; d < cp.size(); ++d) {
      const std::size_t begin = occ.size();
      const Profile &p = cp.docs[d];
      for (std::size_t id = 0; id < p.extent(); ++id) {
        for (std::int64_t k = 0; k < p.count(id); ++k) {
          occ.push_back({static_cast<std::uint32_t>(c),
                         static_cast<std::uint32_t>(d),
                         static_cast<std::uint32_t>(id)});
        }
      }
      doc_range.emplace_back(begin, occ.size());
    }
  }

  RobustnessReport report;
  report.mode = RobustnessMode::kBootstrap;
  report.params = {{"iterations", std::to_string(bootstrap.iterations)},
                   {"seed", std::to_string(bootstrap.seed)},
                   {"resample", bootstrap.resample ? "true" : "false"},
                   {"per_document", bootstrap.per_document ? "true" : "false"}};

  for (std::size_t it = 0; it < bootstrap.iterations; ++it) {
    std::vector<std::vector<Profile>> docs(pc.corpora.size());
    for (std::size_t c = 0; c < pc.corpora.size(); ++c) {
      docs[c].resize(pc.corpora[c].size());
    }
    if (!bootstrap.resample) {
      for (std::size_t c = 0; c < pc.corpora.size(); ++c) {
        docs[c] = pc.corpora[c].docs;
      }
    } else {
      Rng rng(MixSeed(bootstrap.seed, it));
      if (bootstrap.per_document) {
        for (const auto &[begin, end] : doc_range) {
          for (std::size_t j = begin; j < end; ++j) {
            const Occurrence &o = occ[begin + rng.Below(end - begin)];
            docs[o.corpus][o.doc].Add(o.feature);
          }
        }
      } else {
        for (std::size_t j = 0; j < occ.size(); ++j) {
          const Occurrence &o = occ[rng.Below(occ.size())];
          docs[o.corpus][o.doc].Add(o.feature);
        }
      }
    }

    std::vector<CorpusProfile> resampled;
    bool valid = true;
    for (std::size_t c = 0; c < pc.corpora.size(); ++c) {
      CorpusProfile cp;
      cp.corpus_id = pc.corpora[c].corpus_id;
      for (std::size_t d = 0; d < docs[c].size(); ++d) {
        if (docs[c][d].empty()) continue;
        cp.Append(pc.corpora[c].doc_ids[d], std::move(docs[c][d]));
      }
      if (cp.size() < 3) valid = false;
      resampled.push_back(std::move(cp));
    }
    if (!valid) {
      ++report.invalid_trials;
      continue;
    }
    report.per_trial.push_back(
        AttributeLeaveOneOut(resampled, quiet).accuracy());
  }
  Finish(report);
  return report;
}

RobustnessReport KfoldAccuracy(std::span<const Corpus> corpora,
                               const KfoldOptions &kfold,
                               const AttributionOptions &options) {
  if (kfold.k < 2) throw ArgumentError("k-fold needs k >= 2");
  const ProfiledCorpora pc =
      ProfiledCorpora::Build(corpora, options.discrepancy.ngram,
                             options.discrepancy.ngram_options);
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t c = 0; c < pc.corpora.size(); ++c) {
    for (std::size_t d = 0; d < pc.corpora[c].size(); ++d) all.emplace_back(c, d);
  }
  if (all.size() < kfold.k) {
    throw ArgumentError("k-fold needs at least k documents");
  }
  const Attributor attributor(Quiet(options));

  RobustnessReport report;
  report.mode = RobustnessMode::kKfold;
  report.params = {{"k", std::to_string(kfold.k)},
                   {"splits", std::to_string(kfold.splits)},
                   {"seed", std::to_string(kfold.seed)},
                   {"all_folds", kfold.all_folds ? "true" : "false"}};

  const std::size_t n = all.size();
  for (std::size_t s = 0; s < kfold.splits; ++s) {
    Rng rng(MixSeed(kfold.seed, s));
    std::vector<std::pair<std::size_t, std::size_t>> order = all;
    rng.Shuffle(std::span<std::pair<std::size_t, std::size_t>>(order));
    // Position p falls in fold p * k / n, so fold sizes differ by at most one.
    std::vector<std::size_t> folds;
    if (kfold.all_folds) {
      folds.resize(kfold.k);
      std::iota(folds.begin(), folds.end(), 0);
    } else {
      folds.push_back(rng.Below(kfold.k));
    }

    Tally tally;
    bool valid = true;
    for (std::size_t g : folds) {
      std::vector<std::vector<std::size_t>> keep(pc.corpora.size());
      std::vector<std::pair<std::size_t, std::size_t>> held;
      for (std::size_t p = 0; p < n; ++p) {
        if (p * kfold.k / n == g) {
          held.push_back(order[p]);
        } else {
          keep[order[p].first].push_back(order[p].second);
        }
      }
      std::vector<CorpusProfile> refs;
      for (std::size_t c = 0; c < pc.corpora.size(); ++c) {
        std::sort(keep[c].begin(), keep[c].end());
        if (keep[c].size() < 2) valid = false;
        refs.push_back(pc.corpora[c].Subset(keep[c]));
      }
      if (!valid) break;
      for (const auto &[c, d] : held) {
        tally.Add(attributor.Attribute(pc.corpora[c].doc_ids[d],
                                       pc.corpora[c].docs[d], refs),
                  c);
      }
    }
    if (!valid) {
      ++report.invalid_trials;
      continue;
    }
    report.per_trial.push_back(tally.accuracy());
  }
  Finish(report);
  return report;
}

double TokensPerVerse(std::span<const Corpus> corpora,
                      double default_tokens_per_verse) {
  std::vector<double> ratios;
  for (const Corpus &c : corpora) {
    for (const Document &d : c.documents) {
      if (d.verse_count > 0) {
        ratios.push_back(static_cast<double>(d.tokens.size()) /
                         static_cast<double>(d.verse_count));
      }
    }
  }
  if (ratios.empty()) return default_tokens_per_verse;
  std::sort(ratios.begin(), ratios.end());
  const std::size_t m = ratios.size() / 2;
  return ratios.size() % 2 == 1 ? ratios[m] : 0.5 * (ratios[m - 1] + ratios[m]);
}

RobustnessReport LengthSweep(std::span<const Corpus> corpora,
                             const LengthSweepOptions &sweep,
                             const AttributionOptions &options) {
  if (sweep.budgets.empty()) throw ArgumentError("length sweep needs budgets");
  for (double b : sweep.budgets) {
    if (!(b > 0.0)) throw ArgumentError("verse budgets must be positive");
  }
  const ProfiledCorpora pc =
      ProfiledCorpora::Build(corpora, options.discrepancy.ngram,
                             options.discrepancy.ngram_options);
  for (const CorpusProfile &c : pc.corpora) {
    if (c.size() < 3) {
      throw DataError("corpus '" + c.corpus_id +
                      "' needs at least three documents for the length sweep");
    }
  }
  const double tpv = TokensPerVerse(corpora, sweep.default_tokens_per_verse);
  const Attributor attributor(Quiet(options));

  RobustnessReport report;
  report.mode = RobustnessMode::kLengthSweep;
  report.params = {{"trials", std::to_string(sweep.trials)},
                   {"seed", std::to_string(sweep.seed)},
                   {"tokens_per_verse", Num(tpv)}};

  std::vector<CorpusProfile> candidates = pc.corpora;
  for (std::size_t b = 0; b < sweep.budgets.size(); ++b) {
    const double budget = sweep.budgets[b];
    CurvePoint point;
    point.x = budget;
    std::vector<double> accs;
    for (std::size_t t = 0; t < sweep.trials; ++t) {
      Rng rng(MixSeed(sweep.seed, b * sweep.trials + t));
      Tally tally;
      for (std::size_t h = 0; h < corpora.size(); ++h) {
        const Corpus &home = corpora[h];
        for (std::size_t i = 0; i < home.documents.size(); ++i) {
          const Document &d = home.documents[i];
          const std::size_t len = d.tokens.size();
          std::size_t begin = 0, end = len;
          bool whole = false;
          if (!d.verse_breaks.empty()) {
            const std::size_t verses = d.verse_breaks.size();
            const auto v = static_cast<std::size_t>(
                std::max(1.0, std::round(budget)));
            if (v >= verses) {
              whole = true;
            } else {
              const std::size_t first = rng.Below(verses - v + 1);
              begin = d.verse_breaks[first];
              end = first + v < verses ? d.verse_breaks[first + v] : len;
            }
          } else {
            const auto k = static_cast<std::size_t>(
                std::max(1.0, std::round(budget * tpv)));
            if (k >= len) {
              whole = true;
            } else {
              begin = rng.Below(len - k + 1);
              end = begin + k;
            }
          }
          if (whole) ++point.flagged;
          const Profile query = pc.space.Lookup(Window(d, begin, end));
          if (query.empty()) continue;
          candidates[h] = pc.corpora[h].Without(i);
          tally.Add(attributor.Attribute(d.doc_id, query, candidates), h);
          candidates[h] = pc.corpora[h];
        }
      }
      accs.push_back(tally.accuracy());
      report.per_trial.push_back(tally.accuracy());
    }
    const auto [mean, sd] = MeanAndSd(accs);
    point.accuracy_mean = mean;
    point.accuracy_sd = sd;
    report.flagged += point.flagged;
    report.curve.push_back(point);
  }
  Finish(report);
  return report;
}

RobustnessReport GammaSweep(std::span<const Corpus> corpora,
                            const GammaSweepOptions &sweep,
                            const AttributionOptions &options) {
  if (sweep.gammas.empty()) throw ArgumentError("gamma sweep needs values");
  const ProfiledCorpora pc =
      ProfiledCorpora::Build(corpora, options.discrepancy.ngram,
                             options.discrepancy.ngram_options);
  auto run = [&](double gamma) {
    AttributionOptions o = Quiet(options);
    o.discrepancy.hc.gamma0 = gamma;
    return AttributeLeaveOneOut(pc.corpora, o);
  };
  auto decisions = [](const LooSummary &s) {
    std::vector<Decision> out;
    for (const LooOutcome &o : s.outcomes) out.push_back(o.report.decision);
    return out;
  };

  RobustnessReport report;
  report.mode = RobustnessMode::kGammaSweep;
  report.params = {{"baseline", Num(sweep.baseline)}};

  const std::vector<Decision> base = decisions(run(sweep.baseline));
  for (double gamma : sweep.gammas) {
    const LooSummary s = run(gamma);
    const std::vector<Decision> d = decisions(s);
    std::size_t same = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i].attributed == base[i].attributed && d[i].index == base[i].index) {
        ++same;
      }
    }
    CurvePoint point;
    point.x = gamma;
    point.accuracy_mean = s.accuracy();
    point.stability = d.empty() ? 1.0
                                : static_cast<double>(same) /
                                      static_cast<double>(d.size());
    report.curve.push_back(point);
    report.per_trial.push_back(s.accuracy());
  }
  Finish(report);
  return report;
}

}  // namespace hcauthor
