// Copyright 2026 The dmeter Authors
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

#include "dmeter/measure.h"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <set>

#include "dmeter/errors.h"
#include "dmeter/quality.h"

namespace dmeter {
namespace {

const std::vector<std::string>& Families() {
  static const std::vector<std::string> kFamilies = {"density", "diversity",
                                                     "quality", "tendency"};
  return kFamilies;
}

const std::vector<std::string>& Names() {
  static const std::vector<std::string> kNames = {
      "density.data",
      "density.knn",
      "diversity.embedding_dispersion",
      "diversity.entropy",
      "diversity.gini",
      "diversity.ngram",
      "diversity.subset",
      "diversity.vendi",
      "quality.readability",
      "quality.redundancy_exact",
      "quality.redundancy_normalized",
      "tendency.burstiness",
      "tendency.counts",
      "tendency.perplexity",
      "tendency.perplexity_external",
      "tendency.record_length",
      "tendency.zipf",
  };
  return kNames;
}

std::string Num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string_view DenominatorName(NgramDenominator d) {
  return d == NgramDenominator::kTotalNgrams ? "total-ngrams" : "vocabulary";
}

void SetStats(Measurement& m, const SummaryStats& s) {
  m.SetNumber("count", static_cast<double>(s.count));
  m.SetNumber("mean", s.mean);
  m.SetNumber("median", s.median);
  m.SetNumber("min", s.min);
  m.SetNumber("max", s.max);
  m.SetList("modes", s.modes);
  m.SetOptional("variance", s.variance);
  m.SetOptional("std_dev", s.std_dev);
  m.SetOptional("skewness", s.skewness);
  m.SetOptional("excess_kurtosis", s.excess_kurtosis);
}

class Assembler {
 public:
  Assembler(const Corpus& corpus, const MeasureConfig& config)
      : corpus_(corpus), config_(config) {}

  void Run(const std::string& name, MeasurementReport& report) {
    if (name == "diversity.subset") {
      RunSubset(report);
      return;
    }
    const std::string unit = UnitOf(name);
    try {
      report.measurements[name] = Compute(name, unit);
    } catch (const std::exception& e) {
      report.measurements[name] = Measurement::Failed(unit, e.what());
    }
  }

 private:
  static std::string UnitOf(const std::string& name) {
    static const std::map<std::string, std::string> kUnits = {
        {"density.data", "records per unit volume"},
        {"density.knn", "similarity"},
        {"diversity.embedding_dispersion", "embedding distance"},
        {"diversity.entropy", "nats"},
        {"diversity.gini", "probability"},
        {"diversity.ngram", "ratio"},
        {"diversity.vendi", "effective items"},
        {"quality.readability", "flesch reading ease"},
        {"quality.redundancy_exact", "records"},
        {"quality.redundancy_normalized", "records"},
        {"tendency.burstiness", "dimensionless"},
        {"tendency.counts", "count"},
        {"tendency.perplexity", "perplexity"},
        {"tendency.perplexity_external", "perplexity"},
        {"tendency.record_length", "tokens"},
        {"tendency.zipf", "exponent"},
    };
    return kUnits.at(name);
  }

  Measurement TokenDerived(std::string unit) const {
    Measurement m;
    m.unit = std::move(unit);
    m.params["tokenizer"] = corpus_.tokenizer().ToString();
    return m;
  }

  Measurement EmbeddingDerived(std::string unit) const {
    Measurement m;
    m.unit = std::move(unit);
    m.provenance = Provenance::kExternalModel;
    m.params["embeddings"] = config_.embeddings_source;
    m.params["rows"] = std::to_string(config_.embeddings->rows());
    m.params["dims"] = std::to_string(config_.embeddings->dims());
    return m;
  }

  Measurement Compute(const std::string& name, const std::string& unit) {
    if (name.starts_with("density.") || name == "diversity.vendi" ||
        name == "diversity.embedding_dispersion") {
      if (config_.embeddings == nullptr) {
        return Measurement::Skipped(unit, "no embeddings supplied");
      }
      return ComputeEmbedding(name, unit);
    }
    if (name == "tendency.perplexity_external") {
      if (config_.external_logprobs == nullptr) {
        return Measurement::Skipped(unit, "no external log-probabilities "
                                          "supplied");
      }
      Measurement m;
      m.unit = unit;
      m.provenance = Provenance::kExternalModel;
      m.params["logprobs"] = config_.logprobs_source;
      const PerplexityResult r =
          PerplexityFromLogProbs(*config_.external_logprobs);
      m.SetNumber("perplexity",
                  r.infinite ? std::numeric_limits<double>::infinity()
                             : r.perplexity);
      m.SetNumber("total_log_prob", r.total_log_prob);
      m.SetNumber("n_tokens", static_cast<double>(r.n_tokens));
      return m;
    }
    if (name.starts_with("quality.")) return ComputeQuality(name, unit);
    return ComputeToken(name, unit);
  }

  Measurement ComputeToken(const std::string& name, const std::string& unit) {
    Measurement m = TokenDerived(unit);
    if (name == "tendency.counts") {
      m.SetNumber("records", static_cast<double>(corpus_.size()));
      m.SetNumber("tokens", static_cast<double>(corpus_.total_tokens()));
      m.SetNumber("vocabulary",
                  static_cast<double>(corpus_.vocabulary().size()));
    } else if (name == "tendency.record_length") {
      std::vector<double> lengths;
      lengths.reserve(corpus_.size());
      for (std::size_t i = 0; i < corpus_.size(); ++i) {
        lengths.push_back(static_cast<double>(corpus_.tokens(i).size()));
      }
      SetStats(m, Summarize(lengths));
    } else if (name == "tendency.zipf") {
      const ZipfFit fit = FitZipf(corpus_.token_counts(), config_.zipf_method);
      m.params["method"] = std::string(ZipfMethodName(fit.method));
      m.SetNumber("alpha", fit.alpha);
      m.SetNumber("ks_distance", fit.ks_distance);
      m.SetNumber("n_ranks", static_cast<double>(fit.n_ranks));
      if (fit.low_confidence) m.flags.insert(std::string(flags::kLowConfidence));
      if (fit.alpha_at_boundary) m.flags.insert("alpha-at-boundary");
    } else if (name == "tendency.perplexity") {
      m.params["order"] = std::to_string(config_.lm_order);
      m.params["smoothing"] = Num(config_.lm_smoothing);
      m.params["model"] = "trained-on-input";
      const NgramLm model =
          TrainLm(corpus_, config_.lm_order, config_.lm_smoothing);
      const PerplexityResult r = Perplexity(model, corpus_);
      m.SetNumber("perplexity",
                  r.infinite ? std::numeric_limits<double>::infinity()
                             : r.perplexity);
      m.SetNumber("total_log_prob", r.total_log_prob);
      m.SetNumber("n_tokens", static_cast<double>(r.n_tokens));
    } else if (name == "tendency.burstiness") {
      std::vector<double> gaps = TimestampGaps(corpus_.records());
      if (gaps.size() >= 2) {
        m.params["source"] = "timestamps";
      } else {
        std::string token;
        if (config_.burstiness_token) {
          token = *config_.burstiness_token;
        } else {
          auto sorted = corpus_.token_counts().SortedByCount();
          if (sorted.empty()) throw UndefinedValueError("corpus has no tokens");
          token = sorted.front().first;
        }
        m.params["source"] = "token-recurrence";
        m.params["token"] = token;
        gaps = TokenRecurrenceGaps(corpus_, token);
      }
      m.SetNumber("burstiness", Burstiness(gaps));
      m.SetNumber("n_gaps", static_cast<double>(gaps.size()));
    } else if (name == "diversity.gini") {
      m.SetNumber("gini", GiniDiversity(corpus_.token_counts()));
    } else if (name == "diversity.entropy") {
      const double nats = ShannonEntropy(corpus_.token_counts());
      m.SetNumber("nats", nats);
      m.SetNumber("bits", NatsToBits(nats));
    } else if (name == "diversity.ngram") {
      std::string orders;
      for (std::size_t n : config_.ngram_orders) {
        orders += (orders.empty() ? "" : ",") + std::to_string(n);
        m.SetNumber("distinct_" + std::to_string(n),
                    NgramDiversity(corpus_, n, config_.ngram_denominator));
      }
      m.params["orders"] = orders;
      m.params["denominator"] =
          std::string(DenominatorName(config_.ngram_denominator));
    }
    return m;
  }

  Measurement ComputeQuality(const std::string& name,
                             const std::string& unit) {
    Measurement m;
    m.unit = unit;
    if (name == "quality.readability") {
      m.params["syllables"] = "vowel-groups";
      m.params["sentences"] = "terminal-punctuation";
      m.note = "orthographic heuristics tuned for English";
      const ReadabilityReport r = FleschReadingEase(corpus_);
      SetStats(m, r.stats);
      m.SetNumber("n_skipped", static_cast<double>(r.n_skipped));
      return m;
    }
    const Normalization normalization = name == "quality.redundancy_exact"
                                            ? Normalization::kExact
                                            : Normalization::kFoldAndCollapse;
    m.params["normalization"] = std::string(NormalizationName(normalization));
    const RedundancyReport r =
        FindDuplicates(corpus_, normalization, config_.top_duplicates);
    m.SetNumber("n_records", static_cast<double>(r.n_records));
    m.SetNumber("n_distinct", static_cast<double>(r.n_distinct));
    m.SetNumber("duplicate_clusters",
                static_cast<double>(r.duplicate_clusters));
    m.SetNumber("excess_duplicates", static_cast<double>(r.excess_duplicates));
    m.SetNumber("largest_cluster",
                r.cluster_sizes.empty()
                    ? 0.0
                    : static_cast<double>(r.cluster_sizes.front()));
    const RedundancyEntropyResult entropy = RedundancyEntropy(r);
    m.SetNumber("redundancy_entropy", entropy.value);
    if (entropy.by_convention) {
      m.note = "single record: redundancy entropy is 1 by convention";
    }
    return m;
  }

  Measurement ComputeEmbedding(const std::string& name,
                               const std::string& unit) {
    const EmbeddingMatrix& e = *config_.embeddings;
    Measurement m = EmbeddingDerived(unit);
    if (name == "diversity.vendi") {
      m.params["kernel"] = "cosine";
      m.SetNumber("vendi", VendiScoreCosine(e));
    } else if (name == "diversity.embedding_dispersion") {
      m.SetNumber("dispersion", EmbeddingDispersion(e));
    } else if (name == "density.knn") {
      m.params["k"] = std::to_string(config_.knn_k);
      m.params["similarity"] =
          std::string(SimilarityName(config_.knn_similarity));
      const DensityReport r = KnnDensity(e, config_.knn_k,
                                         config_.knn_similarity);
      m.SetNumber("global_density", r.global_density);
      const auto [lo, hi] = std::minmax_element(r.per_point_density.begin(),
                                                r.per_point_density.end());
      m.SetNumber("min_point_density", *lo);
      m.SetNumber("max_point_density", *hi);
    } else if (name == "density.data") {
      m.params["volume"] = std::string(VolumeModeName(config_.volume_mode));
      const DataDensityResult r = DataDensity(e, config_.volume_mode);
      m.SetNumber("density", r.density);
      m.SetNumber("log_density", r.log_density);
      m.SetNumber("degenerate_dims",
                  static_cast<double>(r.degenerate_dims.size()));
      if (r.raw_out_of_range) m.flags.insert("raw-out-of-range");
    }
    return m;
  }

  void RunSubset(MeasurementReport& report) {
    const std::string unit = "proportion";
    std::vector<std::string> attributes = config_.subset_attributes;
    if (attributes.empty()) {
      std::set<std::string> found;
      for (const Record& r : corpus_.records()) {
        for (const auto& [key, value] : r.attributes) found.insert(key);
      }
      attributes.assign(found.begin(), found.end());
    }
    if (attributes.empty()) {
      report.measurements["diversity.subset"] =
          Measurement::Skipped(unit, "no record attributes");
      return;
    }
    for (const std::string& attribute : attributes) {
      const std::string name = "diversity.subset." + attribute;
      try {
        Measurement m;
        m.unit = unit;
        m.params["attribute"] = attribute;
        const SubsetDiversityReport r =
            SubsetDiversity(corpus_.records(), attribute);
        for (const auto& [label, p] : r.proportions) {
          m.SetNumber("p[" + label + "]", p);
        }
        m.SetNumber("entropy_nats", r.entropy);
        m.SetNumber("n_labeled", static_cast<double>(r.n_labeled));
        m.SetNumber("n_unlabeled", static_cast<double>(r.n_unlabeled));
        report.measurements[name] = std::move(m);
      } catch (const std::exception& e) {
        report.measurements[name] = Measurement::Failed(unit, e.what());
      }
    }
  }

  const Corpus& corpus_;
  const MeasureConfig& config_;
};

}  // namespace

std::vector<std::string> MetricFamilies() { return Families(); }

std::vector<std::string> MetricNames() { return Names(); }

std::vector<std::string> ResolveMetrics(
    std::span<const std::string> selection) {
  if (selection.empty()) throw ArgumentError("empty metric selection");
  const auto& names = Names();
  const auto& families = Families();
  std::set<std::string> resolved;
  for (const std::string& item : selection) {
    if (std::find(families.begin(), families.end(), item) != families.end()) {
      for (const std::string& name : names) {
        if (name.starts_with(item + ".")) resolved.insert(name);
      }
    } else if (std::find(names.begin(), names.end(), item) != names.end()) {
      resolved.insert(item);
    } else {
      std::string valid;
      for (const std::string& f : families) valid += " " + f;
      for (const std::string& n : names) valid += " " + n;
      throw ArgumentError("unknown metric '" + item + "'; valid names:" +
                          valid);
    }
  }
  return {resolved.begin(), resolved.end()};
}

MeasurementReport AssembleReport(const Corpus& corpus,
                                 const MeasureConfig& config,
                                 std::string created_at) {
  const std::vector<std::string> selected = ResolveMetrics(config.metrics);
  MeasurementReport report;
  report.corpus_fingerprint = corpus.fingerprint();
  report.tokenizer_config = corpus.tokenizer().ToString();
  report.created_at = std::move(created_at);
  Assembler assembler(corpus, config);
  for (const std::string& name : selected) assembler.Run(name, report);
  return report;
}

}  // namespace dmeter
