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

#include "cli.h"

#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dmeter/association.h"
#include "dmeter/embedding.h"
#include "dmeter/errors.h"
#include "dmeter/ingest.h"
#include "dmeter/language_model.h"
#include "dmeter/measure.h"
#include "dmeter/quality.h"
#include "dmeter/report.h"
#include "dmeter/tokenizer.h"
#include "settings.h"

namespace dmeter::cli {
namespace {

using nlohmann::json;

const std::set<std::string>& KnownSettings() {
  static const std::set<std::string> kKnown = {
      "input",
      "format",
      "tokenizer",
      "out",
      "metrics",
      "embeddings",
      "targets",
      "logprobs",
      "text_field",
      "id_field",
      "timestamp_field",
      "attributes_field",
      "tendency.zipf_method",
      "tendency.lm_order",
      "tendency.lm_smoothing",
      "tendency.burstiness_token",
      "diversity.ngram_orders",
      "diversity.ngram_denominator",
      "diversity.subset_attributes",
      "density.k",
      "density.similarity",
      "density.volume",
      "quality.top_duplicates",
      "assoc.k",
      "assoc.window",
      "assoc.alpha",
      "assoc.count_mode",
      "assoc.attribute_tokens",
      "dedup.normalization",
      "dedup.top",
  };
  return kKnown;
}

// Values of flags that were given on the command line, keyed by setting
// name. Applied on top of the config file.
struct FlagValues {
  std::string config;
  std::vector<std::string> assignments;
  std::map<std::string, std::string> values;
  std::optional<std::uint64_t> seed;
};

std::string Num(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string Require(const Settings& settings, const std::string& key,
                    const std::string& flag) {
  auto value = settings.Get(key);
  if (!value || value->empty()) {
    throw ArgumentError("missing required " + flag);
  }
  return *value;
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw IoError("write failure on '" + path + "'");
}

// ISO-8601 UTC. SOURCE_DATE_EPOCH pins the clock for reproducible builds of
// reports.
std::string CreatedAt() {
  std::time_t now = std::time(nullptr);
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long value = std::strtoll(epoch, &end, 10);
    if (end != epoch && *end == '\0') now = static_cast<std::time_t>(value);
  }
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

InputFormat ResolveFormat(const Settings& settings, const std::string& input) {
  if (auto name = settings.Get("format")) return ParseInputFormat(*name);
  const std::string ext = std::filesystem::path(input).extension().string();
  if (ext == ".csv") return InputFormat::kCsv;
  if (ext == ".txt") return InputFormat::kPlaintext;
  return InputFormat::kJsonl;
}

TokenizerConfig ResolveTokenizer(const Settings& settings) {
  return TokenizerConfig::Parse(settings.GetOr("tokenizer", "unicode-word"));
}

Corpus LoadCorpus(const Settings& settings, std::ostream& err) {
  const std::string input = Require(settings, "input", "--input");
  IngestOptions options;
  options.format = ResolveFormat(settings, input);
  options.tokenizer = ResolveTokenizer(settings);
  options.text_field = settings.GetOr("text_field", options.text_field);
  options.id_field = settings.GetOr("id_field", options.id_field);
  options.timestamp_field =
      settings.GetOr("timestamp_field", options.timestamp_field);
  options.attributes_field =
      settings.GetOr("attributes_field", options.attributes_field);
  IngestResult result = Ingest(input, options);
  constexpr std::size_t kMaxReported = 20;
  for (std::size_t i = 0; i < result.errors.size() && i < kMaxReported; ++i) {
    err << "warning: " << input << ":" << result.errors[i].line
        << ": skipped record: " << result.errors[i].message << "\n";
  }
  if (result.errors.size() > kMaxReported) {
    err << "warning: " << (result.errors.size() - kMaxReported)
        << " more records skipped\n";
  }
  if (result.corpus.empty()) {
    throw ArgumentError("no records ingested from '" + input + "'");
  }
  return result.corpus;
}

std::string SummaryLine(const std::string& name, const Measurement& m) {
  std::string line = name;
  if (m.HasFlag(flags::kSkipped) || m.HasFlag(flags::kError)) {
    line += m.HasFlag(flags::kError) ? "  ERROR: " : "  skipped: ";
    return line + m.note;
  }
  for (const auto& [key, value] : m.values) {
    if (value.is_number()) {
      line += "  " + key + "=" + Num(value.get<double>());
    } else if (value.is_string()) {
      line += "  " + key + "=" + value.get<std::string>();
    }
  }
  if (!m.flags.empty()) {
    line += "  [";
    bool first = true;
    for (const std::string& f : m.flags) {
      line += (first ? "" : ",") + f;
      first = false;
    }
    line += "]";
  }
  return line;
}

int CmdMeasure(const Settings& settings, std::ostream& out,
               std::ostream& err) {
  MeasureConfig config;
  config.metrics = settings.GetList("metrics");
  if (config.metrics.empty()) throw ArgumentError("missing --metrics");
  // Reject bad selections before reading any input.
  ResolveMetrics(config.metrics);
  const std::string out_path = Require(settings, "out", "--out");

  if (auto v = settings.Get("tendency.zipf_method")) {
    config.zipf_method = ParseZipfMethod(*v);
  }
  if (auto v = settings.GetInt("tendency.lm_order")) config.lm_order = *v;
  if (auto v = settings.GetDouble("tendency.lm_smoothing")) {
    config.lm_smoothing = *v;
  }
  config.burstiness_token = settings.Get("tendency.burstiness_token");
  if (settings.Get("diversity.ngram_orders")) {
    config.ngram_orders.clear();
    for (const std::string& item : settings.GetList("diversity.ngram_orders")) {
      Settings one;
      one.Set("n", item);
      config.ngram_orders.push_back(*one.GetSize("n"));
    }
  }
  if (auto v = settings.Get("diversity.ngram_denominator")) {
    if (*v == "total-ngrams") {
      config.ngram_denominator = NgramDenominator::kTotalNgrams;
    } else if (*v == "vocabulary") {
      config.ngram_denominator = NgramDenominator::kVocabulary;
    } else {
      throw ArgumentError("unknown n-gram denominator '" + *v +
                          "' (expected total-ngrams or vocabulary)");
    }
  }
  config.subset_attributes = settings.GetList("diversity.subset_attributes");
  if (auto v = settings.GetSize("density.k")) config.knn_k = *v;
  if (auto v = settings.Get("density.similarity")) {
    config.knn_similarity = ParseSimilarity(*v);
  }
  if (auto v = settings.Get("density.volume")) {
    config.volume_mode = ParseVolumeMode(*v);
  }
  if (auto v = settings.GetSize("quality.top_duplicates")) {
    config.top_duplicates = *v;
  }

  const Corpus corpus = LoadCorpus(settings, err);

  std::optional<EmbeddingMatrix> embeddings;
  if (auto path = settings.Get("embeddings")) {
    embeddings = LoadEmbeddings(*path);
    config.embeddings = &*embeddings;
    config.embeddings_source = std::filesystem::path(*path).filename().string();
  }
  std::vector<ExternalLogProb> logprobs;
  if (auto path = settings.Get("logprobs")) {
    logprobs = LoadExternalLogProbs(*path);
    config.external_logprobs = &logprobs;
    config.logprobs_source = std::filesystem::path(*path).filename().string();
  }

  const MeasurementReport report = AssembleReport(corpus, config, CreatedAt());
  SaveReport(out_path, report);

  bool failures = false;
  for (const auto& [name, m] : report.measurements) {
    out << SummaryLine(name, m) << "\n";
    failures = failures || m.HasFlag(flags::kError);
  }
  out << "wrote " << out_path << " (" << report.measurements.size()
      << " measurements, " << corpus.size() << " records)\n";
  return failures ? kMetricFailures : kOk;
}

int CmdCompare(const Settings& settings, const std::string& baseline_path,
               const std::string& candidate_path, std::ostream& out) {
  const MeasurementReport baseline = LoadReport(baseline_path);
  const MeasurementReport candidate = LoadReport(candidate_path);
  const BatchDelta delta = Compare(baseline, candidate);
  out << FormatDeltaTable(delta);
  if (auto path = settings.Get("out")) WriteFile(*path, SerializeDelta(delta));
  return kOk;
}

std::vector<std::string> ReadTargets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open targets file '" + path + "'");
  std::vector<std::string> targets;
  std::string line;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    targets.push_back(line.substr(begin, end - begin + 1));
  }
  return targets;
}

int CmdAssoc(const Settings& settings, std::ostream& out, std::ostream& err) {
  const std::string targets_path = Require(settings, "targets", "--targets");
  const std::size_t k = settings.GetSize("assoc.k").value_or(20);
  const double alpha = settings.GetDouble("assoc.alpha").value_or(0.0);
  ContextSpec context;
  if (auto w = settings.GetSize("assoc.window")) {
    context.mode = ContextMode::kWindow;
    context.window = *w;
  }
  if (auto v = settings.Get("assoc.attribute_tokens")) {
    if (*v != "true" && *v != "false") {
      throw ArgumentError("assoc.attribute_tokens must be true or false");
    }
    context.attribute_tokens = *v == "true";
  }
  CountMode count_mode = CountMode::kBinary;
  if (auto v = settings.Get("assoc.count_mode")) {
    if (*v == "frequency") {
      count_mode = CountMode::kFrequency;
    } else if (*v != "binary") {
      throw ArgumentError("unknown count mode '" + *v +
                          "' (expected binary or frequency)");
    }
  }
  const std::vector<std::string> raw_targets = ReadTargets(targets_path);
  const Corpus corpus = LoadCorpus(settings, err);

  // Targets go through the corpus tokenizer so folding matches.
  std::vector<std::string> targets;
  std::vector<std::string> warnings(raw_targets.size());
  for (std::size_t i = 0; i < raw_targets.size(); ++i) {
    if (context.attribute_tokens && raw_targets[i].starts_with('@')) {
      targets.push_back(raw_targets[i]);  // an attribute label, verbatim
      continue;
    }
    const std::vector<std::string> tokens =
        Tokenize(raw_targets[i], corpus.tokenizer());
    if (tokens.size() == 1) {
      targets.push_back(tokens[0]);
    } else {
      targets.push_back(raw_targets[i]);
      warnings[i] = "not a single token";
    }
  }
  const CooccurrenceTable table =
      BuildCooccurrence(corpus, targets, context, count_mode);

  json rows = json::array();
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string& target = targets[i];
    if (warnings[i].empty() && table.TermCount(target) == 0) {
      warnings[i] = "absent from corpus";
    }
    std::vector<RankedAssociation> ranked;
    if (warnings[i].empty()) ranked = TopAssociations(table, target, k, alpha);
    out << target << " (contexts=" << table.TermCount(target) << ")";
    if (!warnings[i].empty()) {
      out << "  warning: " << warnings[i];
      err << "warning: target '" << raw_targets[i] << "' " << warnings[i]
          << "\n";
    }
    out << "\n";
    json co_terms = json::array();
    for (const RankedAssociation& r : ranked) {
      out << "  " << r.term << "  npmi=" << Num(r.npmi.value)
          << "  pairs=" << r.pair_count << "\n";
      co_terms.push_back({{"term", r.term},
                          {"npmi", RoundSignificant(r.npmi.value)},
                          {"pair_count", r.pair_count}});
    }
    json row = {{"target", target},
                {"contexts", table.TermCount(target)},
                {"co_terms", std::move(co_terms)}};
    if (!warnings[i].empty()) row["warning"] = warnings[i];
    rows.push_back(std::move(row));
  }
  if (auto path = settings.Get("out")) {
    json doc = {{"corpus_fingerprint", corpus.fingerprint()},
                {"tokenizer_config", corpus.tokenizer().ToString()},
                {"context", context.ToString()},
                {"count_mode",
                 count_mode == CountMode::kBinary ? "binary" : "frequency"},
                {"k", k},
                {"alpha", alpha},
                {"n_contexts", table.n_contexts()},
                {"targets", std::move(rows)}};
    WriteFile(*path, doc.dump(2) + "\n");
  }
  return kOk;
}

int CmdDedup(const Settings& settings, std::ostream& out, std::ostream& err) {
  const Normalization normalization =
      ParseNormalization(settings.GetOr("dedup.normalization", "exact"));
  const std::size_t top = settings.GetSize("dedup.top").value_or(10);
  const Corpus corpus = LoadCorpus(settings, err);
  const RedundancyReport r = FindDuplicates(corpus, normalization, top);
  out << "records=" << r.n_records << "  distinct=" << r.n_distinct
      << "  duplicate_clusters=" << r.duplicate_clusters
      << "  excess_duplicates=" << r.excess_duplicates
      << "  normalization=" << NormalizationName(normalization) << "\n";
  json clusters = json::array();
  for (const DuplicateCluster& c : r.top_clusters) {
    std::string sample = c.sample_text.substr(0, 60);
    for (char& ch : sample) {
      if (ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
    }
    out << "  " << c.count << "x  " << c.fingerprint.substr(0, 12) << "  "
        << sample << "\n";
    clusters.push_back({{"fingerprint", c.fingerprint},
                        {"count", c.count},
                        {"sample_text", c.sample_text},
                        {"record_ids", c.record_ids}});
  }
  if (auto path = settings.Get("out")) {
    json doc = {{"corpus_fingerprint", corpus.fingerprint()},
                {"normalization", std::string(NormalizationName(normalization))},
                {"n_records", r.n_records},
                {"n_distinct", r.n_distinct},
                {"duplicate_clusters", r.duplicate_clusters},
                {"excess_duplicates", r.excess_duplicates},
                {"top_clusters", std::move(clusters)}};
    WriteFile(*path, doc.dump(2) + "\n");
  }
  return kOk;
}

void AddFlag(CLI::App& app, FlagValues& flags, const std::string& name,
             const std::string& key, const std::string& help) {
  app.add_option_function<std::string>(
      name, [&flags, key](const std::string& v) { flags.values[key] = v; },
      help);
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"dmeter: corpus measurement engine"};
  app.require_subcommand(1, 1);
  FlagValues flags;

  AddFlag(app, flags, "--input", "input", "Corpus file");
  AddFlag(app, flags, "--format", "format", "jsonl, plaintext or csv");
  AddFlag(app, flags, "--tokenizer", "tokenizer",
          "unicode-word, whitespace or character, with +fold or +nofold");
  AddFlag(app, flags, "--out", "out", "Output file");
  AddFlag(app, flags, "--metrics", "metrics",
          "Comma-separated families or measurement names");
  AddFlag(app, flags, "--embeddings", "embeddings", "Embedding matrix file");
  AddFlag(app, flags, "--targets", "targets", "Target terms, one per line");
  AddFlag(app, flags, "--logprobs", "logprobs",
          "External per-record log-probabilities (JSONL)");
  app.add_option("--config", flags.config, "Config file (key = value)");
  app.add_option("--set", flags.assignments,
                 "Override a setting: section.key=value");
  app.add_option("--seed", flags.seed, "Reserved; all computation is "
                                       "deterministic");

  CLI::App* measure = app.add_subcommand("measure", "Write a measurement report");
  CLI::App* compare = app.add_subcommand("compare", "Compare two reports");
  std::string baseline_path, candidate_path;
  compare->add_option("baseline", baseline_path, "Baseline report")->required();
  compare->add_option("candidate", candidate_path, "Candidate report")
      ->required();
  CLI::App* assoc = app.add_subcommand("assoc", "Top co-terms by nPMI");
  AddFlag(*assoc, flags, "--k", "assoc.k", "Co-terms per target (default 20)");
  AddFlag(*assoc, flags, "--window", "assoc.window",
          "Sliding-window contexts of this width instead of documents");
  AddFlag(*assoc, flags, "--alpha", "assoc.alpha", "Additive smoothing");
  AddFlag(*assoc, flags, "--count-mode", "assoc.count_mode",
          "binary or frequency");
  assoc->add_flag_callback(
      "--attribute-tokens",
      [&flags] { flags.values["assoc.attribute_tokens"] = "true"; },
      "Treat record attributes as @key=value pseudo-tokens");
  CLI::App* dedup = app.add_subcommand("dedup", "Exact duplicate report");
  AddFlag(*dedup, flags, "--normalization", "dedup.normalization",
          "exact or fold-and-collapse");
  AddFlag(*dedup, flags, "--top", "dedup.top", "Clusters to list");
  for (CLI::App* sub : {measure, compare, assoc, dedup}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFatal;
  }

  try {
    Settings settings;
    if (!flags.config.empty()) settings.LoadFile(flags.config);
    for (const auto& [key, value] : flags.values) settings.Set(key, value);
    for (const std::string& a : flags.assignments) settings.SetAssignment(a);
    settings.RejectUnknown(KnownSettings());

    if (measure->parsed()) return CmdMeasure(settings, out, err);
    if (compare->parsed()) {
      return CmdCompare(settings, baseline_path, candidate_path, out);
    }
    if (assoc->parsed()) return CmdAssoc(settings, out, err);
    return CmdDedup(settings, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFatal;
  }
}

}  // namespace dmeter::cli
