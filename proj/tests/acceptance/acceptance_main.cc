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

// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits non-zero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dmeter/association.h"
#include "dmeter/corpus.h"
#include "dmeter/density.h"
#include "dmeter/distance.h"
#include "dmeter/diversity.h"
#include "dmeter/embedding.h"
#include "dmeter/language_model.h"
#include "dmeter/quality.h"
#include "dmeter/report.h"
#include "dmeter/tendency.h"
#include "dmeter/transport.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace dmeter::acceptance {
namespace {

namespace fs = std::filesystem;
using testing::Rng;

// Collects the first few failures of a criterion.
class Check {
 public:
  void Expect(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (failures_ <= 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void Near(double actual, double expected, double tolerance,
            const std::string& what) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": got " << actual << ", want " << expected << " +/- "
        << tolerance;
    Expect(std::abs(actual - expected) <= tolerance, msg.str());
  }
  bool ok() const { return failures_ == 0; }
  std::string detail() const {
    return detail_ + (failures_ > 3 ? " (+" + std::to_string(failures_ - 3) +
                                          " more)"
                                    : "");
  }

 private:
  int failures_ = 0;
  std::string detail_;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

SimilarityKernel KernelOf(const testing::Matrix& m) {
  RowMajorMatrix k(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) k(i, j) = m[i][j];
  }
  return SimilarityKernel(k, "acceptance");
}

void DiversityAnchors(Check& check) {
  for (std::size_t n : {2, 4, 8, 16}) {
    testing::Matrix identity(n, std::vector<double>(n, 0.0));
    testing::Matrix ones(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
    check.Near(VendiScore(KernelOf(identity)), static_cast<double>(n), 1e-9,
               "vendi(identity " + std::to_string(n) + ")");
    check.Near(VendiScore(KernelOf(ones)), 1.0, 1e-9,
               "vendi(all-identical " + std::to_string(n) + ")");
  }
  testing::Matrix blocks(6, std::vector<double>(6, 0.0));
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) blocks[i][j] = (i < 3) == (j < 3);
  }
  check.Near(VendiScore(KernelOf(blocks)), 2.0, 1e-9, "vendi(two blocks)");
  for (std::size_t k = 1; k <= 10; ++k) {
    FrequencyTable table;
    for (std::size_t i = 0; i < k; ++i) table.Add("t" + std::to_string(i), 7);
    const double kd = static_cast<double>(k);
    check.Near(GiniDiversity(table), 1 - 1 / kd, 1e-12,
               "gini(uniform " + std::to_string(k) + ")");
    check.Near(ShannonEntropy(table), std::log(kd), 1e-12,
               "shannon(uniform " + std::to_string(k) + ")");
  }
}

void ZipfRecovery(Check& check) {
  Rng rng(2024);
  for (double alpha : {0.8, 1.0, 1.2}) {
    const auto counts = testing::SampleZipfCounts(rng, alpha, 10000, 1000000);
    const auto start = std::chrono::steady_clock::now();
    const ZipfFit fit = FitZipf(counts, ZipfMethod::kDiscreteMle);
    const double elapsed = Seconds(start);
    check.Near(fit.alpha, alpha, 0.05, "sampled alpha " + std::to_string(alpha));
    check.Expect(elapsed < 30, "fit took " + std::to_string(elapsed) + " s");

    std::vector<std::uint64_t> exact;
    for (std::size_t r = 1; r <= 10000; ++r) {
      exact.push_back(static_cast<std::uint64_t>(
          std::llround(1e8 * std::pow(static_cast<double>(r), -alpha))));
    }
    const ZipfFit exact_fit = FitZipf(exact);
    check.Expect(exact_fit.ks_distance < 0.01,
                 "exact table KS " + std::to_string(exact_fit.ks_distance));
  }
}

std::vector<double> RandomMasses(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  double sum = 0;
  for (double& x : w) {
    x = testing::UniformIndex(rng, 0, 4) == 0 ? 0.0 : testing::Uniform(rng, 0.1, 1);
    sum += x;
  }
  if (sum == 0) {
    w[0] = 1;
    sum = 1;
  }
  for (double& x : w) x /= sum;
  return w;
}

void TransportCrossChecks(Check& check) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = testing::UniformIndex(rng, 1, 40);
    const auto xs = testing::RandomVector(rng, n, -100, 100);
    const auto ys = testing::RandomVector(rng, n, -100, 100);
    RowMajorMatrix cost(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cost(i, j) = std::abs(xs[i] - ys[j]);
    }
    const std::vector<double> uniform(n, 1.0 / static_cast<double>(n));
    check.Near(EmdDiscrete(uniform, uniform, cost), Emd1d(xs, ys), 1e-9,
               "emd_1d vs emd_discrete, trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = testing::UniformIndex(rng, 1, 4);
    const std::size_t n = testing::UniformIndex(rng, 1, 4);
    const auto supply = RandomMasses(rng, m);
    const auto demand = RandomMasses(rng, n);
    testing::Matrix cost(m, std::vector<double>(n));
    RowMajorMatrix eigen_cost(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cost[i][j] = trial % 2 ? testing::Uniform(rng, 0, 10)
                               : static_cast<double>(testing::UniformIndex(rng, 0, 3));
        eigen_cost(i, j) = cost[i][j];
      }
    }
    check.Near(EmdDiscrete(supply, demand, eigen_cost),
               testing::TransportByEnumeration(supply, demand, cost), 1e-9,
               "emd_discrete vs enumeration, trial " + std::to_string(trial));
  }
}

void MetricAxioms(Check& check) {
  Rng rng(4);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t d = testing::UniformIndex(rng, 1, 8);
    const auto x = testing::RandomVector(rng, d, -10, 10);
    const auto y = testing::RandomVector(rng, d, -10, 10);
    const auto z = testing::RandomVector(rng, d, -10, 10);
    const double xy = Euclidean(x, y), yx = Euclidean(y, x);
    check.Expect(xy >= 0 && Euclidean(x, x) == 0, "euclidean non-negativity");
    check.Expect(xy == yx, "euclidean symmetry");
    check.Expect(Euclidean(x, z) <= xy + Euclidean(y, z) + 1e-12,
                 "euclidean triangle");

    const std::string a = testing::RandomWord(rng, 10, "abcéü");
    const std::string b = testing::RandomWord(rng, 10, "abcéü");
    const std::string c = testing::RandomWord(rng, 10, "abcéü");
    const std::size_t ab = Levenshtein(a, b);
    check.Expect(Levenshtein(a, a) == 0 && (a == b || ab > 0),
                 "levenshtein non-negativity");
    check.Expect(ab == Levenshtein(b, a), "levenshtein symmetry");
    check.Expect(Levenshtein(a, c) <= ab + Levenshtein(b, c),
                 "levenshtein triangle");

    const std::size_t k = testing::UniformIndex(rng, 1, 12);
    const auto p = testing::RandomDistribution(rng, k);
    const auto q = testing::RandomDistribution(rng, k);
    check.Near(KlDivergence(p, p, 0).nats, 0.0, 1e-12, "KL(p, p)");
    check.Expect(KlDivergence(p, q, 0).nats >= -1e-12, "KL(p, q) >= 0");
  }
}

void PerplexityAnchors(Check& check) {
  for (std::size_t v : {2, 10, 100}) {
    std::string text;
    for (std::size_t i = 0; i < v; ++i) text += "u" + std::to_string(i) + " ";
    const Corpus corpus = testing::CorpusOf({text});
    check.Near(Perplexity(TrainLm(corpus, 1, 0.0), corpus).perplexity,
               static_cast<double>(v), 1e-12 * static_cast<double>(v),
               "uniform V=" + std::to_string(v));
  }
  const Corpus aab = testing::CorpusOf({"a a b"});
  check.Near(Perplexity(TrainLm(aab, 1, 0.0), aab).perplexity, 1.8899, 1e-3,
             "a a b self-perplexity");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    std::vector<std::string> a, b;
    for (int i = 0; i < 50; ++i) {
      std::string text;
      for (int t = 0; t < 15; ++t) {
        text += "w" + std::to_string(testing::UniformIndex(rng, 0, 14)) + " ";
      }
      a.push_back(text);
      b.push_back(testing::RandomSentence(rng, 15, 15, 500));
    }
    const Corpus ca = testing::CorpusOf(a);
    const NgramLm model = TrainLm(ca, 1, 1.0);
    check.Expect(Perplexity(model, ca).perplexity <
                     Perplexity(model, testing::CorpusOf(b)).perplexity,
                 "PPL(A) < PPL(B), seed " + std::to_string(seed));
  }
}

void AssociationAnchors(Check& check) {
  const CooccurrenceTable perfect =
      BuildCooccurrence(testing::CorpusOf({"x y", "x y q", "z", "w z"}));
  check.Near(Npmi(perfect, "x", "y").value, 1.0, 1e-12, "perfect co-occurrence");
  const CooccurrenceTable independent =
      BuildCooccurrence(testing::CorpusOf({"x y", "x z", "y z", "z"}));
  check.Near(Npmi(independent, "x", "y").value, 0.0, 1e-12, "independence");

  Rng rng(6);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::string> texts;
    const std::size_t n = testing::UniformIndex(rng, 1, 12);
    for (std::size_t i = 0; i < n; ++i) {
      texts.push_back(testing::RandomSentence(rng, 0, 5, 6));
    }
    const Corpus corpus = testing::CorpusOf(texts);
    const CooccurrenceTable table = BuildCooccurrence(corpus);
    const std::string x = "w" + std::to_string(testing::UniformIndex(rng, 0, 5));
    const std::string y = "w" + std::to_string(testing::UniformIndex(rng, 0, 5));
    if (x == y || table.TermCount(x) == 0 || table.TermCount(y) == 0) continue;
    const double alpha = testing::Uniform(rng, 0.01, 3);
    const double value = Npmi(table, x, y, alpha).value;
    check.Expect(value >= -1 && value <= 1, "npmi out of [-1, 1]");
    check.Near(value,
               testing::NpmiFromCounts(table.PairCount(x, y), table.TermCount(x),
                                       table.TermCount(y),
                                       static_cast<double>(n), alpha),
               1e-12, "npmi vs count oracle");
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = testing::UniformIndex(rng, 3, 30);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = static_cast<double>(testing::UniformIndex(rng, 0, 5));
      ys[i] = static_cast<double>(testing::UniformIndex(rng, 0, 8));
    }
    const auto rx = testing::NaiveRanks(xs);
    const auto ry = testing::NaiveRanks(ys);
    bool varies_x = false, varies_y = false;
    for (std::size_t i = 1; i < n; ++i) {
      varies_x = varies_x || rx[i] != rx[0];
      varies_y = varies_y || ry[i] != ry[0];
    }
    if (!varies_x || !varies_y) continue;
    check.Near(Spearman(xs, ys), Pearson(rx, ry), 1e-12,
               "spearman vs pearson of ranks");
  }
}

void BurstinessChecks(Check& check) {
  check.Expect(Burstiness(std::vector<double>(1000, 2.5)) == -1.0,
               "periodic gaps give -1");
  check.Expect(Burstiness(std::vector<double>(77, 0.3)) == -1.0,
               "periodic gaps give -1 (0.3)");
  Rng rng(7);
  std::exponential_distribution<double> exp(0.5);
  std::vector<double> gaps(100000);
  for (double& g : gaps) g = exp(rng);
  const double b = Burstiness(gaps);
  check.Expect(std::abs(b) < 0.05, "poisson |B| = " + std::to_string(b));
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::RandomVector(rng, 200, 0, 5);
    const double base = Burstiness(g);
    for (double c : {0.1, 10.0}) {
      std::vector<double> scaled = g;
      for (double& v : scaled) v *= c;
      check.Near(Burstiness(scaled), base, 1e-12, "scale invariance");
    }
  }
}

void RedundancyChecks(Check& check) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = testing::UniformIndex(rng, 5, 200);
    const std::size_t pool = testing::UniformIndex(rng, 1, n);
    std::vector<std::string> base;
    for (std::size_t i = 0; i < pool; ++i) {
      base.push_back(testing::RandomSentence(rng, 1, 6, 6));
    }
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < n; ++i) {
      std::string t = base[testing::UniformIndex(rng, 0, pool - 1)];
      if (testing::UniformIndex(rng, 0, 2) == 0) t = " " + t + "  ";
      if (testing::UniformIndex(rng, 0, 2) == 0) t[0] = 'W';
      texts.push_back(t);
    }
    const Corpus corpus = testing::CorpusOf(texts);
    std::vector<std::string> folded;
    for (const auto& t : texts) folded.push_back(testing::AsciiFoldCollapse(t));
    for (auto [mode, keys] :
         {std::pair{Normalization::kExact, texts},
          std::pair{Normalization::kFoldAndCollapse, folded}}) {
      const RedundancyReport r = FindDuplicates(corpus, mode);
      const testing::PairwiseDedup oracle = testing::PairwiseDuplicates(keys);
      check.Expect(r.n_records == n && r.n_distinct == oracle.n_distinct &&
                       r.duplicate_clusters == oracle.duplicate_clusters &&
                       r.excess_duplicates == oracle.excess_duplicates &&
                       r.cluster_sizes == oracle.sizes,
                   "planted corpus " + std::to_string(trial) + " (" +
                       std::string(NormalizationName(mode)) + ")");
      std::vector<std::string> doubled = texts;
      doubled.insert(doubled.end(), texts.begin(), texts.end());
      const RedundancyReport twice =
          FindDuplicates(testing::CorpusOf(doubled), mode);
      check.Expect(twice.n_distinct == r.n_distinct &&
                       twice.excess_duplicates ==
                           r.n_records + r.excess_duplicates &&
                       twice.n_records == 2 * r.n_records,
                   "self-concatenation law");
      // With no duplicates to begin with, the excess equals the old size.
      std::map<std::string, std::string> first_of_key;
      for (std::size_t i = 0; i < n; ++i) first_of_key.emplace(keys[i], texts[i]);
      std::vector<std::string> unique;
      for (const auto& [key, text] : first_of_key) unique.push_back(text);
      const std::vector<std::string> once_each = unique;
      unique.insert(unique.end(), once_each.begin(), once_each.end());
      const RedundancyReport unique_twice =
          FindDuplicates(testing::CorpusOf(unique), mode);
      check.Expect(unique_twice.excess_duplicates == r.n_distinct &&
                       unique_twice.n_distinct == r.n_distinct,
                   "self-concatenation of the deduplicated corpus");
    }
  }
}

EmbeddingMatrix FromRows(const testing::Matrix& rows) {
  RowMajorMatrix values(rows.size(), rows[0].size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    labels.push_back("p" + std::to_string(i));
    for (std::size_t j = 0; j < rows[i].size(); ++j) values(i, j) = rows[i][j];
  }
  return EmbeddingMatrix(std::move(labels), std::move(values));
}

void OracleSweep(Check& check) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testing::UniformIndex(rng, 2, 500);
    const std::size_t d = testing::UniformIndex(rng, 1, 10);
    testing::Matrix rows(n);
    for (auto& row : rows) row = testing::RandomVector(rng, d, -1, 1);
    const std::size_t k = testing::UniformIndex(rng, 1, std::min<std::size_t>(n - 1, 20));
    const bool cosine = trial % 2 == 0;
    const EmbeddingMatrix e = FromRows(rows);
    const DensityReport r = KnnDensity(
        e, k, cosine ? Similarity::kCosine : Similarity::kInverseEuclidean);
    const auto expected = testing::KnnDensityBruteForce(rows, k, cosine);
    for (std::size_t i = 0; i < n; ++i) {
      check.Near(r.per_point_density[i], expected[i], 1e-12, "knn density");
    }

    double volume = 1;
    for (std::size_t j = 0; j < d; ++j) {
      double lo = rows[0][j], hi = rows[0][j];
      for (const auto& row : rows) {
        lo = std::min(lo, row[j]);
        hi = std::max(hi, row[j]);
      }
      volume *= hi - lo;
    }
    const double dd = static_cast<double>(n) / volume;
    check.Near(DataDensity(e).density, dd, 1e-9 * dd, "data density");

    std::vector<double> values = testing::RandomVector(rng, n + 4, -100, 100);
    const SummaryStats s = Summarize(values);
    const testing::NaiveStats naive = testing::NaiveSummary(values);
    check.Near(s.mean, naive.mean, 1e-9, "mean");
    check.Near(s.median, naive.median, 1e-12, "median");
    check.Near(*s.variance, naive.variance, 1e-9 * naive.variance, "variance");
    check.Near(*s.skewness, naive.skewness, 1e-9, "skewness");
    check.Near(*s.excess_kurtosis, naive.excess_kurtosis, 1e-9, "kurtosis");

    std::vector<std::string> texts;
    for (int i = 0; i < 20; ++i) texts.push_back(testing::RandomSentence(rng, 0, 12, 5));
    const Corpus corpus = testing::CorpusOf(texts);
    std::vector<std::vector<std::string>> docs;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      docs.emplace_back(corpus.tokens(i).begin(), corpus.tokens(i).end());
    }
    for (std::size_t order = 1; order <= 3; ++order) {
      const auto recount = testing::SlidingWindowNgrams(docs, order);
      const FrequencyTable table = Ngrams(corpus, order);
      bool same = table.size() == recount.size();
      for (const auto& [gram, count] : recount) {
        same = same && table.Count(gram) == count;
      }
      check.Expect(same, "n-gram recount, n=" + std::to_string(order));
    }
  }
}

// Runs the real command-line binary.
int RunCli(const std::string& args) {
  const std::string command = std::string("SOURCE_DATE_EPOCH=1700000000 '") +
                              DMETER_CLI_PATH + "' " + args +
                              " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Writes `records` JSONL records whose lengths are drawn from
// [min_words, max_words]; returns the total token count.
std::uint64_t WriteBatch(const fs::path& path, std::size_t records,
                         std::size_t min_words, std::size_t max_words,
                         std::uint64_t seed) {
  Rng rng(seed);
  std::ofstream out(path);
  std::uint64_t tokens = 0;
  std::geometric_distribution<int> rank(0.02);
  for (std::size_t i = 0; i < records; ++i) {
    const std::size_t n = testing::UniformIndex(rng, min_words, max_words);
    std::string text;
    for (std::size_t t = 0; t < n; ++t) {
      text += (t ? " " : "") + std::string("w") + std::to_string(rank(rng));
    }
    tokens += n;
    text += ".";
    nlohmann::json record = {{"id", "d" + std::to_string(i)},
                             {"text", text},
                             {"timestamp", static_cast<std::int64_t>(i * 60 +
                                           testing::UniformIndex(rng, 0, 59))},
                             {"attributes", {{"source", i % 3 ? "web" : "books"}}}};
    out << record.dump() << "\n";
  }
  return tokens;
}

void EndToEnd(Check& check) {
  const fs::path dir =
      fs::temp_directory_path() / ("dmeter_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::size_t n = 10000;
  const std::uint64_t tokens_a = WriteBatch(dir / "a.jsonl", n, 5, 25, 10);
  const std::uint64_t tokens_b = WriteBatch(dir / "b.jsonl", n, 10, 50, 11);

  {
    Rng rng(12);
    RowMajorMatrix values(static_cast<Eigen::Index>(n), 16);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back("d" + std::to_string(i));
      for (Eigen::Index j = 0; j < 16; ++j) {
        values(static_cast<Eigen::Index>(i), j) = testing::Uniform(rng, -1, 1);
      }
    }
    std::ofstream out(dir / "emb.txt");
    WriteEmbeddings(out, EmbeddingMatrix(labels, values));
  }

  const std::string input = (dir / "a.jsonl").string();
  const std::string full = "--metrics tendency,diversity,density,quality --embeddings '" +
                           (dir / "emb.txt").string() + "' --input '" + input + "'";
  check.Expect(RunCli("measure " + full + " --out '" + (dir / "r1.json").string() + "'") == 0,
               "first measure run exit code");
  check.Expect(RunCli("measure " + full + " --out '" + (dir / "r2.json").string() + "'") == 0,
               "second measure run exit code");
  const std::string r1 = ReadFile(dir / "r1.json");
  check.Expect(!r1.empty() && r1 == ReadFile(dir / "r2.json"),
               "reports are not byte-identical");
  check.Expect(r1.find("\"error\"") == std::string::npos,
               "full report contains failed metrics");

  const std::string metrics = "--metrics tendency.record_length,tendency.zipf ";
  check.Expect(RunCli("measure " + metrics + "--input '" + input + "' --out '" +
                      (dir / "a.json").string() + "'") == 0,
               "measure batch A");
  check.Expect(RunCli("measure " + metrics + "--input '" + (dir / "b.jsonl").string() +
                      "' --out '" + (dir / "b.json").string() + "'") == 0,
               "measure batch B");
  check.Expect(RunCli("compare '" + (dir / "a.json").string() + "' '" +
                      (dir / "b.json").string() + "' --out '" +
                      (dir / "delta.json").string() + "'") == 0,
               "compare exit code");
  const double mean_a = static_cast<double>(tokens_a) / static_cast<double>(n);
  const double mean_b = static_cast<double>(tokens_b) / static_cast<double>(n);
  check.Expect(std::abs(mean_b / mean_a - 2) < 0.05,
               "batch B does not double the mean length");
  bool found = false;
  try {
    const nlohmann::json delta = nlohmann::json::parse(ReadFile(dir / "delta.json"));
    for (const auto& e : delta["entries"]) {
      if (e["measurement"] != "tendency.record_length" || e["key"] != "mean") continue;
      found = true;
      check.Expect(e["comparable"].get<bool>(), "mean delta comparable");
      check.Expect(e["abs_delta"].get<double>() == RoundSignificant(mean_b - mean_a),
                   "mean delta " + e["abs_delta"].dump() + " != recomputed " +
                       std::to_string(mean_b - mean_a));
    }
  } catch (const std::exception& e) {
    check.Expect(false, std::string("delta JSON: ") + e.what());
  }
  check.Expect(found, "mean delta entry missing");

  check.Expect(RunCli("measure " + metrics + "--tokenizer whitespace --input '" + input +
                      "' --out '" + (dir / "ws.json").string() + "'") == 0,
               "measure with whitespace tokenizer");
  const BatchDelta mismatch =
      Compare(LoadReport(dir / "a.json"), LoadReport(dir / "ws.json"));
  check.Expect(mismatch.n_comparable == 0 && mismatch.n_incomparable > 0,
               "tokenizer-mismatched runs not flagged incomparable");
  for (const DeltaEntry& e : mismatch.entries) {
    check.Expect(e.reason.find("tokenizer") != std::string::npos,
                 "incomparable reason should name the tokenizer");
  }
  fs::remove_all(dir);
}

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace dmeter::acceptance

int main() {
  using namespace dmeter::acceptance;
  const std::vector<Criterion> criteria = {
      {1, "analytic diversity anchors", 1, DiversityAnchors},
      {2, "zipf recovery", 3 * 30, ZipfRecovery},
      {3, "transport cross-checks", 10, TransportCrossChecks},
      {4, "metric axioms", 60, MetricAxioms},
      {5, "perplexity anchors", 60, PerplexityAnchors},
      {6, "association anchors", 60, AssociationAnchors},
      {7, "burstiness", 60, BurstinessChecks},
      {8, "redundancy", 60, RedundancyChecks},
      {9, "oracle-equivalence sweep", 120, OracleSweep},
      {10, "end-to-end determinism and workflow", 60, EndToEnd},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = Seconds(start);
    check.Expect(elapsed < c.time_limit_s,
                 "runtime " + std::to_string(elapsed) + " s exceeds " +
                     std::to_string(c.time_limit_s) + " s");
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2f s", elapsed);
    std::cout << "criterion " << c.id << " (" << c.name << "): "
              << (check.ok() ? "PASS" : "FAIL") << " [" << timing << "]";
    if (!check.ok()) std::cout << " " << check.detail();
    std::cout << std::endl;
    failed += !check.ok();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/"
            << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
