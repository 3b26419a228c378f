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

#include "dmeter/tendency.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dmeter/errors.h"

namespace dmeter {

SummaryStats Summarize(std::span<const double> values) {
  if (values.empty()) throw ArgumentError("summary of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) throw ArgumentError("non-finite sample value");
  }
  std::sort(sorted.begin(), sorted.end());

  SummaryStats s;
  const std::size_t n = sorted.size();
  const double nd = static_cast<double>(n);
  s.count = n;
  s.min = sorted.front();
  s.max = sorted.back();
  s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / nd;
  s.median = n % 2 == 1 ? sorted[n / 2]
                        : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;

  std::size_t best_run = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    const std::size_t run = j - i;
    if (run > best_run) {
      best_run = run;
      s.modes.assign(1, sorted[i]);
    } else if (run == best_run) {
      s.modes.push_back(sorted[i]);
    }
    i = j;
  }

  if (n < 2) return s;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : sorted) {
    const double d = v - s.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  s.variance = m2 / (nd - 1);
  s.std_dev = std::sqrt(*s.variance);
  if (m2 == 0) return s;
  m2 /= nd;
  m3 /= nd;
  m4 /= nd;
  if (n >= 3) {
    const double g1 = m3 / std::pow(m2, 1.5);
    s.skewness = std::sqrt(nd * (nd - 1)) / (nd - 2) * g1;
  }
  if (n >= 4) {
    const double g2 = m4 / (m2 * m2) - 3.0;
    s.excess_kurtosis =
        (nd - 1) / ((nd - 2) * (nd - 3)) * ((nd + 1) * g2 + 6.0);
  }
  return s;
}

double Burstiness(std::span<const double> gaps) {
  if (gaps.size() < 2) throw ArgumentError("burstiness needs at least 2 gaps");
  double sum = 0;
  for (double g : gaps) {
    if (!std::isfinite(g) || g < 0) {
      throw ArgumentError("gaps must be finite and non-negative");
    }
    sum += g;
  }
  const double n = static_cast<double>(gaps.size());
  const double mu = sum / n;
  double ss = 0;
  for (double g : gaps) ss += (g - mu) * (g - mu);
  const double sigma = std::sqrt(ss / n);
  if (mu + sigma == 0) {
    throw UndefinedValueError("burstiness undefined: all gaps are zero");
  }
  // Constant gaps leave rounding noise in sigma; treat relative noise as 0.
  if (sigma <= 1e-12 * mu) return -1.0;
  return (sigma - mu) / (sigma + mu);
}

std::vector<double> TimestampGaps(std::span<const Record> records) {
  std::vector<std::int64_t> stamps;
  for (const Record& r : records) {
    if (r.timestamp) stamps.push_back(*r.timestamp);
  }
  std::sort(stamps.begin(), stamps.end());
  std::vector<double> gaps;
  for (std::size_t i = 1; i < stamps.size(); ++i) {
    gaps.push_back(static_cast<double>(stamps[i] - stamps[i - 1]));
  }
  return gaps;
}

std::vector<double> TokenRecurrenceGaps(const Corpus& corpus,
                                        std::string_view token) {
  std::vector<double> gaps;
  std::size_t position = 0;
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (const std::string& t : corpus.tokens(i)) {
      if (t == token) {
        if (last) gaps.push_back(static_cast<double>(position - *last));
        last = position;
      }
      ++position;
    }
  }
  return gaps;
}

std::string_view ZipfMethodName(ZipfMethod method) {
  return method == ZipfMethod::kDiscreteMle ? "discrete-mle"
                                            : "loglog-regression";
}

ZipfMethod ParseZipfMethod(std::string_view name) {
  if (name == "discrete-mle") return ZipfMethod::kDiscreteMle;
  if (name == "loglog-regression") return ZipfMethod::kLogLogRegression;
  throw ArgumentError("unknown Zipf fit method '" + std::string(name) +
                      "' (expected discrete-mle or loglog-regression)");
}

namespace {

// Mean of ln r under p(r) ~ r^-alpha on ranks 1..n; decreasing in alpha.
double ExpectedLogRank(const std::vector<double>& log_ranks, double alpha) {
  double z = 0, weighted = 0;
  for (double lr : log_ranks) {
    const double w = std::exp(-alpha * lr);
    z += w;
    weighted += w * lr;
  }
  return weighted / z;
}

double SolveMle(std::span<const std::uint64_t> sorted, bool& at_boundary) {
  const std::size_t n = sorted.size();
  std::vector<double> log_ranks(n);
  double total = 0, observed = 0;
  for (std::size_t r = 0; r < n; ++r) {
    log_ranks[r] = std::log(static_cast<double>(r + 1));
    total += static_cast<double>(sorted[r]);
    observed += static_cast<double>(sorted[r]) * log_ranks[r];
  }
  observed /= total;
  double lo = kMinZipfAlpha, hi = 64.0;
  if (ExpectedLogRank(log_ranks, lo) <= observed) {
    at_boundary = true;
    return kMinZipfAlpha;
  }
  if (ExpectedLogRank(log_ranks, hi) >= observed) return hi;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (ExpectedLogRank(log_ranks, mid) > observed) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double SolveLogLog(std::span<const std::uint64_t> sorted, bool& at_boundary) {
  const double n = static_cast<double>(sorted.size());
  double sx = 0, sy = 0;
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    sx += std::log(static_cast<double>(r + 1));
    sy += std::log(static_cast<double>(sorted[r]));
  }
  const double mx = sx / n, my = sy / n;
  double sxy = 0, sxx = 0;
  for (std::size_t r = 0; r < sorted.size(); ++r) {
    const double dx = std::log(static_cast<double>(r + 1)) - mx;
    sxy += dx * (std::log(static_cast<double>(sorted[r])) - my);
    sxx += dx * dx;
  }
  const double alpha = -sxy / sxx;
  if (alpha <= kMinZipfAlpha) {
    at_boundary = true;
    return kMinZipfAlpha;
  }
  return alpha;
}

}  // namespace

double ZipfKsDistance(std::span<const std::uint64_t> sorted_counts,
                      double alpha) {
  const std::size_t n = sorted_counts.size();
  double total = 0, z = 0;
  for (std::size_t r = 0; r < n; ++r) {
    total += static_cast<double>(sorted_counts[r]);
    z += std::pow(static_cast<double>(r + 1), -alpha);
  }
  double observed = 0, fitted = 0, ks = 0;
  for (std::size_t r = 0; r < n; ++r) {
    observed += static_cast<double>(sorted_counts[r]) / total;
    fitted += std::pow(static_cast<double>(r + 1), -alpha) / z;
    ks = std::max(ks, std::abs(observed - fitted));
  }
  return std::min(ks, 1.0);
}

ZipfFit FitZipf(std::span<const std::uint64_t> counts, ZipfMethod method) {
  std::vector<std::uint64_t> sorted;
  for (std::uint64_t c : counts) {
    if (c > 0) sorted.push_back(c);
  }
  if (sorted.size() < 2) {
    throw UndefinedValueError("Zipf fit needs at least 2 distinct items");
  }
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  ZipfFit fit;
  fit.method = method;
  fit.n_ranks = sorted.size();
  fit.low_confidence = sorted.size() < kZipfMinConfidentRanks;
  fit.alpha = method == ZipfMethod::kDiscreteMle
                  ? SolveMle(sorted, fit.alpha_at_boundary)
                  : SolveLogLog(sorted, fit.alpha_at_boundary);
  fit.ks_distance = ZipfKsDistance(sorted, fit.alpha);
  return fit;
}

ZipfFit FitZipf(const FrequencyTable& table, ZipfMethod method) {
  std::vector<std::uint64_t> counts;
  counts.reserve(table.size());
  for (const auto& [item, count] : table.counts()) counts.push_back(count);
  return FitZipf(counts, method);
}

}  // namespace dmeter
