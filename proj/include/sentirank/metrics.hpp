#pragma once

#include "sentirank/aggregate.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sentirank {

enum class Metric { aif, s_aif, h_index, sh_index, pagerank, s_pagerank };

const char* metric_name(Metric metric);
std::optional<Metric> parse_metric(std::string_view name);
std::vector<Metric> all_metrics();
bool metric_needs_sentiment(Metric metric);
/// The frequency-based counterpart of a sentiment metric, and vice versa.
Metric metric_counterpart(Metric metric);

/// NC / NP. Throws AnalysisError when NP = 0 (AIF undefined; such authors
/// are excluded from AIF rankings).
double aif(const AuthorProfile& profile);

/// S-NC / NP, same domain restriction as aif.
double s_aif(const AuthorProfile& profile);

/// Largest h such that at least h publications have >= h citations each.
/// Sorts internally; the input order is irrelevant.
int h_index(std::vector<std::int64_t> citation_counts);

/// Sentiment analogue: largest s such that each of the top-s publications by
/// total sentiment score has score >= s.
int sh_index(std::vector<double> sentiment_scores);

}  // namespace sentirank
