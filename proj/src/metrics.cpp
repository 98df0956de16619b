#include "sentirank/metrics.hpp"

#include "sentirank/error.hpp"

#include <algorithm>
#include <functional>

namespace sentirank {

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::aif: return "aif";
        case Metric::s_aif: return "s_aif";
        case Metric::h_index: return "h_index";
        case Metric::sh_index: return "sh_index";
        case Metric::pagerank: return "pagerank";
        case Metric::s_pagerank: return "s_pagerank";
    }
    return "aif";
}

std::optional<Metric> parse_metric(std::string_view name) {
    if (name == "aif") return Metric::aif;
    if (name == "s_aif" || name == "s-aif" || name == "saif") return Metric::s_aif;
    if (name == "h_index" || name == "h-index" || name == "h") return Metric::h_index;
    if (name == "sh_index" || name == "sh-index" || name == "sh" || name == "s_h" ||
        name == "s_h_index") {
        return Metric::sh_index;
    }
    if (name == "pagerank" || name == "pr") return Metric::pagerank;
    if (name == "s_pagerank" || name == "s-pagerank" || name == "spr") return Metric::s_pagerank;
    return std::nullopt;
}

std::vector<Metric> all_metrics() {
    return {Metric::aif,      Metric::s_aif,    Metric::h_index,
            Metric::sh_index, Metric::pagerank, Metric::s_pagerank};
}

bool metric_needs_sentiment(Metric metric) {
    return metric == Metric::s_aif || metric == Metric::sh_index || metric == Metric::s_pagerank;
}

Metric metric_counterpart(Metric metric) {
    switch (metric) {
        case Metric::aif: return Metric::s_aif;
        case Metric::s_aif: return Metric::aif;
        case Metric::h_index: return Metric::sh_index;
        case Metric::sh_index: return Metric::h_index;
        case Metric::pagerank: return Metric::s_pagerank;
        case Metric::s_pagerank: return Metric::pagerank;
    }
    return metric;
}

double aif(const AuthorProfile& profile) {
    if (profile.np() == 0) {
        throw AnalysisError("undefined AIF: author '" + profile.author_id +
                            "' has no corpus-visible publications");
    }
    return static_cast<double>(profile.citing_count) / static_cast<double>(profile.np());
}

double s_aif(const AuthorProfile& profile) {
    if (profile.np() == 0) {
        throw AnalysisError("undefined S-AIF: author '" + profile.author_id +
                            "' has no corpus-visible publications");
    }
    return profile.total_sentiment / static_cast<double>(profile.np());
}

namespace {

// Shared loop: descending sort, then advance while the value at position
// `index` (1-based) is still >= index.
template <typename T>
int index_loop(std::vector<T> values) {
    std::sort(values.begin(), values.end(), std::greater<T>());
    int h = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= static_cast<T>(i + 1)) {
            h = static_cast<int>(i + 1);
        } else {
            break;
        }
    }
    return h;
}

}  // namespace

int h_index(std::vector<std::int64_t> citation_counts) {
    return index_loop(std::move(citation_counts));
}

int sh_index(std::vector<double> sentiment_scores) {
    return index_loop(std::move(sentiment_scores));
}

}  // namespace sentirank
