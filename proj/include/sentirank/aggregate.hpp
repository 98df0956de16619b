#pragma once

#include "sentirank/corpus.hpp"
#include "sentirank/sentiment.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace sentirank {

/// Score and sentence count for one (citing, cited) pair.
struct PairScore {
    ArticlePair pair;
    std::size_t sentences = 0;
    double score = 0.0;
};

/// Per cited article: the distinct citing articles and the sum of its pair
/// scores. total_sentiment is exact aggregation output, never clamped.
struct ArticleStats {
    std::string article_id;
    std::set<std::string> citing_articles;
    double total_sentiment = 0.0;

    std::size_t citation_count() const { return citing_articles.size(); }
};

/// Per-author rollup. NP is the corpus-visible publication count, NC the
/// citing-article total over publications, S-NC the sentiment total.
struct AuthorProfile {
    std::string author_id;
    std::set<std::string> publications;
    std::size_t citing_count = 0;     // NC
    double total_sentiment = 0.0;     // S-NC

    std::size_t np() const { return publications.size(); }
};

/// One PairScore per distinct (citing, cited) pair of the sealed corpus,
/// sorted by pair for deterministic output.
std::vector<PairScore> compute_pair_scores(const Corpus& corpus, const Lexicon& lexicon,
                                           const CurationPolicy& curation = {});

std::map<std::string, ArticleStats> compute_article_stats(const std::vector<PairScore>& pairs);

/// Convenience composition of the two steps above.
std::map<std::string, ArticleStats> compute_article_stats(const Corpus& corpus,
                                                          const Lexicon& lexicon,
                                                          const CurationPolicy& curation = {});

/// Deterministic merge of partial aggregations; partial passes over any
/// split of the records must sum to the single-pass result.
std::map<std::string, ArticleStats> merge_article_stats(std::map<std::string, ArticleStats> a,
                                                        const std::map<std::string, ArticleStats>& b);

/// Rolls article stats up to authors. Every citation credits every coauthor
/// in full. `visible_articles` (the sealed corpus's citing + cited ids)
/// bounds NP: authored articles outside the corpus do not count.
std::map<std::string, AuthorProfile> compute_author_profiles(
    const std::map<std::string, ArticleStats>& stats, const AuthorshipTable& authorship,
    const std::set<std::string>& visible_articles);

}  // namespace sentirank
