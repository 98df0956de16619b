#include "sentirank/aggregate.hpp"

#include "sentirank/util.hpp"

namespace sentirank {

std::vector<PairScore> compute_pair_scores(const Corpus& corpus, const Lexicon& lexicon,
                                           const CurationPolicy& curation) {
    std::map<ArticlePair, std::vector<const CitationRecord*>> groups;
    for (const auto& rec : corpus.records) {
        groups[{rec.citing_id, rec.cited_id}].push_back(&rec);
    }
    std::vector<PairScore> out;
    out.reserve(groups.size());
    for (const auto& [pair, recs] : groups) {
        CompensatedSum sum;
        for (const CitationRecord* rec : recs) {
            if (rec->precomputed_score) {
                sum.add(*rec->precomputed_score);
            } else if (rec->tagged_text) {
                sum.add(score_sentence(preprocess_tagged(*rec->tagged_text, lexicon, curation),
                                       lexicon));
            } else if (rec->sentence_text) {
                sum.add(score_sentence(preprocess(*rec->sentence_text, lexicon, curation), lexicon));
            }
        }
        out.push_back({pair, recs.size(), sum.value()});
    }
    return out;
}

std::map<std::string, ArticleStats> compute_article_stats(const std::vector<PairScore>& pairs) {
    std::map<std::string, CompensatedSum> totals;
    std::map<std::string, ArticleStats> stats;
    for (const auto& ps : pairs) {
        auto& st = stats[ps.pair.second];
        st.article_id = ps.pair.second;
        st.citing_articles.insert(ps.pair.first);
        totals[ps.pair.second].add(ps.score);
    }
    for (auto& [id, st] : stats) st.total_sentiment = totals.at(id).value();
    return stats;
}

std::map<std::string, ArticleStats> compute_article_stats(const Corpus& corpus,
                                                          const Lexicon& lexicon,
                                                          const CurationPolicy& curation) {
    return compute_article_stats(compute_pair_scores(corpus, lexicon, curation));
}

std::map<std::string, ArticleStats> merge_article_stats(
    std::map<std::string, ArticleStats> a, const std::map<std::string, ArticleStats>& b) {
    for (const auto& [id, st] : b) {
        auto [it, inserted] = a.emplace(id, st);
        if (!inserted) {
            it->second.citing_articles.insert(st.citing_articles.begin(),
                                              st.citing_articles.end());
            CompensatedSum sum;
            sum.add(it->second.total_sentiment);
            sum.add(st.total_sentiment);
            it->second.total_sentiment = sum.value();
        }
    }
    return a;
}

std::map<std::string, AuthorProfile> compute_author_profiles(
    const std::map<std::string, ArticleStats>& stats, const AuthorshipTable& authorship,
    const std::set<std::string>& visible_articles) {
    std::map<std::string, AuthorProfile> profiles;
    std::map<std::string, CompensatedSum> totals;
    for (const auto& [article, authors] : authorship.entries) {
        if (!visible_articles.count(article)) continue;
        auto st = stats.find(article);
        for (const auto& author : authors) {
            auto& profile = profiles[author];
            profile.author_id = author;
            if (!profile.publications.insert(article).second) continue;
            if (st != stats.end()) {
                profile.citing_count += st->second.citation_count();
                totals[author].add(st->second.total_sentiment);
            }
        }
    }
    for (auto& [author, profile] : profiles) {
        if (auto it = totals.find(author); it != totals.end()) {
            profile.total_sentiment = it->second.value();
        }
    }
    return profiles;
}

}  // namespace sentirank
