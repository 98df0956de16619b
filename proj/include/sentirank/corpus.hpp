#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sentirank {

/// One citation sentence linking a citing article to a cited article.
/// Carries raw text, a precomputed sentence score, or both; a precomputed
/// score always bypasses preprocessing.
struct CitationRecord {
    std::string citing_id;
    std::string cited_id;
    std::optional<std::string> sentence_text;
    std::optional<double> precomputed_score;
    std::optional<std::string> source_tag;
    /// Optional pre-tagged form: whitespace-separated "surface/pos" tokens,
    /// pos one of noun|adjective|adverb|other (or n|a|r|o).
    std::optional<std::string> tagged_text;
};

enum class CitationFormat { tsv, jsonl };

/// strict: any malformed line aborts the load (the CLI default).
/// lenient: malformed lines are rejected, counted, and reported.
enum class ParsePolicy { strict, lenient };

struct CitationLoadResult {
    std::vector<CitationRecord> records;
    std::size_t lines_total = 0;  // data lines seen, header excluded
    std::size_t rejected = 0;     // nonzero only under ParsePolicy::lenient
    std::vector<std::string> warnings;
};

CitationLoadResult load_citations(const std::string& path, CitationFormat format,
                                  ParsePolicy policy = ParsePolicy::strict);

/// Ordered authors per article plus a display-name table.
struct AuthorshipTable {
    std::map<std::string, std::vector<std::string>> entries;  // article -> author ids
    std::map<std::string, std::string> names;                 // author id -> display name
};

struct AuthorshipLoadResult {
    AuthorshipTable table;
    std::size_t duplicates_collapsed = 0;
    std::vector<std::string> warnings;
};

AuthorshipLoadResult load_authorship(const std::string& path);

/// Flat variant -> canonical map. Canonical targets are never variants
/// themselves; a chain is a load/apply error.
struct AliasMap {
    std::map<std::string, std::string> merges;
};

AliasMap load_alias_map(const std::string& path);

/// Replaces every variant id with its canonical id and collapses per-article
/// duplicates the merge created. Idempotent. Throws InputError on a chain.
AuthorshipTable apply_alias_map(const AuthorshipTable& table, const AliasMap& map);

using ArticlePair = std::pair<std::string, std::string>;  // (citing, cited)

struct SelfCitationReport {
    std::set<ArticlePair> pairs;  // pairs whose author sets intersect
    std::size_t pairs_examined = 0;
    std::size_t pairs_missing_authorship = 0;  // skipped, coverage warning
    std::map<std::string, std::size_t> pairs_per_author;  // shared author -> pair count
};

/// Flags (citing, cited) pairs sharing at least one author. Authorship must
/// already be canonical (post-alias); pairs lacking authorship on either side
/// are skipped and counted.
SelfCitationReport detect_self_citations(const std::vector<CitationRecord>& records,
                                         const AuthorshipTable& authorship);

/// Sealed corpus snapshot. Immutable once built; downstream modules only
/// ever read it, so it is safe to share across threads.
struct Corpus {
    std::vector<CitationRecord> records;
    AuthorshipTable authorship;
    std::set<ArticlePair> self_citation_pairs;
    std::size_t removed_records = 0;

    /// Every article id a sealed record mentions, citing or cited.
    std::set<std::string> visible_articles() const;
};

Corpus filter_self_citations(std::vector<CitationRecord> records, AuthorshipTable authorship,
                             std::set<ArticlePair> pairs);

}  // namespace sentirank
