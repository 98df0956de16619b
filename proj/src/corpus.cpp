#include "sentirank/corpus.hpp"

#include "sentirank/error.hpp"
#include "sentirank/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sentirank {
namespace {

// Column slots recognized in the citations TSV header. citing_id and
// cited_id are mandatory; the rest are optional extensions.
struct ColumnMap {
    int citing = -1;
    int cited = -1;
    int text = -1;
    int score = -1;
    int source = -1;
    int tagged = -1;
};

ColumnMap parse_header(const std::string& path, std::string_view header) {
    ColumnMap cols;
    const auto fields = split_tabs(header);
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string_view name = trim(fields[i]);
        const int idx = static_cast<int>(i);
        if (name == "citing_id") cols.citing = idx;
        else if (name == "cited_id") cols.cited = idx;
        else if (name == "sentence_text") cols.text = idx;
        else if (name == "precomputed_score") cols.score = idx;
        else if (name == "source_tag") cols.source = idx;
        else if (name == "tagged_text") cols.tagged = idx;
        else throw_parse_error(path, 1, "unknown column '" + std::string(name) + "' in header");
    }
    if (cols.citing < 0 || cols.cited < 0) {
        throw_parse_error(path, 1, "header must name citing_id and cited_id columns");
    }
    return cols;
}

std::string_view field_at(const std::vector<std::string_view>& fields, int idx) {
    if (idx < 0 || static_cast<std::size_t>(idx) >= fields.size()) return {};
    return fields[static_cast<std::size_t>(idx)];
}

// Validates the record invariants shared by both input formats.
void validate_record(const std::string& path, std::size_t line, const CitationRecord& rec) {
    if (rec.citing_id.empty()) throw_parse_error(path, line, "empty citing_id");
    if (rec.cited_id.empty()) throw_parse_error(path, line, "empty cited_id");
    if (rec.citing_id == rec.cited_id) {
        throw_parse_error(path, line, "self-pair: citing_id == cited_id ('" + rec.citing_id + "')");
    }
    if (!rec.sentence_text && !rec.precomputed_score && !rec.tagged_text) {
        throw_parse_error(path, line,
                          "record has neither sentence_text nor precomputed_score");
    }
}

CitationLoadResult load_citations_tsv(const std::string& path, ParsePolicy policy) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw InputError(path + ": empty file, expected header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const ColumnMap cols = parse_header(path, line);

    CitationLoadResult result;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++result.lines_total;
        try {
            const auto fields = split_tabs(line);
            CitationRecord rec;
            rec.citing_id = std::string(field_at(fields, cols.citing));
            rec.cited_id = std::string(field_at(fields, cols.cited));
            if (const auto text = field_at(fields, cols.text); !text.empty()) {
                rec.sentence_text = std::string(text);
            }
            if (const auto score = field_at(fields, cols.score); !score.empty()) {
                double v = 0.0;
                if (!parse_real(score, v)) {
                    throw_parse_error(path, lineno,
                                      "field precomputed_score: not a number ('" +
                                          std::string(score) + "')");
                }
                rec.precomputed_score = v;
            }
            if (const auto tag = field_at(fields, cols.source); !tag.empty()) {
                rec.source_tag = std::string(tag);
            }
            if (const auto tagged = field_at(fields, cols.tagged); !tagged.empty()) {
                rec.tagged_text = std::string(tagged);
            }
            validate_record(path, lineno, rec);
            result.records.push_back(std::move(rec));
        } catch (const InputError& e) {
            if (policy == ParsePolicy::strict) throw;
            ++result.rejected;
            result.warnings.push_back(e.what());
        }
    }
    return result;
}

CitationLoadResult load_citations_jsonl(const std::string& path, ParsePolicy policy) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);

    CitationLoadResult result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        ++result.lines_total;
        try {
            nlohmann::json obj;
            try {
                obj = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                throw_parse_error(path, lineno, std::string("invalid JSON: ") + e.what());
            }
            if (!obj.is_object()) throw_parse_error(path, lineno, "line is not a JSON object");

            CitationRecord rec;
            auto get_string = [&](const char* key) -> std::optional<std::string> {
                auto it = obj.find(key);
                if (it == obj.end() || it->is_null()) return std::nullopt;
                if (!it->is_string()) {
                    throw_parse_error(path, lineno, std::string("field ") + key + ": expected string");
                }
                std::string v = it->get<std::string>();
                if (v.empty()) return std::nullopt;
                return v;
            };
            rec.citing_id = get_string("citing_id").value_or("");
            rec.cited_id = get_string("cited_id").value_or("");
            if (auto it = obj.find("precomputed_score"); it != obj.end() && !it->is_null()) {
                if (!it->is_number()) {
                    throw_parse_error(path, lineno, "field precomputed_score: expected number");
                }
                rec.precomputed_score = it->get<double>();
            }
            rec.sentence_text = get_string("sentence_text");
            rec.source_tag = get_string("source_tag");
            rec.tagged_text = get_string("tagged_text");
            validate_record(path, lineno, rec);
            result.records.push_back(std::move(rec));
        } catch (const InputError& e) {
            if (policy == ParsePolicy::strict) throw;
            ++result.rejected;
            result.warnings.push_back(e.what());
        }
    }
    return result;
}

}  // namespace

CitationLoadResult load_citations(const std::string& path, CitationFormat format,
                                  ParsePolicy policy) {
    return format == CitationFormat::tsv ? load_citations_tsv(path, policy)
                                         : load_citations_jsonl(path, policy);
}

AuthorshipLoadResult load_authorship(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);

    AuthorshipLoadResult result;
    std::string line;
    std::size_t lineno = 0;
    bool any_row = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("article_id\t", 0) == 0) continue;  // optional header
        const auto fields = split_tabs(line);
        if (fields.size() < 2 || fields.size() > 3) {
            throw_parse_error(path, lineno, "expected article_id\\tauthor_id[\\tauthor_name]");
        }
        const std::string article(fields[0]);
        const std::string author(fields[1]);
        if (article.empty()) throw_parse_error(path, lineno, "empty article_id");
        if (author.empty()) {
            throw_parse_error(path, lineno, "article '" + article + "' row has no author");
        }
        any_row = true;
        auto& authors = result.table.entries[article];
        if (std::find(authors.begin(), authors.end(), author) != authors.end()) {
            ++result.duplicates_collapsed;
        } else {
            authors.push_back(author);
        }
        if (fields.size() == 3 && !fields[2].empty()) {
            result.table.names.emplace(author, std::string(fields[2]));
        }
    }
    if (!any_row) result.warnings.push_back("no authorship data in " + path);
    if (result.duplicates_collapsed > 0) {
        result.warnings.push_back("collapsed " + std::to_string(result.duplicates_collapsed) +
                                  " duplicate (article, author) rows");
    }
    return result;
}

AliasMap load_alias_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read file: " + path);

    AliasMap map;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line == "variant\tcanonical") continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            throw_parse_error(path, lineno, "expected variant\\tcanonical");
        }
        if (fields[0] == fields[1]) {
            throw_parse_error(path, lineno, "variant maps to itself ('" + std::string(fields[0]) + "')");
        }
        map.merges[std::string(fields[0])] = std::string(fields[1]);
    }
    // Chains are rejected at load so apply_alias_map is a single pass.
    for (const auto& [variant, canonical] : map.merges) {
        if (map.merges.count(canonical)) {
            throw InputError(path + ": alias chain: '" + variant + "' -> '" + canonical +
                             "' -> '" + map.merges.at(canonical) + "'");
        }
    }
    return map;
}

AuthorshipTable apply_alias_map(const AuthorshipTable& table, const AliasMap& map) {
    for (const auto& [variant, canonical] : map.merges) {
        if (map.merges.count(canonical)) {
            throw InputError("alias chain: '" + variant + "' -> '" + canonical + "' -> '" +
                             map.merges.at(canonical) + "'");
        }
    }
    AuthorshipTable out;
    for (const auto& [article, authors] : table.entries) {
        auto& canon = out.entries[article];
        for (const auto& author : authors) {
            auto it = map.merges.find(author);
            const std::string& id = it == map.merges.end() ? author : it->second;
            if (std::find(canon.begin(), canon.end(), id) == canon.end()) {
                canon.push_back(id);
            }
        }
    }
    // The canonical id's own display name wins over a variant's.
    for (const auto& [author, name] : table.names) {
        if (!map.merges.count(author)) out.names.emplace(author, name);
    }
    for (const auto& [author, name] : table.names) {
        auto it = map.merges.find(author);
        if (it != map.merges.end()) out.names.emplace(it->second, name);
    }
    return out;
}

SelfCitationReport detect_self_citations(const std::vector<CitationRecord>& records,
                                         const AuthorshipTable& authorship) {
    SelfCitationReport report;
    std::set<ArticlePair> seen;
    for (const auto& rec : records) {
        if (!seen.insert({rec.citing_id, rec.cited_id}).second) continue;
        ++report.pairs_examined;
        auto citing = authorship.entries.find(rec.citing_id);
        auto cited = authorship.entries.find(rec.cited_id);
        if (citing == authorship.entries.end() || cited == authorship.entries.end()) {
            ++report.pairs_missing_authorship;
            continue;
        }
        bool shared = false;
        for (const auto& a : citing->second) {
            if (std::find(cited->second.begin(), cited->second.end(), a) != cited->second.end()) {
                shared = true;
                ++report.pairs_per_author[a];
            }
        }
        if (shared) report.pairs.insert({rec.citing_id, rec.cited_id});
    }
    return report;
}

std::set<std::string> Corpus::visible_articles() const {
    std::set<std::string> out;
    for (const auto& rec : records) {
        out.insert(rec.citing_id);
        out.insert(rec.cited_id);
    }
    return out;
}

Corpus filter_self_citations(std::vector<CitationRecord> records, AuthorshipTable authorship,
                             std::set<ArticlePair> pairs) {
    Corpus corpus;
    corpus.authorship = std::move(authorship);
    corpus.self_citation_pairs = std::move(pairs);
    const std::size_t before = records.size();
    std::erase_if(records, [&](const CitationRecord& rec) {
        return corpus.self_citation_pairs.count({rec.citing_id, rec.cited_id}) > 0;
    });
    corpus.removed_records = before - records.size();
    corpus.records = std::move(records);
    return corpus;
}

}  // namespace sentirank
