#include "sentirank/sentiment.hpp"

#include "sentirank/error.hpp"
#include "sentirank/util.hpp"

#include <algorithm>
#include <map>

namespace sentirank {
namespace {

// ASCII letters plus any byte of a multi-byte UTF-8 sequence. Digits and
// punctuation split tokens, so citation markers like "(2006)" or "[16]"
// never produce tokens in the first place.
bool token_byte(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c >= 0x80;
}

std::size_t count_codepoints(std::string_view token) {
    std::size_t n = 0;
    for (unsigned char c : token) {
        if ((c & 0xC0) != 0x80) ++n;  // skip UTF-8 continuation bytes
    }
    return n;
}

TokenizedSentence finish(std::vector<Token> tokens, const CurationPolicy& curation) {
    if (curation.enabled()) {
        std::erase_if(tokens, [&](const Token& t) {
            return curation.removed_lemmas.count(t.lemma) > 0;
        });
    }
    TokenizedSentence out;
    out.retained_count = tokens.size();
    out.tokens = std::move(tokens);
    return out;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < sentence.size()) {
        while (i < sentence.size() && !token_byte(static_cast<unsigned char>(sentence[i]))) ++i;
        std::size_t start = i;
        while (i < sentence.size() && token_byte(static_cast<unsigned char>(sentence[i]))) ++i;
        if (i > start) {
            std::string_view raw = sentence.substr(start, i - start);
            if (count_codepoints(raw) >= 2) tokens.push_back(lower_ascii(raw));
        }
    }
    return tokens;
}

TokenizedSentence preprocess(std::string_view sentence, const Lexicon& lexicon,
                             const CurationPolicy& curation) {
    std::vector<Token> tokens;
    for (auto& surface : tokenize(sentence)) {
        auto [pos, lemma] = lexicon.tag(surface);
        if (pos == Pos::other) continue;
        tokens.push_back({std::move(surface), pos, std::move(lemma)});
    }
    return finish(std::move(tokens), curation);
}

TokenizedSentence preprocess_tagged(std::string_view tagged_text, const Lexicon& lexicon,
                                    const CurationPolicy& curation) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < tagged_text.size()) {
        while (i < tagged_text.size() && (tagged_text[i] == ' ' || tagged_text[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < tagged_text.size() && tagged_text[i] != ' ' && tagged_text[i] != '\t') ++i;
        if (i == start) continue;
        const std::string_view piece = tagged_text.substr(start, i - start);
        const std::size_t slash = piece.rfind('/');
        if (slash == std::string_view::npos || slash == 0) continue;  // no tag, skip token
        const std::string surface = lower_ascii(piece.substr(0, slash));
        const auto pos = parse_pos(piece.substr(slash + 1));
        if (!pos || *pos == Pos::other) continue;
        std::string lemma = lexicon.lemmatize(surface, *pos);
        tokens.push_back({surface, *pos, std::move(lemma)});
    }
    return finish(std::move(tokens), curation);
}

std::set<std::string> curate_frequent_lemmas(const std::vector<TokenizedSentence>& sentences,
                                             double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw InputError("curation threshold must lie in (0,1], got " + format_real(threshold));
    }
    if (sentences.empty()) throw InputError("curation needs at least one sentence");

    std::map<std::string, std::size_t> doc_freq;
    for (const auto& sentence : sentences) {
        std::set<std::string_view> seen;
        for (const auto& token : sentence.tokens) {
            if (seen.insert(token.lemma).second) ++doc_freq[token.lemma];
        }
    }
    std::set<std::string> removed;
    const double n = static_cast<double>(sentences.size());
    for (const auto& [lemma, count] : doc_freq) {
        if (static_cast<double>(count) / n >= threshold) removed.insert(lemma);
    }
    return removed;
}

double score_sentence(const TokenizedSentence& tok, const Lexicon& lexicon) {
    CompensatedSum sum;
    for (const auto& token : tok.tokens) {
        if (const LexiconEntry* entry = lexicon.find(token.lemma, token.pos)) {
            sum.add(entry->pos_score - entry->neg_score);
        }
    }
    return sum.value();
}

double score_pair(std::span<const CitationRecord> records, const Lexicon& lexicon,
                  const CurationPolicy& curation) {
    CompensatedSum sum;
    for (const auto& rec : records) {
        if (rec.precomputed_score) {
            sum.add(*rec.precomputed_score);
        } else if (rec.tagged_text) {
            sum.add(score_sentence(preprocess_tagged(*rec.tagged_text, lexicon, curation), lexicon));
        } else if (rec.sentence_text) {
            sum.add(score_sentence(preprocess(*rec.sentence_text, lexicon, curation), lexicon));
        }
    }
    return sum.value();
}

}  // namespace sentirank
