#pragma once

#include "sentirank/corpus.hpp"
#include "sentirank/lexicon.hpp"

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sentirank {

struct Token {
    std::string surface;
    Pos pos = Pos::other;
    std::string lemma;
};

/// Tokens surviving the pos filter and curation; retained_count is the
/// per-sentence lemma count feeding the sentence score.
struct TokenizedSentence {
    std::vector<Token> tokens;
    std::size_t retained_count = 0;
};

/// Lemmas stripped before scoring. Empty set = curation disabled (the
/// default: the engine never removes lemmas unless asked to).
struct CurationPolicy {
    std::set<std::string> removed_lemmas;
    bool enabled() const { return !removed_lemmas.empty(); }
};

/// Lowercased word tokens: splits on anything non-alphabetic, which also
/// discards digits, bracketed numerals, and year parentheticals. Multi-byte
/// UTF-8 sequences are kept intact. Tokens under 2 characters are dropped.
std::vector<std::string> tokenize(std::string_view sentence);

/// tokenize -> tag (lexicon lookup) -> keep nouns/adjectives/adverbs ->
/// lemmatize (forms table, identity fallback) -> drop curated lemmas.
TokenizedSentence preprocess(std::string_view sentence, const Lexicon& lexicon,
                             const CurationPolicy& curation = {});

/// Same pipeline for pre-tagged input ("surface/pos" tokens); the provided
/// tags replace the lexicon-lookup tagger. Unknown tags map to other.
TokenizedSentence preprocess_tagged(std::string_view tagged_text, const Lexicon& lexicon,
                                    const CurationPolicy& curation = {});

/// Lemmas whose document frequency (fraction of sentences containing them)
/// reaches `threshold`, threshold in (0,1]. Throws InputError out of range.
std::set<std::string> curate_frequent_lemmas(const std::vector<TokenizedSentence>& sentences,
                                             double threshold);

/// Sum over tokens of (positivity - negativity); neutrality weighs 0 and
/// lemmas absent from the lexicon contribute 0.
double score_sentence(const TokenizedSentence& tok, const Lexicon& lexicon);

/// Total score for one (citing, cited) pair: the sum over its citation
/// sentences. Precomputed sentence scores are used verbatim.
double score_pair(std::span<const CitationRecord> records, const Lexicon& lexicon,
                  const CurationPolicy& curation = {});

}  // namespace sentirank
