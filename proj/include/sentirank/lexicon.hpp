#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sentirank {

enum class Pos { noun, adjective, adverb, other };

const char* pos_name(Pos pos);
std::optional<Pos> parse_pos(std::string_view text);

/// Positivity/negativity/neutrality triple for one (lemma, pos) key.
/// Components lie in [0,1] and sum to 1.
struct LexiconEntry {
    std::string lemma;
    Pos pos = Pos::other;
    double pos_score = 0.0;
    double neg_score = 0.0;
    double neu_score = 1.0;
};

/// Immutable after load; lookups are pure, so sentences may be scored from
/// any number of threads.
class Lexicon {
public:
    /// Validates the triple (components in [0,1], sum within 1e-6 of 1) and
    /// renormalizes so the stored sum is exact. Throws InputError otherwise.
    void add_entry(LexiconEntry entry);

    /// Surface-form lemmatization row. The lemma must already have an entry
    /// under the same pos; rows pointing nowhere are rejected (InputError).
    void add_form(std::string_view surface, Pos pos, std::string_view lemma);

    const LexiconEntry* find(std::string_view lemma, Pos pos) const;

    /// Lexicon-lookup tagger: the pos under which the surface appears in the
    /// forms or entries tables, preferring adjective > adverb > noun, with
    /// Pos::other when absent. Returns (pos, lemma); the lemma falls back to
    /// the surface itself when no forms row applies.
    std::pair<Pos, std::string> tag(std::string_view surface) const;

    /// Forms-table lookup under a fixed pos, identity fallback.
    std::string lemmatize(std::string_view surface, Pos pos) const;

    std::size_t entry_count() const { return entries_.size(); }
    std::size_t form_count() const { return forms_.size(); }

private:
    static std::string key(std::string_view word, Pos pos);
    std::unordered_map<std::string, LexiconEntry> entries_;
    std::unordered_map<std::string, std::string> forms_;
};

struct LexiconLoadResult {
    Lexicon lexicon;
    std::size_t entries_loaded = 0;
    std::size_t entries_rejected = 0;
    std::size_t forms_loaded = 0;
    std::size_t forms_rejected = 0;
    std::vector<std::string> rejected_rows;  // validation report lines
};

/// Loads the entries TSV (lemma, pos, pos_score, neg_score, neu_score) and an
/// optional forms TSV (surface, pos, lemma). Rows violating the triple
/// constraint are rejected and reported; zero valid entries is fatal.
LexiconLoadResult load_lexicon(const std::string& entries_path,
                               const std::optional<std::string>& forms_path = std::nullopt);

}  // namespace sentirank
