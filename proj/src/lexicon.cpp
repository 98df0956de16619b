#include "sentirank/lexicon.hpp"

#include "sentirank/error.hpp"
#include "sentirank/util.hpp"

#include <cmath>
#include <fstream>

namespace sentirank {

const char* pos_name(Pos pos) {
    switch (pos) {
        case Pos::noun: return "noun";
        case Pos::adjective: return "adjective";
        case Pos::adverb: return "adverb";
        case Pos::other: return "other";
    }
    return "other";
}

std::optional<Pos> parse_pos(std::string_view text) {
    if (text == "noun" || text == "n") return Pos::noun;
    if (text == "adjective" || text == "adj" || text == "a") return Pos::adjective;
    if (text == "adverb" || text == "adv" || text == "r") return Pos::adverb;
    if (text == "other" || text == "o" || text == "x") return Pos::other;
    return std::nullopt;
}

std::string Lexicon::key(std::string_view word, Pos pos) {
    std::string k(word);
    k.push_back('\x1f');
    k.push_back(static_cast<char>('0' + static_cast<int>(pos)));
    return k;
}

void Lexicon::add_entry(LexiconEntry entry) {
    const double sum = entry.pos_score + entry.neg_score + entry.neu_score;
    const bool in_range = entry.pos_score >= 0.0 && entry.pos_score <= 1.0 &&
                          entry.neg_score >= 0.0 && entry.neg_score <= 1.0 &&
                          entry.neu_score >= 0.0 && entry.neu_score <= 1.0;
    if (!in_range || std::abs(sum - 1.0) > 1e-6) {
        throw InputError("lexicon entry '" + entry.lemma + "' (" + pos_name(entry.pos) +
                         "): scores must lie in [0,1] and sum to 1 (sum " + format_real(sum) + ")");
    }
    if (sum != 1.0) {  // renormalize so the stored triple satisfies Eq-style sum exactly
        entry.pos_score /= sum;
        entry.neg_score /= sum;
        entry.neu_score /= sum;
    }
    entries_[key(entry.lemma, entry.pos)] = std::move(entry);
}

void Lexicon::add_form(std::string_view surface, Pos pos, std::string_view lemma) {
    if (!entries_.count(key(lemma, pos))) {
        throw InputError("forms row '" + std::string(surface) + "' -> '" + std::string(lemma) +
                         "' (" + pos_name(pos) + "): lemma has no lexicon entry");
    }
    forms_[key(surface, pos)] = std::string(lemma);
}

const LexiconEntry* Lexicon::find(std::string_view lemma, Pos pos) const {
    auto it = entries_.find(key(lemma, pos));
    return it == entries_.end() ? nullptr : &it->second;
}

std::pair<Pos, std::string> Lexicon::tag(std::string_view surface) const {
    static constexpr Pos preference[] = {Pos::adjective, Pos::adverb, Pos::noun};
    for (Pos pos : preference) {
        if (auto it = forms_.find(key(surface, pos)); it != forms_.end()) {
            return {pos, it->second};
        }
        if (entries_.count(key(surface, pos))) {
            return {pos, std::string(surface)};
        }
    }
    return {Pos::other, std::string(surface)};
}

std::string Lexicon::lemmatize(std::string_view surface, Pos pos) const {
    auto it = forms_.find(key(surface, pos));
    return it == forms_.end() ? std::string(surface) : it->second;
}

LexiconLoadResult load_lexicon(const std::string& entries_path,
                               const std::optional<std::string>& forms_path) {
    LexiconLoadResult result;

    std::ifstream in(entries_path);
    if (!in) throw InputError("cannot read file: " + entries_path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("lemma\t", 0) == 0) continue;
        try {
            const auto fields = split_tabs(line);
            if (fields.size() != 5) {
                throw_parse_error(entries_path, lineno,
                                  "expected lemma\\tpos\\tpos_score\\tneg_score\\tneu_score");
            }
            LexiconEntry entry;
            entry.lemma = lower_ascii(fields[0]);
            if (entry.lemma.empty()) throw_parse_error(entries_path, lineno, "empty lemma");
            const auto pos = parse_pos(fields[1]);
            if (!pos) {
                throw_parse_error(entries_path, lineno,
                                  "unknown pos '" + std::string(fields[1]) + "'");
            }
            entry.pos = *pos;
            if (!parse_real(fields[2], entry.pos_score) || !parse_real(fields[3], entry.neg_score) ||
                !parse_real(fields[4], entry.neu_score)) {
                throw_parse_error(entries_path, lineno, "scores must be numbers");
            }
            result.lexicon.add_entry(std::move(entry));
            ++result.entries_loaded;
        } catch (const InputError& e) {
            ++result.entries_rejected;
            result.rejected_rows.push_back(e.what());
        }
    }
    if (result.entries_loaded == 0) {
        throw InputError(entries_path + ": no valid lexicon entries (" +
                         std::to_string(result.entries_rejected) + " rejected)");
    }

    if (forms_path) {
        std::ifstream fin(*forms_path);
        if (!fin) throw InputError("cannot read file: " + *forms_path);
        lineno = 0;
        while (std::getline(fin, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (lineno == 1 && line.rfind("surface\t", 0) == 0) continue;
            try {
                const auto fields = split_tabs(line);
                if (fields.size() != 3) {
                    throw_parse_error(*forms_path, lineno, "expected surface\\tpos\\tlemma");
                }
                const auto pos = parse_pos(fields[1]);
                if (!pos) {
                    throw_parse_error(*forms_path, lineno,
                                      "unknown pos '" + std::string(fields[1]) + "'");
                }
                result.lexicon.add_form(lower_ascii(fields[0]), *pos, lower_ascii(fields[2]));
                ++result.forms_loaded;
            } catch (const InputError& e) {
                ++result.forms_rejected;
                result.rejected_rows.push_back(e.what());
            }
        }
    }
    return result;
}

}  // namespace sentirank
