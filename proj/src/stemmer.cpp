#include "mfic/stemmer.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

// Porter2 (Snowball English). The implementation follows the published
// algorithm definition step by step; 'Y' marks a consonant y.

namespace mfic {
namespace {

bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() &&
           w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

bool is_double(const std::string& w) {
    static const std::string_view doubles = "bdfgmnprt";
    std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] &&
           doubles.find(w[n - 1]) != std::string_view::npos;
}

// A short syllable: a vowel followed by a non-vowel other than w, x or Y,
// preceded by a non-vowel; or a vowel at the start of the word followed by
// a non-vowel. Tested at position i of the vowel.
bool ends_in_short_syllable(const std::string& w) {
    std::size_t n = w.size();
    if (n == 2) return is_vowel(w[0]) && !is_vowel(w[1]);
    if (n >= 3) {
        char a = w[n - 3], b = w[n - 2], c = w[n - 1];
        return !is_vowel(a) && is_vowel(b) && !is_vowel(c) && c != 'w' &&
               c != 'x' && c != 'Y';
    }
    return false;
}

struct Regions {
    std::size_t r1;
    std::size_t r2;
};

std::size_t region_after_vc(const std::string& w, std::size_t from) {
    for (std::size_t i = from; i + 1 < w.size(); ++i) {
        if (is_vowel(w[i]) && !is_vowel(w[i + 1])) return i + 2;
    }
    return w.size();
}

Regions compute_regions(const std::string& w) {
    Regions r{w.size(), w.size()};
    if (w.rfind("gener", 0) == 0 || w.rfind("arsen", 0) == 0)
        r.r1 = 5;
    else if (w.rfind("commun", 0) == 0)
        r.r1 = 6;
    else
        r.r1 = region_after_vc(w, 0);
    r.r2 = region_after_vc(w, r.r1);
    return r;
}

bool in_r1(const Regions& r, const std::string& w, std::size_t suf_len) {
    return w.size() - suf_len >= r.r1;
}

bool in_r2(const Regions& r, const std::string& w, std::size_t suf_len) {
    return w.size() - suf_len >= r.r2;
}

bool is_short_word(const std::string& w, const Regions& r) {
    return r.r1 >= w.size() && ends_in_short_syllable(w);
}

bool contains_vowel(const std::string& w, std::size_t upto) {
    for (std::size_t i = 0; i < upto && i < w.size(); ++i)
        if (is_vowel(w[i])) return true;
    return false;
}

const std::unordered_map<std::string, std::string>& exceptional_forms() {
    static const std::unordered_map<std::string, std::string> m = {
        {"skis", "ski"},     {"skies", "sky"},   {"dying", "die"},
        {"lying", "lie"},    {"tying", "tie"},   {"idly", "idl"},
        {"gently", "gentl"}, {"ugly", "ugli"},   {"early", "earli"},
        {"only", "onli"},    {"singly", "singl"},{"sky", "sky"},
        {"news", "news"},    {"howe", "howe"},   {"atlas", "atlas"},
        {"cosmos", "cosmos"},{"bias", "bias"},   {"andes", "andes"}};
    return m;
}

bool is_post_1a_exception(const std::string& w) {
    static const std::unordered_set<std::string> s = {
        "inning", "outing",  "canning", "herring",
        "earring", "proceed", "exceed",  "succeed"};
    return s.count(w) != 0;
}

void step0(std::string& w) {
    if (ends_with(w, "'s'"))
        w.erase(w.size() - 3);
    else if (ends_with(w, "'s"))
        w.erase(w.size() - 2);
    else if (ends_with(w, "'"))
        w.erase(w.size() - 1);
}

void step1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.erase(w.size() - 2);
    } else if (ends_with(w, "ied") || ends_with(w, "ies")) {
        if (w.size() > 4)
            w.erase(w.size() - 2);
        else
            w.erase(w.size() - 1);
    } else if (ends_with(w, "us") || ends_with(w, "ss")) {
        // leave alone
    } else if (ends_with(w, "s")) {
        // delete if the preceding word part contains a vowel not
        // immediately before the s
        if (w.size() >= 3 && contains_vowel(w, w.size() - 2))
            w.erase(w.size() - 1);
    }
}

void step1b(std::string& w, const Regions& r) {
    if (ends_with(w, "eedly")) {
        if (in_r1(r, w, 5)) w.erase(w.size() - 3);
        return;
    }
    if (ends_with(w, "eed")) {
        if (in_r1(r, w, 3)) w.erase(w.size() - 1);
        return;
    }
    std::size_t suf = 0;
    if (ends_with(w, "ingly") || ends_with(w, "edly"))
        suf = ends_with(w, "ingly") ? 5 : 4;
    else if (ends_with(w, "ing"))
        suf = 3;
    else if (ends_with(w, "ed"))
        suf = 2;
    if (suf == 0) return;
    if (!contains_vowel(w, w.size() - suf)) return;
    w.erase(w.size() - suf);
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w += 'e';
    } else if (is_double(w)) {
        w.erase(w.size() - 1);
    } else if (is_short_word(w, compute_regions(w))) {
        w += 'e';
    }
}

void step1c(std::string& w) {
    std::size_t n = w.size();
    if (n > 2 && (w[n - 1] == 'y' || w[n - 1] == 'Y') && !is_vowel(w[n - 2]))
        w[n - 1] = 'i';
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest-suffix-match semantics: among the listed suffixes find the
// longest one the word ends with; apply only if that one lies in R1/R2.
void step2(std::string& w, const Regions& r) {
    static const std::array<Rule, 24> rules = {{
        {"ational", "ate"}, {"fulness", "ful"}, {"iveness", "ive"},
        {"ization", "ize"}, {"ousness", "ous"}, {"biliti", "ble"},
        {"lessli", "less"}, {"tional", "tion"}, {"alism", "al"},
        {"aliti", "al"},    {"ation", "ate"},   {"entli", "ent"},
        {"fulli", "ful"},   {"iviti", "ive"},   {"ousli", "ous"},
        {"abli", "able"},   {"alli", "al"},     {"anci", "ance"},
        {"ator", "ate"},    {"enci", "ence"},   {"izer", "ize"},
        {"bli", "ble"},     {"ogi", "og"},      {"li", ""},
    }};
    const Rule* best = nullptr;
    for (const auto& rule : rules) {
        if (ends_with(w, rule.suffix) &&
            (!best || rule.suffix.size() > best->suffix.size()))
            best = &rule;
    }
    if (!best || !in_r1(r, w, best->suffix.size())) return;
    if (best->suffix == "ogi") {
        if (w.size() >= 4 && w[w.size() - 4] == 'l')
            w.erase(w.size() - 1);
        return;
    }
    if (best->suffix == "li") {
        static const std::string_view li_endings = "cdeghkmnrt";
        if (w.size() >= 3 &&
            li_endings.find(w[w.size() - 3]) != std::string_view::npos)
            w.erase(w.size() - 2);
        return;
    }
    w.replace(w.size() - best->suffix.size(), best->suffix.size(),
              best->replacement);
}

void step3(std::string& w, const Regions& r) {
    static const std::array<Rule, 7> rules = {{
        {"ational", "ate"}, {"tional", "tion"}, {"alize", "al"},
        {"icate", "ic"},    {"iciti", "ic"},    {"ical", "ic"},
        {"ness", ""},
    }};
    const Rule* best = nullptr;
    for (const auto& rule : rules) {
        if (ends_with(w, rule.suffix) &&
            (!best || rule.suffix.size() > best->suffix.size()))
            best = &rule;
    }
    if (best) {
        if (!in_r1(r, w, best->suffix.size())) return;
        w.replace(w.size() - best->suffix.size(), best->suffix.size(),
                  best->replacement);
        return;
    }
    if (ends_with(w, "ative")) {
        if (in_r1(r, w, 5) && in_r2(r, w, 5)) w.erase(w.size() - 5);
        return;
    }
    if (ends_with(w, "ful") && in_r1(r, w, 3)) w.erase(w.size() - 3);
}

void step4(std::string& w, const Regions& r) {
    static const std::array<std::string_view, 18> suffixes = {
        "ement", "ance", "ence", "able", "ible", "ment",
        "ant",   "ent",  "ism",  "ate",  "iti",  "ous",
        "ive",   "ize",  "ion",  "al",   "er",   "ic"};
    std::string_view best;
    for (auto suf : suffixes) {
        if (ends_with(w, suf) && suf.size() > best.size()) best = suf;
    }
    if (best.empty() || !in_r2(r, w, best.size())) return;
    if (best == "ion") {
        char prev = w.size() >= 4 ? w[w.size() - 4] : '\0';
        if (prev == 's' || prev == 't') w.erase(w.size() - 3);
        return;
    }
    w.erase(w.size() - best.size());
}

void step5(std::string& w, const Regions& r) {
    if (ends_with(w, "e")) {
        if (in_r2(r, w, 1)) {
            w.erase(w.size() - 1);
        } else if (in_r1(r, w, 1)) {
            std::string base = w.substr(0, w.size() - 1);
            if (!ends_in_short_syllable(base)) w.erase(w.size() - 1);
        }
        return;
    }
    if (ends_with(w, "ll") && in_r2(r, w, 1)) w.erase(w.size() - 1);
}

}  // namespace

std::string stem(const std::string& word) {
    std::string w = word;
    if (w.size() >= 1 && w[0] == '\'') w.erase(0, 1);
    if (w.size() <= 2) return w;

    auto it = exceptional_forms().find(w);
    if (it != exceptional_forms().end()) return it->second;

    // mark consonant y as Y
    if (w[0] == 'y') w[0] = 'Y';
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == 'y' && is_vowel(w[i - 1])) w[i] = 'Y';

    step0(w);
    step1a(w);
    if (!is_post_1a_exception(w)) {
        Regions r = compute_regions(w);
        step1b(w, r);
        step1c(w);
        r = compute_regions(w);
        step2(w, r);
        r = compute_regions(w);
        step3(w, r);
        r = compute_regions(w);
        step4(w, r);
        r = compute_regions(w);
        step5(w, r);
    }
    std::replace(w.begin(), w.end(), 'Y', 'y');
    return w;
}

}  // namespace mfic
