#include "linkclust/porter.hpp"

#include <array>
#include <cstddef>
#include <string_view>

// Original 1980 rule tables. Within each step the longest matching suffix
// wins; once a suffix matches, the step is over whether or not its condition
// holds (no fallthrough to shorter suffixes).

namespace linkclust {
namespace {

bool is_consonant(std::string_view w, std::size_t i) {
    char c = w[i];
    switch (c) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_consonant(w, i - 1);
        default:
            return true;
    }
}

// m in the [C](VC){m}[V] decomposition of the stem.
int measure(std::string_view stem) {
    int m = 0;
    std::size_t i = 0;
    const std::size_t n = stem.size();
    while (i < n && is_consonant(stem, i)) ++i;  // leading [C]
    while (i < n) {
        while (i < n && !is_consonant(stem, i)) ++i;  // V run
        if (i >= n) break;
        while (i < n && is_consonant(stem, i)) ++i;  // C run
        ++m;
    }
    return m;
}

bool has_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i)
        if (!is_consonant(stem, i)) return true;
    return false;
}

// *d: ends with a double consonant
bool ends_double_consonant(std::string_view w) {
    std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: ends cvc where the final consonant is not w, x or y
bool ends_cvc(std::string_view w) {
    std::size_t n = w.size();
    if (n < 3) return false;
    char last = w[n - 1];
    return is_consonant(w, n - 3) && !is_consonant(w, n - 2) &&
           is_consonant(w, n - 1) && last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(std::string_view w, std::string_view suf) {
    return w.size() >= suf.size() && w.substr(w.size() - suf.size()) == suf;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Applies the longest matching rule whose stem has measure > min_m.
std::string apply_rules(const std::string& w, const Rule* rules, std::size_t count, int min_m) {
    const Rule* best = nullptr;
    for (std::size_t r = 0; r < count; ++r) {
        if (ends_with(w, rules[r].suffix) &&
            (!best || rules[r].suffix.size() > best->suffix.size()))
            best = &rules[r];
    }
    if (!best) return w;
    std::string stem = w.substr(0, w.size() - best->suffix.size());
    if (measure(stem) > min_m) return stem + std::string(best->replacement);
    return w;
}

// SSES -> SS, IES -> I, SS -> SS, S ->
std::string step1a(const std::string& w) {
    if (ends_with(w, "sses")) return w.substr(0, w.size() - 2);
    if (ends_with(w, "ies")) return w.substr(0, w.size() - 2);
    if (ends_with(w, "ss")) return w;
    if (ends_with(w, "s")) return w.substr(0, w.size() - 1);
    return w;
}

// (m>0) EED -> EE; (*v*) ED -> ; (*v*) ING -> ; plus the cleanup rules
std::string step1b(const std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(std::string_view(w).substr(0, w.size() - 3)) > 0)
            return w.substr(0, w.size() - 1);
        return w;
    }
    std::string s;
    if (ends_with(w, "ed") && has_vowel(std::string_view(w).substr(0, w.size() - 2)))
        s = w.substr(0, w.size() - 2);
    else if (ends_with(w, "ing") && has_vowel(std::string_view(w).substr(0, w.size() - 3)))
        s = w.substr(0, w.size() - 3);
    else
        return w;
    if (ends_with(s, "at") || ends_with(s, "bl") || ends_with(s, "iz")) return s + "e";
    if (ends_double_consonant(s)) {
        char last = s.back();
        if (last != 'l' && last != 's' && last != 'z') return s.substr(0, s.size() - 1);
        return s;
    }
    if (measure(s) == 1 && ends_cvc(s)) return s + "e";
    return s;
}

// (*v*) Y -> I
std::string step1c(const std::string& w) {
    if (ends_with(w, "y") && has_vowel(std::string_view(w).substr(0, w.size() - 1)))
        return w.substr(0, w.size() - 1) + "i";
    return w;
}

constexpr std::array<Rule, 20> kStep2 = {{
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
    {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"}, {"biliti", "ble"},
}};

constexpr std::array<Rule, 7> kStep3 = {{
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
}};

constexpr std::array<std::string_view, 19> kStep4 = {
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement", "ment",
    "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
};

// (m>1) S1 -> , with (*S or *T) guard on ION
std::string step4(const std::string& w) {
    std::string_view best;
    for (std::string_view suf : kStep4)
        if (ends_with(w, suf) && suf.size() > best.size()) best = suf;
    if (best.empty()) return w;
    std::string stem = w.substr(0, w.size() - best.size());
    if (measure(stem) > 1) {
        if (best == "ion" && !(ends_with(stem, "s") || ends_with(stem, "t"))) return w;
        return stem;
    }
    return w;
}

// (m>1) E -> ; (m=1 and not *o) E ->
std::string step5a(const std::string& w) {
    if (!ends_with(w, "e")) return w;
    std::string stem = w.substr(0, w.size() - 1);
    int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) return stem;
    return w;
}

// (m>1 and *d and *L) -> single letter
std::string step5b(const std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l')
        return w.substr(0, w.size() - 1);
    return w;
}

}  // namespace

std::string porter_stem(const std::string& word) {
    if (word.size() <= 2) return word;
    std::string w = word;
    w = step1a(w);
    w = step1b(w);
    w = step1c(w);
    w = apply_rules(w, kStep2.data(), kStep2.size(), 0);
    w = apply_rules(w, kStep3.data(), kStep3.size(), 0);
    w = step4(w);
    w = step5a(w);
    w = step5b(w);
    return w;
}

}  // namespace linkclust
