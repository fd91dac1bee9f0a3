#include "linkclust/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "linkclust/porter.hpp"

namespace linkclust {

TokenSequence tokenize(const std::string& text, int doc_id) {
    TokenSequence seq;
    seq.doc_id = doc_id;
    std::string cur;
    bool has_alpha = false;
    auto flush = [&] {
        if (cur.size() >= 2 && has_alpha) seq.tokens.push_back(cur);
        cur.clear();
        has_alpha = false;
    };
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c) && c < 0x80) {
            if (std::isalpha(c)) has_alpha = true;
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else {
            flush();
        }
    }
    flush();
    return seq;
}

TokenSequence remove_stopwords(const TokenSequence& seq, const Stoplist& stoplist) {
    TokenSequence out;
    out.doc_id = seq.doc_id;
    out.tokens.reserve(seq.tokens.size());
    for (const auto& t : seq.tokens)
        if (!stoplist.count(t)) out.tokens.push_back(t);
    return out;
}

Stoplist load_stoplist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stoplist file: " + path);
    Stoplist words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                                 line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        std::string w = line.substr(start);
        std::transform(w.begin(), w.end(), w.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        words.insert(std::move(w));
    }
    return words;
}

Vocabulary build_vocabulary(const std::vector<TokenSequence>& sequences) {
    std::vector<const TokenSequence*> ordered;
    ordered.reserve(sequences.size());
    for (const auto& s : sequences) ordered.push_back(&s);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const TokenSequence* a, const TokenSequence* b) {
                         return a->doc_id < b->doc_id;
                     });

    Vocabulary vocab;
    vocab.doc_count = sequences.size();
    std::unordered_set<int> seen_in_doc;
    for (const TokenSequence* seq : ordered) {
        seen_in_doc.clear();
        for (const auto& t : seq->tokens) {
            auto [it, inserted] = vocab.term_ids.try_emplace(t, static_cast<int>(vocab.terms.size()));
            if (inserted) {
                vocab.terms.push_back(t);
                vocab.df.push_back(0);
            }
            int id = it->second;
            if (seen_in_doc.insert(id).second) ++vocab.df[id];
        }
    }
    return vocab;
}

SparseVector tfidf_vectorize(const TokenSequence& seq, const Vocabulary& vocab) {
    std::unordered_map<int, int> tf;
    for (const auto& t : seq.tokens) {
        auto it = vocab.term_ids.find(t);
        if (it != vocab.term_ids.end()) ++tf[it->second];
    }
    std::vector<SparseVector::Entry> entries;
    entries.reserve(tf.size());
    const double n = static_cast<double>(vocab.doc_count);
    for (const auto& [id, count] : tf) {
        int df = vocab.df[static_cast<std::size_t>(id)];
        if (df >= static_cast<int>(vocab.doc_count)) continue;  // ln(N/N) = 0
        entries.emplace_back(id, count * std::log(n / df));
    }
    return SparseVector::from_entries(std::move(entries));
}

PreprocessedCorpus preprocess_texts(const std::vector<std::string>& texts,
                                    const Stoplist& stoplist) {
    PreprocessedCorpus out;
    out.sequences.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        TokenSequence seq = remove_stopwords(tokenize(texts[i], static_cast<int>(i)), stoplist);
        for (auto& t : seq.tokens) t = porter_stem(t);
        out.sequences.push_back(std::move(seq));
    }
    out.vocab = build_vocabulary(out.sequences);
    out.vectors.reserve(texts.size());
    for (const auto& seq : out.sequences)
        out.vectors.push_back(l2_normalize(tfidf_vectorize(seq, out.vocab)));
    return out;
}

}  // namespace linkclust
