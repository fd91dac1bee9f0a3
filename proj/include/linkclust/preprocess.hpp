#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "linkclust/sparse_vector.hpp"

namespace linkclust {

using Stoplist = std::unordered_set<std::string>;

struct TokenSequence {
    int doc_id = 0;
    std::vector<std::string> tokens;
};

// term -> dense id, plus per-term document frequency. Term ids follow first
// occurrence over a doc_id-ascending scan, so vocabularies are reproducible.
struct Vocabulary {
    std::unordered_map<std::string, int> term_ids;
    std::vector<std::string> terms;  // id -> term
    std::vector<int> df;             // id -> number of docs containing the term
    std::size_t doc_count = 0;       // N

    std::size_t size() const { return terms.size(); }
};

// Lowercases and splits on maximal runs of non-alphanumeric characters.
// Tokens shorter than 2 chars and pure-digit tokens are dropped.
TokenSequence tokenize(const std::string& text, int doc_id = 0);

// Order-preserving stopword filter; the stoplist is expected lowercase.
TokenSequence remove_stopwords(const TokenSequence& seq, const Stoplist& stoplist);

// Built-in English stopword list (includes "a", "an", "or", "the", ...).
const Stoplist& default_stopwords();

// One word per line, UTF-8; blank lines ignored, words lowercased.
Stoplist load_stoplist(const std::string& path);

// Expects sequences already stopword-filtered and stemmed.
Vocabulary build_vocabulary(const std::vector<TokenSequence>& sequences);

// weight(t) = tf(t, seq) * ln(N / df(t)). Terms with df == N weigh 0 and are
// not stored; terms missing from the vocabulary are ignored. Not normalized.
SparseVector tfidf_vectorize(const TokenSequence& seq, const Vocabulary& vocab);

struct PreprocessedCorpus {
    std::vector<TokenSequence> sequences;  // tokenized, filtered, stemmed
    Vocabulary vocab;
    std::vector<SparseVector> vectors;  // unit-normalized tf-idf, per doc_id
};

// Full pipeline over per-document texts: tokenize -> stopwords -> stem ->
// vocabulary -> tf-idf -> L2 normalize.
PreprocessedCorpus preprocess_texts(const std::vector<std::string>& texts,
                                    const Stoplist& stoplist = default_stopwords());

}  // namespace linkclust
