#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace linkclust {

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One search-result page. doc_ids are dense [0, n) in file order.
struct DocumentRecord {
    int doc_id = 0;
    std::string url;       // canonical (normalized) form
    std::string title;
    std::string raw_html;  // empty when the source supplied plain text
    std::string text;
    std::vector<std::string> outlink_urls;  // as given, external links included
    std::optional<std::string> gold_label;
};

// Directed in-corpus link graph. Edges reference doc_ids only; outlinks to
// URLs outside the result set never become edges.
struct LinkAdjacency {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // (src, dst), src != dst

    // Neighbor lists of the undirected view, each sorted ascending.
    std::vector<std::vector<int>> undirected_neighbors() const;
};

struct GoldLabels {
    std::unordered_map<int, std::string> label_of;

    std::size_t labeled_count() const { return label_of.size(); }
    // Distinct category count c.
    std::size_t category_count() const;
    std::map<std::string, std::size_t> category_sizes() const;
};

struct CorpusStats {
    std::size_t n = 0;
    std::size_t edge_count = 0;
    std::size_t labeled_count = 0;
    std::map<std::string, std::size_t> category_histogram;
};

struct Corpus {
    std::vector<DocumentRecord> docs;
    LinkAdjacency adjacency;
    GoldLabels labels;
};

// Reads the JSONL corpus format: one object per line with `url` (required),
// `title`, `html` or `text` (one required), `outlinks` (default empty) and
// `label` (optional). Duplicate normalized URLs and missing fields are
// rejected with the offending line numbers.
Corpus load_corpus(const std::string& path);

// Same parser over an in-memory JSONL string.
Corpus parse_corpus(const std::string& jsonl);

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace linkclust
