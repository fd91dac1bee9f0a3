#include "linkclust/corpus.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "linkclust/html.hpp"
#include "linkclust/url.hpp"

namespace linkclust {

std::vector<std::vector<int>> LinkAdjacency::undirected_neighbors() const {
    std::vector<std::set<int>> nbr(static_cast<std::size_t>(n));
    for (const auto& [src, dst] : edges) {
        nbr[static_cast<std::size_t>(src)].insert(dst);
        nbr[static_cast<std::size_t>(dst)].insert(src);
    }
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < nbr.size(); ++i)
        out[i].assign(nbr[i].begin(), nbr[i].end());
    return out;
}

std::size_t GoldLabels::category_count() const {
    std::set<std::string> names;
    for (const auto& [doc, label] : label_of) names.insert(label);
    return names.size();
}

std::map<std::string, std::size_t> GoldLabels::category_sizes() const {
    std::map<std::string, std::size_t> sizes;
    for (const auto& [doc, label] : label_of) ++sizes[label];
    return sizes;
}

namespace {

using nlohmann::json;

Corpus parse_lines(std::istream& in) {
    Corpus corpus;
    std::unordered_map<std::string, int> url_to_doc;
    std::unordered_map<std::string, int> url_first_line;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw CorpusError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        if (!obj.is_object())
            throw CorpusError("line " + std::to_string(line_no) + ": expected a JSON object");

        if (!obj.contains("url") || !obj["url"].is_string() || obj["url"].get<std::string>().empty())
            throw CorpusError("line " + std::to_string(line_no) +
                              ": missing required field \"url\"");
        if (!obj.contains("html") && !obj.contains("text"))
            throw CorpusError("line " + std::to_string(line_no) +
                              ": one of \"html\" or \"text\" is required");

        DocumentRecord rec;
        rec.doc_id = static_cast<int>(corpus.docs.size());
        rec.url = normalize_url(obj["url"].get<std::string>());
        if (rec.url.empty())
            throw CorpusError("line " + std::to_string(line_no) + ": empty URL after normalization");
        if (auto it = url_first_line.find(rec.url); it != url_first_line.end())
            throw CorpusError("line " + std::to_string(line_no) +
                              ": duplicate URL \"" + rec.url + "\" (first seen at line " +
                              std::to_string(it->second) + ")");
        url_first_line[rec.url] = line_no;

        if (obj.contains("title")) rec.title = obj["title"].get<std::string>();
        if (obj.contains("html")) rec.raw_html = obj["html"].get<std::string>();
        if (obj.contains("text"))
            rec.text = obj["text"].get<std::string>();
        else
            rec.text = extract_text(rec.raw_html);
        if (obj.contains("outlinks")) {
            if (!obj["outlinks"].is_array())
                throw CorpusError("line " + std::to_string(line_no) +
                                  ": \"outlinks\" must be an array of strings");
            for (const auto& l : obj["outlinks"]) rec.outlink_urls.push_back(l.get<std::string>());
        }
        if (obj.contains("label") && !obj["label"].is_null())
            rec.gold_label = obj["label"].get<std::string>();

        url_to_doc[rec.url] = rec.doc_id;
        corpus.docs.push_back(std::move(rec));
    }

    corpus.adjacency.n = static_cast<int>(corpus.docs.size());
    for (const auto& doc : corpus.docs) {
        for (const auto& raw : doc.outlink_urls) {
            auto it = url_to_doc.find(normalize_url(raw));
            if (it == url_to_doc.end()) continue;  // beyond the result set
            if (it->second == doc.doc_id) continue;  // self-loop
            corpus.adjacency.edges.emplace(doc.doc_id, it->second);
        }
        if (doc.gold_label) corpus.labels.label_of[doc.doc_id] = *doc.gold_label;
    }
    return corpus;
}

}  // namespace

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open corpus file: " + path);
    return parse_lines(in);
}

Corpus parse_corpus(const std::string& jsonl) {
    std::istringstream in(jsonl);
    return parse_lines(in);
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    stats.n = corpus.docs.size();
    stats.edge_count = corpus.adjacency.edges.size();
    stats.labeled_count = corpus.labels.labeled_count();
    stats.category_histogram = corpus.labels.category_sizes();
    return stats;
}

}  // namespace linkclust
