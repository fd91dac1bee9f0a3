#include "linkclust/html.hpp"

#include <cctype>
#include <string_view>
#include <vector>

namespace linkclust {
namespace {

char ascii_lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    return true;
}

// Decodes the handful of entities that actually matter for term extraction.
void append_entity_decoded(std::string& out, std::string_view text) {
    static constexpr struct {
        std::string_view name;
        char replacement;
    } kEntities[] = {
        {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'},
        {"&quot;", '"'}, {"&apos;", '\''}, {"&#39;", '\''}, {"&nbsp;", ' '},
    };
    std::size_t i = 0;
    while (i < text.size()) {
        bool matched = false;
        if (text[i] == '&') {
            for (const auto& e : kEntities) {
                if (text.substr(i, e.name.size()) == e.name) {
                    out.push_back(e.replacement);
                    i += e.name.size();
                    matched = true;
                    break;
                }
            }
        }
        if (!matched) {
            out.push_back(text[i]);
            ++i;
        }
    }
}

struct Tag {
    std::string_view name;
    bool closing = false;
    std::string_view body;  // inside of the angle brackets
};

// Parses the tag starting at '<'. Returns position just past '>', or npos for
// an unterminated tag.
std::size_t parse_tag(std::string_view html, std::size_t pos, Tag& tag) {
    std::size_t end = html.find('>', pos);
    if (end == std::string_view::npos) return std::string_view::npos;
    std::string_view body = html.substr(pos + 1, end - pos - 1);
    tag.closing = !body.empty() && body.front() == '/';
    std::string_view n = tag.closing ? body.substr(1) : body;
    std::size_t name_end = 0;
    while (name_end < n.size() && !std::isspace(static_cast<unsigned char>(n[name_end])) &&
           n[name_end] != '/' && n[name_end] != '>')
        ++name_end;
    tag.name = n.substr(0, name_end);
    tag.body = body;
    return end + 1;
}

// Extracts the value of an attribute from a tag body; empty if absent.
std::string_view attribute_value(std::string_view body, std::string_view attr) {
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && (std::isspace(static_cast<unsigned char>(body[i])) || body[i] == '/'))
            ++i;
        std::size_t name_start = i;
        while (i < body.size() && body[i] != '=' &&
               !std::isspace(static_cast<unsigned char>(body[i])))
            ++i;
        std::string_view name = body.substr(name_start, i - name_start);
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        if (i >= body.size() || body[i] != '=') {
            if (name_start == i) break;  // no progress, bail on malformed input
            continue;
        }
        ++i;
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
        std::string_view value;
        if (i < body.size() && (body[i] == '"' || body[i] == '\'')) {
            char quote = body[i++];
            std::size_t vstart = i;
            while (i < body.size() && body[i] != quote) ++i;
            value = body.substr(vstart, i - vstart);
            if (i < body.size()) ++i;
        } else {
            std::size_t vstart = i;
            while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i])))
                ++i;
            value = body.substr(vstart, i - vstart);
        }
        if (iequals(name, attr)) return value;
    }
    return {};
}

void append_collapsed(std::string& out, std::string_view chunk) {
    for (char c : chunk) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty() && out.back() != ' ') out.push_back(' ');
        } else {
            out.push_back(c);
        }
    }
}

}  // namespace

std::string extract_text(const std::string& raw_html) {
    std::string_view html = raw_html;
    std::string body_raw;
    std::vector<std::string> meta_descriptions;

    std::size_t i = 0;
    while (i < html.size()) {
        if (html[i] != '<') {
            std::size_t next = html.find('<', i);
            if (next == std::string_view::npos) next = html.size();
            append_entity_decoded(body_raw, html.substr(i, next - i));
            i = next;
            continue;
        }
        if (html.substr(i, 4) == "<!--") {
            std::size_t end = html.find("-->", i + 4);
            i = end == std::string_view::npos ? html.size() : end + 3;
            continue;
        }
        Tag tag;
        std::size_t after = parse_tag(html, i, tag);
        if (after == std::string_view::npos) {
            // unterminated tag: drop the rest
            break;
        }
        if (!tag.closing && (iequals(tag.name, "script") || iequals(tag.name, "style"))) {
            // skip the raw content up to the matching close tag
            std::size_t scan = after;
            std::size_t content_end = html.size();
            std::size_t resume = html.size();
            while (scan < html.size()) {
                std::size_t lt = html.find('<', scan);
                if (lt == std::string_view::npos) break;
                Tag close;
                std::size_t close_after = parse_tag(html, lt, close);
                if (close_after == std::string_view::npos) break;
                if (close.closing && iequals(close.name, tag.name)) {
                    content_end = lt;
                    resume = close_after;
                    break;
                }
                scan = lt + 1;
            }
            (void)content_end;
            i = resume;
            body_raw.push_back(' ');
            continue;
        }
        if (!tag.closing && iequals(tag.name, "meta")) {
            std::string_view name = attribute_value(tag.body, "name");
            if (iequals(name, "description")) {
                std::string decoded;
                append_entity_decoded(decoded, attribute_value(tag.body, "content"));
                meta_descriptions.push_back(std::move(decoded));
            }
        }
        body_raw.push_back(' ');  // tags separate words
        i = after;
    }

    std::string out;
    append_collapsed(out, body_raw);
    for (const auto& meta : meta_descriptions) {
        if (!out.empty() && out.back() != ' ') out.push_back(' ');
        append_collapsed(out, meta);
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    std::size_t start = 0;
    while (start < out.size() && out[start] == ' ') ++start;
    return out.substr(start);
}

}  // namespace linkclust
