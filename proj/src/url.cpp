#include "linkclust/url.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

namespace linkclust {
namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool valid_scheme(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '+' || c == '-' || c == '.';
    });
}

std::string_view default_port(std::string_view scheme) {
    if (scheme == "http" || scheme == "ws") return "80";
    if (scheme == "https" || scheme == "wss") return "443";
    if (scheme == "ftp") return "21";
    return {};
}

}  // namespace

std::string normalize_url(const std::string& url) {
    const std::string trimmed = trim(url);
    const std::size_t scheme_end = trimmed.find("://");
    if (scheme_end == std::string::npos || !valid_scheme(std::string_view(trimmed).substr(0, scheme_end)))
        return lower(trimmed);

    const std::string scheme = lower(trimmed.substr(0, scheme_end));
    std::string_view rest = std::string_view(trimmed).substr(scheme_end + 3);

    std::size_t authority_end = rest.find_first_of("/?#");
    if (authority_end == std::string_view::npos) authority_end = rest.size();
    std::string_view authority = rest.substr(0, authority_end);
    std::string_view tail = rest.substr(authority_end);

    // split off userinfo, keep it verbatim
    std::string_view userinfo;
    if (std::size_t at = authority.rfind('@'); at != std::string_view::npos) {
        userinfo = authority.substr(0, at + 1);
        authority = authority.substr(at + 1);
    }
    std::string_view host = authority;
    std::string_view port;
    if (std::size_t colon = authority.rfind(':');
        colon != std::string_view::npos && authority.find(']') == std::string_view::npos) {
        host = authority.substr(0, colon);
        port = authority.substr(colon + 1);
    }

    std::string out = scheme + "://" + std::string(userinfo) + lower(std::string(host));
    if (!port.empty() && port != default_port(scheme)) {
        out.push_back(':');
        out += port;
    }

    // drop the fragment, keep the query
    if (std::size_t hash = tail.find('#'); hash != std::string_view::npos)
        tail = tail.substr(0, hash);
    if (tail == "/") tail = {};  // trailing slash on an empty path
    out += tail;
    return out;
}

}  // namespace linkclust
