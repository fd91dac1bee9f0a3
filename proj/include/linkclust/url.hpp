#pragma once

#include <string>

namespace linkclust {

// Canonicalizes a URL for identity comparison: lowercased scheme and host,
// default port removed, trailing slash on an empty path removed, fragment
// removed. Strings that do not parse as URLs come back lowercased and
// trimmed; this never fails.
std::string normalize_url(const std::string& url);

}  // namespace linkclust
