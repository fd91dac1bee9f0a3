#pragma once

#include <string>

namespace linkclust {

// Strips tags from HTML (or plain text) and returns the visible text,
// followed by the content of any <meta name="description"> tag, separated by
// a single space. Script/style/comment contents are excluded and whitespace
// is collapsed. Never fails; malformed markup degrades to best effort.
std::string extract_text(const std::string& raw_html);

}  // namespace linkclust
