#pragma once

#include <string>

namespace linkclust {

// Porter stemming algorithm, original 1980 rule set. Expects a lowercase
// alphabetic token; words of length <= 2 are returned unchanged.
std::string porter_stem(const std::string& word);

}  // namespace linkclust
