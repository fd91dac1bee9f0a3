#include "linkclust/preprocess.hpp"

namespace linkclust {

namespace {

// Built-in English stopword list, 186 words. Function words only; override
// with --stoplist when a different list is needed.
const char* const kStopwords[] = {
    "a", "about", "above", "across", "after", "again", "against", "all",
    "almost", "alone", "along", "already", "also", "although", "always", "am",
    "among", "an", "and", "another", "any", "anyone", "anything", "anywhere",
    "are", "around", "as", "at", "back", "be", "became", "because", "become",
    "becomes", "been", "before", "behind", "being", "below", "between", "both",
    "but", "by", "can", "cannot", "could", "did", "do", "does", "doing",
    "done", "down", "during", "each", "either", "else", "enough", "even",
    "ever", "every", "everyone", "everything", "everywhere", "few", "for",
    "from", "further", "had", "has", "have", "having", "he", "her", "here",
    "hers", "herself", "him", "himself", "his", "how", "however", "i", "if",
    "in", "into", "is", "it", "its", "itself", "just", "least", "less", "may",
    "me", "might", "more", "most", "much", "must", "my", "myself", "neither",
    "never", "no", "nobody", "none", "nor", "not", "nothing", "now",
    "nowhere", "of", "off", "often", "on", "once", "only", "or", "other",
    "others", "our", "ours", "ourselves", "out", "over", "own", "per",
    "rather", "same", "she", "should", "since", "so", "some", "someone",
    "something", "somewhere", "still", "such", "than", "that", "the", "their",
    "theirs", "them", "themselves", "then", "there", "these", "they", "this",
    "those", "through", "to", "too", "toward", "under", "until", "up", "upon",
    "us", "very", "was", "we", "well", "were", "what", "when", "where",
    "whether", "which", "while", "who", "whom", "why", "will", "with",
    "within", "without", "would", "yet", "you", "your", "yours", "yourself",
    "yourselves",
};

}  // namespace

const Stoplist& default_stopwords() {
    static const Stoplist list(std::begin(kStopwords), std::end(kStopwords));
    return list;
}

}  // namespace linkclust
