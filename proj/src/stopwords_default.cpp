#include "mfic/preprocess.hpp"

namespace mfic {

// Default English stopword list. Keep in sync with data/stopwords_en.txt.
const Stoplist& default_stopwords() {
    static const Stoplist words = {
        "i",       "me",      "my",       "myself",  "we",       "our",
        "ours",    "ourselves", "you",    "your",    "yours",    "yourself",
        "yourselves", "he",   "him",      "his",     "himself",  "she",
        "her",     "hers",    "herself",  "it",      "its",      "itself",
        "they",    "them",    "their",    "theirs",  "themselves", "what",
        "which",   "who",     "whom",     "this",    "that",     "these",
        "those",   "am",      "is",       "are",     "was",      "were",
        "be",      "been",    "being",    "have",    "has",      "had",
        "having",  "do",      "does",     "did",     "doing",    "would",
        "should",  "could",   "ought",    "a",       "an",       "the",
        "and",     "but",     "if",       "or",      "because",  "as",
        "until",   "while",   "of",       "at",      "by",       "for",
        "with",    "about",   "against",  "between", "into",     "through",
        "during",  "before",  "after",    "above",   "below",    "to",
        "from",    "up",      "down",     "in",      "out",      "on",
        "off",     "over",    "under",    "again",   "further",  "then",
        "once",    "here",    "there",    "when",    "where",    "why",
        "how",     "all",     "any",      "both",    "each",     "few",
        "more",    "most",    "other",    "some",    "such",     "no",
        "nor",     "not",     "only",     "own",     "same",     "so",
        "than",    "too",     "very",     "can",     "will",     "just",
        "don",     "didn",    "doesn",    "hadn",    "hasn",     "haven",
        "isn",     "aren",    "wasn",     "weren",   "won",      "wouldn",
        "shan",    "shouldn", "couldn",   "mustn",   "cannot",   "let",
        "shall",   "may",     "might",    "must",    "also",     "etc",
        "upon",    "within",  "without",  "among",   "along",    "across",
        "behind",  "beside",  "besides",  "beyond",  "despite",  "except",
        "inside",  "outside", "since",    "though",  "although", "unless",
        "whether", "yet",     "however",  "therefore", "thus",   "hence",
        "whose",   "whereas", "onto",     "toward",  "towards",  "via",
    };
    return words;
}

}  // namespace mfic
