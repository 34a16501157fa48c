#ifndef MFIC_PREPROCESS_HPP
#define MFIC_PREPROCESS_HPP

#include <string>
#include <unordered_set>
#include <vector>

namespace mfic {

enum class DocKind { html, plain };

struct RawDocument {
    int id = 0;
    std::string source;
    std::string content;
    DocKind kind = DocKind::plain;
};

struct TokenizedDocument {
    int id = 0;
    std::vector<std::string> tokens;
};

using Stoplist = std::unordered_set<std::string>;

// Removes markup: tags (script/style contents included) become spaces,
// basic entities are decoded, whitespace runs collapse to one space.
// Unclosed tags are treated as closing at end of input.
std::string strip_html(const std::string& content);

// Lowercased tokens split on maximal runs of non-alphanumeric characters.
// Empty and purely numeric tokens are dropped.
std::vector<std::string> tokenize(const std::string& text);

// Order-preserving stopword filter; stoplist entries are lowercase.
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist);

// strip_html (html only) -> tokenize -> remove_stopwords -> stem.
// Stems shorter than 2 characters are dropped.
TokenizedDocument preprocess_document(const RawDocument& raw,
                                      const Stoplist& stoplist);

// One lowercase word per line; '#' lines and blank lines ignored.
Stoplist load_stopwords(const std::string& path);

// Built-in English list (~175 words), used when no file is given.
const Stoplist& default_stopwords();

// Strict UTF-8 check used at ingestion.
bool is_valid_utf8(const std::string& bytes);

}  // namespace mfic

#endif
