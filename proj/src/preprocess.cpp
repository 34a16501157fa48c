#include "mfic/preprocess.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "mfic/stemmer.hpp"

namespace mfic {
namespace {

bool iequals(const std::string& a, const char* b) {
    const char* p = b;
    for (char c : a) {
        if (*p == '\0' ||
            std::tolower(static_cast<unsigned char>(c)) != *p)
            return false;
        ++p;
    }
    return *p == '\0';
}

// Name of the tag starting at '<' (after optional '/'), lowercased.
std::string tag_name(const std::string& s, std::size_t lt) {
    std::size_t i = lt + 1;
    if (i < s.size() && s[i] == '/') ++i;
    std::string name;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i])))
        name += static_cast<char>(
            std::tolower(static_cast<unsigned char>(s[i++])));
    return name;
}

std::string decode_entity(const std::string& ent) {
    if (ent == "amp") return "&";
    if (ent == "lt") return "<";
    if (ent == "gt") return ">";
    if (ent == "quot") return "\"";
    if (ent == "apos") return "'";
    if (ent == "nbsp") return " ";
    if (ent.size() >= 2 && ent[0] == '#') {
        long code = 0;
        if (ent[1] == 'x' || ent[1] == 'X')
            code = std::strtol(ent.c_str() + 2, nullptr, 16);
        else
            code = std::strtol(ent.c_str() + 1, nullptr, 10);
        if (code > 0 && code < 128) return std::string(1, static_cast<char>(code));
        return " ";
    }
    return " ";
}

}  // namespace

std::string strip_html(const std::string& content) {
    std::string out;
    out.reserve(content.size());
    std::size_t i = 0;
    const std::size_t n = content.size();
    while (i < n) {
        char c = content[i];
        if (c == '<') {
            std::string name = tag_name(content, i);
            // <!-- comments -->
            if (content.compare(i, 4, "<!--") == 0) {
                std::size_t end = content.find("-->", i + 4);
                i = (end == std::string::npos) ? n : end + 3;
                out += ' ';
                continue;
            }
            std::size_t gt = content.find('>', i);
            if (gt == std::string::npos) {
                i = n;  // unclosed tag runs to end of input
                out += ' ';
                continue;
            }
            i = gt + 1;
            out += ' ';
            if (iequals(name, "script") || iequals(name, "style")) {
                // drop element contents up to the matching close tag
                std::string close = "</" + name;
                std::size_t pos = i;
                while (true) {
                    std::size_t lt = content.find('<', pos);
                    if (lt == std::string::npos) {
                        i = n;
                        break;
                    }
                    if (tag_name(content, lt) == name && content[lt + 1] == '/') {
                        std::size_t cgt = content.find('>', lt);
                        i = (cgt == std::string::npos) ? n : cgt + 1;
                        break;
                    }
                    pos = lt + 1;
                }
            }
            continue;
        }
        if (c == '&') {
            std::size_t semi = content.find(';', i);
            if (semi != std::string::npos && semi - i <= 8 && semi > i + 1) {
                out += decode_entity(content.substr(i + 1, semi - i - 1));
                i = semi + 1;
                continue;
            }
            out += c;
            ++i;
            continue;
        }
        out += c;
        ++i;
    }
    // collapse whitespace runs, trim ends
    std::string collapsed;
    collapsed.reserve(out.size());
    bool in_space = false;
    for (char c : out) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
            continue;
        }
        if (in_space && !collapsed.empty()) collapsed += ' ';
        in_space = false;
        collapsed += c;
    }
    return collapsed;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    bool all_digits = true;
    auto flush = [&] {
        if (!cur.empty() && !all_digits) tokens.push_back(cur);
        cur.clear();
        all_digits = true;
    };
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalnum(c)) {
            if (!std::isdigit(c)) all_digits = false;
            cur += static_cast<char>(std::tolower(c));
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        if (stoplist.find(t) == stoplist.end()) out.push_back(t);
    return out;
}

TokenizedDocument preprocess_document(const RawDocument& raw,
                                      const Stoplist& stoplist) {
    TokenizedDocument doc;
    doc.id = raw.id;
    const std::string text =
        raw.kind == DocKind::html ? strip_html(raw.content) : raw.content;
    for (const auto& tok : remove_stopwords(tokenize(text), stoplist)) {
        std::string s = stem(tok);
        if (s.size() >= 2) doc.tokens.push_back(std::move(s));
    }
    return doc;
}

Stoplist load_stopwords(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stopword file: " + path);
    Stoplist words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(line);
    }
    return words;
}

bool is_valid_utf8(const std::string& bytes) {
    std::size_t i = 0, n = bytes.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        if (c < 0x80) {
            len = 1;
        } else if ((c & 0xE0) == 0xC0) {
            len = 2;
            if (c < 0xC2) return false;  // overlong
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            if (c > 0xF4) return false;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (std::size_t k = 1; k < len; ++k)
            if ((static_cast<unsigned char>(bytes[i + k]) & 0xC0) != 0x80)
                return false;
        i += len;
    }
    return true;
}

}  // namespace mfic
