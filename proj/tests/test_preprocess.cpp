#include <doctest.h>

#include <string>
#include <vector>

#include "mfic/preprocess.hpp"
#include "mfic/stemmer.hpp"

using namespace mfic;

TEST_CASE("strip_html removes tag pairs") {
    CHECK(strip_html("<p>Java beans</p>") == "Java beans");
    CHECK(strip_html("plain text, no tags") == "plain text, no tags");
}

TEST_CASE("strip_html drops script and style contents") {
    CHECK(strip_html("<div>a<script>x=1;</script>b</div>") == "a b");
    CHECK(strip_html("<style>p { color: red }</style>text") == "text");
    CHECK(strip_html("<script>var a = '<'; </script>after") == "after");
}

TEST_CASE("strip_html decodes basic entities") {
    CHECK(strip_html("a &amp; b") == "a & b");
    CHECK(strip_html("&quot;x&quot;") == "\"x\"");
    CHECK(strip_html("&#65;&#66;") == "AB");
}

TEST_CASE("strip_html treats unclosed tags as closing at end of input") {
    CHECK(strip_html("before<div unterminated") == "before");
}

TEST_CASE("strip_html is idempotent on fixture inputs") {
    const std::vector<std::string> fixtures = {
        "<html><body><h1>Title</h1><p>Some body text.</p></body></html>",
        "no markup here",
        "<b>Running Java</b>",
        "a  b\n\nc",
    };
    for (const auto& f : fixtures) {
        std::string once = strip_html(f);
        CHECK(strip_html(once) == once);
    }
}

TEST_CASE("tokenize splits on non-alphanumeric runs and lowercases") {
    CHECK(tokenize("Java, Beans!") == std::vector<std::string>{"java", "beans"});
    CHECK(tokenize("").empty());
}

TEST_CASE("tokenize drops purely numeric tokens") {
    CHECK(tokenize("web2.0 mining 42") ==
          std::vector<std::string>{"web2", "mining"});
}

TEST_CASE("remove_stopwords is an order-preserving filter") {
    Stoplist stops = {"the", "and"};
    CHECK(remove_stopwords({"the", "java", "and", "beans"}, stops) ==
          std::vector<std::string>{"java", "beans"});
    CHECK(remove_stopwords({}, stops).empty());
    CHECK(remove_stopwords({"the", "and", "the"}, stops).empty());
}

TEST_CASE("preprocess_document composes strip, tokenize, stop, stem") {
    RawDocument html{0, "x.html", "<b>Running Java</b>", DocKind::html};
    auto doc = preprocess_document(html, default_stopwords());
    CHECK(doc.tokens == std::vector<std::string>{"run", "java"});

    RawDocument stopsonly{1, "y.txt", "the the the", DocKind::plain};
    CHECK(preprocess_document(stopsonly, default_stopwords()).tokens.empty());

    RawDocument dups{2, "z.txt", "servlets servlets java", DocKind::plain};
    CHECK(preprocess_document(dups, default_stopwords()).tokens ==
          std::vector<std::string>{"servlet", "servlet", "java"});
}

TEST_CASE("stopword removal happens before stemming") {
    // "during" is a stopword whose stem "dure" is not; it must still go
    RawDocument raw{0, "t.txt", "during mining", DocKind::plain};
    auto doc = preprocess_document(raw, default_stopwords());
    CHECK(doc.tokens == std::vector<std::string>{"mine"});
    CHECK(stem("during") == "dure");
    CHECK(default_stopwords().count("dure") == 0);
}

TEST_CASE("pipeline output is lowercase, whitespace-free, min length 2") {
    RawDocument raw{0, "t.html", "<p>The QUICK &amp; A.I. x 99 Bro-wn</p>",
                    DocKind::html};
    auto doc = preprocess_document(raw, default_stopwords());
    for (const auto& t : doc.tokens) {
        CHECK(t.size() >= 2);
        for (char c : t) {
            CHECK(!std::isupper(static_cast<unsigned char>(c)));
            CHECK(!std::isspace(static_cast<unsigned char>(c)));
        }
    }
}

TEST_CASE("default stopword list matches the shipped file format rules") {
    const Stoplist& stops = default_stopwords();
    CHECK(stops.size() > 150);
    CHECK(stops.count("the") == 1);
    CHECK(stops.count("java") == 0);
}

TEST_CASE("is_valid_utf8 accepts ascii and rejects stray continuation bytes") {
    CHECK(is_valid_utf8("plain ascii"));
    CHECK(is_valid_utf8("caf\xc3\xa9"));
    CHECK(!is_valid_utf8("bad \xff byte"));
    CHECK(!is_valid_utf8("truncated \xc3"));
}
