#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "mfic/errors.hpp"
#include "mfic/vectorspace.hpp"

using namespace mfic;

namespace {

TokenizedDocument doc(int id, std::vector<std::string> tokens) {
    return TokenizedDocument{id, std::move(tokens)};
}

// Table-1-like corpus: "java" in docs 0,1,3; "servlet" in 0,2,3;
// "bean" in 1 only; "common" everywhere.
std::vector<TokenizedDocument> table1_corpus() {
    return {
        doc(0, {"java", "servlet", "common"}),
        doc(1, {"java", "bean", "common"}),
        doc(2, {"servlet", "common"}),
        doc(3, {"java", "servlet", "common"}),
    };
}

}  // namespace

TEST_CASE("build_vocabulary keeps df below ceil(threshold*M)") {
    auto vocab = build_vocabulary(table1_corpus(), 0.8);
    // M=4, cut=ceil(3.2)=4: java df=3 kept, common df=4 removed
    CHECK(vocab.index.count("java") == 1);
    CHECK(vocab.index.count("servlet") == 1);
    CHECK(vocab.index.count("bean") == 1);
    CHECK(vocab.index.count("common") == 0);
    CHECK(vocab.df[vocab.index.at("java")] == 3);
}

TEST_CASE("threshold 1.0 still removes ubiquitous terms (strict <)") {
    auto vocab = build_vocabulary(table1_corpus(), 1.0);
    CHECK(vocab.index.count("common") == 0);  // df=M is never < M
    CHECK(vocab.index.count("java") == 1);
}

TEST_CASE("term ids are assigned in lexicographic order") {
    auto vocab = build_vocabulary(table1_corpus(), 0.8);
    REQUIRE(vocab.size() == 3);
    CHECK(vocab.terms == std::vector<std::string>{"bean", "java", "servlet"});
}

TEST_CASE("build_vocabulary error cases") {
    CHECK_THROWS_AS(build_vocabulary({}, 0.8), EmptyCorpusError);
    // every term everywhere -> filter removes all
    std::vector<TokenizedDocument> same = {doc(0, {"x"}), doc(1, {"x"})};
    CHECK_THROWS_AS(build_vocabulary(same, 0.5), EmptyVocabularyError);
}

TEST_CASE("vocabulary grows monotonically with the threshold") {
    auto corpus = table1_corpus();
    std::size_t prev = 0;
    for (double thr : {0.3, 0.5, 0.8, 1.0}) {
        std::size_t size = 0;
        try {
            size = build_vocabulary(corpus, thr).terms.size();
        } catch (const EmptyVocabularyError&) {
            size = 0;
        }
        CHECK(size >= prev);
        prev = size;
    }
}

TEST_CASE("idf is ln(m/df)") {
    CHECK(idf(4, 4) == 0.0);
    CHECK(idf(4, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(idf(10, 1) == doctest::Approx(std::log(10.0)).epsilon(1e-15));
    CHECK_THROWS_AS(idf(4, 0), DomainError);
    CHECK_THROWS_AS(idf(4, 5), DomainError);
}

TEST_CASE("idf strictly decreases in df") {
    for (int df = 1; df < 10; ++df) CHECK(idf(10, df) > idf(10, df + 1));
}

TEST_CASE("build_vectors computes tf and tf*idf") {
    std::vector<TokenizedDocument> corpus = {
        doc(0, {"java", "java", "servlet"}),
        doc(1, {"java"}),
        doc(2, {"servlet"}),
        doc(3, {"servlet", "other"}),
    };
    auto vocab = build_vocabulary(corpus, 1.0);
    auto matrix = build_vectors(corpus, vocab);
    int java = vocab.index.at("java");
    // df(java)=2 of m=4: w = 2*ln(2)
    CHECK(matrix.vectors[0].tf.at(java) == 2);
    CHECK(matrix.vectors[0].weights.at(java) ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
    // empty and fully-filtered docs give empty sparse vectors
    auto matrix2 = build_vectors({doc(0, {}), doc(1, {"java"})},
                                 build_vocabulary({doc(0, {}), doc(1, {"java"})}, 1.0));
    CHECK(matrix2.vectors[0].tf.empty());
}

TEST_CASE("weights and tf share key sets and satisfy the formula") {
    std::mt19937 rng(7);
    std::vector<std::string> vocab_pool = {"aa", "bb", "cc", "dd", "ee",
                                           "ff", "gg", "hh"};
    std::vector<TokenizedDocument> corpus;
    for (int d = 0; d < 12; ++d) {
        TokenizedDocument td{d, {}};
        int len = 1 + static_cast<int>(rng() % 10);
        for (int k = 0; k < len; ++k)
            td.tokens.push_back(vocab_pool[rng() % vocab_pool.size()]);
        corpus.push_back(std::move(td));
    }
    auto vocab = build_vocabulary(corpus, 1.0);
    auto matrix = build_vectors(corpus, vocab);
    for (const auto& vec : matrix.vectors) {
        CHECK(vec.tf.size() == vec.weights.size());
        for (const auto& [tid, count] : vec.tf) {
            double want = count * std::log(static_cast<double>(matrix.m) /
                                           vocab.df[tid]);
            double got = vec.weights.at(tid);
            CHECK(std::fabs(got - want) <= 1e-12 * std::max(1.0, got));
        }
    }
}

TEST_CASE("keyword_set uses strict tf > support") {
    WeightedVector v;
    v.tf = {{0, 2}, {1, 1}};
    CHECK(keyword_set(v, 1) == std::set<int>{0});
    CHECK(keyword_set(v, 0) == std::set<int>{0, 1});
    CHECK(keyword_set(v, 2).empty());
}

TEST_CASE("identical corpus and config produce identical assignments") {
    auto corpus = table1_corpus();
    auto a = build_vectors(corpus, build_vocabulary(corpus, 0.8));
    auto b = build_vectors(corpus, build_vocabulary(corpus, 0.8));
    CHECK(a.vocabulary.terms == b.vocabulary.terms);
    for (int i = 0; i < a.m; ++i) {
        CHECK(a.vectors[i].tf == b.vectors[i].tf);
        CHECK(a.vectors[i].weights == b.vectors[i].weights);
    }
}
