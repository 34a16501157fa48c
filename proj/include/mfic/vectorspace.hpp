#ifndef MFIC_VECTORSPACE_HPP
#define MFIC_VECTORSPACE_HPP

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "mfic/preprocess.hpp"

namespace mfic {

struct Vocabulary {
    std::vector<std::string> terms;  // term-id -> term, lexicographic
    std::vector<int> df;             // term-id -> document frequency
    std::unordered_map<std::string, int> index;

    int size() const { return static_cast<int>(terms.size()); }
};

struct WeightedVector {
    int doc_id = 0;
    std::map<int, int> tf;         // term-id -> raw count
    std::map<int, double> weights; // term-id -> tf * ln(m/df)
};

struct CorpusMatrix {
    int m = 0;
    Vocabulary vocabulary;
    std::vector<WeightedVector> vectors;  // indexed by doc_id
};

// Terms t with 1 <= df(t) < ceil(df_threshold * M); ids in lexicographic
// term order. Throws EmptyCorpusError / EmptyVocabularyError.
Vocabulary build_vocabulary(const std::vector<TokenizedDocument>& docs,
                            double df_threshold);

// ln(m / df_j); throws DomainError unless 1 <= df_j <= m.
double idf(int m, int df_j);

CorpusMatrix build_vectors(const std::vector<TokenizedDocument>& docs,
                           const Vocabulary& vocab);

// Keywords of a document: { t : tf(t) > tf_support }.
std::set<int> keyword_set(const WeightedVector& vector, int tf_support);

}  // namespace mfic

#endif
