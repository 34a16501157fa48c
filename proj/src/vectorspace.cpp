#include "mfic/vectorspace.hpp"

#include <cmath>
#include <map>

#include "mfic/errors.hpp"

namespace mfic {

Vocabulary build_vocabulary(const std::vector<TokenizedDocument>& docs,
                            double df_threshold) {
    if (docs.empty()) throw EmptyCorpusError("no documents");
    if (!(df_threshold > 0.0 && df_threshold <= 1.0))
        throw DomainError("df_threshold must be in (0,1]");

    const int m = static_cast<int>(docs.size());
    // df over the full tokenized corpus, before any filtering
    std::map<std::string, int> df_count;  // ordered: lexicographic ids
    for (const auto& doc : docs) {
        std::map<std::string, int> seen;
        for (const auto& t : doc.tokens) seen[t] = 1;
        for (const auto& [t, one] : seen) df_count[t] += one;
    }

    // small slack keeps near-integer products from rounding the ceiling up
    const int cut = static_cast<int>(std::ceil(df_threshold * m - 1e-9));
    Vocabulary vocab;
    for (const auto& [term, df] : df_count) {
        if (df < cut) {
            vocab.index.emplace(term, vocab.size());
            vocab.terms.push_back(term);
            vocab.df.push_back(df);
        }
    }
    if (vocab.terms.empty())
        throw EmptyVocabularyError(
            "df threshold filtered out every term (raise --df-threshold)");
    return vocab;
}

double idf(int m, int df_j) {
    if (df_j < 1 || df_j > m) throw DomainError("df out of range [1, m]");
    return std::log(static_cast<double>(m) / static_cast<double>(df_j));
}

CorpusMatrix build_vectors(const std::vector<TokenizedDocument>& docs,
                           const Vocabulary& vocab) {
    CorpusMatrix matrix;
    matrix.m = static_cast<int>(docs.size());
    matrix.vocabulary = vocab;
    matrix.vectors.resize(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        WeightedVector& vec = matrix.vectors[i];
        vec.doc_id = static_cast<int>(i);
        for (const auto& tok : docs[i].tokens) {
            auto it = vocab.index.find(tok);
            if (it != vocab.index.end()) ++vec.tf[it->second];
        }
        for (const auto& [tid, count] : vec.tf)
            vec.weights[tid] = count * idf(matrix.m, vocab.df[tid]);
    }
    return matrix;
}

std::set<int> keyword_set(const WeightedVector& vector, int tf_support) {
    std::set<int> keywords;
    for (const auto& [tid, count] : vector.tf)
        if (count > tf_support) keywords.insert(tid);
    return keywords;
}

}  // namespace mfic
