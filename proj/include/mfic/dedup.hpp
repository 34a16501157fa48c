#ifndef MFIC_DEDUP_HPP
#define MFIC_DEDUP_HPP

#include <cstdint>
#include <vector>

#include "mfic/vectorspace.hpp"

namespace mfic {

struct SimilarityMatrix {
    int n = 0;
    std::vector<std::vector<double>> entries;  // symmetric, diagonal 1
    std::int64_t evaluations = 0;  // Jaccard evaluations performed to fill it

    double at(int i, int j) const {
        return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
};

struct CutRelation {
    int n = 0;
    std::vector<std::vector<bool>> adjacency;  // symmetric, diagonal false
};

struct Partition {
    std::vector<std::vector<int>> classes;  // disjoint, sorted, cover 0..n-1
};

// n(n-1)/2 weighted-Jaccard evaluations; diagonal forced to 1. Rows are
// filled in parallel when threads > 1; the result does not depend on it.
SimilarityMatrix pairwise_jaccard(const CorpusMatrix& matrix, int threads = 1);

// Smallest entrywise-larger matrix with R(i,k) >= max_j min(R(i,j), R(j,k));
// computed by iterating R <- max(R, R*R) to the fixpoint, where (R*R)(i,k)
// is max_j min(R(i,j), R(j,k)).
SimilarityMatrix maxmin_closure(const SimilarityMatrix& sim);

// adjacency[i][j] = (i != j) && (sim[i][j] >= alpha). Throws DomainError
// unless alpha is in (0,1].
CutRelation alpha_cut(const SimilarityMatrix& sim, double alpha);

// Connected components of the cut graph, canonically sorted.
Partition partition(const CutRelation& rel);

struct DuplicateGroup {
    std::vector<int> docs;
    std::vector<std::vector<double>> pairs;  // [i, j, similarity] triples
};

struct DedupReport {
    double alpha = 0.0;
    bool closure = true;
    Partition part;
    std::vector<DuplicateGroup> groups;  // non-singleton classes
    std::vector<int> singletons;
    SimilarityMatrix similarity;  // the matrix the cut was taken from
};

DedupReport dedup_report(const CorpusMatrix& matrix, double alpha,
                         bool use_closure, int threads = 1);

// Same pipeline starting from an externally supplied matrix.
DedupReport dedup_report(const SimilarityMatrix& sim, double alpha,
                         bool use_closure);

}  // namespace mfic

#endif
