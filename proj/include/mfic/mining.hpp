#ifndef MFIC_MINING_HPP
#define MFIC_MINING_HPP

#include <vector>

#include "mfic/vectorspace.hpp"

namespace mfic {

// Transposed view: items are documents, transactions are terms.
struct Transaction {
    int tid = 0;                 // term-id
    std::vector<int> items;      // doc-ids, strictly increasing
};

struct TransactionDB {
    std::vector<Transaction> transactions;
    int universe = 0;  // number of distinct doc-ids
};

struct Itemset {
    std::vector<int> items;  // sorted doc-ids
    int support = 0;         // |t(X)|
};

struct MiningResult {
    std::vector<Itemset> frequent;
    std::vector<Itemset> closed;
    std::vector<Itemset> maximal;
    int minsup = 0;
};

// One transaction per vocabulary term with items { doc : tf(t) > tf_support };
// transactions with fewer than 2 items are dropped. Throws EmptyDatabaseError
// when nothing survives.
TransactionDB build_transactions(const CorpusMatrix& matrix, int tf_support);

// Same keyword rule applied to an arbitrary vector collection (used for the
// pseudo-documents of upper hierarchy levels). Vectors are items 0..k-1.
TransactionDB build_transactions(const std::vector<WeightedVector>& vectors,
                                 int tf_support);

// Level-wise Apriori; exact supports; output ordered by (size, items).
std::vector<Itemset> apriori_frequent(const TransactionDB& db, int minsup);

// Members of FI with no proper superset in FI.
std::vector<Itemset> maximal_filter(const std::vector<Itemset>& frequent);

// Members of FI with no proper superset of equal support in FI.
std::vector<Itemset> closed_filter(const std::vector<Itemset>& frequent);

MiningResult mine(const TransactionDB& db, int minsup);

}  // namespace mfic

#endif
