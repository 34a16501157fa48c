#include "mfic/mining.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "mfic/errors.hpp"

namespace mfic {
namespace {

bool is_subset(const std::vector<int>& sub, const std::vector<int>& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

int count_support(const TransactionDB& db, const std::vector<int>& items) {
    int support = 0;
    for (const auto& tx : db.transactions)
        if (is_subset(items, tx.items)) ++support;
    return support;
}

bool canonical_less(const Itemset& a, const Itemset& b) {
    if (a.items.size() != b.items.size())
        return a.items.size() < b.items.size();
    return a.items < b.items;
}

TransactionDB transactions_from_vectors(
    const std::vector<WeightedVector>& vectors, int tf_support, int universe) {
    TransactionDB db;
    db.universe = universe;
    // gather per-term item lists in term-id order
    std::map<int, std::vector<int>> by_term;
    for (const auto& vec : vectors)
        for (const auto& [tid, count] : vec.tf)
            if (count > tf_support) by_term[tid].push_back(vec.doc_id);
    for (auto& [tid, items] : by_term) {
        if (items.size() < 2) continue;  // can never support a 2-itemset
        std::sort(items.begin(), items.end());
        db.transactions.push_back({tid, std::move(items)});
    }
    if (db.transactions.empty())
        throw EmptyDatabaseError("no term is a keyword of 2 or more documents");
    return db;
}

}  // namespace

TransactionDB build_transactions(const CorpusMatrix& matrix, int tf_support) {
    return transactions_from_vectors(matrix.vectors, tf_support, matrix.m);
}

TransactionDB build_transactions(const std::vector<WeightedVector>& vectors,
                                 int tf_support) {
    return transactions_from_vectors(vectors, tf_support,
                                     static_cast<int>(vectors.size()));
}

std::vector<Itemset> apriori_frequent(const TransactionDB& db, int minsup) {
    std::vector<Itemset> result;
    if (minsup < 1) minsup = 1;

    // L1
    std::map<int, int> item_count;
    for (const auto& tx : db.transactions)
        for (int item : tx.items) ++item_count[item];
    std::vector<Itemset> level;
    for (const auto& [item, count] : item_count)
        if (count >= minsup) level.push_back({{item}, count});
    result.insert(result.end(), level.begin(), level.end());

    // level-wise: join lexicographically adjacent (k-1)-prefixes, prune by
    // downward closure, count exactly by transaction scan
    while (level.size() >= 2) {
        std::vector<Itemset> next;
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const auto& x = level[a].items;
                const auto& y = level[b].items;
                if (!std::equal(x.begin(), x.end() - 1, y.begin(), y.end() - 1))
                    break;  // sorted level: prefixes diverge from here on
                std::vector<int> cand = x;
                cand.push_back(y.back());
                // Apriori prune: every (k-1)-subset must be frequent
                bool pruned = false;
                for (std::size_t drop = 0; drop + 2 < cand.size() && !pruned;
                     ++drop) {
                    std::vector<int> sub;
                    sub.reserve(cand.size() - 1);
                    for (std::size_t k = 0; k < cand.size(); ++k)
                        if (k != drop) sub.push_back(cand[k]);
                    pruned = !std::binary_search(
                        level.begin(), level.end(), Itemset{sub, 0},
                        canonical_less);
                }
                if (pruned) continue;
                int support = count_support(db, cand);
                if (support >= minsup) next.push_back({std::move(cand), support});
            }
        }
        std::sort(next.begin(), next.end(), canonical_less);
        result.insert(result.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(result.begin(), result.end(), canonical_less);
    return result;
}

std::vector<Itemset> maximal_filter(const std::vector<Itemset>& frequent) {
    std::vector<Itemset> maximal;
    for (const auto& x : frequent) {
        bool has_superset = false;
        for (const auto& y : frequent) {
            if (y.items.size() > x.items.size() && is_subset(x.items, y.items)) {
                has_superset = true;
                break;
            }
        }
        if (!has_superset) maximal.push_back(x);
    }
    std::sort(maximal.begin(), maximal.end(), canonical_less);
    return maximal;
}

std::vector<Itemset> closed_filter(const std::vector<Itemset>& frequent) {
    std::vector<Itemset> closed;
    for (const auto& x : frequent) {
        bool absorbed = false;
        for (const auto& y : frequent) {
            if (y.items.size() > x.items.size() && y.support == x.support &&
                is_subset(x.items, y.items)) {
                absorbed = true;
                break;
            }
        }
        if (!absorbed) closed.push_back(x);
    }
    std::sort(closed.begin(), closed.end(), canonical_less);
    return closed;
}

MiningResult mine(const TransactionDB& db, int minsup) {
    MiningResult result;
    result.minsup = minsup;
    result.frequent = apriori_frequent(db, minsup);
    result.closed = closed_filter(result.frequent);
    result.maximal = maximal_filter(result.frequent);

    // MFI subset-of FCI subset-of FI
    auto contains = [](const std::vector<Itemset>& sets, const Itemset& x) {
        for (const auto& s : sets)
            if (s.items == x.items) return true;
        return false;
    };
    for (const auto& x : result.maximal) assert(contains(result.closed, x));
    for (const auto& x : result.closed) assert(contains(result.frequent, x));
    (void)contains;
    return result;
}

}  // namespace mfic
