#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "mfic/errors.hpp"
#include "mfic/mining.hpp"

using namespace mfic;

namespace {

TransactionDB make_db(std::vector<std::vector<int>> txs, int universe) {
    TransactionDB db;
    db.universe = universe;
    int tid = 0;
    for (auto& items : txs) {
        std::sort(items.begin(), items.end());
        db.transactions.push_back({tid++, std::move(items)});
    }
    return db;
}

// Exhaustive oracle: enumerate every non-empty subset of the item universe
// and count its support by direct containment checks. Independent of the
// Apriori implementation.
std::vector<Itemset> brute_force_frequent(const TransactionDB& db,
                                          int minsup) {
    std::vector<int> items;
    for (const auto& tx : db.transactions)
        for (int it : tx.items)
            if (std::find(items.begin(), items.end(), it) == items.end())
                items.push_back(it);
    std::sort(items.begin(), items.end());
    const std::size_t n = items.size();
    std::vector<Itemset> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> subset;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) subset.push_back(items[b]);
        int support = 0;
        for (const auto& tx : db.transactions)
            if (std::includes(tx.items.begin(), tx.items.end(), subset.begin(),
                              subset.end()))
                ++support;
        if (support >= minsup) out.push_back({subset, support});
    }
    std::sort(out.begin(), out.end(), [](const Itemset& a, const Itemset& b) {
        if (a.items.size() != b.items.size())
            return a.items.size() < b.items.size();
        return a.items < b.items;
    });
    return out;
}

bool same_itemsets(const std::vector<Itemset>& a,
                   const std::vector<Itemset>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].items != b[i].items || a[i].support != b[i].support)
            return false;
    return true;
}

bool contains_set(const std::vector<Itemset>& sets,
                  const std::vector<int>& items) {
    for (const auto& s : sets)
        if (s.items == items) return true;
    return false;
}

}  // namespace

TEST_CASE("apriori on the 3-transaction example") {
    // t1={a,b}, t2={a,b}, t3={a,c} with a=0 b=1 c=2
    auto db = make_db({{0, 1}, {0, 1}, {0, 2}}, 3);
    auto fi = apriori_frequent(db, 2);
    // brute force over all 7 subsets gives {a}:3, {b}:2, {ab}:2
    REQUIRE(fi.size() == 3);
    CHECK(fi[0].items == std::vector<int>{0});
    CHECK(fi[0].support == 3);
    CHECK(fi[1].items == std::vector<int>{1});
    CHECK(fi[1].support == 2);
    CHECK(fi[2].items == std::vector<int>{0, 1});
    CHECK(fi[2].support == 2);

    CHECK(apriori_frequent(db, 4).empty());

    auto mfi = maximal_filter(fi);
    REQUIRE(mfi.size() == 1);
    CHECK(mfi[0].items == std::vector<int>{0, 1});

    auto fci = closed_filter(fi);
    REQUIRE(fci.size() == 2);
    CHECK(fci[0].items == std::vector<int>{0});
    CHECK(fci[1].items == std::vector<int>{0, 1});
}

TEST_CASE("single transaction with minsup 1 yields the full powerset") {
    auto db = make_db({{0, 1, 2}}, 3);
    auto fi = apriori_frequent(db, 1);
    CHECK(fi.size() == 7);
    for (const auto& s : fi) CHECK(s.support == 1);
    auto mfi = maximal_filter(fi);
    REQUIRE(mfi.size() == 1);
    CHECK(mfi[0].items == std::vector<int>{0, 1, 2});
    // degenerate case where MFI = FCI = FI as item-set families is allowed
    auto fci = closed_filter(fi);
    CHECK(fci.size() == 1);
}

TEST_CASE("maximal_filter keeps antichains") {
    std::vector<Itemset> fi = {{{0}, 2}, {{1}, 2}, {{2}, 2}, {{3}, 2},
                               {{0, 1}, 2}, {{2, 3}, 2}};
    auto mfi = maximal_filter(fi);
    REQUIRE(mfi.size() == 2);
    CHECK(mfi[0].items == std::vector<int>{0, 1});
    CHECK(mfi[1].items == std::vector<int>{2, 3});
}

TEST_CASE("closed_filter keeps antichain and absorbs equal support chains") {
    std::vector<Itemset> antichain = {{{0, 1}, 2}, {{2, 3}, 3}};
    CHECK(same_itemsets(closed_filter(antichain), antichain));

    std::vector<Itemset> chain = {{{0}, 2}, {{1}, 2}, {{0, 1}, 2}};
    auto fci = closed_filter(chain);
    REQUIRE(fci.size() == 1);
    CHECK(fci[0].items == std::vector<int>{0, 1});
}

TEST_CASE("mine composes and nests MFI within FCI within FI") {
    auto db = make_db({{0, 1}, {0, 1}, {0, 2}}, 3);
    auto result = mine(db, 2);
    CHECK(result.frequent.size() == 3);
    CHECK(result.closed.size() == 2);
    CHECK(result.maximal.size() == 1);
    for (const auto& s : result.maximal)
        CHECK(contains_set(result.closed, s.items));
    for (const auto& s : result.closed)
        CHECK(contains_set(result.frequent, s.items));
}

TEST_CASE("identical transactions produce that set as the single MFI") {
    auto db = make_db({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, 3);
    auto result = mine(db, 1);
    REQUIRE(result.maximal.size() == 1);
    CHECK(result.maximal[0].items == std::vector<int>{0, 1, 2});
    CHECK(result.maximal[0].support == 3);
}

TEST_CASE("pairwise-disjoint transactions have no co-occurrence at minsup 2") {
    auto db = make_db({{0, 1}, {2, 3}, {4, 5}}, 6);
    auto fi = apriori_frequent(db, 2);
    CHECK(fi.empty());
}

TEST_CASE("build_transactions applies the keyword rule and singleton drop") {
    CorpusMatrix matrix;
    matrix.m = 4;
    matrix.vectors.resize(4);
    for (int d = 0; d < 4; ++d) matrix.vectors[d].doc_id = d;
    // term 0 ("java") in docs 0,1,3; term 1 ("servlet") in docs 0,2,3;
    // term 2 in doc 1 only
    for (int d : {0, 1, 3}) matrix.vectors[d].tf[0] = 1;
    for (int d : {0, 2, 3}) matrix.vectors[d].tf[1] = 1;
    matrix.vectors[1].tf[2] = 5;

    auto db = build_transactions(matrix, 0);
    REQUIRE(db.transactions.size() == 2);  // singleton term 2 dropped
    CHECK(db.transactions[0].tid == 0);
    CHECK(db.transactions[0].items == std::vector<int>{0, 1, 3});
    CHECK(db.transactions[1].items == std::vector<int>{0, 2, 3});

    CorpusMatrix empty;
    empty.m = 0;
    CHECK_THROWS_AS(build_transactions(empty, 0), EmptyDatabaseError);
}

TEST_CASE("random databases match the exhaustive oracle") {
    std::mt19937 rng(20240817);
    for (int round = 0; round < 60; ++round) {
        int n_items = 3 + static_cast<int>(rng() % 10);   // <= 12
        int n_tx = 2 + static_cast<int>(rng() % 14);      // <= 15
        int minsup = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> txs;
        for (int t = 0; t < n_tx; ++t) {
            std::vector<int> items;
            for (int i = 0; i < n_items; ++i)
                if (rng() % 3 == 0) items.push_back(i);
            if (items.size() < 2) items = {0, 1};
            txs.push_back(items);
        }
        auto db = make_db(std::move(txs), n_items);
        auto got = apriori_frequent(db, minsup);
        auto want = brute_force_frequent(db, minsup);
        REQUIRE(same_itemsets(got, want));

        // downward closure
        auto support_of = [&](const std::vector<int>& items) {
            for (const auto& s : got)
                if (s.items == items) return s.support;
            return -1;
        };
        for (const auto& s : got) {
            if (s.items.size() < 2) continue;
            for (std::size_t drop = 0; drop < s.items.size(); ++drop) {
                std::vector<int> sub;
                for (std::size_t k = 0; k < s.items.size(); ++k)
                    if (k != drop) sub.push_back(s.items[k]);
                CHECK(support_of(sub) >= s.support);
            }
        }

        // maximality: extending any MFI member drops below minsup
        auto result = mine(db, minsup);
        for (const auto& x : result.maximal) {
            for (int extra = 0; extra < n_items; ++extra) {
                if (std::binary_search(x.items.begin(), x.items.end(), extra))
                    continue;
                std::vector<int> ext = x.items;
                ext.push_back(extra);
                std::sort(ext.begin(), ext.end());
                int support = 0;
                for (const auto& tx : db.transactions)
                    if (std::includes(tx.items.begin(), tx.items.end(),
                                      ext.begin(), ext.end()))
                        ++support;
                CHECK(support < minsup);
            }
        }
    }
}
