#include "mfic/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mfic/errors.hpp"

namespace mfic {
namespace {

std::vector<std::string> top_terms(const WeightedVector& center,
                                   const Vocabulary& vocab, int k) {
    std::vector<std::pair<double, int>> ranked;
    ranked.reserve(center.weights.size());
    for (const auto& [tid, w] : center.weights) ranked.emplace_back(w, tid);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<std::string> labels;
    for (const auto& [w, tid] : ranked) {
        if (static_cast<int>(labels.size()) >= k) break;
        if (tid < vocab.size()) labels.push_back(vocab.terms[tid]);
    }
    return labels;
}

}  // namespace

double weighted_jaccard(const WeightedVector& u, const WeightedVector& v) {
    double min_sum = 0.0, max_sum = 0.0;
    auto iu = u.weights.begin(), iv = v.weights.begin();
    while (iu != u.weights.end() || iv != v.weights.end()) {
        if (iv == v.weights.end() ||
            (iu != u.weights.end() && iu->first < iv->first)) {
            max_sum += iu->second;
            ++iu;
        } else if (iu == u.weights.end() || iv->first < iu->first) {
            max_sum += iv->second;
            ++iv;
        } else {
            min_sum += std::min(iu->second, iv->second);
            max_sum += std::max(iu->second, iv->second);
            ++iu;
            ++iv;
        }
    }
    if (max_sum == 0.0) return 0.0;
    return min_sum / max_sum;
}

WeightedVector center_of(const std::vector<int>& members,
                         const std::vector<WeightedVector>& vectors) {
    WeightedVector center;
    center.doc_id = -1;
    const double k = static_cast<double>(members.size());
    for (int id : members) {
        const WeightedVector& vec = vectors.at(static_cast<std::size_t>(id));
        for (const auto& [tid, w] : vec.weights) center.weights[tid] += w;
        for (const auto& [tid, count] : vec.tf) center.tf[tid] += count;
    }
    for (auto& [tid, w] : center.weights) w /= k;
    return center;
}

std::pair<std::vector<Cluster>, std::vector<OverlapAssignment>>
resolve_overlaps(const std::vector<Itemset>& mfis,
                 const std::vector<WeightedVector>& vectors,
                 const OverlapScorer& scorer) {
    // Case 1: identical itemsets collapse onto the canonically first
    std::vector<Itemset> sets;
    for (const auto& s : mfis) {
        bool dup = false;
        for (const auto& kept : sets)
            if (kept.items == s.items) {
                dup = true;
                break;
            }
        if (!dup) sets.push_back(s);
    }

    // frozen centers from original memberships, built lazily
    std::vector<WeightedVector> centers(sets.size());
    std::vector<bool> center_ready(sets.size(), false);
    OverlapScorer score = scorer;
    if (!score) {
        score = [&](std::size_t i, int doc) {
            if (!center_ready[i]) {
                centers[i] = center_of(sets[i].items, vectors);
                center_ready[i] = true;
            }
            return weighted_jaccard(centers[i],
                                    vectors.at(static_cast<std::size_t>(doc)));
        };
    }

    // membership map: doc -> itemset indices (ascending)
    std::map<int, std::vector<int>> containing;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (int doc : sets[i].items)
            containing[doc].push_back(static_cast<int>(i));

    std::vector<std::vector<int>> working;
    working.reserve(sets.size());
    for (const auto& s : sets) working.push_back(s.items);

    // Case 3: docs in >= 2 itemsets, ascending doc id
    std::vector<OverlapAssignment> assignments;
    for (const auto& [doc, candidates] : containing) {
        if (candidates.size() < 2) continue;
        OverlapAssignment a;
        a.doc_id = doc;
        a.candidates = candidates;
        int best = candidates.front();
        double best_score = score(static_cast<std::size_t>(best), doc);
        a.scores.push_back(best_score);
        for (std::size_t c = 1; c < candidates.size(); ++c) {
            double s = score(static_cast<std::size_t>(candidates[c]), doc);
            a.scores.push_back(s);
            if (s > best_score) {  // strict improvement switches
                best_score = s;
                best = candidates[c];
            }
        }
        a.chosen = best;
        for (int idx : candidates) {
            if (idx == best) continue;
            auto& items = working[static_cast<std::size_t>(idx)];
            items.erase(std::remove(items.begin(), items.end(), doc),
                        items.end());
        }
        assignments.push_back(std::move(a));
    }

    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < working.size(); ++i) {
        if (working[i].empty()) continue;  // drained by removals
        Cluster c;
        c.members = working[i];
        c.seed_support = sets[i].support;
        c.center = center_of(c.members, vectors);
        clusters.push_back(std::move(c));
    }
    return {std::move(clusters), std::move(assignments)};
}

LevelResult build_level(const std::vector<WeightedVector>& docs,
                        const HierarchyConfig& config) {
    LevelResult result;
    std::vector<Itemset> mfis;
    try {
        TransactionDB db = build_transactions(docs, config.tf_support);
        MiningResult mined = mine(db, config.minsup);
        for (const auto& s : mined.maximal)
            if (s.items.size() >= 2) mfis.push_back(s);
    } catch (const EmptyDatabaseError&) {
        // no shared keywords: no merge possible at this level
    }
    result.mfi_count = static_cast<int>(mfis.size());

    auto resolved = resolve_overlaps(mfis, docs);
    result.clusters = std::move(resolved.first);
    result.assignments = std::move(resolved.second);

    std::set<int> clustered;
    for (const auto& c : result.clusters)
        clustered.insert(c.members.begin(), c.members.end());
    for (const auto& vec : docs)
        if (clustered.find(vec.doc_id) == clustered.end())
            result.unclustered.push_back(vec.doc_id);
    std::sort(result.unclustered.begin(), result.unclustered.end());
    return result;
}

HierarchyTree build_hierarchy(const CorpusMatrix& matrix,
                              const HierarchyConfig& config) {
    HierarchyTree tree;

    // level 0: one leaf per document
    std::vector<TreeNode> leaves;
    std::vector<WeightedVector> current = matrix.vectors;
    for (int j = 0; j < matrix.m; ++j) {
        TreeNode node;
        node.id = "L0_" + std::to_string(j);
        node.level = 0;
        node.index = j;
        node.members = {j};
        node.label_terms =
            top_terms(matrix.vectors[j], matrix.vocabulary, config.label_top_k);
        leaves.push_back(std::move(node));
        current[j].doc_id = j;  // current-level ids
    }
    tree.levels.push_back(std::move(leaves));
    if (matrix.m == 1) {
        tree.root = tree.levels[0][0].id;
        return tree;
    }

    int level = 1;
    bool reduced_to_root = false;
    while (level <= config.max_levels) {
        LevelResult lr = build_level(current, config);
        if (lr.clusters.empty()) break;  // no reduction possible
        bool all_singleton = true;
        for (const auto& c : lr.clusters)
            if (c.members.size() >= 2) all_singleton = false;
        if (all_singleton) break;  // no merge, the level would repeat forever

        const std::vector<TreeNode>& below = tree.levels.back();
        std::vector<TreeNode> nodes;
        std::vector<WeightedVector> next;
        auto add_node = [&](const std::vector<int>& child_ids,
                            WeightedVector center, int seed_support) {
            TreeNode node;
            node.level = level;
            node.index = static_cast<int>(nodes.size()) + 1;
            node.id = "L" + std::to_string(level) + "_" +
                      std::to_string(node.index);
            node.seed_support = seed_support;
            for (int cid : child_ids) {
                const TreeNode& child = below[static_cast<std::size_t>(cid)];
                node.children.push_back(child.id);
                node.members.insert(node.members.end(), child.members.begin(),
                                    child.members.end());
            }
            std::sort(node.members.begin(), node.members.end());
            node.label_terms =
                top_terms(center, matrix.vocabulary, config.label_top_k);
            center.doc_id = static_cast<int>(next.size());
            next.push_back(std::move(center));
            nodes.push_back(std::move(node));
        };
        for (const auto& c : lr.clusters)
            add_node(c.members, c.center, c.seed_support);
        for (int id : lr.unclustered)
            add_node({id}, current[static_cast<std::size_t>(id)], 0);

        tree.level_diagnostics.push_back(std::move(lr));
        tree.levels.push_back(std::move(nodes));
        current = std::move(next);
        ++level;
        if (tree.levels.back().size() == 1) {
            reduced_to_root = true;
            break;
        }
    }

    if (!reduced_to_root && tree.levels.back().size() > 1) {
        // join the remaining nodes under a synthetic root
        const std::vector<TreeNode>& below = tree.levels.back();
        std::vector<int> all_ids(below.size());
        for (std::size_t i = 0; i < below.size(); ++i)
            all_ids[i] = static_cast<int>(i);
        TreeNode root;
        root.level = level;
        root.index = 1;
        root.id = "L" + std::to_string(level) + "_1";
        root.synthetic = true;
        for (const TreeNode& child : below) {
            root.children.push_back(child.id);
            root.members.insert(root.members.end(), child.members.begin(),
                                child.members.end());
        }
        std::sort(root.members.begin(), root.members.end());
        root.label_terms = top_terms(center_of(all_ids, current),
                                     matrix.vocabulary, config.label_top_k);
        tree.levels.push_back({std::move(root)});
    }
    tree.root = tree.levels.back().back().id;
    return tree;
}

}  // namespace mfic
