#ifndef MFIC_HIERARCHY_HPP
#define MFIC_HIERARCHY_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mfic/mining.hpp"
#include "mfic/vectorspace.hpp"

namespace mfic {

// Weighted Jaccard: sum_t min(u_t,v_t) / sum_t max(u_t,v_t) over the union
// of supports; 0 when both vectors are empty. Reduces to set Jaccard on
// 0/1 weights.
double weighted_jaccard(const WeightedVector& u, const WeightedVector& v);

// Pseudo-document for a member set: per-term mean of the members' weights
// (absent counts as 0) and summed tf.
WeightedVector center_of(const std::vector<int>& members,
                         const std::vector<WeightedVector>& vectors);

struct Cluster {
    std::vector<int> members;  // current-level ids, sorted
    WeightedVector center;
    int seed_support = 0;      // 0 for singleton passthrough
    std::vector<std::string> label_terms;
};

struct OverlapAssignment {
    int doc_id = 0;
    std::vector<int> candidates;  // itemset indices containing the doc
    std::vector<double> scores;   // similarity per candidate, frozen centers
    int chosen = 0;               // winning itemset index
};

// Similarity of a document to candidate itemset `itemset_index`; the default
// scores weighted_jaccard(center(original members), doc vector). Tests may
// inject a stub.
using OverlapScorer = std::function<double(std::size_t itemset_index, int doc_id)>;

// Turns (possibly overlapping) MFIs into disjoint clusters: duplicates are
// dropped keeping the canonically first; documents in several itemsets are
// assigned to the best-scoring candidate (strict improvement switches,
// ties keep the earlier candidate) and removed from the rest. Centers used
// for scoring are frozen at the original memberships.
std::pair<std::vector<Cluster>, std::vector<OverlapAssignment>>
resolve_overlaps(const std::vector<Itemset>& mfis,
                 const std::vector<WeightedVector>& vectors,
                 const OverlapScorer& scorer = {});

struct HierarchyConfig {
    int tf_support = 1;
    int minsup = 2;
    int max_levels = 32;
    int label_top_k = 5;
};

struct LevelResult {
    std::vector<Cluster> clusters;
    std::vector<int> unclustered;  // current-level ids joining no MFI
    std::vector<OverlapAssignment> assignments;
    int mfi_count = 0;  // multi-document MFIs mined at this level
};

// Steps 4-6 for one level: keywords -> transactions -> MFIs (size >= 2) ->
// overlap resolution. An empty transaction database is "no merge possible".
LevelResult build_level(const std::vector<WeightedVector>& docs,
                        const HierarchyConfig& config);

struct TreeNode {
    std::string id;  // "L<level>_<index>"
    int level = 0;
    int index = 0;
    std::vector<int> members;  // original doc ids
    std::vector<std::string> label_terms;
    std::vector<std::string> children;  // node ids in the level below
    bool synthetic = false;
    int seed_support = 0;
};

struct HierarchyTree {
    std::vector<std::vector<TreeNode>> levels;  // levels[0] = leaves
    std::string root;
    std::vector<LevelResult> level_diagnostics;  // one per non-leaf level
};

// Iterates build_level, replacing clusters by their centers and carrying
// unclustered nodes through, until one node remains, no cluster forms, or
// max_levels is hit; leftover nodes are joined under a synthetic root.
HierarchyTree build_hierarchy(const CorpusMatrix& matrix,
                              const HierarchyConfig& config);

}  // namespace mfic

#endif
