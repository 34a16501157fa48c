#ifndef MFIC_SERIALIZE_HPP
#define MFIC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "mfic/dedup.hpp"
#include "mfic/hierarchy.hpp"
#include "mfic/mining.hpp"
#include "mfic/vectorspace.hpp"

namespace mfic {

using Json = nlohmann::ordered_json;

// {m, terms, df, vectors:[{doc_id, entries:[[term_id, tf, weight]...]}...]}
Json matrix_to_json(const CorpusMatrix& matrix);

// {minsup, maximal:[{docs, support}...]}
Json itemsets_to_json(const MiningResult& result);

// {levels, nodes:[{id, level, members, label_terms, children, synthetic}...], root}
Json tree_to_json(const HierarchyTree& tree);

// {alpha, closure, groups:[{docs, sources, pairs}...], singletons}
Json report_to_json(const DedupReport& report,
                    const std::vector<std::string>& sources = {});

// Parses {n, rows:[[...]...]}: must be square, entries in [0,1], symmetric
// within 1e-9. Throws DomainError on violations; diagonal is forced to 1.
SimilarityMatrix similarity_from_json(const Json& j);

}  // namespace mfic

#endif
